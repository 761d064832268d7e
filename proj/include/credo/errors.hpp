#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace credo {

// Base for everything this library throws on purpose. `code` is a stable
// machine-readable identifier surfaced by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class ParseError : public Error {
public:
    ParseError(size_t position, const std::string& message)
        : Error("parse-error", message + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

class LanguageMismatch : public Error {
public:
    explicit LanguageMismatch(const std::string& message) : Error("language-mismatch", message) {}
};

class AgendaError : public Error {
public:
    explicit AgendaError(const std::string& message) : Error("agenda-error", message) {}
};

class JudgmentError : public Error {
public:
    explicit JudgmentError(const std::string& message) : Error("judgment-error", message) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& message) : Error("precondition", message) {}
};

// Conditioning on a formula whose probability is zero.
class ConditioningOnNull : public Error {
public:
    explicit ConditioningOnNull(const std::string& formula)
        : Error("conditioning-on-null", "cannot condition on '" + formula + "': probability is 0") {}
};

// An update needed the probability of a formula outside the agenda and the
// extension bounds did not pin it down. Carries the interval as decimal text.
class AmbiguousUpdate : public Error {
public:
    AmbiguousUpdate(const std::string& formula, std::string lo, std::string hi)
        : Error("ambiguous-update", "probability of '" + formula + "' is not determined by the agenda: [" +
                                        lo + ", " + hi + "]"),
          formula_(formula), lo_(std::move(lo)), hi_(std::move(hi)) {}
    const std::string& formula() const { return formula_; }
    const std::string& lo() const { return lo_; }
    const std::string& hi() const { return hi_; }

private:
    std::string formula_, lo_, hi_;
};

class InadmissibleEvent : public Error {
public:
    InadmissibleEvent(size_t step, const std::string& message)
        : Error("inadmissible-event", "event " + std::to_string(step) + ": " + message), step_(step) {}
    size_t step() const { return step_; }

private:
    size_t step_;
};

class InputError : public Error {
public:
    explicit InputError(const std::string& message) : Error("input-error", message) {}
};

}  // namespace credo
