#include "credo/logic.hpp"

#include <algorithm>
#include <unordered_set>

namespace credo {

Language::Language(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw InputError("language needs at least one atom");
    if (atoms_.size() > kMaxAtoms)
        throw InputError("too many atoms: " + std::to_string(atoms_.size()) + " > " +
                         std::to_string(kMaxAtoms));
    std::unordered_set<std::string_view> seen;
    for (const auto& a : atoms_) {
        if (a.empty()) throw InputError("empty atom name");
        if (!seen.insert(a).second) throw InputError("duplicate atom name '" + a + "'");
    }
    valuation_count_ = uint32_t{1} << atoms_.size();
    atom_masks_.reserve(atoms_.size());
    for (size_t i = 0; i < atoms_.size(); ++i) {
        TruthSet m(valuation_count_);
        for (uint32_t v = 0; v < valuation_count_; ++v)
            if ((v >> i) & 1) m.set(v);
        atom_masks_.push_back(std::move(m));
    }
}

int Language::atom_index(std::string_view name) const {
    for (size_t i = 0; i < atoms_.size(); ++i)
        if (atoms_[i] == name) return static_cast<int>(i);
    return -1;
}

AstPtr Ast::make_atom(int index) {
    auto node = std::make_shared<Ast>();
    node->kind = Connective::Atom;
    node->atom = index;
    return node;
}

AstPtr Ast::make(Connective kind, AstPtr lhs, AstPtr rhs) {
    auto node = std::make_shared<Ast>();
    node->kind = kind;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
}

TruthSet evaluate(const Ast& ast, const Language& lang) {
    switch (ast.kind) {
        case Connective::Atom:
            return lang.atom_mask(ast.atom);
        case Connective::Not:
            return ~evaluate(*ast.lhs, lang);
        case Connective::And:
            return evaluate(*ast.lhs, lang) & evaluate(*ast.rhs, lang);
        case Connective::Or:
            return evaluate(*ast.lhs, lang) | evaluate(*ast.rhs, lang);
        case Connective::Implies:
            return ~evaluate(*ast.lhs, lang) | evaluate(*ast.rhs, lang);
        case Connective::Iff:
            return ~(evaluate(*ast.lhs, lang) ^ evaluate(*ast.rhs, lang));
    }
    throw Error("internal", "bad connective");
}

Formula::Formula(LanguagePtr lang, AstPtr ast)
    : lang_(std::move(lang)), ast_(std::move(ast)), truthset_(evaluate(*ast_, *lang_)) {}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Atom, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (i_ < src_.size() && (src_[i_] == ' ' || src_[i_] == '\t' || src_[i_] == '\n' ||
                                    src_[i_] == '\r'))
            ++i_;
        size_t start = i_;
        if (i_ >= src_.size()) return {Tok::End, "", start};

        // unicode aliases first (multibyte)
        if (match("¬")) return {Tok::Not, "!", start};       // ¬
        if (match("∧")) return {Tok::And, "&", start};       // ∧
        if (match("∨")) return {Tok::Or, "|", start};        // ∨
        if (match("→")) return {Tok::Implies, "->", start};  // →
        if (match("↔")) return {Tok::Iff, "<->", start};     // ↔

        char c = src_[i_];
        if (c == '!') { ++i_; return {Tok::Not, "!", start}; }
        if (c == '&') { ++i_; return {Tok::And, "&", start}; }
        if (c == '|') { ++i_; return {Tok::Or, "|", start}; }
        if (c == '(') { ++i_; return {Tok::LParen, "(", start}; }
        if (c == ')') { ++i_; return {Tok::RParen, ")", start}; }
        if (match("<->")) return {Tok::Iff, "<->", start};
        if (match("->")) return {Tok::Implies, "->", start};
        if (c >= 'a' && c <= 'z') {
            size_t j = i_ + 1;
            while (j < src_.size() &&
                   ((src_[j] >= 'a' && src_[j] <= 'z') || (src_[j] >= '0' && src_[j] <= '9') ||
                    src_[j] == '_'))
                ++j;
            Token t{Tok::Atom, std::string(src_.substr(i_, j - i_)), start};
            i_ = j;
            return t;
        }
        throw ParseError(start, "unexpected character '" + std::string(1, c) + "'");
    }

private:
    bool match(std::string_view lit) {
        if (src_.substr(i_).starts_with(lit)) {
            i_ += lit.size();
            return true;
        }
        return false;
    }

    std::string_view src_;
    size_t i_ = 0;
};

class Parser {
public:
    Parser(std::string_view src, const LanguagePtr& lang) : lexer_(src), lang_(lang) {
        advance();
    }

    AstPtr parse() {
        AstPtr f = parse_iff();
        expect(Tok::End, "end of input");
        return f;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    void expect(Tok kind, const std::string& what) {
        if (tok_.kind != kind)
            throw ParseError(tok_.pos, "expected " + what + ", found '" +
                                           (tok_.kind == Tok::End ? "end of input" : tok_.text) + "'");
    }

    AstPtr parse_iff() {
        AstPtr lhs = parse_implies();
        while (tok_.kind == Tok::Iff) {
            advance();
            lhs = Ast::make(Connective::Iff, lhs, parse_implies());
        }
        return lhs;
    }

    AstPtr parse_implies() {
        AstPtr lhs = parse_or();
        if (tok_.kind == Tok::Implies) {
            advance();
            return Ast::make(Connective::Implies, lhs, parse_implies());  // right-assoc
        }
        return lhs;
    }

    AstPtr parse_or() {
        AstPtr lhs = parse_and();
        while (tok_.kind == Tok::Or) {
            advance();
            lhs = Ast::make(Connective::Or, lhs, parse_and());
        }
        return lhs;
    }

    AstPtr parse_and() {
        AstPtr lhs = parse_unary();
        while (tok_.kind == Tok::And) {
            advance();
            lhs = Ast::make(Connective::And, lhs, parse_unary());
        }
        return lhs;
    }

    AstPtr parse_unary() {
        if (tok_.kind == Tok::Not) {
            advance();
            return Ast::make(Connective::Not, parse_unary());
        }
        return parse_primary();
    }

    AstPtr parse_primary() {
        if (tok_.kind == Tok::LParen) {
            advance();
            AstPtr inner = parse_iff();
            expect(Tok::RParen, "')'");
            advance();
            return inner;
        }
        if (tok_.kind == Tok::Atom) {
            int idx = lang_->atom_index(tok_.text);
            if (idx < 0)
                throw ParseError(tok_.pos, "unknown atom '" + tok_.text + "'");
            advance();
            return Ast::make_atom(idx);
        }
        throw ParseError(tok_.pos, "expected an atom, '!' or '(', found '" +
                                       (tok_.kind == Tok::End ? "end of input" : tok_.text) + "'");
    }

    Lexer lexer_;
    Token tok_{Tok::End, "", 0};
    LanguagePtr lang_;
};

// precedence for display; higher binds tighter
int precedence(Connective c) {
    switch (c) {
        case Connective::Iff: return 1;
        case Connective::Implies: return 2;
        case Connective::Or: return 3;
        case Connective::And: return 4;
        case Connective::Not: return 5;
        case Connective::Atom: return 6;
    }
    return 6;
}

void render(const Ast& ast, const Language& lang, int min_prec, std::string& out) {
    int prec = precedence(ast.kind);
    bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (ast.kind) {
        case Connective::Atom:
            out += lang.atoms()[ast.atom];
            break;
        case Connective::Not:
            out += '!';
            render(*ast.lhs, lang, prec + 1, out);
            break;
        case Connective::And:
        case Connective::Or:
        case Connective::Iff:  // left-assoc
            render(*ast.lhs, lang, prec, out);
            out += ast.kind == Connective::And ? " & " : ast.kind == Connective::Or ? " | " : " <-> ";
            render(*ast.rhs, lang, prec + 1, out);
            break;
        case Connective::Implies:  // right-assoc
            render(*ast.lhs, lang, prec + 1, out);
            out += " -> ";
            render(*ast.rhs, lang, prec, out);
            break;
    }
    if (parens) out += ')';
}

void require_same_language(const Formula& f, const Formula& g, const char* op) {
    if (!f.same_language(g))
        throw LanguageMismatch(std::string(op) + ": operands use different languages");
}

}  // namespace

std::string Formula::text() const {
    std::string out;
    render(*ast_, *lang_, 0, out);
    return out;
}

Formula parse_formula(std::string_view text, const LanguagePtr& lang) {
    Parser parser(text, lang);
    return Formula(lang, parser.parse());
}

Formula formula_from_truthset(const TruthSet& mask, const LanguagePtr& lang) {
    if (mask.size() != lang->valuation_count())
        throw LanguageMismatch("truth set size does not match the language");
    if (mask.empty()) {
        AstPtr a = Ast::make_atom(0);
        return Formula(lang, Ast::make(Connective::And, a, Ast::make(Connective::Not, a)));
    }
    AstPtr dnf;
    size_t atom_count = lang->atoms().size();
    mask.for_each([&](uint32_t v) {
        AstPtr clause;
        for (size_t i = 0; i < atom_count; ++i) {
            AstPtr lit = Ast::make_atom(static_cast<int>(i));
            if (!((v >> i) & 1)) lit = Ast::make(Connective::Not, lit);
            clause = clause ? Ast::make(Connective::And, clause, lit) : lit;
        }
        dnf = dnf ? Ast::make(Connective::Or, dnf, clause) : clause;
    });
    return Formula(lang, dnf);
}

bool entails(const Formula& f, const Formula& g) {
    require_same_language(f, g, "entails");
    return f.truthset().subset_of(g.truthset());
}

bool is_tautology(const Formula& f) { return f.truthset().full(); }
bool is_contradiction(const Formula& f) { return f.truthset().empty(); }
bool is_contingent(const Formula& f) { return !f.truthset().empty() && !f.truthset().full(); }

Formula negate(const Formula& f) {
    // unwrap a double negation so display stays readable
    AstPtr ast = f.ast()->kind == Connective::Not ? f.ast()->lhs
                                                  : Ast::make(Connective::Not, f.ast());
    return Formula(f.language(), ast);
}

Formula conjoin(const Formula& f, const Formula& g) {
    require_same_language(f, g, "conjoin");
    return Formula(f.language(), Ast::make(Connective::And, f.ast(), g.ast()));
}

Formula disjoin(const Formula& f, const Formula& g) {
    require_same_language(f, g, "disjoin");
    return Formula(f.language(), Ast::make(Connective::Or, f.ast(), g.ast()));
}

Formula implies(const Formula& f, const Formula& g) {
    require_same_language(f, g, "implies");
    return Formula(f.language(), Ast::make(Connective::Implies, f.ast(), g.ast()));
}

Formula iff(const Formula& f, const Formula& g) {
    require_same_language(f, g, "iff");
    return Formula(f.language(), Ast::make(Connective::Iff, f.ast(), g.ast()));
}

}  // namespace credo
