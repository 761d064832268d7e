#pragma once

#include <optional>
#include <vector>

#include "credo/errors.hpp"
#include "credo/rational.hpp"

namespace credo {

// Dense two-phase primal simplex for
//     minimize c.x  subject to  A x = b,  x >= 0.
// Bland's rule throughout, so it terminates without cycling. With S = Rat
// every comparison is exact (tol = 0); with S = double a pivot tolerance
// applies. Redundant rows are fine: phase one drops them.
template <class S>
class Simplex {
public:
    enum class Status { Optimal, Infeasible, Unbounded };

    struct Result {
        Status status;
        S objective{};
        std::vector<S> x;
    };

    Simplex(std::vector<std::vector<S>> a, std::vector<S> b,
            S tol = scalar_traits<S>::default_tol())
        : a_(std::move(a)), b_(std::move(b)), tol_(tol) {
        rows_ = a_.size();
        cols_ = rows_ ? a_.front().size() : 0;
        for (const auto& row : a_)
            if (row.size() != cols_) throw PreconditionError("ragged constraint matrix");
        if (b_.size() != rows_) throw PreconditionError("rhs size mismatch");
    }

    // Phase one only: a feasible point if one exists.
    std::optional<std::vector<S>> find_feasible() const {
        Tableau t = phase_one();
        if (!t.feasible) return std::nullopt;
        return t.solution(cols_);
    }

    Result minimize(const std::vector<S>& c) const {
        if (c.size() != cols_) throw PreconditionError("objective size mismatch");
        Tableau t = phase_one();
        if (!t.feasible) return {Status::Infeasible, S{}, {}};

        // rebuild the objective row from c, priced out against the basis
        t.obj.assign(t.width + 1, S{});
        for (size_t j = 0; j < cols_; ++j) t.obj[j] = c[j];
        for (size_t i = 0; i < t.m.size(); ++i) {
            const S& coeff = t.obj[t.basis[i]];
            if (is_zero(coeff)) continue;
            S f = coeff;
            for (size_t j = 0; j <= t.width; ++j) t.obj[j] -= f * t.m[i][j];
        }
        if (!t.run(*this)) return {Status::Unbounded, S{}, {}};
        S value = -t.obj[t.width];
        return {Status::Optimal, value, t.solution(cols_)};
    }

    Result maximize(const std::vector<S>& c) const {
        std::vector<S> neg(c.size());
        for (size_t j = 0; j < c.size(); ++j) neg[j] = -c[j];
        Result r = minimize(neg);
        r.objective = -r.objective;
        return r;
    }

private:
    bool is_zero(const S& x) const { return scalar_traits<S>::is_zero(x, tol_); }

    struct Tableau {
        std::vector<std::vector<S>> m;  // constraint rows, rhs in column `width`
        std::vector<S> obj;             // reduced-cost row, -objective in column `width`
        std::vector<size_t> basis;      // basic column per row
        size_t width = 0;               // structural + artificial column count
        bool feasible = false;

        std::vector<S> solution(size_t n) const {
            std::vector<S> x(n, S{});
            for (size_t i = 0; i < m.size(); ++i)
                if (basis[i] < n) x[basis[i]] = m[i][width];
            return x;
        }

        void pivot(size_t pr, size_t pc) {
            S inv = S(1) / m[pr][pc];
            for (size_t j = 0; j <= width; ++j) m[pr][j] *= inv;
            for (size_t i = 0; i < m.size(); ++i) {
                if (i == pr) continue;
                S f = m[i][pc];
                if (f == S{}) continue;
                for (size_t j = 0; j <= width; ++j) m[i][j] -= f * m[pr][j];
            }
            S f = obj[pc];
            if (!(f == S{}))
                for (size_t j = 0; j <= width; ++j) obj[j] -= f * m[pr][j];
            basis[pr] = pc;
        }

        // Bland: entering = lowest-index negative reduced cost; leaving =
        // lowest basic index among ratio-test minimizers.
        bool run(const Simplex& lp) {
            for (;;) {
                size_t enter = width;
                for (size_t j = 0; j < width; ++j) {
                    if (obj[j] < -lp.tol_) {
                        enter = j;
                        break;
                    }
                }
                if (enter == width) return true;  // optimal

                size_t leave = m.size();
                for (size_t i = 0; i < m.size(); ++i) {
                    if (!(m[i][enter] > lp.tol_)) continue;
                    if (leave == m.size()) {
                        leave = i;
                        continue;
                    }
                    S lhs = m[i][width] * m[leave][enter];
                    S rhs = m[leave][width] * m[i][enter];
                    if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
                }
                if (leave == m.size()) return false;  // unbounded
                pivot(leave, enter);
            }
        }
    };

    Tableau phase_one() const {
        Tableau t;
        size_t m = rows_, n = cols_;
        t.width = n + m;
        t.basis.resize(m);
        t.m.assign(m, std::vector<S>(t.width + 1, S{}));
        for (size_t i = 0; i < m; ++i) {
            bool flip = b_[i] < S{};
            for (size_t j = 0; j < n; ++j) t.m[i][j] = flip ? S(-a_[i][j]) : a_[i][j];
            t.m[i][t.width] = flip ? S(-b_[i]) : b_[i];
            t.m[i][n + i] = S(1);
            t.basis[i] = n + i;
        }
        // reduced costs for min(sum of artificials)
        t.obj.assign(t.width + 1, S{});
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j <= t.width; ++j)
                if (t.basis[i] != j) t.obj[j] -= t.m[i][j];

        t.run(*this);  // bounded below by 0, never unbounded
        S infeasibility = -t.obj[t.width];
        if (!is_zero(infeasibility)) {
            t.feasible = false;
            return t;
        }
        t.feasible = true;

        // pivot basic artificials out; a row with no structural entry is
        // redundant and gets dropped
        for (size_t i = t.m.size(); i-- > 0;) {
            if (t.basis[i] < n) continue;
            size_t pc = n;
            for (size_t j = 0; j < n; ++j) {
                if (!is_zero(t.m[i][j])) {
                    pc = j;
                    break;
                }
            }
            if (pc < n) {
                t.pivot(i, pc);
            } else {
                t.m.erase(t.m.begin() + static_cast<ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<ptrdiff_t>(i));
            }
        }

        // drop the artificial columns so phase two can never re-enter them
        for (auto& row : t.m) {
            row[n] = row[t.width];
            row.resize(n + 1);
        }
        t.width = n;
        t.obj.assign(n + 1, S{});
        return t;
    }

    std::vector<std::vector<S>> a_;
    std::vector<S> b_;
    S tol_;
    size_t rows_ = 0, cols_ = 0;
};

}  // namespace credo
