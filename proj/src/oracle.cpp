#include "credo/oracle.hpp"

#include <stdexcept>

namespace credo::oracle {

bool feasible_by_enumeration(const Agenda& agenda, const std::vector<Rat>& values) {
    uint32_t n = agenda.language()->valuation_count();
    if (n > 16) throw std::invalid_argument("enumeration oracle limited to small languages");

    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    rows.emplace_back(n, Rat(1));
    rhs.emplace_back(1);
    for (size_t i = 0; i < agenda.size(); ++i) {
        if (i > agenda.complement_of(i)) continue;
        std::vector<Rat> row(n, Rat(0));
        agenda[i].truthset().for_each([&](uint32_t v) { row[v] = 1; });
        rows.push_back(std::move(row));
        rhs.push_back(values[i]);
    }

    for (uint32_t support = 0; support < (uint32_t{1} << n); ++support) {
        std::vector<uint32_t> cols;
        for (uint32_t v = 0; v < n; ++v)
            if ((support >> v) & 1) cols.push_back(v);

        std::vector<std::vector<Rat>> m;
        for (size_t r = 0; r < rows.size(); ++r) {
            std::vector<Rat> row;
            row.reserve(cols.size() + 1);
            for (uint32_t c : cols) row.push_back(rows[r][c]);
            row.push_back(rhs[r]);
            m.push_back(std::move(row));
        }

        size_t cols_n = cols.size();
        size_t rank = 0;
        std::vector<size_t> pivot_row(cols_n, SIZE_MAX);
        for (size_t c = 0; c < cols_n && rank < m.size(); ++c) {
            size_t pr = SIZE_MAX;
            for (size_t r = rank; r < m.size(); ++r) {
                if (m[r][c] != 0) {
                    pr = r;
                    break;
                }
            }
            if (pr == SIZE_MAX) continue;
            std::swap(m[rank], m[pr]);
            Rat inv = Rat(1) / m[rank][c];
            for (auto& x : m[rank]) x *= inv;
            for (size_t r = 0; r < m.size(); ++r) {
                if (r == rank || m[r][c] == 0) continue;
                Rat f = m[r][c];
                for (size_t j = 0; j <= cols_n; ++j) m[r][j] -= f * m[rank][j];
            }
            pivot_row[c] = rank;
            ++rank;
        }
        if (rank != cols_n) continue;  // dependent columns; smaller supports cover these vertices
        bool consistent = true;
        for (size_t r = rank; r < m.size() && consistent; ++r)
            if (m[r][cols_n] != 0) consistent = false;
        if (!consistent) continue;
        bool nonneg = true;
        for (size_t c = 0; c < cols_n && nonneg; ++c)
            if (m[pivot_row[c]][cols_n] < 0) nonneg = false;
        if (nonneg) return true;
    }
    return false;
}

}  // namespace credo::oracle
