#include "credo/table.hpp"

#include <algorithm>

namespace credo {

std::string render_table(const std::string& title, const std::vector<std::string>& columns,
                         const std::vector<std::string>& row_labels,
                         const std::vector<std::vector<std::string>>& cells) {
    size_t label_width = std::string("Individual").size();
    for (const auto& label : row_labels) label_width = std::max(label_width, label.size());
    std::vector<size_t> widths(columns.size());
    for (size_t c = 0; c < columns.size(); ++c) {
        widths[c] = columns[c].size();
        for (const auto& row : cells)
            if (c < row.size()) widths[c] = std::max(widths[c], row[c].size());
    }

    auto pad = [](const std::string& s, size_t w) { return s + std::string(w - s.size(), ' '); };

    std::string out;
    if (!title.empty()) out += title + "\n";
    std::string header = pad("Individual", label_width);
    for (size_t c = 0; c < columns.size(); ++c) header += "  " + pad(columns[c], widths[c]);
    out += header + "\n";
    out += std::string(header.size(), '-') + "\n";
    for (size_t r = 0; r < cells.size(); ++r) {
        std::string line = pad(r < row_labels.size() ? row_labels[r] : "", label_width);
        for (size_t c = 0; c < cells[r].size(); ++c) line += "  " + pad(cells[r][c], widths[c]);
        out += line + "\n";
    }
    return out;
}

}  // namespace credo
