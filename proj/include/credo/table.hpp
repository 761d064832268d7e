#pragma once

#include <string>
#include <vector>

namespace credo {

// Fixed-width text table; first column holds row labels.
std::string render_table(const std::string& title, const std::vector<std::string>& columns,
                         const std::vector<std::string>& row_labels,
                         const std::vector<std::vector<std::string>>& cells);

}  // namespace credo
