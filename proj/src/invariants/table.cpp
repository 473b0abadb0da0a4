#include <algorithm>
#include <sstream>

#include "lyu/invariants/invariants.hpp"

namespace lyu {

InvariantReport validate_table(const LyubeznikTable& table) {
  InvariantReport r;
  const int m = static_cast<int>(table.entries.size());
  const int d = table.d;
  r.values["d"] = d;

  std::string w;
  for (int i = 0; i < m && w.empty(); ++i)
    for (int j = d + 1; j < m && w.empty(); ++j)
      if (table.at(i, j) != 0) w = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  r.add("vanishing beyond d", w.empty(), w);

  w.clear();
  for (int i = 0; i < m && w.empty(); ++i)
    for (int j = 0; j < i && w.empty(); ++j)
      if (table.at(i, j) != 0) w = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  r.add("upper triangular", w.empty(), w);

  const bool top = d >= 0 && d < m && table.at(d, d) >= 1;
  r.add("lambda_{d,d} != 0", top, top ? "" : "(" + std::to_string(d) + "," + std::to_string(d) + ")");

  long euler = 0;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) euler += ((i - j) % 2 == 0 ? 1 : -1) * table.at(i, j);
  r.values["euler"] = euler;
  r.add("euler characteristic = 1", euler == 1, euler == 1 ? "" : "sum = " + std::to_string(euler));
  return r;
}

std::vector<long> last_column(const LyubeznikTable& table) {
  std::vector<long> col;
  for (int i = 0; i <= table.d; ++i) col.push_back(table.at(i, table.d));
  return col;
}

std::string format_table_ascii(const LyubeznikTable& table) {
  const int d = table.d;
  std::size_t width = 1;
  for (int i = 0; i <= d; ++i)
    for (int j = i; j <= d; ++j) width = std::max(width, std::to_string(table.at(i, j)).size());
  std::ostringstream os;
  for (int i = 0; i <= d; ++i) {
    std::string line;
    for (int j = 0; j <= d; ++j) {
      std::string cell = j < i ? "" : std::to_string(table.at(i, j));
      if (j) line += ' ';
      line += std::string(width - cell.size(), ' ') + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string format_table_latex(const LyubeznikTable& table) {
  std::ostringstream os;
  os << "\\begin{bmatrix}\n";
  for (int i = 0; i <= table.d; ++i) {
    os << " ";
    for (int j = 0; j <= table.d; ++j) {
      if (j) os << " &";
      if (j >= i) os << " " << table.at(i, j);
    }
    os << (i < table.d ? " \\\\\n" : "\n");
  }
  os << "\\end{bmatrix}\n";
  return os.str();
}

}  // namespace lyu
