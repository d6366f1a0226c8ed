#include "nnscf/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nnscf/errors.hpp"

namespace nnscf {

namespace {

std::map<std::string, std::size_t> node_columns(const std::vector<std::string>& order,
                                                std::string& node_row) {
  std::map<std::string, std::size_t> col;
  std::ostringstream row;
  std::size_t at = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) {
      row << "  ";
      at += 2;
    }
    col[order[i]] = at;
    row << order[i];
    at += order[i].size();
  }
  node_row = row.str();
  return col;
}

void check_order(const ArcDiagram& d, const std::vector<std::string>& order) {
  const Poset& poset = d.poset();
  if (static_cast<int>(order.size()) != poset.size())
    throw value_error("the rendering order must list every element exactly once");
  std::map<std::string, int> pos;
  for (std::size_t i = 0; i < order.size(); ++i) {
    poset.index_of(order[i]);
    if (!pos.emplace(order[i], static_cast<int>(i)).second)
      throw value_error("duplicate element in rendering order: " + order[i]);
  }
  for (const auto& [a, b] : poset.strict_pairs())
    if (pos.at(poset.label(a)) >= pos.at(poset.label(b)))
      throw value_error("the rendering order is not a linear extension");
}

std::string texify(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '_' || ch == '#' || ch == '%' || ch == '&' || ch == '$') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

}  // namespace

std::string render_arcs_ascii(const ArcDiagram& d, const std::vector<std::string>& order) {
  check_order(d, order);
  std::string node_row;
  auto col = node_columns(order, node_row);
  std::ostringstream out;
  out << node_row << "\n";
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::vector<Arc> arcs = d.arcs();
  std::stable_sort(arcs.begin(), arcs.end(), [&](const Arc& a, const Arc& b) {
    return std::pair(pos.at(a.from), pos.at(a.to)) < std::pair(pos.at(b.from), pos.at(b.to));
  });
  for (const auto& arc : arcs) {
    std::size_t c1 = col.at(arc.from);
    std::size_t c2 = col.at(arc.to);
    if (c1 > c2) std::swap(c1, c2);
    std::string line(c2 + 1, ' ');
    for (std::size_t c = c1 + 1; c < c2; ++c) line[c] = '-';
    line[c1] = '*';
    line[c2] = '*';
    out << line << "  " << arc.from << "~" << arc.to << ": " << arc.label.to_string() << "\n";
  }
  return out.str();
}

std::string render_arcs_latex(const ArcDiagram& d, const std::vector<std::string>& order) {
  check_order(d, order);
  std::ostringstream out;
  out << "\\documentclass{standalone}\n\\usepackage{tikz}\n\\begin{document}\n";
  out << "\\begin{tikzpicture}[every node/.style={inner sep=1pt}]\n";
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) {
    pos[order[i]] = i;
    out << "  \\node (n" << i << ") at (" << i << ",0) {$" << texify(order[i]) << "$};\n";
  }
  std::vector<Arc> arcs = d.arcs();
  std::stable_sort(arcs.begin(), arcs.end(), [&](const Arc& a, const Arc& b) {
    return std::pair(pos.at(a.from), pos.at(a.to)) < std::pair(pos.at(b.from), pos.at(b.to));
  });
  for (const auto& arc : arcs) {
    std::size_t i = pos.at(arc.from);
    std::size_t j = pos.at(arc.to);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    out << "  \\draw (n" << i << ") to[bend left=" << std::min<std::size_t>(60, 25 + 10 * (j - i))
        << "] node[above] {$" << texify(arc.label.to_string())
        << (flip ? "^{\\leftarrow}" : "") << "$} (n" << j << ");\n";
  }
  out << "\\end{tikzpicture}\n\\end{document}\n";
  return out.str();
}

std::string render_poset_ascii(const Poset& poset) {
  const int n = poset.size();
  std::vector<int> level(static_cast<std::size_t>(n), 0);
  // Element order is a linear extension, so one forward sweep settles levels.
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      if (poset.less(a, b)) level[static_cast<std::size_t>(b)] =
          std::max(level[static_cast<std::size_t>(b)], level[static_cast<std::size_t>(a)] + 1);
  int max_level = 0;
  for (int l : level) max_level = std::max(max_level, l);
  std::ostringstream out;
  if (n == 0) {
    out << "(empty poset)\n";
    return out.str();
  }
  for (int l = 0; l <= max_level; ++l) {
    out << "level " << l << ":";
    for (int i = 0; i < n; ++i)
      if (level[static_cast<std::size_t>(i)] == l) out << " " << poset.label(i);
    out << "\n";
  }
  out << "covers:";
  auto covers = poset.cover_pairs();
  if (covers.empty()) out << " (none)";
  for (const auto& [a, b] : covers) out << " " << a << "<" << b;
  out << "\n";
  return out.str();
}

std::string render_poset_latex(const Poset& poset) {
  const int n = poset.size();
  std::vector<int> level(static_cast<std::size_t>(n), 0);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      if (poset.less(a, b)) level[static_cast<std::size_t>(b)] =
          std::max(level[static_cast<std::size_t>(b)], level[static_cast<std::size_t>(a)] + 1);
  std::vector<int> slot(static_cast<std::size_t>(n), 0);
  std::map<int, int> used;
  for (int i = 0; i < n; ++i) slot[static_cast<std::size_t>(i)] = used[level[static_cast<std::size_t>(i)]]++;
  std::ostringstream out;
  out << "\\documentclass{standalone}\n\\usepackage{tikz}\n\\begin{document}\n";
  out << "\\begin{tikzpicture}[every node/.style={inner sep=1pt}]\n";
  for (int i = 0; i < n; ++i)
    out << "  \\node (n" << i << ") at (" << slot[static_cast<std::size_t>(i)] << ","
        << level[static_cast<std::size_t>(i)] << ") {$" << texify(poset.label(i)) << "$};\n";
  for (const auto& [a, b] : poset.cover_pairs())
    out << "  \\draw (n" << poset.index_of(a) << ") -- (n" << poset.index_of(b) << ");\n";
  out << "\\end{tikzpicture}\n\\end{document}\n";
  return out.str();
}

std::string render_table_ascii(const CharacterTable& table) {
  const std::size_t n = table.diagrams.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& d : table.diagrams) names.push_back(d.to_string());
  std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
  cells[0][0] = "";
  for (std::size_t j = 0; j < n; ++j) cells[0][j + 1] = "K" + names[j];
  for (std::size_t i = 0; i < n; ++i) {
    cells[i + 1][0] = "X" + names[i];
    for (std::size_t j = 0; j < n; ++j) cells[i + 1][j + 1] = table.values[i][j].to_string();
  }
  std::vector<std::size_t> width(n + 1, 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j <= n; ++j) width[j] = std::max(width[j], row[j].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (j > 0) out << " | ";
      out << row[j] << std::string(width[j] - row[j].size(), ' ');
    }
    out << "\n";
  }
  return out.str();
}

std::string render_table_latex(const CharacterTable& table) {
  const std::size_t n = table.diagrams.size();
  std::ostringstream out;
  out << "\\documentclass{standalone}\n\\usepackage{amsmath}\n\\begin{document}\n";
  out << "\\begin{tabular}{l|" << std::string(n, 'c') << "}\n";
  for (const auto& d : table.diagrams) out << " & $K_{" << texify(d.to_string()) << "}$";
  out << " \\\\\\hline\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "$\\chi_{" << texify(table.diagrams[i].to_string()) << "}$";
    for (std::size_t j = 0; j < n; ++j) out << " & $" << table.values[i][j].to_latex() << "$";
    out << " \\\\\n";
  }
  out << "\\end{tabular}\n\\end{document}\n";
  return out.str();
}

}  // namespace nnscf
