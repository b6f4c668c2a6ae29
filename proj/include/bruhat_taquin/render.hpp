#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "bruhat_taquin/growth.hpp"
#include "bruhat_taquin/plactic.hpp"

namespace bruhat_taquin {

namespace detail {
inline std::string pad_center(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  const std::size_t left = (width - s.size()) / 2;
  return std::string(left, ' ') + s + std::string(width - s.size() - left, ' ');
}
}  // namespace detail

/// Text picture of a growth diagram, top row first, arrows pointing up in Bruhat order.
///
///   4123 --1_2--> 4213 --2_3--> 4312
///    ^             ^             ^
///   2_4           2_4           3_4
///    |             |             |
///   2143 --1_4--> 2413 --2_3--> 3412
inline std::string render_ascii(const GrowthDiagram& d) {
  std::size_t node = 1, label = 1;
  for (const auto& col : d.grid)
    for (const auto& w : col) node = std::max(node, w.to_string().size());
  for (int j = 0; j <= d.q(); ++j)
    for (int i = 0; i < d.p(); ++i) label = std::max(label, transposition_between(d.grid[i][j], d.grid[i + 1][j]).to_string().size());
  for (int i = 0; i <= d.p(); ++i)
    for (int j = 0; j < d.q(); ++j) label = std::max(label, transposition_between(d.grid[i][j], d.grid[i][j + 1]).to_string().size());
  const std::size_t arrow = label + 7;
  const std::size_t cell = std::max(node, label);

  auto pad_right = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  auto trim = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };

  std::ostringstream out;
  for (int j = d.q(); j >= 0; --j) {
    std::string line;
    for (int i = 0; i <= d.p(); ++i) {
      line += pad_right(d.grid[i][j].to_string(), cell);
      if (i < d.p()) {
        const std::string t = transposition_between(d.grid[i][j], d.grid[i + 1][j]).to_string();
        std::string a = " " + std::string((arrow - 3 - t.size()) / 2, '-') + t;
        a += std::string(arrow - 2 - a.size(), '-') + "> ";
        line += a;
      }
    }
    out << trim(line) << "\n";
    if (j == 0) break;
    std::string up, labels, bar;
    for (int i = 0; i <= d.p(); ++i) {
      const std::size_t width = cell + (i < d.p() ? arrow : 0);
      const std::string t = transposition_between(d.grid[i][j - 1], d.grid[i][j]).to_string();
      up += pad_right(detail::pad_center("^", cell), width);
      labels += pad_right(detail::pad_center(t, cell), width);
      bar += pad_right(detail::pad_center("|", cell), width);
    }
    out << trim(up) << "\n" << trim(labels) << "\n" << trim(bar) << "\n";
  }
  return out.str();
}

/// The diagram in the `diagram` environment of the diagrams package, one matrix row per line.
inline std::string render_tikz(const GrowthDiagram& d) {
  std::ostringstream out;
  out << "\\begin{diagram}\n";
  for (int j = d.q(); j >= 0; --j) {
    for (int i = 0; i <= d.p(); ++i) {
      out << "\\node{" << d.grid[i][j].to_string() << "}";
      if (j < d.q())
        out << "\\arrow{n," << (i == 0 ? "l" : "r") << "}{" << transposition_between(d.grid[i][j], d.grid[i][j + 1]).to_string() << "}";
      if (i < d.p())
        out << "\\arrow{e," << (j == d.q() ? "t" : "b") << "}{" << transposition_between(d.grid[i][j], d.grid[i + 1][j]).to_string() << "}";
    }
    out << (j > 0 ? "\\\\\n" : "\n");
  }
  out << "\\end{diagram}\n";
  return out.str();
}

/// Aligned grid of "a_b" entries, one tableau row per line.
inline std::string render_tableau(const TranspositionTableau& t) {
  std::size_t width = 1;
  for (const auto& row : t.rows())
    for (const auto& x : row) width = std::max(width, x.to_string().size());
  std::ostringstream out;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string s = row[c].to_string();
      if (c + 1 < row.size()) s.resize(width + 1, ' ');
      out << s;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace bruhat_taquin
