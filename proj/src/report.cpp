#include "beldec/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace beldec {

double round_half_up(double v, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::floor(v * scale + 0.5) / scale;
}

std::string fmt_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, round_half_up(v, digits));
  return buf;
}

namespace {

// Display width: count code points, not bytes (labels contain ∩ / ∪).
std::size_t utf8_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

void pad_to(std::string& out, const std::string& cell, std::size_t width) {
  out += cell;
  for (std::size_t i = utf8_width(cell); i < width; ++i) out += ' ';
}

}  // namespace

std::string render_table(const std::vector<std::string>& columns,
                         const std::vector<std::pair<std::string, std::vector<double>>>& rows,
                         int digits) {
  std::size_t name_w = 0;
  for (const auto& [name, vals] : rows) name_w = std::max(name_w, utf8_width(name));

  std::vector<std::vector<std::string>> cells(rows.size());
  std::vector<std::size_t> widths;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    std::size_t w = utf8_width(columns[c]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::string cell = c < rows[r].second.size() ? fmt_fixed(rows[r].second[c], digits) : "";
      w = std::max(w, utf8_width(cell));
      cells[r].push_back(std::move(cell));
    }
    widths.push_back(w);
  }

  std::string out;
  pad_to(out, "", name_w);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out += "  ";
    pad_to(out, columns[c], widths[c]);
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  out += '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    pad_to(line, rows[r].first, name_w);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      line += "  ";
      pad_to(line, cells[r][c], widths[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace beldec
