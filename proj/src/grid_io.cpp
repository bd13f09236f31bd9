// Copyright 2026 The auctiondet Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "auctiondet/grid_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace auctiondet {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double ParseCell(std::string_view cell, std::size_t line_no) {
  cell = Trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": cannot parse '" + std::string(cell) + "'");
  }
  if (!std::isfinite(v)) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": non-finite value");
  }
  return v;
}

}  // namespace

void WriteGridCsv(std::ostream& out, const Grid& g) {
  char buf[32];
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (c) out.put(',');
      const auto res = std::to_chars(buf, buf + sizeof(buf), g(r, c));
      out.write(buf, res.ptr - buf);
    }
    out.put('\n');
  }
}

void WriteGridCsv(const std::filesystem::path& path, const Grid& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  WriteGridCsv(out, g);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Grid ReadGridCsv(std::istream& in) {
  std::vector<double> values;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::size_t n = 0;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      values.push_back(ParseCell(rest.substr(0, comma), line_no));
      ++n;
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (rows == 0) {
      cols = n;
    } else if (n != cols) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                               std::to_string(cols) + " columns, got " +
                               std::to_string(n));
    }
    ++rows;
  }
  if (rows == 0) throw std::runtime_error("empty grid file");
  return Grid(rows, cols, std::move(values));
}

Grid ReadGridCsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return ReadGridCsv(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace auctiondet
