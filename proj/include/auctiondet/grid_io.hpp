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

#ifndef AUCTIONDET_GRID_IO_HPP_
#define AUCTIONDET_GRID_IO_HPP_

#include <filesystem>
#include <iosfwd>

#include "auctiondet/grid.hpp"

namespace auctiondet {

// Plain-text CSV: one grid row per line, comma-separated decimals, no header.
// Values are written in shortest round-trip form, so ReadGridCsv(WriteGridCsv(g))
// reproduces g bit for bit.
void WriteGridCsv(std::ostream& out, const Grid& g);
void WriteGridCsv(const std::filesystem::path& path, const Grid& g);

// Throws std::runtime_error on ragged rows, unparsable or non-finite cells,
// or an empty input.
Grid ReadGridCsv(std::istream& in);
Grid ReadGridCsv(const std::filesystem::path& path);

}  // namespace auctiondet

#endif  // AUCTIONDET_GRID_IO_HPP_
