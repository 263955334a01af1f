// Copyright 2026 The fqlab Authors.
//
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

#include "fqlab/pointset_io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "fqlab/error.h"

namespace fqlab {

namespace {

uint64_t parse_uint(std::string_view s, Errc code, const std::string& what) {
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(code, what + ": '" + std::string(s) + "'");
  }
  return v;
}

std::vector<uint32_t> parse_modulus(std::string_view s) {
  std::vector<uint32_t> out;
  while (!s.empty()) {
    const size_t comma = s.find(',');
    out.push_back(static_cast<uint32_t>(
        parse_uint(s.substr(0, comma), Errc::kParseError, "modulus coefficient")));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string header_line(const Grid& grid) {
  const Field& f = grid.field();
  std::ostringstream os;
  os << "# q=" << f.q() << " p=" << f.p() << " l=" << f.l() << " d=" << grid.d()
     << " modulus=";
  for (size_t i = 0; i < f.modulus().size(); ++i) {
    if (i) os << ',';
    os << f.modulus()[i];
  }
  return os.str();
}

void write_pointset(std::ostream& out, const PointSet& e) {
  out << header_line(e.grid()) << '\n';
  for (size_t i = 0; i < e.size(); ++i) {
    const auto x = e.coords(i);
    for (uint32_t j = 0; j < e.d(); ++j) {
      if (j) out << ' ';
      out << x[j].v;
    }
    out << '\n';
  }
}

PointSet read_pointset(std::istream& in, const Grid* expected) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
    throw Error(Errc::kParseError, "missing header line");
  }
  std::map<std::string, std::string> fields;
  std::istringstream hs(line.substr(2));
  std::string tok;
  while (hs >> tok) {
    const size_t eq = tok.find('=');
    if (eq == std::string::npos) throw Error(Errc::kParseError, "bad header token " + tok);
    fields[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  for (const char* key : {"q", "p", "l", "d", "modulus"}) {
    if (!fields.count(key)) {
      throw Error(Errc::kParseError, std::string("header lacks ") + key);
    }
  }
  const uint64_t q = parse_uint(fields["q"], Errc::kParseError, "q");
  const uint64_t p = parse_uint(fields["p"], Errc::kParseError, "p");
  const uint64_t l = parse_uint(fields["l"], Errc::kParseError, "l");
  const uint64_t d = parse_uint(fields["d"], Errc::kParseError, "d");
  const auto modulus = parse_modulus(fields["modulus"]);

  std::optional<Grid> built;
  const Grid* grid = expected;
  if (expected) {
    const Field& f = expected->field();
    if (q != f.q() || p != f.p() || l != f.l() || d != expected->d() ||
        modulus != f.modulus()) {
      throw Error(Errc::kHeaderMismatch,
                  "file header '" + line + "' does not match '" +
                      header_line(*expected) + "'");
    }
  } else {
    uint64_t pl = 1;
    for (uint64_t i = 0; i < l; ++i) pl *= p;
    if (pl != q) throw Error(Errc::kParseError, "q != p^l in header");
    built.emplace(Field::make(static_cast<uint32_t>(p), static_cast<uint32_t>(l),
                              modulus),
                  static_cast<uint32_t>(d));
    grid = &*built;
  }

  std::vector<GridPoint> pts;
  uint64_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    GridPoint x;
    while (ls >> tok) {
      const uint64_t v = parse_uint(tok, Errc::kParseError,
                                    "line " + std::to_string(lineno));
      if (v >= q) {
        throw Error(Errc::kParseError,
                    "line " + std::to_string(lineno) + ": coordinate >= q");
      }
      x.push_back(Fq{static_cast<uint32_t>(v)});
    }
    if (x.size() != d) {
      throw Error(Errc::kParseError,
                  "line " + std::to_string(lineno) + ": expected " +
                      std::to_string(d) + " coordinates");
    }
    pts.push_back(std::move(x));
  }
  return PointSet::from_points(*grid, pts);
}

void save_pointset(const std::string& path, const PointSet& e) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::kInvalidArgument, "cannot write " + path);
  write_pointset(out, e);
}

PointSet load_pointset(const std::string& path, const Grid* expected) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kParseError, "cannot read " + path);
  return read_pointset(in, expected);
}

}  // namespace fqlab
