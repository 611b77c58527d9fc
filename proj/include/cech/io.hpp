#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cech/complex.hpp"
#include "cech/types.hpp"

namespace cech::io {

/// Malformed input; line() is 1-based (0 when the file could not be read).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Disk files:
//   dim=2
//   0.5,1.25,1
//   3,0,2
// A "dim=<d>" header, then one disk per line: d center coordinates and the
// radius, comma separated. Blank lines and lines starting with '#' are
// skipped. Radii must be positive.

DiskSystem parse_disks(std::istream& in);
DiskSystem read_disk_file(const std::string& path);

/// Shortest round-trip decimal form, so parse(format(M)) == M.
std::string format_disks(const DiskSystem& system);

/// One point per line: "x,y" (or whitespace separated).
std::vector<Point2> parse_points(std::istream& in);
std::vector<Point2> read_point_file(const std::string& path);

// Filtration files: one simplex per line, "i j k;weight", weight printed with
// 12 significant digits, lines in filtration order.

std::string format_weight(double weight);
std::string format_filtration(const WeightedComplex& complex);
std::vector<std::pair<double, Simplex>> parse_filtration(std::istream& in);

/// First problem found in a parsed filtration (a face missing from the
/// prefix, or a decreasing weight), as "entry N: ..."; nullopt when valid.
std::optional<std::string> check_filtration(
    const std::vector<std::pair<double, Simplex>>& steps);

/// Parses one finite double; rejects trailing characters.
std::optional<double> parse_double(std::string_view text);

}  // namespace cech::io
