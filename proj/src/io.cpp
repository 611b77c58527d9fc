#include "cech/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace cech::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool skip_line(std::string_view s) { return s.empty() || s.front() == '#'; }

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

std::string shortest(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return in;
}

}  // namespace

std::optional<double> parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

DiskSystem parse_disks(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<DiskSystem> system;
  std::vector<double> center;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view s = trim(line);
    if (skip_line(s)) continue;
    if (!system) {
      if (!s.starts_with("dim=")) throw ParseError(lineno, "expected header dim=<d>");
      std::size_t d = 0;
      const auto digits = trim(s.substr(4));
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || d == 0) {
        throw ParseError(lineno, "bad dimension in header");
      }
      system.emplace(d);
      continue;
    }
    const auto fields = split(s, ',');
    const std::size_t d = system->dimension();
    if (fields.size() != d + 1) {
      throw ParseError(lineno, "expected " + std::to_string(d + 1) + " fields, found " +
                                   std::to_string(fields.size()));
    }
    center.assign(d, 0.0);
    for (std::size_t t = 0; t < d; ++t) {
      auto v = parse_double(fields[t]);
      if (!v) throw ParseError(lineno, "bad coordinate '" + std::string(fields[t]) + "'");
      center[t] = *v;
    }
    auto r = parse_double(fields[d]);
    if (!r) throw ParseError(lineno, "bad radius '" + std::string(fields[d]) + "'");
    if (!(*r > 0.0)) throw ParseError(lineno, "radius must be positive");
    system->add(center, *r);
  }
  if (!system) throw ParseError(lineno, "missing dim=<d> header");
  if (system->empty()) throw ParseError(lineno, "no disks");
  return std::move(*system);
}

DiskSystem read_disk_file(const std::string& path) {
  auto in = open(path);
  return parse_disks(in);
}

std::string format_disks(const DiskSystem& system) {
  std::string out = "dim=" + std::to_string(system.dimension()) + "\n";
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (double c : system.center(i)) out += shortest(c) + ",";
    out += shortest(system.radius(i)) + "\n";
  }
  return out;
}

std::vector<Point2> parse_points(std::istream& in) {
  std::vector<Point2> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view s = trim(line);
    if (skip_line(s)) continue;
    const auto fields = s.find(',') != std::string_view::npos ? split(s, ',') : split_ws(s);
    if (fields.size() != 2) throw ParseError(lineno, "expected two coordinates");
    auto x = parse_double(fields[0]);
    auto y = parse_double(fields[1]);
    if (!x || !y) throw ParseError(lineno, "bad coordinate");
    out.push_back({*x, *y});
  }
  if (out.empty()) throw ParseError(lineno, "no points");
  return out;
}

std::vector<Point2> read_point_file(const std::string& path) {
  auto in = open(path);
  return parse_points(in);
}

std::string format_weight(double weight) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", weight);
  return buf;
}

std::string format_filtration(const WeightedComplex& complex) {
  std::string out;
  for (const auto& [w, s] : filtration_steps(complex)) {
    const auto& v = s.vertices();
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (t) out += ' ';
      out += std::to_string(v[t]);
    }
    out += ';' + format_weight(w) + '\n';
  }
  return out;
}

std::vector<std::pair<double, Simplex>> parse_filtration(std::istream& in) {
  std::vector<std::pair<double, Simplex>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view s = trim(line);
    if (skip_line(s)) continue;
    const auto semi = s.find(';');
    if (semi == std::string_view::npos) throw ParseError(lineno, "missing ';'");
    auto w = parse_double(s.substr(semi + 1));
    if (!w || *w < 0.0) throw ParseError(lineno, "bad weight");
    std::vector<std::size_t> verts;
    for (auto tok : split_ws(s.substr(0, semi))) {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(lineno, "bad vertex '" + std::string(tok) + "'");
      }
      verts.push_back(v);
    }
    try {
      out.emplace_back(*w, Simplex(std::move(verts)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return out;
}

std::optional<std::string> check_filtration(
    const std::vector<std::pair<double, Simplex>>& steps) {
  std::set<Simplex> seen;
  double last = 0.0;
  for (std::size_t n = 0; n < steps.size(); ++n) {
    const auto& [w, s] = steps[n];
    const std::string where = "entry " + std::to_string(n + 1) + ": ";
    if (n > 0 && w < last) return where + "weight decreases";
    for (const Simplex& f : s.facets()) {
      if (!seen.contains(f)) return where + "a facet is missing from the prefix";
    }
    if (!seen.insert(s).second) return where + "duplicate simplex";
    last = w;
  }
  return std::nullopt;
}

}  // namespace cech::io
