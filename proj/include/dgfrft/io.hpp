#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dgfrft/digraph.hpp"

namespace dgfrft {

// Edge-list files:
//   # comment lines start with '#'; blank lines are ignored
//   # vertex <index> <label>     optional vertex label, also a comment
//   <n>
//   <src> <dst> <weight>          one directed edge per line, 0-based
//
// Signal files hold one real value per non-comment line, in vertex order.

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view tok, T& out) {
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc() && ptr == end;
}

[[noreturn]] inline void fail(const std::string& source, std::size_t line, const std::string& msg) {
  throw ParseError(source + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace detail

/// Shortest decimal text that parses back to exactly `x`.
inline std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

inline DiGraph parse_edge_list(std::istream& in, const std::string& source = "<edge list>") {
  std::string raw;
  std::size_t lineno = 0;
  Index n = -1;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::vector<std::pair<Index, std::string>> pending_labels;

  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = detail::trim(line.substr(1));
      if (body.starts_with("vertex ")) {
        body = detail::trim(body.substr(7));
        const auto sp = body.find_first_of(" \t");
        Index v = 0;
        if (sp != std::string_view::npos && detail::parse_number(body.substr(0, sp), v)) {
          pending_labels.emplace_back(v, std::string(detail::trim(body.substr(sp))));
        }
      }
      continue;
    }
    const auto tok = detail::split_ws(line);
    if (n < 0) {
      if (tok.size() != 1 || !detail::parse_number(tok[0], n) || n < 1) {
        detail::fail(source, lineno, "expected a positive vertex count");
      }
      continue;
    }
    if (tok.size() != 3) detail::fail(source, lineno, "expected 'src dst weight'");
    Edge e;
    if (!detail::parse_number(tok[0], e.src) || !detail::parse_number(tok[1], e.dst)) {
      detail::fail(source, lineno, "vertex index is not an integer");
    }
    if (!detail::parse_number(tok[2], e.weight)) detail::fail(source, lineno, "weight is not a number");
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) {
      detail::fail(source, lineno, "vertex index out of range [0, " + std::to_string(n) + ")");
    }
    if (e.src == e.dst) detail::fail(source, lineno, "self-loop");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) detail::fail(source, lineno, "negative weight");
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(source + ": missing vertex count");

  if (!pending_labels.empty()) {
    labels.assign(static_cast<std::size_t>(n), std::string());
    for (auto& [v, name] : pending_labels) {
      if (v >= 0 && v < n) labels[static_cast<std::size_t>(v)] = std::move(name);
    }
  }
  try {
    return DiGraph(n, std::move(edges), std::move(labels));
  } catch (const InvalidArgument& ex) {
    throw ParseError(source + ": " + ex.what());
  }
}

inline DiGraph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list " + path.string());
  return parse_edge_list(in, path.string());
}

inline void write_edge_list(std::ostream& out, const DiGraph& g) {
  for (std::size_t v = 0; v < g.labels().size(); ++v) {
    if (!g.labels()[v].empty()) out << "# vertex " << v << ' ' << g.labels()[v] << '\n';
  }
  out << g.n() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.src << ' ' << e.dst << ' ' << format_double(e.weight) << '\n';
  }
}

inline GraphSignal parse_signal(std::istream& in, Index n, const std::string& source = "<signal>") {
  require(n >= 1, "parse_signal: n must be positive");
  std::vector<double> vals;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    double x = 0.0;
    if (!detail::parse_number(line, x) || !std::isfinite(x)) {
      detail::fail(source, lineno, "expected one finite number");
    }
    vals.push_back(x);
  }
  if (static_cast<Index>(vals.size()) != n) {
    throw ParseError(source + ": expected " + std::to_string(n) + " values, found " +
                     std::to_string(vals.size()));
  }
  return GraphSignal::real(Eigen::Map<const RVector>(vals.data(), n));
}

inline GraphSignal load_signal(const std::filesystem::path& path, Index n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open signal " + path.string());
  return parse_signal(in, n, path.string());
}

inline void write_signal(std::ostream& out, const GraphSignal& f) {
  for (Index i = 0; i < f.size(); ++i) out << format_double(f.values[i].real()) << '\n';
}

/// 64-bit FNV-1a over a file's bytes, as 16 hex digits.
inline std::string file_checksum(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace dgfrft
