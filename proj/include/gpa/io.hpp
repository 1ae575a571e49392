#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gpa/error.hpp"
#include "gpa/graph.hpp"
#include "gpa/params.hpp"
#include "gpa/version.hpp"

namespace gpa::io {

namespace fs = std::filesystem;
using json = nlohmann::json;

// Graph as read back from disk; m = 0 when unknown.
struct GraphFile {
  std::size_t n = 0;
  int m = 0;
  std::vector<Edge> edges;
};

inline constexpr std::array<char, 4> kMagic{'G', 'P', 'A', 'G'};

inline std::ofstream open_out(const fs::path& path, std::ios::openmode mode = std::ios::out) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, mode | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

// One "u v" line per edge, creation order, 0-based ids.
inline void write_edge_list(const fs::path& path, std::span<const Edge> edges) {
  auto out = open_out(path);
  std::string buf;
  buf.reserve(1 << 16);
  char tmp[32];
  for (const Edge& e : edges) {
    auto r = std::to_chars(tmp, tmp + sizeof tmp, e.u);
    buf.append(tmp, r.ptr);
    buf.push_back(' ');
    r = std::to_chars(tmp, tmp + sizeof tmp, e.v);
    buf.append(tmp, r.ptr);
    buf.push_back('\n');
    if (buf.size() > (1 << 16) - 64) {
      out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
      buf.clear();
    }
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw Error("write failed: " + path.string());
}

namespace detail {

inline void put_le(std::ostream& out, std::uint64_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) out.put(static_cast<char>((value >> (8 * i)) & 0xff));
}

inline std::uint64_t get_le(std::istream& in, int bytes, const fs::path& path) {
  std::uint64_t value = 0;
  for (int i = 0; i < bytes; ++i) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw FormatError("truncated binary graph " + path.string());
    value |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return value;
}

inline std::uint32_t parse_id(std::string_view token, std::size_t line) {
  std::uint32_t v = 0;
  const auto r = std::from_chars(token.data(), token.data() + token.size(), v);
  if (r.ec != std::errc{} || r.ptr != token.data() + token.size()) {
    throw FormatError("invalid vertex id '" + std::string(token) + "'", line);
  }
  return v;
}

} // namespace detail

// Binary layout: "GPAG", version byte, u64 n, u64 m, then m*n (u, v) pairs as u32.
// All integers little-endian.
inline void write_binary(const fs::path& path, std::size_t n, int m, std::span<const Edge> edges) {
  auto out = open_out(path, std::ios::out | std::ios::binary);
  out.write(kMagic.data(), kMagic.size());
  out.put(static_cast<char>(kFormatVersion));
  detail::put_le(out, n, 8);
  detail::put_le(out, static_cast<std::uint64_t>(m), 8);
  for (const Edge& e : edges) {
    detail::put_le(out, e.u, 4);
    detail::put_le(out, e.v, 4);
  }
  if (!out) throw Error("write failed: " + path.string());
}

inline bool is_binary_graph(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::array<char, 4> head{};
  in.read(head.data(), head.size());
  return in.gcount() == 4 && head == kMagic;
}

inline GraphFile read_binary(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::array<char, 4> head{};
  in.read(head.data(), head.size());
  if (in.gcount() != 4 || head != kMagic) throw FormatError("bad magic in " + path.string());
  const int version = in.get();
  if (version != kFormatVersion) throw FormatError("unsupported binary version " + std::to_string(version));
  GraphFile g;
  g.n = detail::get_le(in, 8, path);
  g.m = static_cast<int>(detail::get_le(in, 8, path));
  const std::uint64_t count = g.n * static_cast<std::uint64_t>(g.m);
  g.edges.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Edge e;
    e.u = static_cast<Vertex>(detail::get_le(in, 4, path));
    e.v = static_cast<Vertex>(detail::get_le(in, 4, path));
    if (e.u >= g.n || e.v >= g.n) throw FormatError("edge " + std::to_string(i) + " out of range");
    if (e.u == e.v) throw FormatError("edge " + std::to_string(i) + " is a self-loop");
    g.edges.push_back(e);
  }
  if (in.peek() != std::char_traits<char>::eof()) throw FormatError("trailing bytes in " + path.string());
  return g;
}

// Text edge list. Blank lines and lines starting with '#' are ignored.
inline GraphFile read_edge_list(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  GraphFile g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a) || a.front() == '#') continue;
    if (!(fields >> b)) throw FormatError("expected two vertex ids", lineno);
    if (fields >> extra) throw FormatError("unexpected trailing field '" + extra + "'", lineno);
    const Edge e{detail::parse_id(a, lineno), detail::parse_id(b, lineno)};
    if (e.u == e.v) throw FormatError("self-loop on vertex " + a, lineno);
    g.edges.push_back(e);
    g.n = std::max<std::size_t>(g.n, std::max(e.u, e.v) + std::size_t{1});
  }
  return g;
}

inline GraphFile read_graph(const fs::path& path) {
  return is_binary_graph(path) ? read_binary(path) : read_edge_list(path);
}

inline json shift_to_json(double shift) {
  if (std::isinf(shift)) return "inf";
  return shift;
}

inline json params_to_json(const ModelParams& p) {
  return json{{"m", p.m},   {"A", p.A},         {"D", p.D},
              {"B", p.B},   {"p_tri", p.p_tri}, {"shift_a", shift_to_json(p.shift_a)},
              {"n0", p.n0}};
}

inline json make_sidecar(const ModelParams& p, std::size_t n, std::uint64_t seed, std::string_view format,
                         const json& config) {
  json j = params_to_json(p);
  j["n"] = n;
  j["seed"] = seed;
  j["format"] = format;
  j["format_version"] = kFormatVersion;
  j["version"] = kVersion;
  j["config"] = config;
  return j;
}

inline void write_json(const fs::path& path, const json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
  if (!out) throw Error("write failed: " + path.string());
}

inline json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

} // namespace gpa::io
