#include <gtest/gtest.h>

#include <fstream>
#include <iterator>

#include "gpa/generator.hpp"
#include "gpa/io.hpp"

using namespace gpa;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "gpa_io_test";
  fs::create_directories(dir);
  return dir / name;
}

void write_text(const fs::path& p, const std::string& s) {
  std::ofstream(p) << s;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

int format_line(const fs::path& p) {
  try {
    io::read_edge_list(p);
  } catch (const FormatError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

} // namespace

TEST(EdgeList, RoundTrip) {
  const auto p = resolve_params(3, 0.4, 0.5);
  const GraphState g = generate(p, 2000, 4);
  const fs::path path = scratch("g.edges");
  io::write_edge_list(path, g.edges());
  const auto back = io::read_graph(path);
  EXPECT_EQ(back.n, g.num_vertices());
  EXPECT_TRUE(std::equal(back.edges.begin(), back.edges.end(), g.edges().begin(), g.edges().end()));
}

TEST(EdgeList, CommentsAndBlankLines) {
  const fs::path path = scratch("c.edges");
  write_text(path, "# header\n\n0 1\n  1 2\n# tail\n2 0\n");
  const auto g = io::read_edge_list(path);
  EXPECT_EQ(g.n, 3u);
  ASSERT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(g.edges[1], (Edge{1, 2}));
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  const fs::path path = scratch("bad.edges");
  write_text(path, "0 1\n1 x\n");
  EXPECT_EQ(format_line(path), 2);
  write_text(path, "0 1\n\n# c\n3\n");
  EXPECT_EQ(format_line(path), 4);
  write_text(path, "0 1 2\n");
  EXPECT_EQ(format_line(path), 1);
  write_text(path, "0 1\n1 2\n5 5\n");
  EXPECT_EQ(format_line(path), 3);
  write_text(path, "0 -1\n");
  EXPECT_EQ(format_line(path), 1);
  try {
    io::read_edge_list(path);
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
  }
}

TEST(Binary, RoundTripAndLayout) {
  const auto p = resolve_params(2, 0.5, 0.3);
  const GraphState g = generate(p, 500, 9);
  const fs::path path = scratch("g.bin");
  io::write_binary(path, g.num_vertices(), g.m(), g.edges());
  const std::string bytes = slurp(path);
  ASSERT_EQ(bytes.size(), 4u + 1 + 8 + 8 + 8 * 1000);
  EXPECT_EQ(bytes.substr(0, 4), "GPAG");
  EXPECT_EQ(bytes[4], 1);
  EXPECT_EQ(static_cast<unsigned char>(bytes[5]), 500 & 0xff);
  EXPECT_EQ(static_cast<unsigned char>(bytes[6]), 500 >> 8);
  EXPECT_EQ(bytes[13], 2);
  const Edge first = g.edges()[0];
  EXPECT_EQ(static_cast<unsigned char>(bytes[21]), first.u & 0xff);
  EXPECT_EQ(static_cast<unsigned char>(bytes[25]), first.v & 0xff);

  EXPECT_TRUE(io::is_binary_graph(path));
  const auto back = io::read_graph(path);
  EXPECT_EQ(back.n, 500u);
  EXPECT_EQ(back.m, 2);
  EXPECT_TRUE(std::equal(back.edges.begin(), back.edges.end(), g.edges().begin(), g.edges().end()));
}

TEST(Binary, RejectsCorruption) {
  const auto p = resolve_params(2, 0.5, 0.3);
  const GraphState g = generate(p, 50, 9);
  const fs::path path = scratch("c.bin");
  io::write_binary(path, g.num_vertices(), g.m(), g.edges());
  std::string bytes = slurp(path);

  std::ofstream(path, std::ios::binary) << bytes.substr(0, bytes.size() - 3);
  EXPECT_THROW(io::read_binary(path), FormatError);
  std::ofstream(path, std::ios::binary) << bytes << 'x';
  EXPECT_THROW(io::read_binary(path), FormatError);
  std::string bad = bytes;
  bad[4] = 9;
  std::ofstream(path, std::ios::binary) << bad;
  EXPECT_THROW(io::read_binary(path), FormatError);
}

TEST(Sidecar, EncodesInfiniteShift) {
  const auto p = resolve_params(4, 0.1, 0.4);
  const auto j = io::make_sidecar(p, 1000, 42, "text", nlohmann::json::object());
  EXPECT_EQ(j["shift_a"], "inf");
  EXPECT_EQ(j["seed"], 42u);
  EXPECT_EQ(j["format_version"], kFormatVersion);
  const fs::path path = scratch("s.json");
  io::write_json(path, j);
  EXPECT_EQ(io::read_json(path), j);

  const auto q = resolve_params(2, 0.5, 0.3);
  EXPECT_DOUBLE_EQ(io::params_to_json(q)["shift_a"].get<double>(), q.shift_a);
}
