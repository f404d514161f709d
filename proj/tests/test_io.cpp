#include "support.hpp"

#include "rps/decompose.hpp"
#include "rps/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace rps;
using namespace rps::test;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

IoError io_error(auto&& fn) {
  try {
    fn();
  } catch (const IoError& e) {
    return e;
  }
  FAIL("no IoError");
  return IoError(IoErrc::ParseError, 0, "");
}

const char* kCubeOff = R"(OFF
# unit cube
8 6 12
0 0 0
1 0 0
1 1 0
0 1 0
0 0 1
1 0 1
1 1 1
0 1 1
4 0 3 2 1
4 4 5 6 7
4 0 1 5 4
4 1 2 6 5
4 2 3 7 6
4 3 0 4 7
)";

}  // namespace

TEST_CASE("rps round trip") {
  auto cube = make_solid(SolidKind::Cube);
  auto text = serialize_rps(cube);
  CHECK(text.rfind("RPS 1\n", 0) == 0);
  auto back = parse_rps(text);
  CHECK(back.graph.euler_characteristic() == 2);
  CHECK(back.graph.num_faces() == 6);
  CHECK(back.coords == cube.coords);
  CHECK(back.graph.faces() == cube.graph.faces());
  CHECK(serialize_rps(back) == text);

  // Non-representable coordinates survive exactly.
  auto d = make_solid(SolidKind::Dodecahedron);
  CHECK(parse_rps(serialize_rps(d)).coords == d.coords);
}

TEST_CASE("rps errors carry the line") {
  std::string text = "RPS 1\nvertices 8\n";
  for (int i = 0; i < 8; ++i) text += "0 0 " + std::to_string(i) + "\n";
  text += "faces 6\n4 0 3 2 1\n4 4 5 6 7\n4 0 1 5 99\n4 1 2 6 5\n4 2 3 7 6\n4 3 0 4 7\n";
  auto e = io_error([&] { parse_rps(text); });
  CHECK(e.code() == IoErrc::IndexOutOfRange);
  CHECK(e.line() == 14);

  CHECK(io_error([] { parse_rps("RPS 2\n"); }).code() == IoErrc::ParseError);
  CHECK(io_error([] { parse_rps("RPS 1\nvertices 1\n0 0\n"); }).line() == 3);
  CHECK(io_error([] { parse_rps("RPS 1\nvertices 1\n0 0 x\nfaces 0\n"); }).code() == IoErrc::ParseError);
  auto cube = serialize_rps(make_solid(SolidKind::Cube));
  CHECK(io_error([&] { parse_rps(cube + "junk\n"); }).code() == IoErrc::ParseError);
}

TEST_CASE("golden files normalize to themselves") {
  const std::filesystem::path dir = RPS_TEST_DATA;
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".rps") continue;
    CAPTURE(entry.path().filename().string());
    auto text = slurp(entry.path());
    CHECK(serialize_rps(parse_rps(text)) == text);
    ++seen;
  }
  CHECK(seen >= 3);
  // Comments, blank lines and spacing are not kept.
  CHECK(serialize_rps(parse_rps(slurp(dir / "cube_messy.txt"))) == slurp(dir / "cube.rps"));
}

TEST_CASE("off import") {
  auto cube = import_off(kCubeOff);
  CHECK(isomorphic(cube.graph, make_solid(SolidKind::Cube).graph));
  CHECK(cube.graph.euler_characteristic() == 2);

  std::string colored = kCubeOff;
  colored.replace(0, 3, "COFF");
  for (std::string::size_type p = 0; (p = colored.find("\n0 0 0\n", p)) != std::string::npos;)
    colored.replace(p, 7, "\n0 0 0 255 0 0 255\n");
  auto c = import_off(colored);
  CHECK(c.coords == cube.coords);

  // Counts on the header line, face colours.
  std::string inline_counts = "OFF 4 4 6\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n3 0 2 1 0.5 0.5 0.5\n3 0 1 3\n3 0 3 2\n3 1 2 3\n";
  CHECK(import_off(inline_counts).graph.num_faces() == 4);

  CHECK(io_error([] { import_off("4OFF\n0 0 0\n"); }).code() == IoErrc::UnsupportedOffFeature);
  CHECK(io_error([] { import_off("nOFF\n3\n0 0 0\n"); }).code() == IoErrc::UnsupportedOffFeature);
  CHECK(io_error([] { import_off("OFF BINARY\n"); }).code() == IoErrc::UnsupportedOffFeature);
  CHECK(io_error([] { import_off("OFF\n1 1 0\n0 0 0\n3 0 1 2\n"); }).code() == IoErrc::IndexOutOfRange);
}

TEST_CASE("obj export") {
  auto d = make_solid(SolidKind::Dodecahedron);
  auto obj = export_obj(d);
  std::istringstream in(obj);
  int v = 0, f = 0, min_index = 1 << 30;
  for (std::string line; std::getline(in, line);) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") ++v;
    if (tag == "f") {
      ++f;
      int n = 0;
      for (int i; ls >> i; ++n) min_index = std::min(min_index, i);
      CHECK(n == 5);
    }
  }
  CHECK(v == 20);
  CHECK(f == 12);
  CHECK(min_index == 1);
  auto back = read_obj(obj);
  CHECK(isomorphic(back.graph, d.graph));
  CHECK(congruent_copy(back, d));
}

TEST_CASE("doubles") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.10000000000000001");
  for (double x : {std::sqrt(5.0), -1.0 / 3.0, 1e-300, 6.02e23}) CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("certificates") {
  auto c = random_pent_compound(4, 3);
  auto cert = decompose_pent(c.surface);
  auto text = serialize_certificate(cert);
  CHECK(text.rfind("RPSCERT 1\n", 0) == 0);
  CHECK(text.find("# step 0 ") != std::string::npos);
  auto back = parse_certificate(text);
  REQUIRE(back.bricks.size() == cert.bricks.size());
  for (std::size_t i = 0; i < cert.bricks.size(); ++i) {
    CHECK(back.bricks[i].kind == cert.bricks[i].kind);
    CHECK(back.bricks[i].placement.rotation == cert.bricks[i].placement.rotation);
    CHECK(back.bricks[i].placement.translation == cert.bricks[i].placement.translation);
  }
  CHECK(back.gluings == cert.gluings);
  CHECK(back.provenance.empty());
  CHECK(verify_certificate(back, c.surface).pass);
  CHECK(serialize_certificate(back).find("bricks") != std::string::npos);

  // Deterministic bytes.
  CHECK(serialize_certificate(decompose_pent(c.surface)) == text);
  CHECK(serialize_rps(random_pent_compound(4, 3).surface) == serialize_rps(c.surface));

  CHECK(io_error([] { parse_certificate("RPSCERT 1\nbricks 1\ncube 2 0 0 0 1 0 0 0 1 0 0 0\ngluings 0\n"); }).code() ==
        IoErrc::ParseError);
  CHECK(io_error([] { parse_certificate("RPSCERT 1\nbricks 1\nblob 1 0 0 0 1 0 0 0 1 0 0 0\ngluings 0\n"); })
            .code() == IoErrc::ParseError);
  CHECK(io_error([] {
          parse_certificate("RPSCERT 1\nbricks 1\ncube 1 0 0 0 1 0 0 0 1 0 0 0\ngluings 1\n0 0 1 0\n");
        }).code() == IoErrc::IndexOutOfRange);
  CHECK(io_error([] {
          parse_certificate("RPSCERT 1\nbricks 1\ncube 1 0 0 0 1 0 0 0 1 0 0 0\ngluings 1\n0 9 0 0\n");
        }).code() == IoErrc::IndexOutOfRange);
}
