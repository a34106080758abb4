#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "skeinym/io.hpp"
#include "skeinym/scaled_scalar.hpp"
#include "skeinym/spine.hpp"
#include "skeinym/torus.hpp"

using namespace skeinym;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path =
      (std::filesystem::temp_directory_path() / name).string();
  std::ofstream out(path);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("scalars round-trip exactly through all three encodings") {
  const ScaledScalar plain(2.5);
  const std::string plain_text = scalar_to_json(plain);
  CHECK(plain_text.find("re") == std::string::npos);
  CHECK(scalar_from_json(plain_text) == plain);

  const ScaledScalar cplx(Complex(1.5, -2.25));
  const std::string cplx_text = scalar_to_json(cplx);
  CHECK(cplx_text.find("im") != std::string::npos);
  CHECK(cplx_text.find("log2_scale") == std::string::npos);
  CHECK(scalar_from_json(cplx_text) == cplx);

  const ScaledScalar huge = pow_int(ScaledScalar(2.0), 5000);
  const std::string huge_text = scalar_to_json(huge);
  CHECK(huge_text.find("log2_scale") != std::string::npos);
  CHECK(scalar_from_json(huge_text) == huge);

  const ScaledScalar tiny = pow_int(ScaledScalar(2.0), -5000);
  CHECK(scalar_from_json(scalar_to_json(tiny)) == tiny);

  CHECK(scalar_from_json(scalar_to_json(ScaledScalar())).is_zero());
  CHECK(scalar_from_json("3") == ScaledScalar(3.0));
}

TEST_CASE("the binary-exponent encoding starts where doubles get risky") {
  const ScaledScalar below = ScaledScalar::from_parts(Complex(0.75, 0.0), 958);
  CHECK(scalar_to_json(below).find("log2_scale") == std::string::npos);
  CHECK(scalar_from_json(scalar_to_json(below)) == below);

  const ScaledScalar above = ScaledScalar::from_parts(Complex(0.75, 0.0), 960);
  CHECK(scalar_to_json(above).find("log2_scale") != std::string::npos);
  CHECK(scalar_from_json(scalar_to_json(above)) == above);
}

TEST_CASE("scalar parse failures are reported uniformly") {
  CHECK_THROWS_AS(scalar_from_json("[1, 2]"), std::runtime_error);
  CHECK_THROWS_AS(scalar_from_json("{\"im\": 2.0}"), std::runtime_error);
  CHECK_THROWS_AS(scalar_from_json("not json"), std::runtime_error);
  CHECK_THROWS_AS(scalar_from_json("\"1.5\""), std::runtime_error);
}

TEST_CASE("spines round-trip through JSON") {
  for (const ColoredSpine& s : {canonical_spine(3), k33_spine()}) {
    const ColoredSpine back = spine_from_json(spine_to_json(s));
    CHECK(back.genus == s.genus);
    CHECK(back.edge_colors == s.edge_colors);
    CHECK(back.vertices == s.vertices);
  }

  ColoredSpine colored = canonical_spine(2);
  for (auto& c : colored.edge_colors) c = 2;
  const ColoredSpine back = spine_from_json(spine_to_json(colored));
  CHECK(back.edge_colors == colored.edge_colors);
}

TEST_CASE("spine files load from disk") {
  const ColoredSpine s = k33_spine();
  const std::string path = write_temp("skeinym_spine_ok.json",
                                      spine_to_json(s));
  const ColoredSpine back = load_spine(path);
  CHECK(back.genus == 2);
  CHECK(back.vertices == s.vertices);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(load_spine("/nonexistent/skeinym.json"),
                  std::runtime_error);
}

TEST_CASE("spine parsing separates malformed text from invalid structure") {
  CHECK_THROWS_AS(spine_from_json("{"), std::runtime_error);
  CHECK_THROWS_AS(spine_from_json("{\"genus\": 2}"), std::runtime_error);
  CHECK_THROWS_AS(
      spine_from_json(
          "{\"genus\": 2, \"edges\": [0,0,0], \"vertices\": [[0,1]]}"),
      std::runtime_error);

  // Structurally well-formed JSON with broken invariants.
  ColoredSpine bad = canonical_spine(2);
  bad.edge_colors[0] = 1;
  CHECK_THROWS_AS(spine_from_json(spine_to_json(bad)), SpineError);

  ColoredSpine wrong = canonical_spine(2);
  wrong.edge_colors.push_back(0);
  CHECK_THROWS_AS(spine_from_json(spine_to_json(wrong)), SpineError);
}

TEST_CASE("torus elements round-trip including out-of-range coefficients") {
  TorusElement x;
  x.add_empty(ScaledScalar(2.5));
  x.add(PairClass(1, 0), ScaledScalar(Complex(1.5, -0.25)));
  x.add(PairClass(2, 3), pow_int(ScaledScalar(2.0), 5000));
  const std::string text = torus_to_json(x);
  CHECK(text.find("log2_scale") != std::string::npos);
  CHECK(torus_from_json(text) == x);

  CHECK(torus_from_json("{}").is_zero());

  const std::string path = write_temp("skeinym_torus_ok.json", text);
  CHECK(load_torus_element(path) == x);
  std::filesystem::remove(path);
}

TEST_CASE("torus parse failures are reported uniformly") {
  CHECK_THROWS_AS(torus_from_json("]["), std::runtime_error);
  CHECK_THROWS_AS(torus_from_json("{\"terms\": [{\"q\": 1, \"re\": 1.0}]}"),
                  std::runtime_error);
  CHECK_THROWS_AS(torus_from_json("{\"empty\": \"x\"}"), std::runtime_error);
}
