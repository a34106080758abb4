#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"
#include "skeinym/io.hpp"
#include "skeinym/recoupling.hpp"
#include "skeinym/spine.hpp"
#include "skeinym/surface_ym.hpp"
#include "skeinym/torus.hpp"

using namespace skeinym;
using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SKEINYM_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

json run_json(const std::string& args, int want_exit = 0) {
  const CliResult r = run_cli(args);
  CHECK(r.exit_code == want_exit);
  return json::parse(r.out);
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path =
      (std::filesystem::temp_directory_path() / name).string();
  std::ofstream out(path);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("point evaluations match the library bit for bit") {
  const json big = run_json("qint --n 4000 --t 0.5");
  const ScaledScalar want = context_for(Param::real(0.5)).qint(4000);
  CHECK(scalar_from_json(big.at("value").dump()) == want);

  const json cls = run_json("qint --n 7 --classical");
  CHECK(cls.at("value").get<double>() == 7.0);

  const json fact = run_json("qfact --n 5 --t 0.5");
  const ScaledScalar wfact = context_for(Param::real(0.5)).qfact(5);
  CHECK(scalar_from_json(fact.at("value").dump()) == wfact);
}

TEST_CASE("domain failures exit 1 with a typed error report") {
  const CliResult r = run_cli("qfact --n 5 --root 3");
  CHECK(r.exit_code == 1);
  const json j = json::parse(r.out);
  CHECK(j.at("error").at("type") == "DomainError");

  const CliResult th = run_cli("theta --a 0 --b 0 --c 2 --t 0.5");
  CHECK(th.exit_code == 1);
  CHECK(json::parse(th.out).at("error").at("type") == "AdmissibilityError");

  const CliResult g1 = run_cli("ym --genus 1 --t 0.5");
  CHECK(g1.exit_code == 1);
  CHECK(json::parse(g1.out).at("error").at("type") == "GenusError");
}

TEST_CASE("usage mistakes exit 2") {
  CHECK(run_cli("qint --n 3 --t 0.5 --bogus").exit_code == 2);
  CHECK(run_cli("verify nope").exit_code == 2);

  const CliResult missing = run_cli("qint --n 3");
  CHECK(missing.exit_code == 2);
  CHECK(json::parse(missing.out).at("error").at("type") == "InputError");

  CHECK(run_cli("ym --genus 2 --colors 1,2 --t 0.5").exit_code == 2);
}

TEST_CASE("verify suites run through the CLI") {
  const json j = run_json("verify chebyshev");
  CHECK(j.at("suite") == "chebyshev");
  CHECK(j.at("passed") == true);
}

TEST_CASE("volume evaluates zeta values") {
  const json j = run_json("volume --genus 3 --tol 1e-10");
  CHECK(j.at("converged") == true);
  CHECK(j.at("regime") == "Classical");
  const double zeta4 = std::pow(std::numbers::pi, 4) / 90.0;
  CHECK(std::abs(j.at("value").get<double>() - zeta4) <= 1e-8);
}

TEST_CASE("colored series runs agree with direct library calls") {
  ColoredSpine s = canonical_spine(2);
  for (auto& c : s.edge_colors) c = 2;
  const SeriesResult want = ym_closed(Param::real(0.5), s, 1e-10);

  const json j =
      run_json("ym --genus 2 --colors 2,2,2,2,2,2,2,2,2 --t 0.5 --tol 1e-10");
  CHECK(j.at("value").get<double>() == want.value.real());
  CHECK(j.at("terms_used").get<std::int64_t>() == want.terms_used);

  const json root = run_json("ym --root 5 --genus 2");
  CHECK(root.at("regime") == "RootOfUnity");
  const Complex wr = ym_root(Param::root_of_unity(5), canonical_spine(2));
  CHECK(root.at("value").get<double>() == wr.real());

  CHECK(run_cli("ym --root 5 --genus 2 --dump-terms /tmp/x.csv").exit_code ==
        2);
}

TEST_CASE("term dumps carry one CSV row per summand") {
  const std::string csv_path =
      (std::filesystem::temp_directory_path() / "skeinym_terms.csv").string();
  const json j = run_json("ym --genus 2 --t 0.5 --tol 1e-8 --dump-terms " +
                          csv_path);

  std::ifstream in(csv_path);
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);
  CHECK(line == "index,term_re,term_im,sum_re,sum_im,tail_bound");
  std::int64_t rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == j.at("terms_used").get<std::int64_t>());
  std::filesystem::remove(csv_path);
}

TEST_CASE("a spine file and the equivalent genus flag print identically") {
  const std::string path = write_temp("skeinym_cli_spine.json",
                                      spine_to_json(canonical_spine(2)));
  const CliResult from_file = run_cli("ym --spine " + path + " --t 0.5");
  const CliResult from_genus = run_cli("ym --genus 2 --t 0.5");
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.out == from_genus.out);
  std::filesystem::remove(path);
}

TEST_CASE("torus operations round-trip through element files") {
  TorusElement x;
  x.add_empty(ScaledScalar(2.5));
  x.add(PairClass(1, 0), ScaledScalar(1.0));
  TorusElement y;
  y.add(PairClass(0, 1), ScaledScalar(1.0));
  const std::string xp = write_temp("skeinym_cli_x.json", torus_to_json(x));
  const std::string yp = write_temp("skeinym_cli_y.json", torus_to_json(y));

  const json tr = run_json("torus --expr " + xp + " --op trace");
  CHECK(tr.at("value").get<double>() == 2.5);

  const MuImage m = mu(x);
  const json mj = run_json("torus --expr " + xp + " --op mu");
  CHECK(scalar_from_json(mj.at("empty").dump()) == m.empty);
  CHECK(scalar_from_json(mj.at("classes").at("10").dump()) == m.cls[2]);

  CHECK(run_cli("torus --expr " + xp + " --op product --t 0.5").exit_code ==
        2);

  const CliResult prod = run_cli("torus --expr " + xp + " --op product --rhs " +
                                 yp + " --t 0.5");
  CHECK(prod.exit_code == 0);
  const TorusElement want = torus_mul(Param::real(0.5), x, y);
  CHECK(json::parse(prod.out) == json::parse(torus_to_json(want)));

  std::filesystem::remove(xp);
  std::filesystem::remove(yp);
}

TEST_CASE("unit-modulus probing reports non-decaying summands") {
  const json j = run_json("probe-divergence --phase 1.0 --max-index 3000");
  CHECK(j.at("count").get<std::size_t>() > 0);
  CHECK(j.at("indices").size() == j.at("magnitudes").size());
  CHECK(j.at("indices").size() == j.at("count").get<std::size_t>());
}
