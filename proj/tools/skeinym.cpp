#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skeinym/annulus.hpp"
#include "skeinym/errors.hpp"
#include "skeinym/io.hpp"
#include "skeinym/recoupling.hpp"
#include "skeinym/spine.hpp"
#include "skeinym/surface_ym.hpp"
#include "skeinym/torus.hpp"
#include "skeinym/verify.hpp"

namespace {

using nlohmann::json;
using namespace skeinym;

json value_json(const ScaledScalar& v) { return json::parse(scalar_to_json(v)); }

json value_json(const Complex& c) {
  if (c.imag() == 0.0) return json(c.real());
  return json{{"re", c.real()}, {"im", c.imag()}};
}

json series_json(const SeriesResult& r) {
  return json{{"value", value_json(r.value)},
              {"terms_used", r.terms_used},
              {"tail_bound", r.tail_bound},
              {"converged", r.converged},
              {"regime", regime_name(r.regime)}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// Shared --t/--t-im/--root/--classical parameter selection.
struct ParamFlags {
  std::optional<double> t_re;
  std::optional<double> t_im;
  std::optional<int> root;
  bool classical = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--t", t_re, "deformation parameter (real part)");
    cmd->add_option("--t-im", t_im, "imaginary part of t");
    cmd->add_option("--root", root, "root of unity order r (t = e^{i pi/2r})");
    cmd->add_flag("--classical", classical,
                  "classical point (t = -1, or +1 with --t 1)");
  }

  Param resolve() const {
    if (root) return Param::root_of_unity(*root);
    if (classical) {
      const int sign = t_re && *t_re > 0 ? 1 : -1;
      return Param::classical(sign);
    }
    if (t_re) {
      if (t_im && *t_im != 0.0) return Param::classify(Complex(*t_re, *t_im));
      return Param::classify(Complex(*t_re, 0.0));
    }
    throw std::runtime_error("missing parameter: pass --t, --root or --classical");
  }
};

ColoredSpine resolve_spine(const std::optional<int>& genus,
                           const std::string& spine_path,
                           const std::string& colors) {
  ColoredSpine s;
  if (!spine_path.empty()) {
    s = load_spine(spine_path);
    if (genus && *genus != s.genus)
      throw std::runtime_error("--genus disagrees with the spine file");
  } else {
    if (!genus) throw std::runtime_error("pass --genus or --spine");
    s = canonical_spine(*genus);
  }
  if (!colors.empty()) {
    std::vector<int> cs;
    std::stringstream ss(colors);
    std::string item;
    while (std::getline(ss, item, ',')) cs.push_back(std::stoi(item));
    if (cs.size() != s.edge_colors.size())
      throw std::runtime_error("--colors needs " +
                               std::to_string(s.edge_colors.size()) +
                               " entries");
    s.edge_colors = std::move(cs);
    validate_spine(s);
  }
  return s;
}

TermObserver csv_observer(std::ofstream& out) {
  out << "index,term_re,term_im,sum_re,sum_im,tail_bound\n";
  return [&out](std::int64_t i, Complex term, Complex sum, double tail) {
    out.precision(17);
    out << i << ',' << term.real() << ',' << term.imag() << ',' << sum.real()
        << ',' << sum.imag() << ',' << tail << '\n';
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kauffman bracket recoupling and surface Yang-Mills evaluator"};
  app.require_subcommand(1);
  std::function<int()> run;

  // point evaluations
  struct {
    ParamFlags pf;
    std::int64_t n = 0;
  } qargs;
  for (const char* name : {"qint", "qfact"}) {
    CLI::App* cmd = app.add_subcommand(
        name, std::string("quantum ") +
                  (name[1] == 'i' ? "integer [n]" : "factorial [n]!"));
    cmd->add_option("--n", qargs.n, "index n")->required();
    qargs.pf.attach(cmd);
    const bool fact = name[1] == 'f';
    cmd->callback([&, fact] {
      run = [&, fact] {
        const QuantumContext& ctx = context_for(qargs.pf.resolve());
        emit(json{{"value", value_json(fact ? ctx.qfact(qargs.n)
                                            : ctx.qint(qargs.n))}});
        return 0;
      };
    });
  }

  struct {
    ParamFlags pf;
    int a = 0, b = 0, c = 0;
  } theta_args;
  {
    CLI::App* cmd = app.add_subcommand("theta", "theta graph evaluation");
    cmd->add_option("--a", theta_args.a)->required();
    cmd->add_option("--b", theta_args.b)->required();
    cmd->add_option("--c", theta_args.c)->required();
    theta_args.pf.attach(cmd);
    cmd->callback([&] {
      run = [&] {
        emit(json{{"value", value_json(theta(theta_args.pf.resolve(),
                                             theta_args.a, theta_args.b,
                                             theta_args.c))}});
        return 0;
      };
    });
  }

  struct {
    ParamFlags pf;
    int a = 0, b = 0, e = 0, c = 0, d = 0, f = 0;
    bool six = false;
  } tet_args;
  for (const char* name : {"tet", "sixj"}) {
    CLI::App* cmd = app.add_subcommand(
        name, name[0] == 't' ? "tetrahedral coefficient Tet(a b e; c d f)"
                             : "6j symbol {a b e; c d f}");
    cmd->add_option("--a", tet_args.a)->required();
    cmd->add_option("--b", tet_args.b)->required();
    cmd->add_option("--e", tet_args.e)->required();
    cmd->add_option("--c", tet_args.c)->required();
    cmd->add_option("--d", tet_args.d)->required();
    cmd->add_option("--f", tet_args.f)->required();
    tet_args.pf.attach(cmd);
    const bool six = name[0] == 's';
    cmd->callback([&, six] {
      run = [&, six] {
        const Param p = tet_args.pf.resolve();
        const ScaledScalar v =
            six ? sixj(p, tet_args.a, tet_args.b, tet_args.e, tet_args.c,
                       tet_args.d, tet_args.f)
                : tet(p, tet_args.a, tet_args.b, tet_args.e, tet_args.c,
                      tet_args.d, tet_args.f);
        emit(json{{"value", value_json(v)}});
        return 0;
      };
    });
  }

  // series and finite sums over a spine
  struct {
    ParamFlags pf;
    std::optional<int> genus;
    std::string spine_path, colors, dump_path;
    double tol = 1e-8;
    std::int64_t max_terms = 50000000;
  } ym_args;
  {
    CLI::App* cmd =
        app.add_subcommand("ym", "Yang-Mills trace of a colored spine");
    cmd->add_option("--genus", ym_args.genus, "genus (canonical spine)");
    cmd->add_option("--spine", ym_args.spine_path, "spine JSON file");
    cmd->add_option("--colors", ym_args.colors, "comma list of edge colors");
    cmd->add_option("--tol", ym_args.tol, "certified tail bound target");
    cmd->add_option("--max-terms", ym_args.max_terms, "series term cap");
    cmd->add_option("--dump-terms", ym_args.dump_path, "write a term CSV");
    ym_args.pf.attach(cmd);
    cmd->callback([&] {
      run = [&] {
        const Param p = ym_args.pf.resolve();
        const ColoredSpine s =
            resolve_spine(ym_args.genus, ym_args.spine_path, ym_args.colors);
        if (p.regime() == Regime::RootOfUnity) {
          if (!ym_args.dump_path.empty())
            throw std::runtime_error("--dump-terms needs a series regime");
          emit(json{{"value", value_json(ym_root(p, s))},
                    {"regime", regime_name(p.regime())}});
          return 0;
        }
        SeriesResult r;
        if (ym_args.dump_path.empty()) {
          r = ym_closed(p, s, ym_args.tol, ym_args.max_terms);
        } else {
          std::ofstream out(ym_args.dump_path);
          if (!out)
            throw std::runtime_error("cannot write " + ym_args.dump_path);
          r = ym_closed(p, s, ym_args.tol, ym_args.max_terms,
                        csv_observer(out));
        }
        emit(series_json(r));
        return r.converged ? 0 : 1;
      };
    });
  }

  struct {
    int genus = 2;
    std::optional<double> tol;
    std::int64_t max_terms = 50000000;
  } vol_args;
  {
    CLI::App* cmd = app.add_subcommand(
        "volume", "character variety volume: all-zero spine at t = -1");
    cmd->add_option("--genus", vol_args.genus)->required();
    cmd->add_option("--tol", vol_args.tol,
                    "tail target (default 5e-6 at genus 2, 5e-9 above)");
    cmd->add_option("--max-terms", vol_args.max_terms);
    cmd->callback([&] {
      run = [&] {
        const double tol =
            vol_args.tol ? *vol_args.tol : (vol_args.genus <= 2 ? 5e-6 : 5e-9);
        const SeriesResult r =
            ym_closed(Param::classical(-1), canonical_spine(vol_args.genus),
                      tol, vol_args.max_terms);
        emit(series_json(r));
        return r.converged ? 0 : 1;
      };
    });
  }

  struct {
    std::optional<int> genus;
    std::string spine_path, colors, dump_path;
    double rho = 0.0;
    double tol = 1e-6;
    std::int64_t max_terms = 50000000;
  } wit_args;
  {
    CLI::App* cmd =
        app.add_subcommand("witten", "area-damped classical series");
    cmd->add_option("--rho", wit_args.rho, "area damping")->required();
    cmd->add_option("--genus", wit_args.genus);
    cmd->add_option("--spine", wit_args.spine_path);
    cmd->add_option("--colors", wit_args.colors);
    cmd->add_option("--tol", wit_args.tol);
    cmd->add_option("--max-terms", wit_args.max_terms);
    cmd->add_option("--dump-terms", wit_args.dump_path);
    cmd->callback([&] {
      run = [&] {
        const ColoredSpine s = resolve_spine(wit_args.genus,
                                             wit_args.spine_path,
                                             wit_args.colors);
        SeriesResult r;
        if (wit_args.dump_path.empty()) {
          r = ym_witten(s, wit_args.rho, wit_args.tol, wit_args.max_terms);
        } else {
          std::ofstream out(wit_args.dump_path);
          if (!out)
            throw std::runtime_error("cannot write " + wit_args.dump_path);
          r = ym_witten(s, wit_args.rho, wit_args.tol, wit_args.max_terms,
                        csv_observer(out));
        }
        emit(series_json(r));
        return r.converged ? 0 : 1;
      };
    });
  }

  struct {
    ParamFlags pf;
    std::string expr_path, op = "trace", rhs_path;
  } torus_args;
  {
    CLI::App* cmd = app.add_subcommand("torus", "torus skein algebra");
    cmd->add_option("--expr", torus_args.expr_path, "element JSON file")
        ->required();
    cmd->add_option("--op", torus_args.op, "trace | mu | product")
        ->check(CLI::IsMember({"trace", "mu", "product"}));
    cmd->add_option("--rhs", torus_args.rhs_path, "right factor (product)");
    torus_args.pf.attach(cmd);
    cmd->callback([&] {
      run = [&] {
        const TorusElement x = load_torus_element(torus_args.expr_path);
        if (torus_args.op == "trace") {
          emit(json{{"value", value_json(torus_ym(x))}});
          return 0;
        }
        if (torus_args.op == "mu") {
          const MuImage m = mu(x);
          emit(json{{"empty", value_json(m.empty)},
                    {"classes",
                     json{{"00", value_json(m.cls[0])},
                          {"01", value_json(m.cls[1])},
                          {"10", value_json(m.cls[2])},
                          {"11", value_json(m.cls[3])}}}});
          return 0;
        }
        if (torus_args.rhs_path.empty())
          throw std::runtime_error("product needs --rhs");
        const TorusElement y = load_torus_element(torus_args.rhs_path);
        const TorusElement prod =
            torus_mul(torus_args.pf.resolve(), x, y);
        std::cout << torus_to_json(prod);
        return 0;
      };
    });
  }

  struct {
    std::string suite;
  } verify_args;
  {
    CLI::App* cmd = app.add_subcommand("verify", "run a named invariant suite");
    cmd->add_option("suite", verify_args.suite, "suite name")
        ->required()
        ->check(CLI::IsMember(verify_suites()));
    cmd->callback([&] {
      run = [&] {
        const VerifyReport rep = run_verify(verify_args.suite);
        emit(json{{"suite", verify_args.suite},
                  {"passed", rep.passed},
                  {"log", rep.log}});
        return rep.passed ? 0 : 1;
      };
    });
  }

  struct {
    double phase = 0.0;
    int genus = 2;
    std::int64_t max_index = 10000;
  } probe_args;
  {
    CLI::App* cmd = app.add_subcommand(
        "probe-divergence", "summand magnitudes at a unit-modulus parameter");
    cmd->add_option("--phase", probe_args.phase, "arg(t)")->required();
    cmd->add_option("--genus", probe_args.genus);
    cmd->add_option("--max-index", probe_args.max_index);
    cmd->callback([&] {
      run = [&] {
        const DivergenceReport rep = divergence_probe(
            Param::unit_circle(probe_args.phase), probe_args.genus,
            probe_args.max_index);
        emit(json{{"count", rep.indices.size()},
                  {"indices", rep.indices},
                  {"magnitudes", rep.magnitudes}});
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run();
  } catch (const Error& e) {
    emit(json{{"error", {{"type", e.kind_name()}, {"message", e.what()}}}});
    return 1;
  } catch (const std::exception& e) {
    emit(json{{"error", {{"type", "InputError"}, {"message", e.what()}}}});
    return 2;
  }
}
