#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "parshift/config.hpp"
#include "parshift/ideals.hpp"
#include "parshift/representation.hpp"

using namespace parshift;

namespace {

struct Options {
  std::string config_path;
  std::vector<std::string> suites;
  std::string json_path;
  std::string dot_path;
  std::optional<unsigned> seed;
  std::optional<int> depth;
  std::optional<std::pair<int, int>> resolution;
  std::optional<int> radius;
  std::optional<double> coverage_floor;
};

SystemConfig effective_config(const Options& opt) {
  SystemConfig cfg = load_config(opt.config_path);
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.depth) cfg.depth = *opt.depth;
  if (opt.resolution) cfg.resolution = Resolution{opt.resolution->first, opt.resolution->second};
  if (opt.radius) cfg.radius = *opt.radius;
  if (opt.coverage_floor) cfg.coverage_floor = *opt.coverage_floor;
  return cfg;
}

std::vector<Point> sample_points(const PartialActionHandle& h, int q, int p) {
  const ShiftPresentation& pres = h.presentation();
  if (pres.substitution()) {
    std::vector<Point> pts;
    if (h.side() == Side::OneSided)
      for (long off = 0; off < 4; ++off)
        pts.push_back(Point::substitution_orbit(&pres, off));
    return pts;
  }
  return h.side() == Side::OneSided ? enumerate_ev_periodic(pres, q, p)
                                    : enumerate_two_sided_periodic(pres, p);
}

std::vector<SymbolicSet> lambda_phi_samples(const BooleanEngine& engine) {
  std::vector<SymbolicSet> samples;
  samples.push_back(engine.full(Resolution{1, 1}));
  const int na = engine.presentation().n_symbols();
  for (Symbol a = 0; a < na; ++a) {
    samples.push_back(engine.domain_set(ReducedWord::generator(a)));
    samples.push_back(engine.domain_set(ReducedWord::inverse_generator(a)));
  }
  const AtomTable& t = engine.table(Resolution{1, 1});
  for (int i = 0; i < static_cast<int>(t.atoms.size()); ++i)
    samples.push_back(engine.single(Resolution{1, 1}, i));
  return samples;
}

Report run_describe(const SystemConfig& cfg) {
  Report rep;
  rep.suite = "describe";
  ShiftPresentation pres = cfg.make_presentation();
  rep.params["side"] = to_string(pres.side());
  rep.params["alphabet"] = std::to_string(pres.n_symbols());
  for (int n = 1; n <= std::max(4, cfg.resolution.k + 1); ++n) {
    const FactorSet& fs = pres.factors(n);
    rep.params["factors_" + std::to_string(n)] = std::to_string(fs.words.size());
    if (!fs.exact) rep.undecided();
  }
  PartialActionHandle handle(&pres, cfg.depth);
  BooleanEngine engine(&handle);
  for (int k = 0; k <= std::min(cfg.resolution.k, cfg.resolution.l); ++k) {
    Resolution r{k, k};
    rep.params["atoms_" + to_string(r)] = std::to_string(engine.table(r).atoms.size());
  }
  Resolution r = cfg.resolution;
  rep.params["atoms_" + to_string(r)] = std::to_string(engine.table(r).atoms.size());
  return rep;
}

std::string stone_dot(const BooleanEngine& engine, Resolution r);

std::vector<Report> run_check(const SystemConfig& cfg, const std::string& suite,
                              std::string* dot) {
  std::vector<Report> out;
  ShiftPresentation pres = cfg.make_presentation();
  PartialActionHandle handle(&pres, cfg.depth);
  std::mt19937_64 rng(cfg.seed);

  if (suite == "axioms") {
    auto ball = reduced_ball(pres.n_symbols(), cfg.radius);
    out.push_back(check_partial_action_axioms(
        handle, ball, sample_points(handle, cfg.basis_q, std::max(3, cfg.basis_p - 1))));
  } else if (suite == "definition") {
    FiniteBasis basis = build_basis(handle, cfg.basis_q, cfg.basis_p, 4 * cfg.radius);
    out.push_back(verify_definition_relations(basis, cfg.radius, cfg.coverage_floor));
  } else if (suite == "appendix") {
    FiniteBasis basis = build_basis(handle, cfg.basis_q, cfg.basis_p, 4 * cfg.radius);
    out.push_back(verify_appendix_axiom_sets(basis, cfg.radius, cfg.coverage_floor));
  } else if (suite == "ck") {
    FiniteBasis basis = build_basis(handle, cfg.basis_q, cfg.basis_p, 6);
    BooleanEngine engine(&handle);
    out.push_back(verify_ck_relations(basis, &engine, 3, cfg.coverage_floor));
  } else if (suite == "crossed") {
    ShiftPresentation two = cfg.make_presentation(Side::TwoSided);
    PartialActionHandle h2(&two, cfg.depth);
    FiniteBasis basis = build_basis(h2, 0, cfg.basis_p);
    out.push_back(verify_crossed_product(basis, std::max(3, cfg.radius)));
  } else if (suite == "lambda-phi") {
    FiniteBasis basis = build_basis(handle, cfg.basis_q, cfg.basis_p, 2);
    BooleanEngine engine(&handle);
    out.push_back(verify_lambda_phi(basis, engine, lambda_phi_samples(engine),
                                    cfg.coverage_floor));
  } else if (suite == "stone") {
    BooleanEngine engine(&handle);
    out.push_back(engine.check_separation(cfg.resolution));
    out.push_back(engine.check_iso(cfg.resolution, rng, 50));
    if (dot) *dot = stone_dot(engine, cfg.resolution);
  } else if (suite == "modsat") {
    BooleanEngine engine(&handle);
    out.push_back(check_modsat(&engine, Resolution{1, 1}, 5, 200, 8, cfg.seed));
  } else {
    throw std::invalid_argument("unknown suite " + suite);
  }
  return out;
}

std::string lattice_dot(const BooleanEngine& engine, const InvariantLattice& lat) {
  std::ostringstream dot;
  dot << "digraph ideal_lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lat.sets.size(); ++i) {
    dot << "  n" << i << " [label=\"";
    if (lat.sets[i].atoms.empty()) {
      dot << "empty";
    } else if (engine.is_full(lat.sets[i])) {
      dot << "full";
    } else {
      bool first = true;
      for (int a : lat.sets[i].atoms) {
        if (!first) dot << " ";
        dot << engine.atom_name(lat.r, a);
        first = false;
      }
    }
    dot << "\"];\n";
  }
  for (const auto& [i, j] : lat.inclusions) dot << "  n" << i << " -> n" << j << ";\n";
  dot << "}\n";
  return dot.str();
}

std::string stone_dot(const BooleanEngine& engine, Resolution r) {
  std::ostringstream dot;
  dot << "digraph stone_dual {\n  rankdir=TB;\n";
  // Dual points at r plus the refinement tree from one step coarser.
  const Resolution rc{std::max(0, r.k - 1), std::max(0, r.l - 1)};
  const AtomTable& tf = engine.table(r);
  if (!(rc == r)) {
    const AtomTable& tc = engine.table(rc);
    for (int i = 0; i < static_cast<int>(tc.atoms.size()); ++i)
      dot << "  c" << i << " [label=\"" << engine.atom_name(rc, i)
          << "\", shape=box];\n";
    for (int i = 0; i < static_cast<int>(tf.atoms.size()); ++i) {
      dot << "  f" << i << " [label=\"" << engine.atom_name(r, i) << "\"];\n";
      dot << "  c" << engine.coarse_atom(r, i, rc) << " -> f" << i << ";\n";
    }
  } else {
    for (int i = 0; i < static_cast<int>(tf.atoms.size()); ++i)
      dot << "  f" << i << " [label=\"" << engine.atom_name(r, i) << "\"];\n";
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for free-group partial actions on shift spaces"};
  app.require_subcommand(1);

  Options opt;
  std::pair<int, int> res_flag;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opt.config_path, "system configuration file")->required();
    cmd->add_option("--json", opt.json_path, "write the JSON report here");
    cmd->add_option("--dot", opt.dot_path, "write DOT output here");
    cmd->add_option("--seed", [&opt](const CLI::results_t& v) {
      opt.seed = static_cast<unsigned>(std::stoul(v[0]));
      return true;
    }, "override the config seed");
    cmd->add_option("--depth", [&opt](const CLI::results_t& v) {
      opt.depth = std::stoi(v[0]);
      return true;
    }, "override the scan depth");
    cmd->add_option("--radius", [&opt](const CLI::results_t& v) {
      opt.radius = std::stoi(v[0]);
      return true;
    }, "override the group ball radius");
    cmd->add_option("--coverage-floor", [&opt](const CLI::results_t& v) {
      opt.coverage_floor = std::stod(v[0]);
      return true;
    }, "override the coverage floor");
    cmd->add_option("--resolution", [&opt](const CLI::results_t& v) {
      auto comma = v[0].find(',');
      if (comma == std::string::npos) return false;
      opt.resolution = std::make_pair(std::stoi(v[0].substr(0, comma)),
                                      std::stoi(v[0].substr(comma + 1)));
      return true;
    }, "override the resolution, K,L");
  };

  auto* cmd_describe = app.add_subcommand("describe", "echo the system and its counts");
  add_common(cmd_describe);
  auto* cmd_check = app.add_subcommand("check", "run verification suites");
  add_common(cmd_check);
  std::string suites_flag;
  cmd_check->add_option("--suite", suites_flag,
                        "comma-separated: axioms,definition,appendix,ck,crossed,"
                        "lambda-phi,stone,modsat")
      ->required();
  auto* cmd_ideals = app.add_subcommand("ideals", "invariant-admissible lattice");
  add_common(cmd_ideals);
  auto* cmd_special = app.add_subcommand("special", "left-special scan and properties");
  add_common(cmd_special);
  auto* cmd_psi = app.add_subcommand("psi", "psi homomorphism and kappa checks");
  add_common(cmd_psi);
  auto* cmd_units = app.add_subcommand("units", "matrix units on a tail class");
  add_common(cmd_units);

  CLI11_PARSE(app, argc, argv);

  std::vector<Report> reports;
  std::string dot_payload;
  try {
    const SystemConfig cfg = effective_config(opt);

    if (cmd_describe->parsed()) {
      reports.push_back(run_describe(cfg));
    } else if (cmd_check->parsed()) {
      std::istringstream in(suites_flag);
      std::string s;
      while (std::getline(in, s, ',')) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<Report> batch = run_check(cfg, s, &dot_payload);
        const auto t1 = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        for (Report& r : batch) {
          r.timings_ms["suite"] = ms / static_cast<double>(batch.size());
          r.params["seed"] = std::to_string(cfg.seed);
          reports.push_back(std::move(r));
        }
      }
    } else if (cmd_ideals->parsed()) {
      ShiftPresentation pres = cfg.make_presentation();
      PartialActionHandle handle(&pres, cfg.depth);
      BooleanEngine engine(&handle);
      InvariantLattice lat = invariant_admissible_sets(engine, cfg.resolution);
      dot_payload = lattice_dot(engine, lat);
      reports.push_back(lat.report);
    } else if (cmd_special->parsed()) {
      ShiftPresentation pres = cfg.make_presentation();
      PartialActionHandle handle(&pres, cfg.depth);
      SpecialElementLedger led = left_special_scan(handle, cfg.depth);
      reports.push_back(led.report);
      reports.push_back(check_property_star(handle, std::min(6, cfg.depth / 2)));
      reports.push_back(check_property_starstar(handle, cfg.depth));
    } else if (cmd_psi->parsed()) {
      ShiftPresentation one = cfg.make_presentation(Side::OneSided);
      ShiftPresentation two = cfg.make_presentation(Side::TwoSided);
      PartialActionHandle h1(&one, cfg.depth), h2(&two, cfg.depth);
      BooleanEngine e1(&h1), e2(&h2);
      Report star = check_property_star(h1, std::min(4, cfg.depth / 2));
      reports.push_back(star);
      PsiMap psi(&e1, &e2, star);
      std::mt19937_64 rng(cfg.seed);
      for (int k = 1; k <= cfg.resolution.k; ++k) {
        Resolution r{k, std::min(k, cfg.resolution.l)};
        reports.push_back(psi.check_kernel_rule(r));
        reports.push_back(psi.check_homomorphism(r, rng, 20));
        reports.push_back(psi.check_equivariance(r, rng, 10));
      }
      reports.push_back(psi.check_kappa(rng, 50, 3));
      // Dual-space DOT doubles as the atom refinement tree.
      dot_payload = stone_dot(e1, cfg.resolution);
    } else if (cmd_units->parsed()) {
      ShiftPresentation pres = cfg.make_presentation(Side::OneSided);
      PartialActionHandle handle(&pres, cfg.depth);
      BooleanEngine engine(&handle);
      if (!pres.substitution()) {
        Report rep;
        rep.suite = "matrix-units";
        rep.fail("matrix units need a tail class of a shift with property (**); "
                 "configure a substitution system");
        reports.push_back(std::move(rep));
      } else {
        std::vector<Point> sample;
        for (long off = 0; off < 3; ++off)
          sample.push_back(Point::substitution_orbit(&pres, off));
        MatrixUnitSystem sys = matrix_units(engine, handle, sample, cfg.depth, 6);
        reports.push_back(sys.report);
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  for (const Report& r : reports) std::cout << r.summary_line() << "\n";

  if (!opt.json_path.empty()) {
    std::ofstream out(opt.json_path);
    out << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i)
      out << reports[i].to_json() << (i + 1 < reports.size() ? ",\n" : "\n");
    out << "]\n";
  }
  if (!opt.dot_path.empty() && !dot_payload.empty()) {
    std::ofstream out(opt.dot_path);
    out << dot_payload;
  }

  Verdict v = Verdict::Pass;
  for (const Report& r : reports) v = combine(v, r.verdict);
  if (v == Verdict::Fail) return 1;
  if (v == Verdict::Inconclusive) return 2;
  return 0;
}
