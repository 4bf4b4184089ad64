#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "paclab/certify/certifier.hpp"
#include "paclab/construct/row_class.hpp"
#include "paclab/construct/set_system.hpp"
#include "paclab/construct/tagged.hpp"
#include "paclab/core/error.hpp"
#include "paclab/harness/config.hpp"
#include "paclab/harness/emit.hpp"
#include "paclab/harness/experiments.hpp"
#include "paclab/harness/regime.hpp"
#include "paclab/oig/oig_learner.hpp"
#include "paclab/oig/orientation.hpp"
#include "paclab/oracle/game.hpp"
#include "paclab/unitest/collision.hpp"

namespace {

using nlohmann::json;
namespace pc = paclab;
namespace core = paclab::core;

void print_json(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    std::string item = text.substr(pos, next - pos);
    if (item.empty()) {
      throw pc::ConfigError("empty entry in list '" + text + "'");
    }
    std::size_t used = 0;
    std::uint64_t v = std::stoull(item, &used);
    if (used != item.size()) {
      throw pc::ConfigError("bad unsigned value '" + item + "'");
    }
    out.push_back(v);
    if (next == text.size()) break;
    pos = next + 1;
  }
  return out;
}

core::PointSeq fresh_points(std::size_t count) {
  core::PointSeq pts;
  pts.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    pts.push_back({0, static_cast<std::int64_t>(j), 0});
  }
  return pts;
}

struct SimOpts {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_path;
  std::string json_path;
};

// simulate: run one experiment config, emit the csv (and optional json).
void add_simulate(CLI::App& app) {
  auto opts = std::make_shared<SimOpts>();
  CLI::App* sub = app.add_subcommand(
      "simulate", "Run an experiment described by a key=value config");
  sub->add_option("--config", opts->config_path, "config file path");
  sub->add_option("--set", opts->overrides,
                  "KEY=VALUE override, repeatable, wins over the file");
  sub->add_option("--out", opts->out_path, "csv output path (default stdout)");
  sub->add_option("--json", opts->json_path, "also write a json mirror here");
  sub->callback([opts] {
    pc::harness::Config cfg;
    if (!opts->config_path.empty()) {
      cfg = pc::harness::load_config_file(opts->config_path);
    }
    for (const std::string& kv : opts->overrides) {
      std::size_t eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw pc::ConfigError("--set expects KEY=VALUE, got '" + kv + "'");
      }
      cfg.values[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    std::vector<pc::harness::ResultRow> rows = pc::harness::run_experiment(cfg);
    std::string csv = pc::harness::to_csv(rows);
    if (opts->out_path.empty()) {
      std::fputs(csv.c_str(), stdout);
    } else {
      pc::harness::write_file(opts->out_path, csv);
    }
    if (!opts->json_path.empty()) {
      pc::harness::write_file(opts->json_path, pc::harness::to_json(rows));
    }
  });
}

struct TuOpts {
  std::uint64_t n = 0;
  double xi = 0.3;
  double delta = 0.2;
  std::uint64_t sample_size = 0;
  std::string distribution = "uniform";
  std::uint64_t seed = 1;
  bool raw = false;
};

void add_test_uniformity(CLI::App& app) {
  auto opts = std::make_shared<TuOpts>();
  CLI::App* sub = app.add_subcommand(
      "test-uniformity",
      "Draw one sample and run the collision uniformity tester");
  sub->add_option("--n", opts->n, "reference set size")->required();
  sub->add_option("--xi", opts->xi, "distance threshold");
  sub->add_option("--delta", opts->delta, "failure probability");
  sub->add_option("--sample-size", opts->sample_size,
                  "draws (0 means the tester's guarantee bound)");
  sub->add_option("--distribution", opts->distribution,
                  "uniform, half-support, point-mass or off-mix");
  sub->add_option("--seed", opts->seed, "rng seed");
  sub->add_flag("--raw", opts->raw,
                "skip the membership gate (plain collision test)");
  sub->callback([opts] {
    auto n = static_cast<std::size_t>(opts->n);
    core::PointSeq support = fresh_points(n);
    core::DomainPoint off{0, static_cast<std::int64_t>(n), 0};
    core::DiscreteDistribution d =
        pc::harness::probe_distribution(opts->distribution, support, off);
    std::uint64_t bound = pc::unitest::m_test_sample_bound(
        n, opts->raw ? opts->xi : opts->xi / 2, opts->delta);
    std::uint64_t draws = opts->sample_size ? opts->sample_size : bound;

    core::Rng rng = core::RandomSource{opts->seed}.stream(0x7e57, 0);
    core::PointSeq sample = d.sample_many(static_cast<std::size_t>(draws), rng);
    pc::unitest::TesterParams params{opts->xi, opts->delta};
    pc::unitest::TesterDecision dec;
    if (opts->raw) {
      dec = pc::unitest::test_unif(n, params, sample);
    } else {
      pc::unitest::PointSetView y;
      y.size = n;
      std::int64_t lim = static_cast<std::int64_t>(n);
      y.contains = [lim](const core::DomainPoint& p) {
        return p.row == 0 && p.tag == 0 && p.col >= 0 && p.col < lim;
      };
      dec = pc::unitest::m_test_unif(y, params, sample);
    }
    print_json({{"n", opts->n},
                {"xi", opts->xi},
                {"delta", opts->delta},
                {"gated", !opts->raw},
                {"distribution", opts->distribution},
                {"sample_size", draws},
                {"guarantee_bound", bound},
                {"accept", dec.accept},
                {"blocks", dec.blocks},
                {"block_size", dec.block_size},
                {"blocks_accepting", dec.blocks_accepting},
                {"threshold", dec.threshold}});
  });
}

struct OrientOpts {
  std::uint64_t dim = 0;
  std::uint64_t points = 0;
  std::string masks;
  bool force_flow = false;
};

void add_oig_orient(CLI::App& app) {
  auto opts = std::make_shared<OrientOpts>();
  CLI::App* sub = app.add_subcommand(
      "oig-orient",
      "Minimax fractional orientation and densest subgraph of a projection");
  sub->add_option("--dim", opts->dim, "full hypercube of this dimension");
  sub->add_option("--points", opts->points,
                  "coordinate count for an explicit behavior list");
  sub->add_option("--masks", opts->masks,
                  "comma separated behavior masks over the points");
  sub->add_flag("--force-flow", opts->force_flow,
                "use the flow densest-subgraph route even on small graphs");
  sub->callback([opts] {
    pc::oig::OigGraph g;
    if (opts->dim > 0) {
      if (!opts->masks.empty() || opts->points > 0) {
        throw pc::ConfigError("--dim excludes --points/--masks");
      }
      g = pc::oig::hypercube_graph(static_cast<std::size_t>(opts->dim));
    } else {
      if (opts->points == 0 || opts->masks.empty()) {
        throw pc::ConfigError("need either --dim or --points with --masks");
      }
      if (opts->points > 20) {
        throw pc::ConfigError("--points is capped at 20");
      }
      pc::oig::BehaviorSet bs;
      bs.points = core::collapse_points(
          fresh_points(static_cast<std::size_t>(opts->points)));
      for (std::uint64_t v : parse_u64_list(opts->masks)) {
        if (v >> opts->points) {
          throw pc::ConfigError("mask " + std::to_string(v) +
                                " does not fit in " +
                                std::to_string(opts->points) + " points");
        }
        bs.behaviors.push_back(v);
      }
      std::sort(bs.behaviors.begin(), bs.behaviors.end());
      bs.behaviors.erase(std::unique(bs.behaviors.begin(), bs.behaviors.end()),
                         bs.behaviors.end());
      g = pc::oig::build_oig_graph(std::move(bs));
    }

    pc::oig::FractionalOrientation fo =
        pc::oig::min_max_fractional_orientation(g);
    pc::oig::DensestResult dens = pc::oig::densest_subgraph(g, opts->force_flow);
    pc::oig::DualityReport dual = pc::oig::duality_check(g, opts->force_flow);
    std::int64_t integral = pc::oig::min_max_integral_orientation(g);

    print_json({{"vertices", g.vertex_count()},
                {"edges", g.edges.size()},
                {"value_num", fo.value_num},
                {"value_den", fo.value_den},
                {"value", fo.value},
                {"integral_value", integral},
                {"densest_num", dens.num},
                {"densest_den", dens.den},
                {"densest_witness", dens.witness},
                {"duality_equal", dual.equal}});
  });
}

struct ConstructOpts {
  std::string kind;
  std::uint64_t n = 10000;
  std::uint64_t big_m = 100;
  std::uint64_t universe = 256;
  std::uint64_t set_size = 16;
  std::uint64_t count = 64;
  std::uint64_t max_intersection = 8;
  std::uint64_t copies = 3;
  std::uint64_t seed = 1;
  bool list_sets = false;
};

void add_construct(CLI::App& app) {
  auto opts = std::make_shared<ConstructOpts>();
  CLI::App* sub = app.add_subcommand(
      "construct", "Build a hypothesis-class construction and verify it");
  sub->add_option("--kind", opts->kind, "row, set-system or tagged")
      ->required();
  sub->add_option("--n", opts->n, "row length");
  sub->add_option("--big-m", opts->big_m, "row minority size");
  sub->add_option("--universe", opts->universe, "set-system universe size");
  sub->add_option("--set-size", opts->set_size, "points per set");
  sub->add_option("--count", opts->count, "number of sets");
  sub->add_option("--max-intersection", opts->max_intersection,
                  "pairwise overlap bound");
  sub->add_option("--copies", opts->copies, "tag replicas (tagged kind)");
  sub->add_option("--seed", opts->seed, "rng seed");
  sub->add_flag("--list-sets", opts->list_sets, "include the sampled sets");
  sub->callback([opts] {
    if (opts->kind == "row") {
      pc::construct::RowClass row(static_cast<std::int64_t>(opts->n),
                                  static_cast<std::int64_t>(opts->big_m));
      double xi =
          static_cast<double>(opts->big_m) / static_cast<double>(opts->n);
      print_json(
          {{"kind", "row"},
           {"class", row.name()},
           {"n", opts->n},
           {"big_m", opts->big_m},
           {"xi", xi},
           {"certificate", 3 * xi},
           {"certifier_gate",
            pc::certify::certifier_gate(static_cast<std::size_t>(opts->n),
                                        xi)}});
      return;
    }
    if (opts->kind != "set-system" && opts->kind != "tagged") {
      throw pc::ConfigError("kind must be row, set-system or tagged");
    }
    pc::construct::SetSystemParams p;
    p.universe = static_cast<std::int64_t>(opts->universe);
    p.set_size = static_cast<std::int64_t>(opts->set_size);
    p.count = static_cast<std::int64_t>(opts->count);
    p.max_intersection = static_cast<std::int64_t>(opts->max_intersection);
    core::Rng rng = core::RandomSource{opts->seed}.stream(0x5e7, 0);
    pc::construct::SetSystem system = pc::construct::sample_set_system(p, rng);
    bool ok = pc::construct::verify_set_system(system);
    pc::construct::WellSepFamily family =
        pc::construct::wellsep_family_from_setsystem(system);
    bool sep = pc::construct::verify_well_separated(family);

    json out = {{"kind", opts->kind},
                {"universe", opts->universe},
                {"set_size", opts->set_size},
                {"count", opts->count},
                {"max_intersection", opts->max_intersection},
                {"retries_used", system.retries_used},
                {"verified", ok},
                {"separation_c", family.c},
                {"well_separated", sep}};
    if (opts->list_sets) {
      out["sets"] = system.sets;
    }
    if (opts->kind == "tagged") {
      auto labelings = pc::construct::sample_labelings(system, rng);
      auto cls = std::make_shared<pc::construct::SetSystemClass>(
          system, std::move(labelings));
      pc::construct::TaggedFamily tagged = pc::construct::tagged_family(
          cls, family.members, static_cast<std::int64_t>(opts->copies));
      out["copies"] = opts->copies;
      out["base_family"] = family.members.size();
      out["tagged_family"] = tagged.members.size();
    }
    print_json(out);
  });
}

struct OracleOpts {
  std::uint64_t x = 2;
  std::uint64_t members = 4;
  std::uint64_t m = 1;
  std::uint64_t seed = 1;
  std::string labels;
  std::string route = "both";
};

void add_oracle(CLI::App& app) {
  auto opts = std::make_shared<OracleOpts>();
  CLI::App* sub = app.add_subcommand(
      "oracle", "Exact minimax error of a tiny fixed-size prediction game");
  sub->add_option("--x", opts->x, "domain size (at most 4)");
  sub->add_option("--members", opts->members, "class size (at most 16)");
  sub->add_option("--m", opts->m, "training draws (at most 2)");
  sub->add_option("--seed", opts->seed, "seed for the random class");
  sub->add_option("--labels", opts->labels,
                  "explicit member masks, comma separated (overrides seed)");
  sub->add_option("--route", opts->route, "lp, enum or both");
  sub->callback([opts] {
    if (opts->route != "lp" && opts->route != "enum" &&
        opts->route != "both") {
      throw pc::ConfigError("route must be lp, enum or both");
    }
    core::PointSeq domain = fresh_points(static_cast<std::size_t>(opts->x));
    std::vector<core::BehaviorMask> labels;
    if (!opts->labels.empty()) {
      for (std::uint64_t v : parse_u64_list(opts->labels)) {
        labels.push_back(v);
      }
    } else {
      if (opts->x > 4) {
        throw pc::ConfigError("--x is capped at 4");
      }
      std::uint64_t all = std::uint64_t{1} << opts->x;
      if (opts->members > all) {
        throw pc::ConfigError("more members than distinct labelings");
      }
      std::vector<core::BehaviorMask> pool;
      for (std::uint64_t v = 0; v < all; ++v) pool.push_back(v);
      core::Rng rng = core::RandomSource{opts->seed}.stream(0x04ac1e, 0);
      for (std::uint64_t i = 0; i < opts->members; ++i) {
        std::uint64_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
        labels.push_back(pool[i]);
      }
      std::sort(labels.begin(), labels.end());
    }
    pc::oracle::GameInstance inst;
    inst.cls =
        std::make_shared<core::ExplicitClass>("game-class", domain, labels);
    inst.dist = core::DiscreteDistribution::uniform_on(domain);
    inst.m = static_cast<std::size_t>(opts->m);

    json out = {{"x", opts->x},
                {"members", labels.size()},
                {"m", opts->m},
                {"labels", labels}};
    double lp_value = 0;
    bool have_lp = false;
    if (opts->route == "lp" || opts->route == "both") {
      pc::oracle::GameSolution sol = pc::oracle::optimal_fixed_error(inst);
      lp_value = sol.value;
      have_lp = true;
      out["value"] = sol.value;
      out["dual_value"] = sol.dual_value;
      out["certified"] = sol.certified;
      out["cells"] = sol.cells.size();
      out["mixture_vertices"] = sol.learner_mixture.size();
    }
    if (opts->route == "enum" || opts->route == "both") {
      double ev = pc::oracle::game_value_by_enumeration(inst);
      out["value_by_enumeration"] = ev;
      if (have_lp) {
        out["routes_agree"] = std::abs(ev - lp_value) <= 1e-6;
      }
    }
    print_json(out);
  });
}

struct AuditOpts {
  std::string kind = "majority";
  std::uint64_t n = 0;
  std::uint64_t big_m = 0;
  double xi = 0;
  std::uint64_t trials = 0;
  std::uint64_t learner_trials = 0;
  std::string sample_sizes;
  std::uint64_t seed = 1;
  std::string out_path;
};

void add_audit(CLI::App& app) {
  auto opts = std::make_shared<AuditOpts>();
  CLI::App* sub = app.add_subcommand(
      "audit-certifier",
      "Check certificate soundness against estimated learner error");
  sub->add_option("--kind", opts->kind, "majority or set");
  sub->add_option("--n", opts->n, "row length (majority kind)");
  sub->add_option("--big-m", opts->big_m, "row minority size");
  sub->add_option("--xi", opts->xi, "certified scale (set kind)");
  sub->add_option("--trials", opts->trials, "certificate trials");
  sub->add_option("--learner-trials", opts->learner_trials,
                  "error estimation trials");
  sub->add_option("--sample-sizes", opts->sample_sizes,
                  "comma separated sizes (default: the certifier gate)");
  sub->add_option("--seed", opts->seed, "rng seed");
  sub->add_option("--out", opts->out_path, "also dump csv rows here");
  sub->callback([opts, sub] {
    pc::harness::Config cfg;
    cfg.values["experiment"] = "audit";
    cfg.values["kind"] = opts->kind;
    cfg.values["seed"] = std::to_string(opts->seed);
    if (sub->count("--n")) cfg.values["n"] = std::to_string(opts->n);
    if (sub->count("--big-m")) {
      cfg.values["big_m"] = std::to_string(opts->big_m);
    }
    if (sub->count("--xi")) {
      cfg.values["xi"] = pc::harness::format_double(opts->xi);
    }
    if (sub->count("--trials")) {
      cfg.values["trials"] = std::to_string(opts->trials);
    }
    if (sub->count("--learner-trials")) {
      cfg.values["learner_trials"] = std::to_string(opts->learner_trials);
    }
    if (sub->count("--sample-sizes")) {
      cfg.values["sample_sizes"] = opts->sample_sizes;
    }
    pc::harness::AuditOutcome outcome = pc::harness::run_audit_experiment(cfg);
    json rows = json::array();
    for (const pc::certify::AuditRow& r : outcome.report.rows) {
      rows.push_back({{"distribution", r.distribution},
                      {"sample_size", r.sample_size},
                      {"certificate_mean", r.certificate_mean},
                      {"certificate_se", r.certificate_se},
                      {"learner_error", r.learner_error},
                      {"learner_error_se", r.learner_error_se},
                      {"slack", r.slack},
                      {"tolerance", r.tolerance},
                      {"sound", r.sound}});
    }
    print_json({{"kind", outcome.kind},
                {"rows", rows},
                {"all_sound", outcome.report.all_sound}});
    if (!opts->out_path.empty()) {
      pc::harness::write_file(opts->out_path,
                              pc::harness::to_csv(outcome.rows));
    }
  });
}

struct RegimeOpts {
  double beta = 0;
  std::string ns;
};

void add_regime(CLI::App& app) {
  auto opts = std::make_shared<RegimeOpts>();
  CLI::App* sub = app.add_subcommand(
      "regime", "Scaling schedule table for one exponent beta");
  sub->add_option("--beta", opts->beta, "exponent in (0, 1/8)")->required();
  sub->add_option("--n", opts->ns, "comma separated sizes")->required();
  sub->callback([opts] {
    pc::harness::RegimeReport rep =
        pc::harness::check_regime(opts->beta, parse_u64_list(opts->ns));
    json rows = json::array();
    for (const pc::harness::RegimeRow& r : rep.rows) {
      rows.push_back({{"n", r.n},
                      {"minority", r.minority},
                      {"train_size", r.train_size},
                      {"xi", r.xi},
                      {"tester_gate", r.tester_gate},
                      {"gate_ratio", r.gate_ratio},
                      {"gate_met", r.gate_met}});
    }
    print_json({{"beta", rep.beta},
                {"rows", rows},
                {"gate_met_at_largest", rep.gate_met_at_largest}});
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "paclab: simulation lab for distribution-dependent PAC learning "
      "with certified error levels"};
  app.require_subcommand(1);
  add_simulate(app);
  add_test_uniformity(app);
  add_oig_orient(app);
  add_construct(app);
  add_oracle(app);
  add_audit(app);
  add_regime(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const paclab::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const paclab::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
