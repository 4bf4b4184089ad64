#include "paclab/harness/experiments.hpp"

#include <cmath>
#include <memory>
#include <utility>

#include "paclab/construct/row_class.hpp"
#include "paclab/construct/set_system.hpp"
#include "paclab/core/error.hpp"
#include "paclab/harness/estimate.hpp"
#include "paclab/harness/regime.hpp"
#include "paclab/learners/learners.hpp"
#include "paclab/oig/oig_learner.hpp"
#include "paclab/unitest/collision.hpp"

namespace paclab::harness {
namespace {

// Keys shared by every experiment.
const std::vector<std::string> kCommonKeys = {"experiment", "seed", "trials",
                                              "parallel"};

std::vector<std::string> with_common(std::vector<std::string> extra) {
  extra.insert(extra.end(), kCommonKeys.begin(), kCommonKeys.end());
  return extra;
}

struct RunContext {
  std::uint64_t seed = 1;
  std::uint64_t trials = 200;
  bool parallel = true;
  core::RandomSource rs;
};

RunContext make_context(const Config& cfg) {
  RunContext ctx;
  ctx.seed = cfg.get_u64("seed", 1);
  ctx.trials = cfg.get_u64("trials", 200);
  ctx.parallel = cfg.get_bool("parallel", true);
  if (ctx.trials == 0) {
    throw ConfigError("trials must be positive");
  }
  ctx.rs = core::RandomSource{ctx.seed};
  return ctx;
}

// Row-class sizing, either spelled out or derived from the one-parameter
// schedule (n, beta).
struct RowRegime {
  std::uint64_t n = 0;
  std::uint64_t big_m = 0;
  std::uint64_t m = 0;
  double xi = 0;
  std::string mode;
};

RowRegime resolve_row_regime(const Config& cfg, std::uint64_t default_n,
                             std::uint64_t default_big_m,
                             std::uint64_t default_m) {
  RowRegime r;
  r.mode = cfg.get_str("regime", "manual");
  if (r.mode == "schedule") {
    if (cfg.has("big_m") || cfg.has("m")) {
      throw ConfigError("schedule regime derives big_m and m from n and beta");
    }
    std::uint64_t n = cfg.require_u64("n");
    double beta = cfg.require_double("beta");
    RegimeReport rep = check_regime(beta, {n});
    r.n = n;
    r.big_m = rep.rows[0].minority;
    r.m = rep.rows[0].train_size;
    r.xi = rep.rows[0].xi;
  } else if (r.mode == "manual") {
    if (cfg.has("beta")) {
      throw ConfigError("beta applies only to the schedule regime");
    }
    r.n = cfg.get_u64("n", default_n);
    r.big_m = cfg.get_u64("big_m", default_big_m);
    r.m = cfg.get_u64("m", default_m);
    if (r.big_m == 0 || 2 * r.big_m >= r.n) {
      throw Error("invalid-parameters: need 1 <= big_m and 2*big_m < n");
    }
    r.xi = static_cast<double>(r.big_m) / static_cast<double>(r.n);
  } else {
    throw ConfigError("regime must be manual or schedule");
  }
  return r;
}

construct::SetSystemParams set_params_from(const Config& cfg) {
  construct::SetSystemParams p;
  p.universe = static_cast<std::int64_t>(
      cfg.get_u64("universe", static_cast<std::uint64_t>(p.universe)));
  p.set_size = static_cast<std::int64_t>(
      cfg.get_u64("set_size", static_cast<std::uint64_t>(p.set_size)));
  p.count = static_cast<std::int64_t>(
      cfg.get_u64("count", static_cast<std::uint64_t>(p.count)));
  p.max_intersection = static_cast<std::int64_t>(cfg.get_u64(
      "max_intersection", static_cast<std::uint64_t>(p.max_intersection)));
  return p;
}

std::shared_ptr<construct::SetSystemClass> build_set_class(
    const Config& cfg, const core::RandomSource& rs) {
  construct::SetSystemParams p = set_params_from(cfg);
  core::Rng rng = rs.stream(0x5e7, 0);
  construct::SetSystem system = construct::sample_set_system(p, rng);
  std::vector<std::uint64_t> labelings = construct::sample_labelings(system, rng);
  return std::make_shared<construct::SetSystemClass>(std::move(system),
                                                     std::move(labelings));
}

ResultRow base_row(const RunContext& ctx, std::string experiment,
                   std::string cls, std::string distribution, std::uint64_t m,
                   std::string regime_mode) {
  ResultRow row;
  row.experiment = std::move(experiment);
  row.cls = std::move(cls);
  row.distribution = std::move(distribution);
  row.m = m;
  row.trials = ctx.trials;
  row.seed = ctx.seed;
  row.regime_mode = std::move(regime_mode);
  return row;
}

// Worst-over-truths error of one named learner on the uniform row. The two
// canonical truths (minority label 1 and minority label 0 on the leading
// columns) are symmetric representatives of the class.
ErrorEstimate row_learner_estimate(const std::string& learner,
                                   const std::shared_ptr<construct::RowClass>& row,
                                   const RowRegime& reg, double mixture_c,
                                   const RunContext& ctx, std::uint64_t salt) {
  core::DiscreteDistribution d = row->distribution();
  construct::RowHypothesis t1 = row->canonical_hypothesis(1);
  construct::RowHypothesis t0 = row->canonical_hypothesis(0);
  core::Hypothesis h1 = row->as_hypothesis(t1);
  core::Hypothesis h0 = row->as_hypothesis(t0);
  std::vector<core::Hypothesis> truths = {h1, h0};
  auto m = static_cast<std::size_t>(reg.m);

  if (learner == "erm-worst") {
    // The adversary picks among empirical minimizers after seeing the sample,
    // so the trial value is an exact conditional expectation, not a test draw.
    std::vector<TrialValue> scenarios;
    for (const core::Hypothesis& truth : truths) {
      scenarios.push_back([row, d, m, truth](core::Rng& rng) {
        core::LabeledSeq s = core::draw_labeled(d, truth, m, rng);
        return learners::adversarial_erm_loss(*row, s, truth, d);
      });
    }
    return estimate_worst_mean(scenarios, ctx.trials, ctx.rs, salt,
                               ctx.parallel);
  }

  learners::Learner fn;
  if (learner == "majority") {
    fn = learners::make_majority_learner();
  } else if (learner == "oig") {
    fn = oig::make_oig_learner(row);
  } else if (learner == "validation") {
    fn = learners::make_validation_learner(h1);
  } else if (learner == "mixture-majority") {
    fn = learners::make_mixture_learner(learners::make_majority_learner(),
                                        mixture_c);
  } else {
    throw ConfigError("unknown learner " + learner);
  }
  return estimate_error_rate(fn, truths, d, m, ctx.trials, ctx.rs, salt,
                             ctx.parallel);
}

void fill_estimate(ResultRow& row, const ErrorEstimate& est) {
  row.estimate = est.estimate;
  row.ci_half_width = est.ci_half_width;
  row.trials = est.trials;
}

std::vector<ResultRow> run_error_rate(const Config& cfg) {
  cfg.check_keys(with_common({"regime", "class", "learner", "n", "big_m", "m",
                              "beta", "mixture_c", "universe", "set_size",
                              "count", "max_intersection"}));
  RunContext ctx = make_context(cfg);
  std::string cls_kind = cfg.get_str("class", "row");
  std::string learner = cfg.get_str("learner", "majority");

  if (cls_kind == "row") {
    RowRegime reg = resolve_row_regime(cfg, 10000, 100, 50);
    auto row_cls = std::make_shared<construct::RowClass>(
        static_cast<std::int64_t>(reg.n), static_cast<std::int64_t>(reg.big_m));
    double mixture_c = cfg.get_double("mixture_c", 0.5);
    ErrorEstimate est = row_learner_estimate(learner, row_cls, reg, mixture_c,
                                             ctx, 0xE5517);
    ResultRow out = base_row(ctx, "error-rate-" + learner, row_cls->name(),
                             "uniform-row", reg.m, reg.mode);
    fill_estimate(out, est);
    return {out};
  }

  if (cls_kind == "set-system") {
    if (cfg.get_str("regime", "manual") != "manual") {
      throw ConfigError("set-system experiments run in the manual regime");
    }
    std::uint64_t m = cfg.require_u64("m");
    auto cls = build_set_class(cfg, ctx.rs);
    // One scenario per member: truth h_j against the uniform distribution on
    // its own set, the smart-family pairing.
    std::vector<TrialValue> scenarios;
    for (std::size_t j = 0; j < cls->size(); ++j) {
      core::Hypothesis truth = cls->member(j);
      core::DiscreteDistribution d = cls->system().set_distribution(j);
      learners::Learner fn;
      if (learner == "majority") {
        fn = learners::make_majority_learner();
      } else if (learner == "erm-lex") {
        fn = learners::make_erm_lex_learner(cls);
      } else if (learner == "oig") {
        fn = oig::make_oig_learner(cls);
      } else if (learner == "validation") {
        fn = learners::make_validation_learner(cls->member(j));
      } else {
        throw ConfigError("unknown learner " + learner);
      }
      scenarios.push_back(
          learner_trial(std::move(fn), std::move(truth), std::move(d),
                        static_cast<std::size_t>(m)));
    }
    ErrorEstimate est =
        estimate_worst_mean(scenarios, ctx.trials, ctx.rs, 0xE5518,
                            ctx.parallel);
    ResultRow out = base_row(ctx, "error-rate-" + learner, cls->name(),
                             "uniform-member-set", m, "manual");
    fill_estimate(out, est);
    return {out};
  }

  throw ConfigError("class must be row or set-system");
}

std::vector<ResultRow> run_separation(const Config& cfg) {
  cfg.check_keys(with_common({"regime", "n", "big_m", "m", "beta"}));
  RunContext ctx = make_context(cfg);
  RowRegime reg = resolve_row_regime(cfg, 10000, 100, 50);
  auto row_cls = std::make_shared<construct::RowClass>(
      static_cast<std::int64_t>(reg.n), static_cast<std::int64_t>(reg.big_m));

  std::vector<ResultRow> out;
  const char* learners_in_order[] = {"majority", "erm-worst", "oig"};
  std::uint64_t salt = 0x5E9A0;
  for (const char* name : learners_in_order) {
    ErrorEstimate est =
        row_learner_estimate(name, row_cls, reg, 0.5, ctx, salt++);
    ResultRow row = base_row(ctx, std::string("separation-") + name,
                             row_cls->name(), "uniform-row", reg.m, reg.mode);
    fill_estimate(row, est);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

core::DiscreteDistribution probe_distribution(const std::string& name,
                                              const core::PointSeq& support,
                                              const core::DomainPoint& off) {
  if (name == "uniform") {
    return core::DiscreteDistribution::uniform_on(support);
  }
  if (name == "half-support") {
    if (support.size() < 2) {
      throw Error("invalid-parameters: half-support needs at least 2 points");
    }
    core::PointSeq half(support.begin(),
                        support.begin() + support.size() / 2);
    return core::DiscreteDistribution::uniform_on(std::move(half));
  }
  if (name == "point-mass") {
    return core::DiscreteDistribution::point_mass(support.front());
  }
  if (name == "off-mix") {
    core::PointSeq pts = support;
    std::vector<double> w(pts.size(),
                          0.6 / static_cast<double>(pts.size()));
    pts.push_back(off);
    w.push_back(0.4);
    return core::DiscreteDistribution(std::move(pts), std::move(w));
  }
  throw ConfigError("unknown distribution " + name +
                    " (uniform, half-support, point-mass, off-mix)");
}

namespace {

core::PointSeq row_support(const construct::RowClass& row) {
  core::PointSeq pts;
  pts.reserve(static_cast<std::size_t>(row.n()));
  for (std::int64_t c = 0; c < row.n(); ++c) {
    pts.push_back(row.point(c));
  }
  return pts;
}

std::vector<ResultRow> run_certificate(const Config& cfg) {
  cfg.check_keys(with_common({"regime", "kind", "n", "big_m", "beta", "xi",
                              "sample_size", "distribution", "universe",
                              "set_size", "count", "max_intersection"}));
  RunContext ctx = make_context(cfg);
  std::string kind = cfg.get_str("kind", "majority");
  std::string dist_name = cfg.get_str("distribution", "uniform");

  certify::Certifier cert;
  core::DiscreteDistribution d;
  std::string cls_name;
  std::string mode = "manual";
  std::uint64_t sample_size = 0;

  if (kind == "majority") {
    RowRegime reg = resolve_row_regime(cfg, 100, 25, 0);
    if (cfg.has("xi")) {
      throw ConfigError("majority certificates derive xi from big_m / n");
    }
    construct::RowClass row(static_cast<std::int64_t>(reg.n),
                            static_cast<std::int64_t>(reg.big_m));
    std::uint64_t gate = certify::certifier_gate(
        static_cast<std::size_t>(reg.n), reg.xi);
    sample_size = cfg.get_u64("sample_size", gate);
    cert = certify::make_majority_certifier(row, reg.xi, gate);
    core::PointSeq support = row_support(row);
    core::DomainPoint off{row.n(), row.n(), 0};
    d = probe_distribution(dist_name, support, off);
    cls_name = row.name();
    mode = reg.mode;
  } else if (kind == "set") {
    auto cls = build_set_class(cfg, ctx.rs);
    double xi = cfg.get_double("xi", 0.125);
    core::PointSeq set0 = cls->system().set_points(0);
    std::uint64_t gate = certify::certifier_gate(set0.size(), xi);
    sample_size = cfg.get_u64("sample_size", gate);
    core::DomainPoint off{0, cls->system().params.universe, 0};
    d = probe_distribution(dist_name, set0, off);
    cert = certify::make_set_certifier(std::move(set0), xi, gate);
    cls_name = cls->name();
  } else {
    throw ConfigError("kind must be majority or set");
  }

  certify::MeanEstimate est = certify::expected_certificate(
      cert, d, static_cast<std::size_t>(sample_size), ctx.trials, ctx.rs,
      0xCE57, ctx.parallel);
  ResultRow out = base_row(ctx, "certificate-" + kind, cls_name, dist_name,
                           sample_size, mode);
  out.estimate = est.mean;
  out.ci_half_width =
      std::max(1.96 * est.std_error, 1.0 / static_cast<double>(est.trials));
  return {out};
}

std::vector<ResultRow> run_tester_rates(const Config& cfg) {
  cfg.check_keys(with_common(
      {"n", "xi", "delta", "sample_size", "distribution", "gated"}));
  RunContext ctx = make_context(cfg);
  auto n = static_cast<std::size_t>(cfg.get_u64("n", 100));
  double xi = cfg.get_double("xi", 0.3);
  double delta = cfg.get_double("delta", 0.2);
  bool gated = cfg.get_bool("gated", true);
  std::string dist_name = cfg.get_str("distribution", "uniform");

  core::PointSeq support;
  support.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    support.push_back({0, static_cast<std::int64_t>(c), 0});
  }
  core::DomainPoint off{0, static_cast<std::int64_t>(n), 0};
  core::DiscreteDistribution d = probe_distribution(dist_name, support, off);

  // The guarantee for the gated tester is stated at xi/2 because membership
  // gating halves the distance budget.
  std::uint64_t auto_size =
      unitest::m_test_sample_bound(n, gated ? xi / 2 : xi, delta);
  auto sample_size =
      static_cast<std::size_t>(cfg.get_u64("sample_size", auto_size));

  unitest::PointSetView y;
  y.size = n;
  y.contains = [n](const core::DomainPoint& p) {
    return p.row == 0 && p.tag == 0 && p.col >= 0 &&
           p.col < static_cast<std::int64_t>(n);
  };
  unitest::TesterParams params{xi, delta};

  std::vector<TrialValue> scenarios;
  scenarios.push_back([=, &d](core::Rng& rng) -> double {
    core::PointSeq s = d.sample_many(sample_size, rng);
    unitest::TesterDecision dec =
        gated ? unitest::m_test_unif(y, params, s)
              : unitest::test_unif(n, params, s);
    return dec.accept ? 1.0 : 0.0;
  });
  ErrorEstimate est =
      estimate_worst_mean(scenarios, ctx.trials, ctx.rs, 0x7E57E4,
                          ctx.parallel);

  ResultRow out = base_row(ctx, gated ? "tester-accept-gated" : "tester-accept",
                           "none", dist_name, sample_size, "manual");
  fill_estimate(out, est);
  return {out};
}

std::vector<ResultRow> run_transductive(const Config& cfg) {
  cfg.check_keys(with_common(
      {"class", "n", "big_m", "m", "duplicates", "dim", "regime", "beta"}));
  RunContext ctx = make_context(cfg);
  std::string cls_kind = cfg.get_str("class", "row");

  double value = 0;
  std::string cls_name;
  std::string dist_label;
  std::uint64_t m_col = 0;
  std::string mode = "manual";

  if (cls_kind == "row") {
    RowRegime reg = resolve_row_regime(cfg, 100, 10, 8);
    std::uint64_t dup = cfg.get_u64("duplicates", 0);
    if (reg.m == 0) {
      throw ConfigError("transductive needs m >= 1");
    }
    construct::RowClass row(static_cast<std::int64_t>(reg.n),
                            static_cast<std::int64_t>(reg.big_m));
    core::PointSeq pts;
    for (std::uint64_t c = 0; c < reg.m; ++c) {
      pts.push_back(row.point(static_cast<std::int64_t>(c)));
    }
    for (std::uint64_t k = 0; k < dup; ++k) {
      pts.push_back(row.point(0));
    }
    for (std::uint8_t b : {std::uint8_t{1}, std::uint8_t{0}}) {
      core::Hypothesis truth = row.as_hypothesis(row.canonical_hypothesis(b));
      value = std::max(value, oig::transductive_error_oig(row, pts, truth));
    }
    cls_name = row.name();
    dist_label = "fixed-points";
    m_col = pts.size();
    mode = reg.mode;
  } else if (cls_kind == "cube") {
    std::uint64_t dim = cfg.get_u64("dim", 3);
    if (dim == 0 || dim > 16) {
      throw Error("invalid-parameters: cube dim must be in 1..16");
    }
    core::PointSeq pts;
    std::vector<core::BehaviorMask> labels;
    for (std::uint64_t j = 0; j < dim; ++j) {
      pts.push_back({0, static_cast<std::int64_t>(j), 0});
    }
    for (core::BehaviorMask mask = 0;
         mask < (core::BehaviorMask{1} << dim); ++mask) {
      labels.push_back(mask);
    }
    core::ExplicitClass cube("cube-" + std::to_string(dim), pts, labels);
    // Every truth is symmetric under the full cube, so one member suffices.
    value = oig::transductive_error_oig(cube, pts, cube.member(0));
    cls_name = cube.name();
    dist_label = "fixed-points";
    m_col = dim;
  } else {
    throw ConfigError("class must be row or cube");
  }

  ResultRow out = base_row(ctx, "transductive-oig", cls_name, dist_label,
                           m_col, mode);
  out.estimate = value;
  out.ci_half_width = 0;
  out.trials = 1;
  return {out};
}

}  // namespace

AuditOutcome run_audit_experiment(const Config& cfg) {
  cfg.check_keys(with_common({"kind", "learner_trials", "n", "big_m", "xi",
                              "sample_sizes", "universe", "set_size", "count",
                              "max_intersection"}));
  RunContext ctx = make_context(cfg);
  // Certificate estimation is cheap next to training at gate-scale samples,
  // so the two trial budgets are separate knobs.
  std::uint64_t learner_trials = cfg.get_u64("learner_trials", 40);
  if (learner_trials == 0) {
    throw ConfigError("learner_trials must be positive");
  }
  std::string kind = cfg.get_str("kind", "majority");

  certify::AuditParams params;
  params.certificate_trials = cfg.get_u64("trials", 40);
  params.parallel = ctx.parallel;

  certify::Certifier cert;
  std::vector<certify::BatteryEntry> battery;
  std::vector<std::uint64_t> sizes;
  certify::LearnerErrorEstimate learner_error;
  std::string cls_name;

  // The callback runs in a fixed (entry, size) order, so a closure counter
  // yields reproducible, pairwise disjoint stream salts.
  auto salt_counter = std::make_shared<std::uint64_t>(0);

  if (kind == "majority") {
    auto n = cfg.get_u64("n", 100);
    auto big_m = cfg.get_u64("big_m", 25);
    if (big_m == 0 || 2 * big_m >= n) {
      throw Error("invalid-parameters: need 1 <= big_m and 2*big_m < n");
    }
    double xi = static_cast<double>(big_m) / static_cast<double>(n);
    auto row = std::make_shared<construct::RowClass>(
        static_cast<std::int64_t>(n), static_cast<std::int64_t>(big_m));
    std::uint64_t gate =
        certify::certifier_gate(static_cast<std::size_t>(n), xi);
    sizes = cfg.get_u64_list("sample_sizes", {gate});
    cert = certify::make_majority_certifier(*row, xi, gate);
    cls_name = row->name();

    core::PointSeq support = row_support(*row);
    core::DomainPoint off{row->n(), row->n(), 0};
    for (const char* name : {"uniform", "half-support", "point-mass",
                             "off-mix"}) {
      battery.push_back({name, probe_distribution(name, support, off)});
    }

    std::vector<core::Hypothesis> truths = {
        row->as_hypothesis(row->canonical_hypothesis(1)),
        row->as_hypothesis(row->canonical_hypothesis(0))};
    learner_error = [truths, learner_trials, ctx, salt_counter](
                        const core::DiscreteDistribution& dist,
                        std::size_t sample_size) {
      ErrorEstimate e = estimate_error_rate(
          learners::make_majority_learner(), truths, dist, sample_size,
          learner_trials, ctx.rs, 0x1EA40 + (*salt_counter)++, ctx.parallel);
      return certify::MeanEstimate{e.estimate, e.std_error, e.trials};
    };
  } else if (kind == "set") {
    auto cls = build_set_class(cfg, ctx.rs);
    if (cls->size() < 2) {
      throw Error("invalid-parameters: set audit needs at least 2 sets");
    }
    double xi = cfg.get_double("xi", 0.125);
    core::PointSeq set0 = cls->system().set_points(0);
    std::uint64_t gate = certify::certifier_gate(set0.size(), xi);
    sizes = cfg.get_u64_list("sample_sizes", {gate});
    cert = certify::make_set_certifier(set0, xi, gate);
    cls_name = cls->name();

    core::DomainPoint off{0, cls->system().params.universe, 0};
    for (const char* name : {"uniform", "point-mass", "off-mix"}) {
      battery.push_back({name, probe_distribution(name, set0, off)});
    }
    if (cls->size() >= 2) {
      battery.push_back(
          {"other-set", cls->system().set_distribution(1)});
    }

    // The certified learner for a designated member: validate it against the
    // majority baseline. Truths stay inside the class.
    std::vector<core::Hypothesis> truths = {cls->member(0), cls->member(1)};
    learners::Learner fn = learners::make_validation_learner(cls->member(0));
    learner_error = [fn, truths, learner_trials, ctx, salt_counter](
                        const core::DiscreteDistribution& dist,
                        std::size_t sample_size) {
      ErrorEstimate e = estimate_error_rate(
          fn, truths, dist, sample_size, learner_trials, ctx.rs,
          0x1EA40 + (*salt_counter)++, ctx.parallel);
      return certify::MeanEstimate{e.estimate, e.std_error, e.trials};
    };
  } else {
    throw ConfigError("kind must be majority or set");
  }

  AuditOutcome outcome;
  outcome.kind = kind;
  outcome.report =
      certify::soundness_audit(cert, battery, sizes, learner_error, params,
                               ctx.rs);

  for (const certify::AuditRow& r : outcome.report.rows) {
    ResultRow c = base_row(ctx, "audit-certificate-" + kind, cls_name,
                           r.distribution, r.sample_size, "manual");
    c.trials = params.certificate_trials;
    c.estimate = r.certificate_mean;
    c.ci_half_width = 1.96 * r.certificate_se;
    outcome.rows.push_back(std::move(c));

    ResultRow l = base_row(ctx, "audit-learner-" + kind, cls_name,
                           r.distribution, r.sample_size, "manual");
    l.trials = learner_trials;
    l.estimate = r.learner_error;
    l.ci_half_width = 1.96 * r.learner_error_se;
    outcome.rows.push_back(std::move(l));

    ResultRow s = base_row(ctx, "audit-sound-" + kind, cls_name,
                           r.distribution, r.sample_size, "manual");
    s.trials = params.certificate_trials;
    s.estimate = r.sound ? 1.0 : 0.0;
    s.ci_half_width = 0;
    outcome.rows.push_back(std::move(s));
  }
  return outcome;
}

std::vector<ResultRow> run_experiment(const Config& cfg) {
  std::string name = cfg.require_str("experiment");
  if (name == "error-rate") return run_error_rate(cfg);
  if (name == "separation") return run_separation(cfg);
  if (name == "certificate") return run_certificate(cfg);
  if (name == "tester-rates") return run_tester_rates(cfg);
  if (name == "audit") return run_audit_experiment(cfg).rows;
  if (name == "transductive") return run_transductive(cfg);
  throw ConfigError(
      "unknown experiment " + name +
      " (error-rate, separation, certificate, tester-rates, audit, "
      "transductive)");
}

}  // namespace paclab::harness
