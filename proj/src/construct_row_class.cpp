#include "paclab/construct/row_class.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "paclab/core/error.hpp"

namespace paclab::construct {

using core::BehaviorMask;
using core::DomainPoint;
using core::LabeledSeq;
using core::PointSeq;

RowClass::RowClass(std::int64_t n, std::int64_t big_m) : n_(n), big_m_(big_m) {
  if (big_m < 1 || 2 * big_m >= n)
    throw Error("invalid-parameters: row class needs 1 <= M and 2M < n");
}

std::string RowClass::name() const {
  return "row-" + std::to_string(n_) + "-M" + std::to_string(big_m_);
}

bool RowClass::on_row(const DomainPoint& p) const {
  return p.row == n_ && p.col >= 0 && p.col < n_ && p.tag == 0;
}

core::DiscreteDistribution RowClass::distribution() const {
  PointSeq pts;
  pts.reserve(static_cast<std::size_t>(n_));
  for (std::int64_t c = 0; c < n_; ++c) pts.push_back(point(c));
  return core::DiscreteDistribution::uniform_on(std::move(pts));
}

core::Hypothesis RowClass::as_hypothesis(const RowHypothesis& h) const {
  if (static_cast<std::int64_t>(h.minority_cols.size()) != big_m_)
    throw Error("invalid-parameters: minority set must have M columns");
  const std::int64_t n = n_;
  const auto cols = h.minority_cols;
  const std::uint8_t b = h.minority_label;
  return core::Hypothesis{[n, cols, b](const DomainPoint& p) -> std::uint8_t {
    if (p.row != n || p.col < 0 || p.col >= n || p.tag != 0) return 0;
    const bool in_minority = std::binary_search(cols.begin(), cols.end(), p.col);
    return in_minority ? b : static_cast<std::uint8_t>(1 - b);
  }};
}

RowHypothesis RowClass::canonical_hypothesis(std::uint8_t minority_label) const {
  RowHypothesis h;
  h.minority_label = minority_label;
  for (std::int64_t c = 0; c < big_m_; ++c) h.minority_cols.push_back(c);
  return h;
}

// Distinct sample points bucketed by label, off-row points validated.
struct RowClass::SampleSplit {
  std::vector<std::int64_t> ones;   // distinct in-row columns labeled 1
  std::vector<std::int64_t> zeros;  // distinct in-row columns labeled 0
};

RowClass::SampleSplit RowClass::split_sample(const LabeledSeq& sample) const {
  std::set<std::int64_t> ones, zeros;
  for (const auto& ex : sample) {
    if (!on_row(ex.x)) {
      if (ex.y != 0)
        throw Error("inconsistent-sample: off-row point labeled 1");
      continue;
    }
    (ex.y ? ones : zeros).insert(ex.x.col);
  }
  for (std::int64_t c : ones)
    if (zeros.count(c))
      throw Error("inconsistent-sample: conflicting labels on column " +
                  std::to_string(c));
  SampleSplit s;
  s.ones.assign(ones.begin(), ones.end());
  s.zeros.assign(zeros.begin(), zeros.end());
  return s;
}

bool RowClass::consistent(const LabeledSeq& sample) const {
  std::set<std::int64_t> ones, zeros;
  for (const auto& ex : sample) {
    if (!on_row(ex.x)) {
      if (ex.y != 0) return false;
      continue;
    }
    (ex.y ? ones : zeros).insert(ex.x.col);
  }
  for (std::int64_t c : ones)
    if (zeros.count(c)) return false;
  const std::int64_t s1 = static_cast<std::int64_t>(ones.size());
  const std::int64_t s0 = static_cast<std::int64_t>(zeros.size());
  // Extend with minority label 1 (s1 columns go into the minority set) or
  // minority label 0; either direction suffices.
  const bool minority_one = s1 <= big_m_ && s0 <= n_ - big_m_;
  const bool minority_zero = s0 <= big_m_ && s1 <= n_ - big_m_;
  return minority_one || minority_zero;
}

std::vector<BehaviorMask> RowClass::behaviors(const PointSeq& points,
                                              std::size_t cap) const {
  if (points.size() > 63)
    throw Error("projection-cap-exceeded: more than 63 points");
  std::vector<std::size_t> in_row;
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (on_row(points[j])) in_row.push_back(j);
  }
  const std::int64_t q = static_cast<std::int64_t>(in_row.size());
  // A subset A of the in-row points can be the 1-labeled part iff it extends
  // to a full hypothesis: via minority label 1 when |A| <= M and the 0s fit
  // in the majority part, or via minority label 0 symmetrically.
  auto realizable = [&](std::int64_t k) {
    const bool min1 = k <= big_m_ && q - k <= n_ - big_m_;
    const bool min0 = q - k <= big_m_ && k <= n_ - big_m_;
    return min1 || min0;
  };
  std::uint64_t count = 0;
  {
    // C(q, k) summed over realizable k, with overflow-safe cap check.
    std::vector<long double> binom(static_cast<std::size_t>(q) + 1, 1.0L);
    for (std::int64_t k = 1; k <= q; ++k)
      binom[static_cast<std::size_t>(k)] =
          binom[static_cast<std::size_t>(k - 1)] *
          static_cast<long double>(q - k + 1) / static_cast<long double>(k);
    long double total = 0;
    for (std::int64_t k = 0; k <= q; ++k)
      if (realizable(k)) total += binom[static_cast<std::size_t>(k)];
    if (total > static_cast<long double>(cap))
      throw Error("projection-cap-exceeded: more than " + std::to_string(cap) +
                  " behaviors");
    count = static_cast<std::uint64_t>(total + 0.5L);
  }
  (void)count;
  std::vector<BehaviorMask> out;
  // Enumerate subsets of the in-row positions grouped by popcount.
  const std::uint64_t subsets = std::uint64_t{1} << q;
  for (std::uint64_t a = 0; a < subsets; ++a) {
    const std::int64_t k = std::popcount(a);
    if (!realizable(k)) continue;
    BehaviorMask mask = 0;
    for (std::int64_t j = 0; j < q; ++j)
      if ((a >> j) & 1) mask |= BehaviorMask{1} << in_row[static_cast<std::size_t>(j)];
    out.push_back(mask);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool RowClass::shatters(const PointSeq& points) const {
  PointSeq sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (const auto& p : sorted)
    if (!on_row(p)) return false;
  const std::int64_t q = static_cast<std::int64_t>(sorted.size());
  // Every labeling with k ones must extend to a member, mirroring the
  // projection predicate; equivalently q <= min(n - M, 2M + 1).
  for (std::int64_t k = 0; k <= q; ++k) {
    const bool min1 = k <= big_m_ && q - k <= n_ - big_m_;
    const bool min0 = q - k <= big_m_ && k <= n_ - big_m_;
    if (!min1 && !min0) return false;
  }
  return true;
}

namespace {

// Worst-case overlap machinery: the loss of a candidate (bhat, Bhat) against
// truth (b, B) under the uniform row distribution depends only on |B n Bhat|.
struct FamilyFit {
  bool feasible = false;
  std::int64_t forced_in_b = 0;   // |F n B|
  std::int64_t excluded_in_b = 0; // |E n B|
  std::int64_t forced = 0;        // |F|
  std::int64_t excluded = 0;      // |E|
};

}  // namespace

double RowClass::worst_consistent_loss(const LabeledSeq& sample,
                                       const RowHypothesis& truth) const {
  const SampleSplit s = split_sample(sample);
  const auto& B = truth.minority_cols;
  auto in_b = [&](std::int64_t c) {
    return std::binary_search(B.begin(), B.end(), c);
  };
  const std::int64_t n = n_, M = big_m_;

  // For a candidate family with minority label bhat: forced columns F carry
  // label bhat (must be inside Bhat), excluded columns E carry 1-bhat.
  auto fit = [&](std::uint8_t bhat) {
    const auto& F = bhat ? s.ones : s.zeros;
    const auto& E = bhat ? s.zeros : s.ones;
    FamilyFit f;
    f.forced = static_cast<std::int64_t>(F.size());
    f.excluded = static_cast<std::int64_t>(E.size());
    f.feasible = f.forced <= M && f.excluded <= n - M;
    for (std::int64_t c : F) f.forced_in_b += in_b(c) ? 1 : 0;
    for (std::int64_t c : E) f.excluded_in_b += in_b(c) ? 1 : 0;
    return f;
  };

  double best = -1;
  // Same minority label as the truth: disagreement is 2(M - |B n Bhat|);
  // minimize the overlap subject to F inside Bhat, E outside.
  {
    const FamilyFit f = fit(truth.minority_label);
    if (f.feasible) {
      const std::int64_t fill = M - f.forced;
      const std::int64_t off_b_room = n - M - (f.forced - f.forced_in_b) -
                                      (f.excluded - f.excluded_in_b);
      const std::int64_t overlap =
          f.forced_in_b + std::max<std::int64_t>(0, fill - off_b_room);
      best = std::max(best, 2.0 * static_cast<double>(M - overlap) /
                                static_cast<double>(n));
    }
  }
  // Flipped minority label: disagreement is n - 2M + 2|B n Bhat|; maximize
  // the overlap.
  {
    const FamilyFit f = fit(1 - truth.minority_label);
    if (f.feasible) {
      const std::int64_t fill = M - f.forced;
      const std::int64_t in_b_room = M - f.forced_in_b - f.excluded_in_b;
      const std::int64_t overlap = f.forced_in_b + std::min(fill, in_b_room);
      best = std::max(best, static_cast<double>(n - 2 * M + 2 * overlap) /
                                static_cast<double>(n));
    }
  }
  if (best < 0) throw Error("inconsistent-sample: no consistent row hypothesis");
  return best;
}

RowHypothesis RowClass::canonical_worst(const LabeledSeq& sample,
                                        const RowHypothesis& truth) const {
  const double target = worst_consistent_loss(sample, truth);
  const SampleSplit s = split_sample(sample);
  const auto& B = truth.minority_cols;
  auto in_b = [&](std::int64_t c) {
    return std::binary_search(B.begin(), B.end(), c);
  };
  // Rebuild both candidates explicitly and return the one hitting the target;
  // fills prefer smallest columns for determinism.
  auto build = [&](std::uint8_t bhat, bool prefer_b) -> RowHypothesis {
    const auto& F = bhat ? s.ones : s.zeros;
    const auto& E = bhat ? s.zeros : s.ones;
    std::set<std::int64_t> chosen(F.begin(), F.end());
    std::set<std::int64_t> banned(E.begin(), E.end());
    auto try_fill = [&](bool want_in_b) {
      for (std::int64_t c = 0;
           c < n_ && static_cast<std::int64_t>(chosen.size()) < big_m_; ++c) {
        if (banned.count(c) || chosen.count(c)) continue;
        if (in_b(c) == want_in_b) chosen.insert(c);
      }
    };
    try_fill(prefer_b);
    try_fill(!prefer_b);
    RowHypothesis h;
    h.minority_label = bhat;
    h.minority_cols.assign(chosen.begin(), chosen.end());
    return h;
  };
  const core::Hypothesis truth_fn = as_hypothesis(truth);
  const core::DiscreteDistribution d = distribution();
  for (const auto& [bhat, prefer] :
       {std::pair<std::uint8_t, bool>{static_cast<std::uint8_t>(
                                          1 - truth.minority_label),
                                      true},
        std::pair<std::uint8_t, bool>{truth.minority_label, false}}) {
    const auto& F = bhat ? s.ones : s.zeros;
    const auto& E = bhat ? s.zeros : s.ones;
    if (static_cast<std::int64_t>(F.size()) > big_m_ ||
        static_cast<std::int64_t>(E.size()) > n_ - big_m_)
      continue;
    RowHypothesis h = build(bhat, prefer);
    if (std::abs(core::loss_distribution(as_hypothesis(h), d, truth_fn) -
                 target) < 1e-9)
      return h;
  }
  throw Error("solver-failure: canonical worst hypothesis not reconstructed");
}

core::ExplicitClass enumerate_row_class(const RowClass& cls, std::size_t cap) {
  const std::int64_t n = cls.n(), M = cls.big_m();
  // 2 * C(n, M) members.
  long double count = 2.0L;
  for (std::int64_t i = 0; i < M; ++i)
    count *= static_cast<long double>(n - i) / static_cast<long double>(i + 1);
  if (n > 62 || count > static_cast<long double>(cap))
    throw Error("enumeration-cap-exceeded: row class too large");
  PointSeq domain;
  for (std::int64_t c = 0; c < n; ++c) domain.push_back(cls.point(c));
  std::vector<BehaviorMask> rows;
  // Subsets of size M as the minority set, both minority labels.
  std::vector<std::int64_t> idx(static_cast<std::size_t>(M));
  for (std::int64_t i = 0; i < M; ++i) idx[static_cast<std::size_t>(i)] = i;
  const BehaviorMask full = (n == 63) ? ~BehaviorMask{0}
                                      : ((BehaviorMask{1} << n) - 1);
  while (true) {
    BehaviorMask minority = 0;
    for (std::int64_t c : idx) minority |= BehaviorMask{1} << c;
    rows.push_back(minority);          // minority label 1: ones on the set
    rows.push_back(full & ~minority);  // minority label 0: zeros on the set
    // next combination
    std::int64_t i = M - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - M + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (std::int64_t j = i + 1; j < M; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return core::ExplicitClass(cls.name() + "-explicit", std::move(domain),
                             std::move(rows));
}

}  // namespace paclab::construct
