#include "paclab/learners/learners.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "paclab/core/error.hpp"
#include "paclab/construct/row_class.hpp"

namespace paclab::learners {

core::Predictor majority_train(const core::LabeledSeq& sample) {
  std::size_t ones = 0;
  for (const auto& ex : sample) ones += ex.y;
  // Ties (including the empty sample) resolve to 1.
  uint8_t label = (2 * ones >= sample.size()) ? 1 : 0;
  return core::Predictor{[label](const core::DomainPoint&) { return label; }};
}

Learner make_majority_learner() {
  return [](const core::LabeledSeq& sample, core::Rng&) {
    return majority_train(sample);
  };
}

core::Predictor erm_lex_train(const core::HypothesisClass& cls,
                              const core::LabeledSeq& sample) {
  if (!cls.enumerable()) {
    throw Error("invalid-parameters: erm-lex needs an enumerable class");
  }
  std::size_t n = cls.size();
  if (n == 0) throw Error("invalid-parameters: empty hypothesis class");
  std::size_t best = 0;
  std::size_t best_mistakes = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < n; ++i) {
    core::Hypothesis h = cls.member(i);
    std::size_t mistakes = 0;
    for (const auto& ex : sample) mistakes += (h.fn(ex.x) != ex.y);
    if (mistakes < best_mistakes) {
      best_mistakes = mistakes;
      best = i;
      if (mistakes == 0) break;
    }
  }
  return cls.member(best);
}

Learner make_erm_lex_learner(
    std::shared_ptr<const core::HypothesisClass> cls) {
  return [cls](const core::LabeledSeq& sample, core::Rng&) {
    return erm_lex_train(*cls, sample);
  };
}

double adversarial_erm_loss(const core::HypothesisClass& cls,
                            const core::LabeledSeq& sample,
                            const core::Hypothesis& truth,
                            const core::DiscreteDistribution& d) {
  if (const auto* row = dynamic_cast<const construct::RowClass*>(&cls)) {
    // Closed form; valid only against the uniform row distribution, so check
    // that first, then read the truth's minority set back off the row.
    if (d.size() != static_cast<std::size_t>(row->n())) {
      throw Error("invalid-parameters: distribution is not the row");
    }
    for (const auto& p : d.support()) {
      if (!row->on_row(p)) {
        throw Error("invalid-parameters: distribution is not the row");
      }
    }
    std::vector<std::int64_t> ones, zeros;
    for (std::int64_t col = 0; col < row->n(); ++col) {
      auto p = row->point(col);
      (truth.fn(p) ? ones : zeros).push_back(col);
    }
    construct::RowHypothesis truth_row;
    if (ones.size() == static_cast<std::size_t>(row->big_m())) {
      truth_row.minority_label = 1;
      truth_row.minority_cols = std::move(ones);
    } else if (zeros.size() == static_cast<std::size_t>(row->big_m())) {
      truth_row.minority_label = 0;
      truth_row.minority_cols = std::move(zeros);
    } else {
      throw Error("invalid-parameters: truth is not a row hypothesis");
    }
    return row->worst_consistent_loss(sample, truth_row);
  }
  if (!cls.enumerable()) {
    throw Error(
        "invalid-parameters: adversarial erm needs an enumerable class");
  }
  std::size_t n = cls.size();
  if (n == 0) throw Error("invalid-parameters: empty hypothesis class");
  std::size_t best_mistakes = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < n; ++i) {
    core::Hypothesis h = cls.member(i);
    std::size_t mistakes = 0;
    for (const auto& ex : sample) mistakes += (h.fn(ex.x) != ex.y);
    best_mistakes = std::min(best_mistakes, mistakes);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    core::Hypothesis h = cls.member(i);
    std::size_t mistakes = 0;
    for (const auto& ex : sample) mistakes += (h.fn(ex.x) != ex.y);
    if (mistakes != best_mistakes) continue;
    worst = std::max(worst, core::loss_distribution(h, d, truth));
  }
  return worst;
}

core::Predictor validation_train(const core::Hypothesis& candidate,
                                 const core::LabeledSeq& sample,
                                 core::Rng& rng) {
  std::size_t n = sample.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Fisher-Yates; the first half (rounded up) trains, the rest validates.
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(order[i - 1], order[j]);
  }
  std::size_t t1 = (n + 1) / 2;
  core::LabeledSeq train, val;
  train.reserve(t1);
  val.reserve(n - t1);
  for (std::size_t i = 0; i < n; ++i) {
    (i < t1 ? train : val).push_back(sample[order[i]]);
  }
  core::Predictor baseline = majority_train(train);
  double cand_loss = core::loss_sample(candidate, val);
  double base_loss = core::loss_sample(baseline, val);
  return (cand_loss <= base_loss) ? candidate : baseline;
}

Learner make_validation_learner(core::Hypothesis candidate) {
  return [candidate = std::move(candidate)](const core::LabeledSeq& sample,
                                            core::Rng& rng) {
    return validation_train(candidate, sample, rng);
  };
}

core::Predictor coin_predictor(core::Rng rng) {
  auto state = std::make_shared<core::Rng>(rng);
  return core::Predictor{[state](const core::DomainPoint&) {
    return static_cast<uint8_t>(state->next_u64() & 1);
  }};
}

core::Predictor mixture_train(const Learner& base, double c,
                              const core::LabeledSeq& sample,
                              core::Rng& rng) {
  if (c <= 0.0 || c >= 1.0) {
    throw Error("invalid-parameters: mixture weight base must be in (0,1)");
  }
  // 2 c^|sample|, computed in log space to dodge underflow for huge samples.
  double log_p = std::log(2.0) + static_cast<double>(sample.size()) * std::log(c);
  double p = (log_p >= 0.0) ? 1.0 : std::exp(log_p);
  if (rng.bernoulli(p)) return coin_predictor(rng.substream(0x636f696e));
  return base(sample, rng);
}

Learner make_mixture_learner(Learner base, double c) {
  return [base = std::move(base), c](const core::LabeledSeq& sample,
                                     core::Rng& rng) {
    return mixture_train(base, c, sample, rng);
  };
}

}  // namespace paclab::learners
