#include "core/lima.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sigdet {

namespace {

void check_counts(const CountPair& counts, const SignificanceConfig& cfg) {
  if (!(counts.n_on >= 0.0) || !(counts.n_off >= 0.0)) {
    throw std::domain_error("significance: counts must be non-negative");
  }
  if (!(cfg.alpha > 0.0) || !std::isfinite(cfg.alpha)) {
    throw std::domain_error("significance: alpha must be positive");
  }
}

}  // namespace

double li_ma_squared(const CountPair& counts, const SignificanceConfig& cfg) {
  check_counts(counts, cfg);
  const double n_on = counts.n_on;
  const double n_off = counts.n_off;
  const double total = n_on + n_off;
  if (total == 0.0) return 0.0;

  const double a = cfg.alpha;
  double b = 0.0;
  if (n_on > 0.0) {
    b += 2.0 * n_on * std::log((1.0 + a) / a * (n_on / total));
  }
  if (n_off > 0.0) {
    b += 2.0 * n_off * std::log((1.0 + a) * (n_off / total));
  }
  // The statistic is twice a log likelihood ratio, hence >= 0; rounding can
  // leave a tiny negative residue near the balance point.
  return std::max(b, 0.0);
}

double li_ma_significance(const CountPair& counts,
                          const SignificanceConfig& cfg) {
  const double b = li_ma_squared(counts, cfg);
  const double excess = counts.n_on - cfg.alpha * counts.n_off;
  if (excess == 0.0) return 0.0;
  return std::copysign(std::sqrt(b), excess);
}

double significance_at_threshold(const ScoredPredictions& preds, double theta,
                                 const SignificanceConfig& cfg) {
  if (preds.empty()) {
    throw std::invalid_argument("significance_at_threshold: no predictions");
  }
  CountPair counts;
  for (const auto& p : preds) {
    if (p.score > theta) {
      (p.on ? counts.n_on : counts.n_off) += 1.0;
    }
  }
  return li_ma_significance(counts, cfg);
}

ThresholdResult tune_threshold(const ScoredPredictions& preds,
                               const SignificanceConfig& cfg) {
  if (preds.empty()) {
    throw std::invalid_argument("tune_threshold: no predictions");
  }
  for (const auto& p : preds) {
    if (!std::isfinite(p.score)) {
      throw std::invalid_argument("tune_threshold: non-finite score");
    }
  }

  std::vector<ScoredPrediction> sorted(preds);
  std::sort(sorted.begin(), sorted.end(),
            [](const ScoredPrediction& a, const ScoredPrediction& b) {
              return a.score < b.score;
            });

  // Per distinct score value: how many On/Off events carry it.
  struct ValueCounts {
    double value;
    double on;
    double off;
  };
  std::vector<ValueCounts> values;
  CountPair counts;  // counts above the current candidate; starts with all
  for (const auto& p : sorted) {
    if (values.empty() || values.back().value != p.score) {
      values.push_back({p.score, 0.0, 0.0});
    }
    (p.on ? values.back().on : values.back().off) += 1.0;
    (p.on ? counts.n_on : counts.n_off) += 1.0;
  }

  ThresholdResult best;
  best.theta = values.front().value - 1.0;  // selects everything
  best.sigma = li_ma_significance(counts, cfg);

  // Sweep candidates in ascending order, dropping one value group at a time.
  // Strict improvement keeps the smallest theta on ties.
  for (std::size_t i = 0; i < values.size(); ++i) {
    counts.n_on -= values[i].on;
    counts.n_off -= values[i].off;
    double theta;
    if (i + 1 < values.size()) {
      theta = values[i].value + (values[i + 1].value - values[i].value) / 2.0;
      if (theta >= values[i + 1].value) theta = values[i].value;
    } else {
      theta = values[i].value + 1.0;  // selects nothing
    }
    const double sigma = li_ma_significance(counts, cfg);
    if (sigma > best.sigma) {
      best.theta = theta;
      best.sigma = sigma;
    }
  }
  return best;
}

SignificanceConfig alpha_from_p_minus(double p_minus) {
  if (!(p_minus > 0.0) || !(p_minus < 1.0)) {
    throw std::domain_error("alpha_from_p_minus: p_minus must be in (0, 1)");
  }
  return SignificanceConfig{p_minus / (1.0 - p_minus)};
}

CountGradient significance_gradient(const CountPair& counts,
                                    const SignificanceConfig& cfg) {
  check_counts(counts, cfg);
  if (!(counts.n_on > 0.0) || !(counts.n_off > 0.0)) {
    throw std::domain_error("significance_gradient: counts must be positive");
  }
  const double a = cfg.alpha;
  const double total = counts.n_on + counts.n_off;
  return CountGradient{
      2.0 * std::log((1.0 + a) / a * (counts.n_on / total)),
      2.0 * std::log((1.0 + a) * (counts.n_off / total)),
  };
}

}  // namespace sigdet
