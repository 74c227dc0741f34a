#pragma once

#include <vector>

namespace sigdet {

// Counts of positively classified events in the On and Off regions. Real
// valued: the relaxed cluster-assignment problem produces fractional counts.
struct CountPair {
  double n_on = 0.0;
  double n_off = 0.0;
};

// On/Off exposure ratio alpha. In the noisy-label reading,
// alpha = p_minus / (1 - p_minus).
struct SignificanceConfig {
  double alpha = 1.0;
};

struct ScoredPrediction {
  double score = 0.0;
  bool on = false;  // region of origin of the scored event
};
using ScoredPredictions = std::vector<ScoredPrediction>;

struct ThresholdResult {
  double theta = 0.0;  // decision threshold, events with score > theta count
  double sigma = 0.0;  // significance achieved at theta
};

struct CountGradient {
  double d_on = 0.0;   // d(sigma^2) / d(n_on)
  double d_off = 0.0;  // d(sigma^2) / d(n_off)
};

// Squared Li&Ma significance: twice the log likelihood ratio of the counts
// against an On/Off rate balanced at alpha. Non-negative; 0*ln(0) := 0.
double li_ma_squared(const CountPair& counts, const SignificanceConfig& cfg);

// Signed Li&Ma significance in sigma units: sqrt of the squared statistic,
// carrying the sign of the On excess n_on - alpha * n_off. Exactly zero for
// empty counts and at exact balance.
double li_ma_significance(const CountPair& counts,
                          const SignificanceConfig& cfg);

// Counts scores strictly greater than theta per region, then evaluates the
// signed statistic.
double significance_at_threshold(const ScoredPredictions& preds, double theta,
                                 const SignificanceConfig& cfg);

// Maximizes the signed statistic over candidate thresholds placed at the
// midpoints between consecutive distinct scores plus one sentinel below the
// minimum and one above the maximum. Ties go to the smallest theta.
ThresholdResult tune_threshold(const ScoredPredictions& preds,
                               const SignificanceConfig& cfg);

// alpha = p_minus / (1 - p_minus), with p_minus in (0, 1).
SignificanceConfig alpha_from_p_minus(double p_minus);

// Analytic gradient of the squared statistic; requires strictly positive
// counts so both logarithms are defined.
CountGradient significance_gradient(const CountPair& counts,
                                    const SignificanceConfig& cfg);

}  // namespace sigdet
