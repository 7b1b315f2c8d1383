#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvml/geometry.hpp"
#include "cvml/heatmap.hpp"
#include "cvml/model.hpp"
#include "cvml/synthdata.hpp"

namespace cvml::eval {

double error_meters(Vec2 pred_px, Vec2 gt_px, double meters_per_px);

struct ErrorStats {
  double mean = 0.0;
  double median = 0.0;
};

/// Throws Error(kInput) when empty.
ErrorStats error_stats(std::span<const double> errors);

/// Linear-interpolated quantile of sorted values (q in [0, 1]).
double quantile_sorted(std::span<const double> sorted, double q);

/// Probability of the cell containing `gt_px`.
double prob_at_gt(const HeatMap& heat, Vec2 gt_px);

struct SampleRecord {
  int id = 0;
  double error_m = 0.0;
  double prob_at_gt = 0.0;
  double max_prob = 0.0;
};

struct RejectionPoint {
  double keep_fraction = 1.0;
  std::size_t kept = 0;
  double mean = 0.0, median = 0.0, q25 = 0.0, q75 = 0.0;
};

/// Number of records kept at a fraction: round(f * n), at least one.
std::size_t kept_count(double fraction, std::size_t n);

/// Ranks records by max_prob (descending, ties by ascending id) and reports
/// error statistics of the most confident prefix at each keep-fraction.
std::vector<RejectionPoint> rejection_curve(std::span<const SampleRecord> records,
                                            std::span<const double> fractions);

std::vector<double> default_rejection_fractions();

struct EvalReport {
  std::string method;
  std::string subset;
  ErrorStats error;
  double prob_at_gt_mean = 0.0;
  double prob_at_gt_median = 0.0;
  std::vector<RejectionPoint> rejection;
  std::vector<SampleRecord> records;
  std::optional<double> sd_px;  // Gaussian width used for regression output
};

EvalReport make_report(std::string method, std::string subset, std::vector<SampleRecord> records,
                       std::span<const double> fractions);

/// Writes <stem>.txt (table), <stem>.csv (records) and
/// <stem>_rejection.dat (keep-fraction, median) into `dir`.
void write_report(const EvalReport& report, const std::filesystem::path& dir, const std::string& stem);
std::string format_report(const EvalReport& report);

/// Dense-model record for one sample.
SampleRecord evaluate_sample(const model::Localizer& net, const synth::Sample& sample);

/// Predicts the patch center for every sample. Probability fields carry the
/// uniform 1/L^2 value.
EvalReport center_only(std::span<const synth::Sample> samples, std::span<const double> fractions);

/// Pre-softmax logit map for a (ground, satellite) pair.
using LogitFn = std::function<ad::Tensor(const ad::Tensor& ground, const ad::Tensor& satellite)>;

LogitFn logits_of(const model::Localizer& net);

/// Columns shifted for a heading perturbation of `degrees`.
int shift_for_degrees(double degrees, int ground_w);

/// Error (meters) of the prediction after perturbing the panorama heading by
/// each shift. Throws Error(kUnsupported) for front views.
std::vector<double> orientation_perturb(const model::Localizer& net, const synth::Sample& sample,
                                        std::span<const double> shifts_deg, synth::ViewMode view);

struct OrientationResult {
  int predicted = 0;
  std::vector<real> max_logit;   // per rotation hypothesis
  std::vector<double> joint_marginal;  // orientation marginal of the joint softmax
};

/// Tries n_rot heading hypotheses k * 360/n_rot. Panorama: the ground view is
/// shifted by k steps; front view: the satellite patch is rotated clockwise by
/// k steps. Picks the hypothesis whose logit map has the highest activation.
OrientationResult orientation_classify(const LogitFn& logits, const ad::Tensor& ground,
                                       const ad::Tensor& satellite, int n_rot, synth::ViewMode view);

/// Ground view / satellite patch misaligned by `rotation` classes, such that
/// a perfect classifier answers `rotation`.
std::pair<ad::Tensor, ad::Tensor> misalign(const ad::Tensor& ground, const ad::Tensor& satellite,
                                           int rotation, int n_rot, synth::ViewMode view);

}  // namespace cvml::eval
