#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cvml/config.hpp"
#include "cvml/cvr.hpp"
#include "cvml/eval.hpp"
#include "cvml/model.hpp"
#include "cvml/params.hpp"
#include "cvml/synthdata.hpp"

// End-to-end stages behind the CLI subcommands. Everything is a function of
// the RunConfig (and its seed); artifacts live under config.run_dir().
namespace cvml::pipeline {

struct Datasets {
  std::vector<synth::Sample> train, val, test;
};

/// Same-area: one world, disjoint pose streams per split. Cross-area: one
/// world seed per split.
Datasets generate_datasets(const RunConfig& config);
void write_datasets(const Datasets& data, const std::filesystem::path& dir);
/// Throws Error(kData) when any split is missing.
Datasets read_datasets(const std::filesystem::path& dir);

std::vector<synth::Sample> positives(const std::vector<synth::Sample>& samples);

struct EpochLog {
  int epoch = 0;
  double train_loss = 0.0;
  double val_median_m = 0.0;
  double val_mean_m = 0.0;
};

struct TrainResult {
  std::vector<NamedTensor> best;  // parameters at the best validation median
  int best_epoch = 0;
  double best_val_median_m = 0.0;
  std::vector<EpochLog> epochs;
};

/// One plain-text line per epoch goes to `log` when given. Leaves the best
/// parameters loaded in `net`.
TrainResult train_dense(const RunConfig& config, model::Localizer& net,
                        const std::vector<synth::Sample>& train, const std::vector<synth::Sample>& val,
                        std::ostream* log = nullptr);
TrainResult train_cvr(const RunConfig& config, cvr::CvrModel& net, const std::vector<synth::Sample>& train,
                      const std::vector<synth::Sample>& val, std::ostream* log = nullptr);

/// Mean total loss of one optimizer step per call on a fixed batch; used to
/// check that optimization makes progress.
std::vector<double> fixed_batch_losses(const RunConfig& config, model::Localizer& net,
                                       const std::vector<synth::Sample>& batch, int steps);

eval::EvalReport evaluate_dense(const model::Localizer& net, const std::vector<synth::Sample>& samples,
                                const std::string& subset, std::span<const double> fractions);
eval::EvalReport evaluate_cvr(const cvr::CvrModel& net, double sd_px,
                              const std::vector<synth::Sample>& samples, const std::string& subset,
                              std::span<const double> fractions);
/// Root-mean-square pixel error of the regression baseline on `samples`.
double cvr_validation_sd(const cvr::CvrModel& net, const std::vector<synth::Sample>& samples);

struct OrientationSummary {
  int samples = 0;
  double accuracy = 0.0;
  std::vector<int> offset_histogram;  // (predicted - true) mod n_rot
  std::vector<double> perturb_deg;
  std::vector<double> perturb_median_m;  // empty for front views
};

OrientationSummary orientation_experiments(const RunConfig& config, const model::Localizer& net,
                                           const std::vector<synth::Sample>& test);

// --- run-directory stages -------------------------------------------------------

void run_gen(const RunConfig& config, std::ostream& out);
void run_train(const RunConfig& config, std::ostream& out);
void run_eval(const RunConfig& config, std::ostream& out);
void run_orient(const RunConfig& config, std::ostream& out);

struct InferResult {
  Vec2 prediction;
  double probability = 0.0;
  std::filesystem::path raw_path, pgm_path;
};

/// Writes the heat map as a raw CVML tensor and an 8-bit PGM of min-max
/// scaled log-probabilities.
InferResult export_heatmap(const HeatMap& heat, const std::filesystem::path& dir, const std::string& stem);
InferResult run_infer(const RunConfig& config, const std::string& split, int sample_id,
                      const std::filesystem::path& out_dir, std::ostream& out);

/// Loads parameters written by run_train; checks that the recorded model
/// config matches `config`.
void load_checkpoint(const RunConfig& config, const std::string& name, ParamSet& params);

}  // namespace cvml::pipeline
