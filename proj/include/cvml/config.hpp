#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cvml/adam.hpp"
#include "cvml/losses.hpp"
#include "cvml/model.hpp"
#include "cvml/synthdata.hpp"

namespace cvml {

enum class SplitMode { kSameArea, kCrossArea };

struct DataConfig {
  std::string dir;  // empty: <run dir>/data
  int world_size = 1024;
  double meters_per_px = 0.114;
  SplitMode split = SplitMode::kSameArea;
  int train_size = 2000;
  int val_size = 200;
  int test_size = 500;
  double train_semi_fraction = 0.3;
  double test_semi_fraction = 0.2;
  double max_range_px = 24.0;
  synth::ViewMode view = synth::ViewMode::kPanorama;
  double front_fov_deg = 90.0;
};

struct TrainConfig {
  int epochs = 20;
  int cvr_epochs = 20;
  int batch_size = 8;
  std::string models = "all";  // dense | cvr | all
};

struct CvrSettings {
  int hidden1 = 512;
  int hidden2 = 128;
  double sd_px = 0.0;  // > 0 overrides the validation estimate
};

struct EvalConfig {
  std::vector<double> rejection_fractions{1.0, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.1};
  int orient_rotations = 16;
  int orient_samples = 200;
  std::vector<double> perturb_deg{-20, -15, -10, -5, 0, 5, 10, 15, 20};
};

/// Every tunable of a run. Text form: one `key = value` per line, `#`
/// starts a comment, keys are dotted (model.N, loss.beta). Unknown keys and
/// malformed values raise Error(kConfig).
struct RunConfig {
  std::string root = "runs";
  std::uint64_t seed = 2022;
  model::ModelConfig model;
  loss::LossConfig loss;
  AdamConfig optim;
  DataConfig data;
  TrainConfig train;
  CvrSettings cvr;
  EvalConfig eval;

  /// Applies one key/value pair.
  void set(const std::string& key, const std::string& value);
  std::string get(const std::string& key) const;
  static const std::vector<std::string>& keys();

  /// Canonical text form of all keys, in registry order.
  std::string serialize() const;
  /// Checks cross-field invariants.
  void validate() const;

  /// 16 hex digits of FNV-1a over serialize() minus run.root.
  std::string hash() const;
  std::filesystem::path run_dir() const;
  std::filesystem::path data_dir() const;

  synth::SampleConfig sample_config() const;
  /// Model config with init seed derived from the run seed.
  model::ModelConfig model_config() const;
};

RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// Plain key = value lines of the model part only (run directory record).
std::string serialize_model_config(const model::ModelConfig& config);

}  // namespace cvml
