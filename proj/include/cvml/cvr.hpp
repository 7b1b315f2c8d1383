#pragma once

#include <array>
#include <span>

#include "cvml/encoder.hpp"
#include "cvml/heatmap.hpp"
#include "cvml/model.hpp"

namespace cvml::cvr {

/// Regressed offset from the patch center X_S = (0.5, 0.5), in units of the
/// patch side; bounded to [-0.5, 0.5]^2 by a 0.5*tanh squashing.
struct CvrOutput {
  ad::Tensor delta;  // [2]: (dx, dy)

  Vec2 offset() const { return {delta[0], delta[1]}; }
  Vec2 normalized() const { return {0.5 + delta[0], 0.5 + delta[1]}; }
  Vec2 pixel(int side) const { return side * normalized(); }
};

/// Global-descriptor regression baseline: one SAFA descriptor per branch,
/// rescaled to norm sqrt(d), concatenated and passed through a
/// two-hidden-layer relu MLP.
class CvrModel {
 public:
  explicit CvrModel(const model::ModelConfig& config, std::array<int, 2> hidden = {512, 128});

  const model::ModelConfig& config() const { return config_; }
  ParamSet& params() { return params_; }
  const ParamSet& params() const { return params_; }

  ad::Tensor ground_descriptor(const ad::Tensor& ground) const;
  ad::Tensor satellite_descriptor(const ad::Tensor& satellite) const;
  CvrOutput regress(const ad::Tensor& ground_desc, const ad::Tensor& satellite_desc) const;
  CvrOutput forward(const ad::Tensor& ground, const ad::Tensor& satellite) const;

 private:
  model::ModelConfig config_;
  ParamSet params_;
  model::ConvEncoder ground_encoder_, satellite_encoder_;
  model::SafaHeads ground_safa_, satellite_safa_;
  std::array<ad::Tensor, 3> mlp_w_, mlp_b_;
};

/// |X_S + dX - gt|^2 with gt in normalized patch coordinates.
ad::Tensor cvr_loss(const CvrOutput& pred, Vec2 gt_normalized);

/// sqrt(sum e^2 / n); throws Error(kInput) on an empty list.
double estimate_sd(std::span<const double> errors);

/// Isotropic Gaussian centered on `mean_px`, evaluated at cell centers and
/// renormalized over the L x L grid.
HeatMap gaussian_heatmap(Vec2 mean_px, double sd_px, int side);

}  // namespace cvml::cvr
