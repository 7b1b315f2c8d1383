#pragma once

#include <utility>

#include "cvml/geometry.hpp"
#include "cvml/tensor.hpp"

namespace cvml::loss {

struct LossConfig {
  double beta = 1e4;     // weight of the bottleneck term
  double tau = 0.1;      // infoNCE temperature
  double sigma_px = 4.0; // label smoothing in output pixels

  void validate() const;
};

/// Gaussian-smoothed one-hot over an L x L grid, truncated at the border and
/// renormalized. sigma 0 gives the plain one-hot.
struct TargetMap {
  ad::Tensor t;          // [L, L]
  std::pair<int, int> gt_cell;  // (row, col)
};

struct PositivenessWeights {
  ad::Tensor w;                  // [N, N]
  std::pair<int, int> positive;  // argmax cell, first in row-major order on ties
};

/// `gt` is a continuous coordinate; the one-hot sits in the cell containing it
/// and the Gaussian is centered on that cell's center.
TargetMap gaussian_target(Vec2 gt, int side, double sigma_px);

/// -sum t * log softmax(logits)
ad::Tensor output_loss(const ad::Tensor& logits, const TargetMap& target);

/// Max-pools the target to N x N and renormalizes.
PositivenessWeights positiveness_weights(const TargetMap& target, int grid);

/// -log( exp(M_ij/tau) / sum_kl exp(M_kl/tau) )
ad::Tensor infonce_cell(const ad::Tensor& match, std::pair<int, int> cell, double tau);

/// sum_ij w_ij * infonce_cell(M, ij)
ad::Tensor bottleneck_loss(const ad::Tensor& match, const PositivenessWeights& weights, double tau);

struct LossTerms {
  ad::Tensor total;
  ad::Tensor output;
  ad::Tensor bottleneck;
};

/// output_loss + beta * bottleneck_loss. The bottleneck term uses the grid
/// side of `match`.
LossTerms total_loss(const ad::Tensor& logits, const ad::Tensor& match, const TargetMap& target,
                     const LossConfig& config);

}  // namespace cvml::loss
