#pragma once

#include <string>
#include <vector>

#include "cvml/params.hpp"

namespace cvml::model {

struct EncoderOutput {
  ad::Tensor features;             // [C, side / 2^stages, ...]
  std::vector<ad::Tensor> skips;   // skips[s]: pre-pool activation of stage s
};

/// VGG-style stack: each stage is 3x3 conv (stride 1, pad 1) + bias + relu
/// followed by a 2x2 max pool. Stage 0 has width C/2, later stages C.
class ConvEncoder {
 public:
  ConvEncoder() = default;
  ConvEncoder(ParamSet& params, const std::string& prefix, int in_channels, int stages,
              int channels, Rng& rng);

  EncoderOutput operator()(const ad::Tensor& image) const;

  int stages() const { return static_cast<int>(weights_.size()); }
  int stage_width(int stage) const { return weights_.at(static_cast<std::size_t>(stage)).dim(0); }
  int out_channels() const { return stage_width(stages() - 1); }

 private:
  std::vector<ad::Tensor> weights_;
  std::vector<ad::Tensor> biases_;
};

/// K spatial-attention heads over a fixed number of positions. Each head
/// max-pools the volume over channels, maps the flattened h*w map through two
/// affine layers (h*w -> h*w/2 -> h*w) to a spatial mask, and outputs the
/// mask-weighted spatial sum of every channel. Head outputs are concatenated.
class SafaHeads {
 public:
  struct Head {
    ad::Tensor w1, b1, w2, b2;
  };

  SafaHeads() = default;
  SafaHeads(ParamSet& params, const std::string& prefix, int heads, int positions, Rng& rng);

  /// volume [C,h,w] with h*w == positions() -> [heads() * C]
  ad::Tensor aggregate(const ad::Tensor& volume) const;

  int heads() const { return static_cast<int>(heads_.size()); }
  int positions() const { return positions_; }
  const std::vector<Head>& parts() const { return heads_; }

 private:
  std::vector<Head> heads_;
  int positions_ = 0;
};

}  // namespace cvml::model
