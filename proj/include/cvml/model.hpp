#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvml/encoder.hpp"
#include "cvml/heatmap.hpp"
#include "cvml/params.hpp"

namespace cvml::model {

struct ModelConfig {
  int patch_side = 64;      // L: satellite patch and heat-map side
  int feature_side = 8;     // L': encoder output side
  int grid = 4;             // N: descriptor grid side
  int channels = 32;        // C: encoder width
  int heads = 4;            // K: SAFA heads per aggregation
  int ground_h = 16;
  int ground_w = 64;
  int decoder_stages = 4;
  bool concat_ground = false;
  std::uint64_t init_seed = 7;

  int descriptor_dim() const { return heads * channels; }
  int encoder_stages() const;
  int cell_span() const { return feature_side / grid; }
  /// Width of decoder stage s (0 = coarsest).
  int decoder_width(int stage) const;
  int fused_channels() const { return descriptor_dim() + 1 + (concat_ground ? descriptor_dim() : 0); }
  /// Throws Error(kConfig) when the size chain is inconsistent.
  void validate() const;
};

struct Descriptors {
  ad::Tensor ground;               // f(G): [d]
  std::vector<ad::Tensor> cells;   // g(S)^{ij}: N*N tensors [d], row-major (i, j)
  ad::Tensor grid;                 // the same descriptors channels-first: [d, N, N]

  int side() const;
  const ad::Tensor& cell(int i, int j) const {
    return cells.at(static_cast<std::size_t>(i * side() + j));
  }
};

struct ForwardResult {
  HeatMap heat;
  ad::Tensor logits;  // [L, L]
  ad::Tensor match;   // M: [N, N], cosine similarities
  Descriptors desc;
};

/// Cell (i, j) aggregates the (L'/N)^2 sub-volume at rows i*s.., cols j*s..
/// with the same heads for every cell. Returns N*N descriptors in row-major
/// order.
std::vector<ad::Tensor> split_descriptors(const ad::Tensor& volume, int grid, const SafaHeads& heads);

/// M^{ij} = cos(f(G), g(S)^{ij}) -> [N, N].
ad::Tensor matching_map(const Descriptors& desc);

/// Channels: grid descriptors, then M (then f(G) broadcast when requested).
ad::Tensor fuse_bottleneck(const ad::Tensor& grid, const ad::Tensor& match,
                           const ad::Tensor& ground, bool concat_ground);

/// Dense localizer: encoders without weight sharing, SAFA aggregation, an
/// N x N satellite descriptor grid, a cosine matching bottleneck, and a
/// skip-connected upsampling decoder ending in a softmax over L x L cells.
class Localizer {
 public:
  explicit Localizer(const ModelConfig& config);

  const ModelConfig& config() const { return config_; }
  ParamSet& params() { return params_; }
  const ParamSet& params() const { return params_; }

  EncoderOutput encode_satellite(const ad::Tensor& satellite) const;
  EncoderOutput encode_ground(const ad::Tensor& ground) const;
  const SafaHeads& ground_heads() const { return ground_safa_; }
  const SafaHeads& satellite_heads() const { return satellite_safa_; }

  Descriptors describe(const EncoderOutput& ground, const EncoderOutput& satellite) const;
  /// fused [fused_channels, N, N] + satellite skips -> logits [L, L]
  ad::Tensor decode_heatmap(const ad::Tensor& fused, const EncoderOutput& satellite) const;

  ForwardResult forward(const ad::Tensor& ground, const ad::Tensor& satellite) const;

  /// Final 1-channel conv of the decoder.
  ad::Tensor head_weights() const { return head_w_; }

 private:
  struct DecoderStage {
    ad::Tensor up_w, up_b, conv_w, conv_b;
    int skip_source;  // encoder skip index, -1 for the encoder output, -2 for none
  };

  ModelConfig config_;
  ParamSet params_;
  ConvEncoder ground_encoder_;
  ConvEncoder satellite_encoder_;
  SafaHeads ground_safa_;
  SafaHeads satellite_safa_;
  std::vector<DecoderStage> decoder_;
  ad::Tensor head_w_, head_b_;
};

/// Standard softmax over the whole logit grid, wrapped as a heat map.
HeatMap heatmap_from_logits(const ad::Tensor& logits);

}  // namespace cvml::model
