#pragma once

#include <cstdint>
#include <vector>

#include "cvml/params.hpp"

namespace cvml {

struct AdamConfig {
  float lr = 1e-3f;
  float beta1 = 0.9f;
  float beta2 = 0.999f;
  float eps = 1e-8f;
};

struct AdamState {
  explicit AdamState(AdamConfig config = {}) : config(config) {}

  AdamConfig config;
  std::int64_t step = 0;
  std::vector<std::vector<real>> m;
  std::vector<std::vector<real>> v;
};

/// One bias-corrected Adam update of every parameter from its accumulated
/// gradient. Moment buffers are created on the first call.
void adam_step(ParamSet& params, AdamState& state);

}  // namespace cvml
