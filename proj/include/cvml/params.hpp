#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cvml/rng.hpp"
#include "cvml/tensor.hpp"

namespace cvml {

struct NamedTensor {
  std::string name;
  ad::Tensor tensor;
};

/// Ordered collection of trainable leaves. Names are unique; order is the
/// insertion order and is what the checkpoint file preserves.
class ParamSet {
 public:
  /// Uniform in +-sqrt(1/fan_in).
  ad::Tensor add_uniform(const std::string& name, ad::Shape shape, int fan_in, Rng& rng,
                         real gain = 1.0f);
  ad::Tensor add_constant(const std::string& name, ad::Shape shape, real value);
  ad::Tensor add(const std::string& name, ad::Tensor tensor);

  const ad::Tensor& get(const std::string& name) const;
  bool contains(const std::string& name) const;
  std::size_t size() const { return entries_.size(); }
  std::size_t scalar_count() const;

  std::vector<NamedTensor>& entries() { return entries_; }
  const std::vector<NamedTensor>& entries() const { return entries_; }

  void zero_grad();
  /// Multiplies every accumulated gradient by `factor` (batch averaging).
  void scale_grad(real factor);
  /// Copies values from `source` by name; shapes must match exactly.
  void assign(const std::vector<NamedTensor>& source);

 private:
  std::vector<NamedTensor> entries_;
};

}  // namespace cvml
