#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cvml/real.hpp"

namespace cvml::ad {

using Shape = std::vector<int>;

std::size_t shape_numel(const Shape& shape);
std::string shape_str(const Shape& shape);

struct TensorImpl {
  Shape shape;
  std::vector<real> data;
  std::vector<real> grad;  // lazily sized to data.size()
  bool requires_grad = false;
  std::int64_t node = -1;  // producing tape node, -1 for leaves

  void ensure_grad() {
    if (grad.size() != data.size()) grad.assign(data.size(), 0.0f);
  }
};

/// Handle to a dense row-major float32 array. Copies share storage; values
/// are treated as immutable once an op has consumed them, except for
/// parameter leaves which the optimizer updates in place.
class Tensor {
 public:
  Tensor() = default;
  Tensor(Shape shape, std::vector<real> data, bool requires_grad = false);

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, real value, bool requires_grad = false);
  static Tensor scalar(real value, bool requires_grad = false);

  bool defined() const { return impl_ != nullptr; }
  const Shape& shape() const { return impl_->shape; }
  int rank() const { return static_cast<int>(impl_->shape.size()); }
  int dim(int axis) const { return impl_->shape.at(static_cast<std::size_t>(axis)); }
  std::size_t numel() const { return impl_->data.size(); }

  std::span<const real> data() const { return impl_->data; }
  std::span<real> mutable_data() { return impl_->data; }
  real operator[](std::size_t i) const { return impl_->data[i]; }
  real item() const;

  bool requires_grad() const { return impl_->requires_grad; }
  bool has_grad() const { return impl_->grad.size() == impl_->data.size(); }
  /// Gradient view; zeros if nothing has been accumulated yet.
  std::span<const real> grad() const;
  std::span<real> mutable_grad();
  void zero_grad();

  /// Deep copy without tape linkage.
  Tensor detach_copy(bool requires_grad = false) const;
  /// Same storage reinterpreted under a new shape of equal size.
  Tensor reshape(Shape shape) const;

  const std::shared_ptr<TensorImpl>& impl() const { return impl_; }
  explicit Tensor(std::shared_ptr<TensorImpl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<TensorImpl> impl_;
};

/// Reverse-mode recording context. Constructing a Tape makes it the active
/// recorder on the current thread until it is destroyed; ops executed with no
/// active tape (or with no grad-requiring input) record nothing.
class Tape {
 public:
  using BackwardFn = std::function<void()>;

  Tape();
  ~Tape();
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  static Tape* active();

  /// Appends a node. Returns the node id assigned to `output`.
  std::int64_t record(const char* op, std::vector<std::shared_ptr<TensorImpl>> inputs,
                      const std::shared_ptr<TensorImpl>& output, BackwardFn backward);

  /// Accumulates d(loss)/d(leaf) into every grad-requiring leaf reachable
  /// from `loss`, then clears the tape.
  void backward(const Tensor& loss);
  void clear();
  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    const char* op;
    std::vector<std::shared_ptr<TensorImpl>> inputs;
    std::shared_ptr<TensorImpl> output;
    BackwardFn backward;
  };
  std::vector<Node> nodes_;
  Tape* previous_ = nullptr;
};

/// Suspends recording for its lifetime (inference inside a training step).
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  Tape* saved_;
};

}  // namespace cvml::ad
