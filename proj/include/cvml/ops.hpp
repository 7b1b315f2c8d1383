#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cvml/tensor.hpp"

// Differentiable tensor operations. Every op records itself on the active
// Tape when one exists and at least one input requires a gradient.
namespace cvml::ad {

// --- convolution family ----------------------------------------------------

/// Cross-correlation of input [Cin,H,W] with kernel [Cout,Cin,k,k].
/// Requires odd k and (H + 2*pad - k) divisible by stride.
Tensor conv2d(const Tensor& input, const Tensor& kernel, int stride, int pad);

/// 2x learned upsampling: transposed convolution with kernel 4, stride 2,
/// pad 1. `weights` is [Cin,Cout,4,4]; output is [Cout,2H,2W].
Tensor upsample2(const Tensor& input, const Tensor& weights);

/// 2x2 non-overlapping max pool over [C,H,W]; H and W must be even.
/// Ties route the gradient to the first maximal element in row-major order.
Tensor pool_max2(const Tensor& input);

/// Adds bias[c] to every element of channel c of a [C,...] tensor.
Tensor bias_add(const Tensor& input, const Tensor& bias);

// --- dense ------------------------------------------------------------------

/// weights [m,n] * input [n] + bias [m].
Tensor linear(const Tensor& input, const Tensor& weights, const Tensor& bias);
/// matrix [m,n] * vec [n]; both sides differentiable.
Tensor matvec(const Tensor& matrix, const Tensor& vec);
Tensor transpose2d(const Tensor& matrix);

// --- elementwise --------------------------------------------------------------

Tensor relu(const Tensor& input);
Tensor tanh(const Tensor& input);
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& input, real factor);
Tensor add_scalar(const Tensor& input, real offset);

// --- reductions -------------------------------------------------------------

Tensor sum(const Tensor& input);
/// sum_i input[i] * weights[i] with constant (non-differentiated) weights.
Tensor dot_const(const Tensor& input, std::span<const real> weights);
/// a.b / (|a||b|); defined as 0 with zero gradient when either norm is 0.
Tensor cosine_sim(const Tensor& a, const Tensor& b);
/// x * scale / |x| over all elements; zero input maps to zero.
Tensor l2_normalize(const Tensor& input, real scale = 1);
/// Max over the channel axis of [C,H,W], flattened to [H*W].
Tensor channel_max(const Tensor& input);

// --- normalization ------------------------------------------------------------

/// exp-normalize jointly over all elements; max-subtracted.
Tensor softmax_flat(const Tensor& logits);
/// log of softmax_flat computed through log-sum-exp.
Tensor log_softmax_flat(const Tensor& logits);

// --- structural ---------------------------------------------------------------

/// [Ca,H,W] ++ [Cb,H,W] -> [Ca+Cb,H,W]; an undefined or zero-channel operand
/// passes the other through.
Tensor concat_channels(const Tensor& a, const Tensor& b);
/// Channels [begin, begin+count) of a [C,H,W] tensor.
Tensor slice_channels(const Tensor& input, int begin, int count);
/// Spatial window [C, top:top+h, left:left+w].
Tensor crop_spatial(const Tensor& input, int top, int left, int height, int width);
/// Concatenates flattened inputs in order and gives the result `shape`.
Tensor stack(std::span<const Tensor> items, Shape shape);
/// vec [d] broadcast to [d,H,W].
Tensor broadcast_spatial(const Tensor& vec, int height, int width);

// --- branch tracing -------------------------------------------------------------

/// While alive, folds every branch decision of the non-smooth ops (relu signs,
/// pool_max2 and channel_max winners) run on this thread into a digest. Two
/// evaluations with equal digests lie on the same smooth piece.
class BranchTrace {
 public:
  BranchTrace();
  ~BranchTrace();
  BranchTrace(const BranchTrace&) = delete;
  BranchTrace& operator=(const BranchTrace&) = delete;

  static BranchTrace* active();
  void mix(std::uint64_t value) { digest_ = (digest_ ^ value) * 0x100000001b3ull; }
  std::uint64_t digest() const { return digest_; }

 private:
  std::uint64_t digest_ = 0xcbf29ce484222325ull;
  BranchTrace* previous_;
};

}  // namespace cvml::ad
