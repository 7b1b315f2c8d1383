#pragma once

#include <span>
#include <utility>

#include "cvml/geometry.hpp"
#include "cvml/tensor.hpp"

namespace cvml {

/// L x L probability grid over the camera location; cell (row, col) is the
/// pixel area whose center is (col + 0.5, row + 0.5).
struct HeatMap {
  ad::Tensor probs;  // [L, L], non-negative, sums to 1

  int side() const { return probs.dim(0); }
  real at(int row, int col) const {
    return probs[static_cast<std::size_t>(row) * static_cast<std::size_t>(side()) + static_cast<std::size_t>(col)];
  }
};

/// Row-major index of the largest entry; the first one wins ties.
std::size_t argmax_index(std::span<const real> values);

/// Center of the most probable cell.
Vec2 predict_location(const HeatMap& heat);

/// Cell index (row, col) containing a continuous coordinate, or throws
/// Error(kInput) when it lies outside the grid.
std::pair<int, int> cell_of(Vec2 point, int side);

}  // namespace cvml
