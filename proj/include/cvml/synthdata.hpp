#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cvml/geometry.hpp"
#include "cvml/rng.hpp"
#include "cvml/tensor.hpp"

namespace cvml::synth {

struct WorldMap {
  int size_px = 0;
  double meters_per_px = 0.114;
  ad::Tensor rgb;  // [3, size, size], values in [0, 1]
  std::vector<std::uint8_t> labels;  // per pixel: 0 open ground, 1 road, 2 building, 3 tree
  std::uint64_t seed = 0;

  /// Bilinear sample at a continuous coordinate (pixel centers at +0.5).
  /// Throws Error(kInput) outside [0, size]^2.
  void sample(Vec2 p, real out[3]) const;
};

/// heading: radians, 0 = map up, clockwise positive.
struct CameraPose {
  Vec2 position;
  double heading = 0.0;
};

enum class SampleKind { kPositive, kSemiPositive };
enum class ViewMode { kPanorama, kFront };

const char* kind_name(SampleKind kind);
SampleKind parse_kind(const std::string& text);
const char* view_name(ViewMode mode);
ViewMode parse_view(const std::string& text);

struct Sample {
  int id = 0;
  ad::Tensor ground;     // [3, ground_h, ground_w]
  ad::Tensor satellite;  // [3, L, L], heading-up
  Vec2 gt;               // camera position in patch coordinates
  double heading = 0.0;
  double meters_per_px = 0.114;
  SampleKind kind = SampleKind::kPositive;
};

struct SampleConfig {
  int patch_side = 64;
  int ground_h = 16;
  int ground_w = 64;
  double max_range_px = 24.0;
  ViewMode view = ViewMode::kPanorama;
  double front_fov_deg = 90.0;
};

/// Road network, building footprints and vegetation texture, fully
/// determined by `seed`. Requires size_px >= 4 * patch_side.
WorldMap gen_world(std::uint64_t seed, int size_px, double meters_per_px, int patch_side = 64);

/// Fraction of pixels painted as road by the generator for this seed.
double road_fraction(const WorldMap& world);

/// Axes of the heading-up patch frame expressed in world coordinates.
struct PatchFrame {
  Vec2 center;  // world position of the patch center
  double heading = 0.0;
  int side = 0;

  Vec2 to_world(Vec2 patch) const;
  Vec2 to_patch(Vec2 world) const;
};

/// Rotates the world so `heading` points up and crops side x side around
/// `center`, sampling bilinearly.
ad::Tensor crop_rotated_patch(const WorldMap& world, Vec2 center, double heading, int side);

/// Column c looks along azimuth heading + 2*pi*c/w (panorama) or across the
/// front field of view; row r samples the world at range (r+1)/h * max_range.
ad::Tensor render_ground(const WorldMap& world, const CameraPose& pose, const SampleConfig& config);

/// Smallest distance from the world border a pose may have so that every
/// patch and ground ray stays inside the map.
double pose_margin(const SampleConfig& config);

/// Draws a pose and a patch: positives keep the camera in the central
/// L/2 x L/2 square; semi-positives move the patch by L/2 along one axis so
/// the camera lands outside the central square but inside the patch.
Sample sample_pair(const WorldMap& world, Rng& rng, SampleKind kind, const SampleConfig& config,
                   int id = 0);

/// Directory with index.txt and one <id>.cvml file per sample.
void write_dataset(const std::vector<Sample>& samples, const std::filesystem::path& dir);
std::vector<Sample> read_dataset(const std::filesystem::path& dir);

/// Column-circular shift: out[:, :, c] = in[:, :, (c + k) mod w]. Equivalent to
/// rendering a panorama with the heading advanced by 2*pi*k/w.
ad::Tensor shift_columns(const ad::Tensor& image, int k);

/// Rotates a [3, L, L] patch clockwise by `angle` about its center, sampling
/// bilinearly with zeros outside.
ad::Tensor rotate_patch(const ad::Tensor& patch, double angle);

}  // namespace cvml::synth
