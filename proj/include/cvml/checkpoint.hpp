#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "cvml/params.hpp"

namespace cvml {

// Binary container shared by checkpoints and dataset tensors:
//   "CVML" | u16 version | u32 count |
//   count x (u16 name_len | name | u8 rank | rank x u32 dim | f32 payload)
// All integers and floats little-endian.
inline constexpr std::uint16_t kCvmlVersion = 1;

std::vector<std::uint8_t> encode_cvml(std::span<const NamedTensor> tensors);
/// Throws Error(kData) on malformed or truncated input.
std::vector<NamedTensor> decode_cvml(std::span<const std::uint8_t> bytes);

void write_cvml(const std::filesystem::path& path, std::span<const NamedTensor> tensors);
std::vector<NamedTensor> read_cvml(const std::filesystem::path& path);

const ad::Tensor& find_tensor(const std::vector<NamedTensor>& tensors, const std::string& name);

}  // namespace cvml
