#pragma once

#include <filesystem>

#include "kp5/field.hpp"

namespace kp5 {

// Binary spectral snapshot, format "KP5LAB1":
//   bytes 0..6   magic "KP5LAB1"
//   int64 LE     nx
//   int64 LE     ny
//   float64 LE   lambda
//   then (nx/2+1) * ny coefficients as interleaved (re, im) float64 LE,
//   m-major: m = 0..nx/2 outer, storage row ky = 0..ny-1 inner.
// Written atomically (temp file + rename).
void write_snapshot(const SpectralField& u, const std::filesystem::path& path);
SpectralField read_snapshot(const std::filesystem::path& path);

}  // namespace kp5
