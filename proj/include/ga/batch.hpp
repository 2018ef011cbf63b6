#pragma once

#include <span>
#include <vector>

#include "ga/stereo.hpp"

// Data-parallel versions of the per-element kernels. Each parallel routine
// has a serial twin in ga::serial that produces bit-identical output; the
// tests compare the two and bench/ measures the speedup.
namespace ga {

std::vector<Multivector> geometric_product_batch(std::span<const Multivector> lhs,
                                                 std::span<const Multivector> rhs);
std::vector<Multivector> rotate_batch(std::span<const Multivector> xs, const Rotor &r);
std::vector<PlanePoint> stereo_project_batch(std::span<const SpherePoint> points);
std::vector<SpherePoint> stereo_unproject_batch(std::span<const PlanePoint> points);

namespace serial {
std::vector<Multivector> geometric_product_batch(std::span<const Multivector> lhs,
                                                 std::span<const Multivector> rhs);
std::vector<Multivector> rotate_batch(std::span<const Multivector> xs, const Rotor &r);
std::vector<PlanePoint> stereo_project_batch(std::span<const SpherePoint> points);
std::vector<SpherePoint> stereo_unproject_batch(std::span<const PlanePoint> points);
} // namespace serial

int max_threads() noexcept;

} // namespace ga
