#include "ga/batch.hpp"

#include <exception>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ga/error.hpp"

namespace ga {

namespace {

// Applies fn to every index. Exceptions cannot cross the OpenMP region, so
// the one from the lowest failing index is captured and rethrown afterwards.
template <typename Fn>
auto parallel_map(std::size_t n, Fn fn) {
  using T = decltype(fn(std::size_t{}));
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      slots[k].emplace(fn(k));
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<T> out;
  out.reserve(n);
  for (auto &slot : slots) out.push_back(std::move(*slot));
  return out;
}

template <typename Fn>
auto serial_map(std::size_t n, Fn fn) {
  using T = decltype(fn(std::size_t{}));
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
  return out;
}

void require_equal_length(std::size_t a, std::size_t b) {
  if (a != b) throw Error(Errc::grade, "batch operands differ in length");
}

} // namespace

std::vector<Multivector> geometric_product_batch(std::span<const Multivector> lhs,
                                                 std::span<const Multivector> rhs) {
  require_equal_length(lhs.size(), rhs.size());
  return parallel_map(lhs.size(), [&](std::size_t i) { return lhs[i] * rhs[i]; });
}

std::vector<Multivector> rotate_batch(std::span<const Multivector> xs, const Rotor &r) {
  return parallel_map(xs.size(), [&](std::size_t i) { return rotate(xs[i], r); });
}

std::vector<PlanePoint> stereo_project_batch(std::span<const SpherePoint> points) {
  return parallel_map(points.size(),
                      [&](std::size_t i) { return stereo_project(points[i]); });
}

std::vector<SpherePoint> stereo_unproject_batch(std::span<const PlanePoint> points) {
  return parallel_map(points.size(),
                      [&](std::size_t i) { return stereo_unproject(points[i]); });
}

namespace serial {

std::vector<Multivector> geometric_product_batch(std::span<const Multivector> lhs,
                                                 std::span<const Multivector> rhs) {
  require_equal_length(lhs.size(), rhs.size());
  return serial_map(lhs.size(), [&](std::size_t i) { return lhs[i] * rhs[i]; });
}

std::vector<Multivector> rotate_batch(std::span<const Multivector> xs, const Rotor &r) {
  return serial_map(xs.size(), [&](std::size_t i) { return rotate(xs[i], r); });
}

std::vector<PlanePoint> stereo_project_batch(std::span<const SpherePoint> points) {
  return serial_map(points.size(),
                    [&](std::size_t i) { return stereo_project(points[i]); });
}

std::vector<SpherePoint> stereo_unproject_batch(std::span<const PlanePoint> points) {
  return serial_map(points.size(),
                    [&](std::size_t i) { return stereo_unproject(points[i]); });
}

} // namespace serial

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace ga
