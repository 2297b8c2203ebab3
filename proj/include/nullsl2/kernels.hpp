#ifndef NULLSL2_KERNELS_HPP
#define NULLSL2_KERNELS_HPP

// Sampling kernels. Every kernel has an OpenMP path and a serial reference
// path; both evaluate the same per-point function, and reductions are done
// serially afterwards, so the two paths agree bit for bit.

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "nullsl2/mero.hpp"
#include "nullsl2/sl2curve.hpp"

namespace nullsl2::kernels {

enum class Exec { serial, parallel };

/// Calls fn(i) for i in [0, n). Exceptions do not cross the parallel region;
/// the one thrown at the lowest index is rethrown, as in the serial path.
template <class Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr first;
  std::size_t first_index = n;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(nullsl2_kernel_error)
      {
        if (static_cast<std::size_t>(i) < first_index) {
          first_index = static_cast<std::size_t>(i);
          first = std::current_exception();
        }
      }
    }
  }
  if (first) std::rethrow_exception(first);
}

std::vector<cplx> evaluate_function(const MeroFunction& f, std::span<const cplx> points,
                                    Exec exec = Exec::parallel);

std::vector<Mat2> evaluate_curve(const SL2NullCurve& F, std::span<const cplx> points, Exec exec = Exec::parallel);

/// sum_k weights[k] * f(points[k]), evaluated per point then summed in order.
cplx weighted_sum(const MeroFunction& f, std::span<const cplx> points, std::span<const cplx> weights,
                  Exec exec = Exec::parallel);

/// min over points of the slot-wise sup norm of F.
double min_sup_norm(const SL2NullCurve& F, std::span<const cplx> points, Exec exec = Exec::parallel);

int max_threads();

}  // namespace nullsl2::kernels

#endif  // NULLSL2_KERNELS_HPP
