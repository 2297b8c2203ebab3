#include "nullsl2/kernels.hpp"

#include <algorithm>
#include <limits>

#include <omp.h>

namespace nullsl2::kernels {

std::vector<cplx> evaluate_function(const MeroFunction& f, std::span<const cplx> points, Exec exec) {
  std::vector<cplx> out(points.size());
  for_each_index(points.size(), exec, [&](std::size_t i) { out[i] = evaluate(f, points[i]); });
  return out;
}

std::vector<Mat2> evaluate_curve(const SL2NullCurve& F, std::span<const cplx> points, Exec exec) {
  std::vector<Mat2> out(points.size());
  for_each_index(points.size(), exec, [&](std::size_t i) { out[i] = evaluate(F, points[i]); });
  return out;
}

cplx weighted_sum(const MeroFunction& f, std::span<const cplx> points, std::span<const cplx> weights, Exec exec) {
  const std::vector<cplx> values = evaluate_function(f, points, exec);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) acc += weights[i] * values[i];
  return acc;
}

double min_sup_norm(const SL2NullCurve& F, std::span<const cplx> points, Exec exec) {
  std::vector<double> norms(points.size());
  for_each_index(points.size(), exec, [&](std::size_t i) { norms[i] = sup_norm(evaluate(F, points[i])); });
  double m = std::numeric_limits<double>::infinity();
  for (double v : norms) m = std::min(m, v);
  return m;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace nullsl2::kernels
