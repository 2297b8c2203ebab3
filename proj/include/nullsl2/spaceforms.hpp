#ifndef NULLSL2_SPACEFORMS_HPP
#define NULLSL2_SPACEFORMS_HPP

#include <array>
#include <random>

#include "nullsl2/sl2curve.hpp"

namespace nullsl2 {

/// Point of Minkowski space L^4, signature (-+++).
struct MinkowskiPoint {
  std::array<double, 4> x{};
  double operator[](std::size_t i) const { return x[i]; }
};

struct H3Point : MinkowskiPoint {};
struct S31Point : MinkowskiPoint {};

inline constexpr double kGroupTol = 1e-9;

/// -x0^2 + x1^2 + x2^2 + x3^2
double minkowski_square(const MinkowskiPoint& p);

/// [[x0 + x3, x1 + i x2], [x1 - i x2, x0 - x3]]
Mat2 to_her(const MinkowskiPoint& p);
/// Inverse of to_her; throws NotHermitian.
MinkowskiPoint to_l4(const Mat2& h, double tol = kGroupTol);

/// A A^H read in L^4.
H3Point project_h3(const Mat2& a, double tol = kGroupTol);
/// A diag(1, -1) A^H read in L^4.
S31Point project_s31(const Mat2& a, double tol = kGroupTol);

enum class Group { SU2, SU11 };

/// det A = 1 and A A^H = I (SU2) or A J A^H = J with J = diag(1, -1) (SU11).
bool membership(const Mat2& a, Group g, double tol = kGroupTol);

/// (x1, x2, x3) / (1 + x0)
std::array<double, 3> poincare_ball(const H3Point& p);
H3Point from_poincare_ball(const std::array<double, 3>& b);

/// Random matrix rescaled by 1/sqrt(det) (principal branch).
Mat2 random_unimodular(std::mt19937_64& rng);
Mat2 random_su2(std::mt19937_64& rng);
Mat2 random_su11(std::mt19937_64& rng);

}  // namespace nullsl2

#endif  // NULLSL2_SPACEFORMS_HPP
