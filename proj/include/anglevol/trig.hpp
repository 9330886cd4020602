#pragma once

#include <array>
#include <numbers>

#include <Eigen/Core>

namespace anglevol
{

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Three angles in radians; entry i is opposite edge i.
using AngleTriple = std::array<double, 3>;

namespace trig
{

/// A^2 below this raises SingularGram.
inline constexpr double kSingularGramTol = 1e-14;

/// Cosines of the edge lengths of the spherical triangle with inner angles
/// x: c_i = (cos x_i + cos x_j cos x_k) / (sin x_j sin x_k).
/// Throws DegenerateAngles if some sin x_j vanishes.
std::array<double, 3> cosine_law_cos_lengths(const AngleTriple& x);

/// A^2 = 1 - sum cos^2 x_i - 2 prod cos x_i.
double gram_quantity(const AngleTriple& x);

/// A_ijk = sin y_i sin x_j sin x_k for i = 0, 1, 2 (y_i = arccos c_i).
/// Entries agree up to rounding whenever the cos-lengths lie in [-1, 1].
std::array<double, 3> sine_law_products(const AngleTriple& x);

/// d y_i / d x_j for the spherical triangle with angles x.
/// Throws SingularGram when A^2 < kSingularGramTol.
Eigen::Matrix3d cosine_law_jacobian(const AngleTriple& x);

/// Inner angles from cosines of edge lengths:
/// cos x_i = (cos y_i - cos y_j cos y_k) / (sin y_j sin y_k).
/// Throws OutOfRange if a recovered cosine leaves [-1, 1] by more than 1e-9.
AngleTriple dual_cosine_law(const std::array<double, 3>& cos_lengths);

/// arccos with inputs within 1e-12 of [-1, 1] clamped into it.
double clamped_acos(double c);

/// arccosh(c) for c >= 1; inputs within 1e-12 below 1 are clamped to 1.
double clamped_acosh(double c);

/// Real Moebius scale f: cosh(z) for z <= 0, cos(z) on [0, pi],
/// -cosh(z - pi) for z >= pi. Strictly decreasing bijection R -> R.
double moebius_scale(double z);

/// Inverse of moebius_scale.
double moebius_scale_inv(double c);

}  // namespace trig
}  // namespace anglevol
