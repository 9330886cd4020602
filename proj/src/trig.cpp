#include "anglevol/trig.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "anglevol/errors.hpp"

namespace anglevol::trig
{

namespace
{
constexpr double kSinFloor = 1e-15;
constexpr double kClampTol = 1e-12;
constexpr double kDualRangeTol = 1e-9;

constexpr int next(int i) { return (i + 1) % 3; }
constexpr int prev(int i) { return (i + 2) % 3; }
}  // namespace

std::array<double, 3> cosine_law_cos_lengths(const AngleTriple& x)
{
    std::array<double, 3> s{}, c{};
    for (int i = 0; i < 3; ++i) {
        s[i] = std::sin(x[i]);
        c[i] = std::cos(x[i]);
        if (!std::isfinite(x[i]) || std::abs(s[i]) < kSinFloor) {
            throw DegenerateAngles("angle " + std::to_string(i) + " = " +
                                   std::to_string(x[i]) +
                                   " has vanishing sine");
        }
    }
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) {
        const int j = next(i), k = prev(i);
        out[i] = (c[i] + c[j] * c[k]) / (s[j] * s[k]);
    }
    return out;
}

double gram_quantity(const AngleTriple& x)
{
    const double c0 = std::cos(x[0]), c1 = std::cos(x[1]), c2 = std::cos(x[2]);
    return 1.0 - c0 * c0 - c1 * c1 - c2 * c2 - 2.0 * c0 * c1 * c2;
}

std::array<double, 3> sine_law_products(const AngleTriple& x)
{
    const auto cy = cosine_law_cos_lengths(x);
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) {
        const double sy = std::sin(clamped_acos(cy[i]));
        out[i] = sy * std::sin(x[next(i)]) * std::sin(x[prev(i)]);
    }
    return out;
}

Eigen::Matrix3d cosine_law_jacobian(const AngleTriple& x)
{
    const double a2 = gram_quantity(x);
    if (!(a2 >= kSingularGramTol)) {
        throw SingularGram("A^2 = " + std::to_string(a2) +
                           " is below the singular tolerance");
    }
    const double a = std::sqrt(a2);
    const auto cy = cosine_law_cos_lengths(x);
    Eigen::Matrix3d jac;
    for (int i = 0; i < 3; ++i) {
        const double diag = std::sin(x[i]) / a;
        for (int j = 0; j < 3; ++j) {
            if (i == j) {
                jac(i, j) = diag;
            } else {
                // k is the index distinct from both i and j.
                const int k = 3 - i - j;
                jac(i, j) = diag * cy[k];
            }
        }
    }
    return jac;
}

AngleTriple dual_cosine_law(const std::array<double, 3>& cos_lengths)
{
    std::array<double, 3> sy{};
    for (int i = 0; i < 3; ++i) {
        const double c = cos_lengths[i];
        if (std::abs(c) > 1.0 + kClampTol) {
            throw OutOfRange("length cosine " + std::to_string(c) +
                             " outside [-1, 1]");
        }
        sy[i] = std::sqrt(std::max(0.0, 1.0 - c * c));
        if (sy[i] < kSinFloor) {
            throw OutOfRange("length cosine " + std::to_string(c) +
                             " gives a degenerate edge");
        }
    }
    AngleTriple x{};
    for (int i = 0; i < 3; ++i) {
        const int j = next(i), k = prev(i);
        const double cx = (cos_lengths[i] - cos_lengths[j] * cos_lengths[k]) /
                          (sy[j] * sy[k]);
        if (std::abs(cx) > 1.0 + kDualRangeTol) {
            throw OutOfRange("recovered angle cosine " + std::to_string(cx) +
                             " outside [-1, 1]");
        }
        x[i] = std::acos(std::clamp(cx, -1.0, 1.0));
    }
    return x;
}

double clamped_acos(double c)
{
    if (c > 1.0 && c <= 1.0 + kClampTol) c = 1.0;
    if (c < -1.0 && c >= -1.0 - kClampTol) c = -1.0;
    return std::acos(c);
}

double clamped_acosh(double c)
{
    if (c < 1.0 && c >= 1.0 - kClampTol) c = 1.0;
    // log(c + sqrt(c^2 - 1)) written around u = c - 1 so that small
    // arguments keep full relative precision.
    const double u = c - 1.0;
    return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

double moebius_scale(double z)
{
    if (z <= 0.0) return std::cosh(z);
    if (z <= kPi) return std::cos(z);
    return -std::cosh(z - kPi);
}

double moebius_scale_inv(double c)
{
    if (c > 1.0) return -clamped_acosh(c);
    if (c < -1.0) return kPi + clamped_acosh(-c);
    return std::acos(c);
}

}  // namespace anglevol::trig
