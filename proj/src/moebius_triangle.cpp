#include "anglevol/moebius_triangle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "anglevol/errors.hpp"

namespace anglevol
{

namespace
{
// Two edges of one triangle may straddle the edge of the Euclidean band;
// beyond this distance from {0, pi} a type disagreement is a real fault.
constexpr double kCrossCheckSlack = 1e-4;
constexpr double kRecoveryRangeTol = 1e-9;

double distance_to_euclidean(double z)
{
    return std::min(std::abs(z), std::abs(z - kPi));
}

// |sin(phi(z))| for z outside (0, pi), where phi(z) is imaginary.
double imaginary_sine(double z)
{
    return std::sinh(z <= 0.0 ? -z : z - kPi);
}
}  // namespace

std::string_view to_string(GeometryType t)
{
    switch (t) {
        case GeometryType::Euclidean:
            return "euclidean";
        case GeometryType::Hyperbolic:
            return "hyperbolic";
        case GeometryType::Spherical:
            return "spherical";
    }
    return "unknown";
}

bool in_AS2(const Triangle2& t)
{
    return std::all_of(t.begin(), t.end(),
                       [](double a) { return a > 0.0 && a < kPi; });
}

GeometryType classify_length(double z)
{
    if (distance_to_euclidean(z) < kEuclideanBand) return GeometryType::Euclidean;
    if (z > 0.0 && z < kPi) return GeometryType::Spherical;
    return GeometryType::Hyperbolic;
}

std::array<double, 3> edge_lengths2(const Triangle2& t)
{
    const auto c = trig::cosine_law_cos_lengths(t);
    return {trig::moebius_scale_inv(c[0]), trig::moebius_scale_inv(c[1]),
            trig::moebius_scale_inv(c[2])};
}

GeometryType classify_lengths2(const std::array<double, 3>& z)
{
    const GeometryType type = classify_length(z[0]);
    for (int i = 1; i < 3; ++i) {
        const GeometryType other = classify_length(z[i]);
        if (other == type) continue;
        const bool near_band =
            (type == GeometryType::Euclidean &&
             distance_to_euclidean(z[i]) < kCrossCheckSlack) ||
            (other == GeometryType::Euclidean &&
             distance_to_euclidean(z[0]) < kCrossCheckSlack);
        if (!near_band) {
            throw InternalConsistency(
                "edge lengths disagree on triangle type: z0 = " +
                std::to_string(z[0]) + ", z" + std::to_string(i) + " = " +
                std::to_string(z[i]));
        }
    }
    return type;
}

GeometryType classify2(const Triangle2& t)
{
    return classify_lengths2(edge_lengths2(t));
}

Triangle2 flip2(const Triangle2& t, int i)
{
    Triangle2 out = t;
    for (int j = 0; j < 3; ++j) {
        if (j != i) out[j] = kPi - t[j];
    }
    return out;
}

bool is_classical2(const Triangle2& t)
{
    const auto z = edge_lengths2(t);
    if (classify_lengths2(z) == GeometryType::Spherical) return true;
    return std::all_of(z.begin(), z.end(),
                       [](double l) { return l < kPi - kEuclideanBand; });
}

Triangle2 recover_angles2(const std::array<double, 3>& z, GeometryType type)
{
    if (type == GeometryType::Euclidean) {
        throw InternalConsistency(
            "Euclidean Moebius lengths do not determine the angles");
    }
    std::array<double, 3> c{};
    for (int i = 0; i < 3; ++i) c[i] = trig::moebius_scale(z[i]);

    if (type == GeometryType::Spherical) {
        for (double l : z) {
            if (!(l > 0.0 && l < kPi)) {
                throw RecoveryOutOfRange("spherical length " +
                                         std::to_string(l) +
                                         " outside (0, pi)");
            }
        }
        try {
            return trig::dual_cosine_law(c);
        } catch (const OutOfRange& e) {
            throw RecoveryOutOfRange(e.what());
        }
    }

    // Hyperbolic type: every sin(phi(z)) is i*sinh(m) with m >= 0, so the
    // product of two of them is -sinh(m_j) sinh(m_k).
    std::array<double, 3> sh{};
    for (int i = 0; i < 3; ++i) {
        if (z[i] > 0.0 && z[i] < kPi) {
            throw RecoveryOutOfRange("hyperbolic length " +
                                     std::to_string(z[i]) +
                                     " inside (0, pi)");
        }
        sh[i] = imaginary_sine(z[i]);
    }
    Triangle2 x{};
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const double denom = -sh[j] * sh[k];
        if (denom == 0.0) {
            throw RecoveryOutOfRange("degenerate hyperbolic edge");
        }
        const double cx = (c[i] - c[j] * c[k]) / denom;
        if (!(std::abs(cx) <= 1.0 + kRecoveryRangeTol)) {
            throw RecoveryOutOfRange("recovered angle cosine " +
                                     std::to_string(cx) + " outside [-1, 1]");
        }
        x[i] = std::acos(std::clamp(cx, -1.0, 1.0));
    }
    return x;
}

}  // namespace anglevol
