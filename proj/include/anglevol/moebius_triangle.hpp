#pragma once

#include <array>
#include <string_view>

#include "anglevol/trig.hpp"

namespace anglevol
{

/// Geometric type of a Moebius triangle or an angle-structured tetrahedron.
enum class GeometryType { Euclidean, Hyperbolic, Spherical };

std::string_view to_string(GeometryType t);

/// Width of the band around {0, pi} in which a Moebius length counts as
/// Euclidean. Lengths behave like sqrt(1 - |cos|) near that locus, so
/// rounding of order 1e-16 in the cosine shows up as ~1e-8 in the length.
inline constexpr double kEuclideanBand = 1e-6;

/// Moebius triangles, i.e. 2-dimensional angle structures: three inner
/// angles in (0, pi) with no further constraint.
using Triangle2 = AngleTriple;

/// True iff every angle lies in the open interval (0, pi).
bool in_AS2(const Triangle2& t);

/// Type of a single Moebius length z: Euclidean on the band around {0, pi},
/// Spherical on (0, pi), Hyperbolic otherwise.
GeometryType classify_length(double z);

/// Moebius lengths z_i of the edges opposite the angles t_i.
std::array<double, 3> edge_lengths2(const Triangle2& t);

/// Type of t, read off z_0 and cross-checked against z_1, z_2.
/// Throws InternalConsistency if the edges disagree outside a tolerance.
GeometryType classify2(const Triangle2& t);

/// Same as classify2 but from precomputed lengths.
GeometryType classify_lengths2(const std::array<double, 3>& z);

/// i-th flip: keeps angle i and replaces the other two by pi - angle.
Triangle2 flip2(const Triangle2& t, int i);

/// A Moebius triangle is classical (a genuine E/H/S triangle) unless some
/// edge has length at least pi.
bool is_classical2(const Triangle2& t);

/// Inner angles of the non-Euclidean Moebius triangle with lengths z.
/// Throws RecoveryOutOfRange if the lengths do not come from such a
/// triangle of the given type, InternalConsistency for Euclidean type.
Triangle2 recover_angles2(const std::array<double, 3>& z, GeometryType type);

}  // namespace anglevol
