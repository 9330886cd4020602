#include "anglevol/tet_angle.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <sstream>

#include "anglevol/errors.hpp"
#include "anglevol/quadrature.hpp"

namespace anglevol
{

namespace
{

constexpr double kConditioningFactor = 64.0;
constexpr double kVertexCosTol = 1e-12;

// Vertices other than i, ascending.
std::array<int, 3> others(int i)
{
    std::array<int, 3> out{};
    int n = 0;
    for (int v = 0; v < 4; ++v) {
        if (v != i) out[n++] = v;
    }
    return out;
}

TetAngles along(const TetAngles& p, const TetAngles& d, double t)
{
    TetAngles out;
    for (int s = 0; s < 6; ++s) out[s] = p[s] + t * d[s];
    return out;
}

double half_pairing(const TetLengths& l, const TetAngles& d)
{
    double sum = 0.0;
    for (int s = 0; s < 6; ++s) sum += l[s] * d[s];
    return 0.5 * sum;
}

bool is_long(double l) { return l >= kPi - kEuclideanBand; }
bool is_short(double l) { return l <= kEuclideanBand; }

double distance_to_euclidean(double l)
{
    return std::min(std::abs(l), std::abs(l - kPi));
}
}  // namespace

double regular_euclidean_angle() { return std::acos(1.0 / 3.0); }

TetAngles volume_base_point()
{
    return TetAngles::constant(regular_euclidean_angle());
}

AS3Membership in_AS3(const TetAngles& x)
{
    double slack = std::numeric_limits<double>::infinity();
    for (int s = 0; s < 6; ++s) {
        slack = std::min({slack, x[s], kPi - x[s]});
    }
    for (int i = 0; i < 4; ++i) {
        const auto o = others(i);
        const double a = x(i, o[0]), b = x(i, o[1]), c = x(i, o[2]);
        slack = std::min({slack, a + b + c - kPi, kPi - (a + b - c),
                          kPi - (a - b + c), kPi - (-a + b + c)});
    }
    return {slack > 0.0, slack};
}

FaceAngles face_angles(const TetAngles& x)
{
    FaceAngles y;
    for (int i = 0; i < 4; ++i) {
        const auto o = others(i);
        const AngleTriple triple{x(i, o[0]), x(i, o[1]), x(i, o[2])};
        std::array<double, 3> c{};
        try {
            c = trig::cosine_law_cos_lengths(triple);
        } catch (const DegenerateAngles& e) {
            throw NonSphericalVertex("vertex " + std::to_string(i) + ": " +
                                     e.what());
        }
        for (int m = 0; m < 3; ++m) {
            if (!(std::abs(c[m]) <= 1.0 + kVertexCosTol)) {
                throw NonSphericalVertex(
                    "vertex " + std::to_string(i) +
                    " angles do not form a spherical triangle");
            }
            y.at[i][o[m]] = trig::clamped_acos(c[m]);
        }
    }
    return y;
}

TetLengths edge_lengths3(const TetAngles& x)
{
    const FaceAngles y = face_angles(x);

    // Cosine of the Moebius length of each edge as seen from each of its
    // two faces; faces are visited in order of the opposite vertex.
    std::array<std::array<double, 2>, 6> cos_len{};
    std::array<int, 6> seen{};
    for (int l = 0; l < 4; ++l) {
        const auto v = others(l);
        const AngleTriple face{y.at[v[0]][l], y.at[v[1]][l], y.at[v[2]][l]};
        std::array<double, 3> c{};
        try {
            c = trig::cosine_law_cos_lengths(face);
        } catch (const DegenerateAngles& e) {
            throw NonSphericalVertex(std::string("degenerate face angle: ") +
                                     e.what());
        }
        // c[m] is opposite vertex v[m].
        for (int m = 0; m < 3; ++m) {
            const int slot = edge_slot(v[(m + 1) % 3], v[(m + 2) % 3]);
            cos_len[slot][seen[slot]++] = c[m];
        }
    }

    // Near the boundary of AS(3) a vertex triangle degenerates and both
    // estimates carry rounding noise of order eps / gram.
    double gram_min = 1.0;
    for (int i = 0; i < 4; ++i) {
        const auto o = others(i);
        gram_min = std::min(gram_min, trig::gram_quantity({x(i, o[0]), x(i, o[1]), x(i, o[2])}));
    }
    const double noise = kConditioningFactor * std::numeric_limits<double>::epsilon() /
                         std::max(gram_min, std::numeric_limits<double>::min());

    TetLengths out;
    for (int s = 0; s < 6; ++s) {
        const double c1 = cos_len[s][0], c2 = cos_len[s][1];
        const double l1 = trig::moebius_scale_inv(c1);
        const double l2 = trig::moebius_scale_inv(c2);
        const double scale = std::max({1.0, std::abs(c1), std::abs(c2)});
        if (!(std::abs(l1 - l2) <= kCompatibilityTol * std::max(1.0, std::abs(l1)) + noise ||
              std::abs(c1 - c2) <= kCompatibilityTol * scale)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "edge slot " << s << ": face lengths " << l1 << " and "
                << l2 << " disagree";
            throw CompatibilityViolation(msg.str());
        }
        out[s] = trig::moebius_scale_inv(0.5 * (c1 + c2));
    }
    return out;
}

double schlafli_line_integral(const TetAngles& from, const TetAngles& to,
                              const VolumeOptions& opts)
{
    TetAngles d;
    for (int s = 0; s < 6; ++s) d[s] = to[s] - from[s];
    if (std::all_of(d.v.begin(), d.v.end(), [](double e) { return e == 0.0; }))
        return 0.0;

    auto integrand = [&](double t) {
        return half_pairing(edge_lengths3(along(from, d, t)), d);
    };
    const auto res = quadrature::integrate(integrand, 0.0, 1.0,
                                           {opts.abs_tol, opts.max_intervals});
    if (!res.converged) {
        throw QuadratureFailure("Schlafli integral: error estimate " +
                                std::to_string(res.error_estimate) + " after " +
                                std::to_string(res.intervals) + " panels");
    }
    return res.value;
}

double tet_volume(const TetAngles& x, const VolumeOptions& opts)
{
    const TetAngles a = volume_base_point();
    TetAngles d;
    for (int s = 0; s < 6; ++s) d[s] = x[s] - a[s];
    if (std::all_of(d.v.begin(), d.v.end(), [](double e) { return e == 0.0; }))
        return 0.0;

    // The base point is Euclidean, where lengths grow like sqrt(t); with
    // t = s^2 the integrand is smooth at the start of the segment.
    auto integrand = [&](double s) {
        const double t = s * s;
        return 2.0 * s * half_pairing(edge_lengths3(along(a, d, t)), d);
    };
    const auto res = quadrature::integrate(integrand, 0.0, 1.0,
                                           {opts.abs_tol, opts.max_intervals});
    if (!res.converged) {
        throw QuadratureFailure("volume: error estimate " +
                                std::to_string(res.error_estimate) + " after " +
                                std::to_string(res.intervals) + " panels");
    }
    return res.value;
}

TetLengths tet_volume_gradient(const TetAngles& x)
{
    TetLengths g = edge_lengths3(x);
    for (double& e : g.v) e *= 0.5;
    return g;
}

TetAngles flip3(const TetAngles& x, int i)
{
    TetAngles y = x;
    for (int s = 0; s < 6; ++s) {
        const auto [a, b] = kSlotVertices[s];
        if (a != i && b != i) y[s] = kPi - x[s];
    }
    return y;
}

std::string TetClass::describe() const
{
    std::ostringstream out;
    switch (kind) {
        case Kind::Classical:
            out << "Classical";
            break;
        case Kind::SingleFlip:
            out << "SingleFlip(" << vertices[0] << ")";
            break;
        case Kind::DoubleFlip:
            out << "DoubleFlip(" << vertices[0] << "," << vertices[1] << ")";
            break;
    }
    out << "/" << to_string(type);
    return out.str();
}

TetClass classify_lengths3(const TetLengths& l)
{
    // Type: every edge must agree, up to edges sitting near the Euclidean
    // band when the type is not Euclidean (or vice versa).
    std::array<int, 3> votes{};
    for (double e : l.v) ++votes[static_cast<int>(classify_length(e))];
    GeometryType type;
    const int euclid = votes[static_cast<int>(GeometryType::Euclidean)];
    const int hyper = votes[static_cast<int>(GeometryType::Hyperbolic)];
    const int sphere = votes[static_cast<int>(GeometryType::Spherical)];
    if (hyper > 0 && sphere > 0) {
        throw UnclassifiablePattern("edges of both spherical and hyperbolic type");
    }
    if (euclid == 6) {
        type = GeometryType::Euclidean;
    } else {
        type = hyper > 0 ? GeometryType::Hyperbolic : GeometryType::Spherical;
        if (euclid > 0) {
            // A mixed vote is only acceptable right at the band's edge.
            for (double e : l.v) {
                if (distance_to_euclidean(e) > 1e-4 &&
                    classify_length(e) == GeometryType::Euclidean) {
                    throw UnclassifiablePattern("inconsistent edge types");
                }
            }
            if (euclid > 3) type = GeometryType::Euclidean;
        }
    }

    TetClass out;
    out.type = type;
    if (type == GeometryType::Spherical) {
        out.kind = TetClass::Kind::Classical;
        return out;
    }

    std::array<bool, 6> lng{};
    int n_long = 0;
    for (int s = 0; s < 6; ++s) {
        lng[s] = is_long(l[s]);
        n_long += lng[s];
        if (!lng[s] && !is_short(l[s])) {
            throw UnclassifiablePattern("edge slot " + std::to_string(s) +
                                        " has length in (0, pi) in a " +
                                        std::string(to_string(type)) +
                                        " tetrahedron");
        }
    }

    if (n_long == 0) {
        out.kind = TetClass::Kind::Classical;
        return out;
    }
    if (n_long == 3) {
        for (int i = 0; i < 4; ++i) {
            const auto o = others(i);
            if (lng[edge_slot(i, o[0])] && lng[edge_slot(i, o[1])] &&
                lng[edge_slot(i, o[2])]) {
                out.kind = TetClass::Kind::SingleFlip;
                out.vertices = {i, -1};
                return out;
            }
        }
    }
    if (n_long == 4) {
        // Short edges must be an opposite pair {0j, kl}.
        for (int j = 1; j < 4; ++j) {
            const int s = edge_slot(0, j);
            if (!lng[s] && !lng[opposite_slot(s)]) {
                out.kind = TetClass::Kind::DoubleFlip;
                out.vertices = {0, j};
                return out;
            }
        }
    }
    throw UnclassifiablePattern("long edges fit neither a vertex nor an "
                                "opposite-pair pattern");
}

TetClass classify3(const TetAngles& x)
{
    return classify_lengths3(edge_lengths3(x));
}

std::array<double, 3> opposite_pair_angle_sums(const TetAngles& x)
{
    const double p01 = x(0, 1) + x(2, 3);
    const double p02 = x(0, 2) + x(1, 3);
    const double p03 = x(0, 3) + x(1, 2);
    return {p01 + p02, p01 + p03, p02 + p03};
}

}  // namespace anglevol
