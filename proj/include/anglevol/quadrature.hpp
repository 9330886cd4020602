#pragma once

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace anglevol::quadrature
{

/// Nodes and weights of the 15-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre15
{
    std::array<double, 15> nodes{};
    std::array<double, 15> weights{};
};

/// Rule computed once by Newton iteration on P_15.
const GaussLegendre15& gauss_legendre15();

struct Result
{
    double value = 0.0;
    double error_estimate = 0.0;
    int intervals = 0;
    bool converged = false;
};

struct Options
{
    double abs_tol = 1e-10;
    int max_intervals = 1 << 14;
};

template <class F>
double gauss15(const F& f, double a, double b)
{
    const auto& rule = gauss_legendre15();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return sum * half;
}

/// Adaptive composite Gauss-Legendre integration of f over [a, b].
///
/// Every panel carries its 15-point value and the sum over its two halves;
/// the difference serves as the panel's error estimate and the halves'
/// sum as its value. The panel with the largest estimate is bisected until
/// the summed estimate drops below abs_tol or the panel budget runs out
/// (then `converged` is false and the caller decides what to do).
template <class F>
Result integrate(const F& f, double a, double b, const Options& opts = {})
{
    struct Panel
    {
        double lo, hi, whole, left, right;
        [[nodiscard]] double error() const
        {
            return std::abs(whole - (left + right));
        }
        bool operator<(const Panel& o) const { return error() < o.error(); }
    };

    auto make = [&](double lo, double hi, double whole) {
        const double mid = 0.5 * (lo + hi);
        return Panel{lo, hi, whole, gauss15(f, lo, mid), gauss15(f, mid, hi)};
    };

    std::priority_queue<Panel> heap;
    heap.push(make(a, b, gauss15(f, a, b)));
    double total_error = heap.top().error();
    int panels = 1;

    while (total_error > opts.abs_tol && panels < opts.max_intervals) {
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        // Stop refining once the panel cannot be split in floating point.
        if (!(mid > worst.lo && mid < worst.hi)) {
            heap.push(worst);
            break;
        }
        Panel lp = make(worst.lo, mid, worst.left);
        Panel rp = make(mid, worst.hi, worst.right);
        total_error += lp.error() + rp.error() - worst.error();
        heap.push(lp);
        heap.push(rp);
        ++panels;
    }

    Result out;
    out.intervals = panels;
    double err = 0.0;
    double value = 0.0;
    std::vector<Panel> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    // Sum smallest contributions first.
    for (auto it = all.rbegin(); it != all.rend(); ++it) {
        value += it->left + it->right;
        err += it->error();
    }
    out.value = value;
    out.error_estimate = err;
    out.converged = err <= opts.abs_tol;
    return out;
}

}  // namespace anglevol::quadrature
