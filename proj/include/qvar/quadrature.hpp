#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace qvar {

/// Gauss-Legendre rule on [-1,1].
struct gl_rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule of the given order (order >= 1). Thread-safe after first use of
/// a given order; orders are computed deterministically by Newton iteration.
const gl_rule& gauss_legendre(int order);

/// Breakpoint set for panel integration: strictly increasing, >= 2 entries.
using breaks = std::vector<double>;

/// Integrate f over each [b_i, b_{i+1}] with a fixed-order rule; panels are
/// accumulated left to right so the result does not depend on thread count.
template <class F>
double integrate_panels(F&& f, const breaks& b, int order) {
    const gl_rule& r = gauss_legendre(order);
    double total = 0.0;
    for (std::size_t p = 0; p + 1 < b.size(); ++p) {
        const double mid = 0.5 * (b[p] + b[p + 1]);
        const double half = 0.5 * (b[p + 1] - b[p]);
        double acc = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i)
            acc += r.weights[i] * f(mid + half * r.nodes[i]);
        total += half * acc;
    }
    return total;
}

/// Builder that collects breakpoints for one axis and emits a sorted, deduplicated set.
class break_builder {
public:
    break_builder(double lo, double hi) : lo_(lo), hi_(hi) {
        pts_.push_back(lo);
        pts_.push_back(hi);
    }

    /// Force a panel boundary at x (ignored outside [lo,hi]).
    void cut(double x) {
        if (x > lo_ && x < hi_) pts_.push_back(x);
    }

    /// Geometric refinement toward `point` (a kink or an algebraic singularity):
    /// panel edges at point +/- h, 2h, 4h, ... up to `extent`, with `levels`
    /// halvings below `extent`.
    void grade_toward(double point, double extent, int levels) {
        double h = extent;
        for (int l = 0; l < levels && h > 0.0; ++l) {
            cut(point - h);
            cut(point + h);
            h *= 0.5;
        }
        cut(point);
    }

    /// Uniform panels of width at most `h` over the whole range.
    void max_width(double h) { max_w_ = std::min(max_w_, h); }

    breaks build() const {
        breaks b = pts_;
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end(),
                            [](double a, double c) { return c - a < 1e-14 * (std::abs(a) + 1.0); }),
                b.end());
        if (b.size() < 2) b = {lo_, hi_};
        if (max_w_ < (hi_ - lo_)) {
            breaks out;
            for (std::size_t i = 0; i + 1 < b.size(); ++i) {
                out.push_back(b[i]);
                const double len = b[i + 1] - b[i];
                const int extra = static_cast<int>(std::ceil(len / max_w_)) - 1;
                for (int j = 1; j <= extra; ++j)
                    out.push_back(b[i] + len * j / (extra + 1));
            }
            out.push_back(b.back());
            return out;
        }
        return b;
    }

private:
    double lo_, hi_;
    double max_w_ = std::numeric_limits<double>::infinity();
    std::vector<double> pts_;
};

/// Panel layout for a decaying-weight integral of the form
/// int_{max(0, c-len)}^{c} e^{-theta (c-x)} f(x) dx: fine panels (width ~ 1/ppu)
/// at the x = c end, doubling toward the window edge.
inline void exp_window_cuts(break_builder& bb, double c, double lo, double theta, int ppu) {
    double h = std::min(1.0 / ppu, 0.5 / std::max(theta, 1e-3));
    double x = c;
    while (x > lo && h < 4.0 * (c - lo)) {
        x -= h;
        bb.cut(x);
        h *= 2.0;
        double cap = 2.0 / std::max(theta, 0.25);
        if (h > cap) h = cap;
    }
}

/// Window length so that the discarded e^{-theta L} tail, against polynomially
/// growing kernels up to time scale c, stays below tol.
inline double exp_window_length(double theta, double c, double tol) {
    const double safety = -std::log(std::max(tol, 1e-300)) + 3.0 * std::log(2.0 + c) + 5.0;
    return safety / theta;
}

} // namespace qvar
