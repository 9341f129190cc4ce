#include "totreal/maslov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace totreal {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kResidualTol = 1e-6;
constexpr double kRelativeJTol = 1e-9;

using Cplx = std::complex<double>;

Cplx family_jacobian(const FamilySpec& f, double t, double s) {
    // J = x_s (y + a h)_t - x_t (y + a h)_s with the analytic partials
    //   x_s = e^{ikt} (cos s + 2i cos 2s),   x_t = ik x,
    //   (y + a h)_t = il e^{ilt} (cos s + a),  (y + a h)_s = -e^{ilt} sin s.
    const Cplx i(0.0, 1.0);
    Cplx ekt = std::exp(i * (static_cast<double>(f.k) * t));
    Cplx elt = std::exp(i * (static_cast<double>(f.l) * t));
    Cplx xs = ekt * Cplx(std::cos(s), 2.0 * std::cos(2.0 * s));
    Cplx xt = i * static_cast<double>(f.k) * ekt * Cplx(std::sin(s), std::sin(2.0 * s));
    Cplx ut = i * static_cast<double>(f.l) * elt * (std::cos(s) + f.a);
    Cplx us = -elt * std::sin(s);
    return xs * ut - xt * us;
}

Cplx sampled_jacobian(const SampledSpec& g, double t, double s, double a) {
    auto wrap = [&](double v) {
        double u = std::fmod(v, kTwoPi);
        if (u < 0) u += kTwoPi;
        return u;
    };
    int n = g.n;
    double step = kTwoPi / n;
    int it = static_cast<int>(std::lround(wrap(t) / step)) % n;
    int is = static_cast<int>(std::lround(wrap(s) / step)) % n;
    auto at = [&](const std::vector<Cplx>& v, int a_, int b_) {
        return v[static_cast<std::size_t>(((a_ % n + n) % n) * n + ((b_ % n + n) % n))];
    };
    auto dt = [&](const std::vector<Cplx>& v) {
        return (at(v, it + 1, is) - at(v, it - 1, is)) / (2.0 * step);
    };
    auto ds = [&](const std::vector<Cplx>& v) {
        return (at(v, it, is + 1) - at(v, it, is - 1)) / (2.0 * step);
    };
    Cplx xs = ds(g.x), xt = dt(g.x);
    Cplx ut = dt(g.y) + a * dt(g.h);
    Cplx us = ds(g.y) + a * ds(g.h);
    return xs * ut - xt * us;
}

}  // namespace

FamilySpec make_family(int k, int l, double a) {
    if (l == 0) throw std::invalid_argument("make_family: l must be nonzero");
    return FamilySpec{k, l, a};
}

SampledSpec SampledSpec::from_values(int n, double a, std::vector<Cplx> x,
                                     std::vector<Cplx> y, std::vector<Cplx> h) {
    if (n < 8) throw std::invalid_argument("SampledSpec: grid too coarse");
    auto sz = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (x.size() != sz || y.size() != sz || h.size() != sz)
        throw std::invalid_argument("SampledSpec: value arrays must be n*n");
    return SampledSpec{n, a, std::move(x), std::move(y), std::move(h)};
}

std::complex<double> jacobian(const ImmersionSpec& spec, double t, double s) {
    if (const auto* f = std::get_if<FamilySpec>(&spec)) return family_jacobian(*f, t, s);
    const auto& g = std::get<SampledSpec>(spec);
    return sampled_jacobian(g, t, s, g.a);
}

RealityReport total_reality_check(const ImmersionSpec& spec, int grid_n) {
    if (grid_n < 64) throw std::invalid_argument("total_reality_check: grid_n must be >= 64");
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    double step = kTwoPi / grid_n;
    for (int it = 0; it < grid_n; ++it)
        for (int is = 0; is < grid_n; ++is) {
            double m = std::abs(jacobian(spec, it * step, is * step));
            lo = std::min(lo, m);
            hi = std::max(hi, m);
        }
    return RealityReport{lo > kRelativeJTol * hi, lo, hi};
}

WindingResult winding_number(const std::vector<Cplx>& loop) {
    if (loop.size() < 3) throw std::invalid_argument("winding_number: loop too short");
    double total = 0.0;
    for (std::size_t j = 0; j < loop.size(); ++j) {
        const Cplx& z0 = loop[j];
        const Cplx& z1 = loop[(j + 1) % loop.size()];
        if (std::abs(z0) == 0.0)
            throw std::invalid_argument("winding_number: zero sample");
        double delta = std::arg(z1 / z0);
        if (std::abs(delta) >= std::numbers::pi - 1e-9)
            throw std::invalid_argument("winding_number: argument jump >= pi (undersampled)");
        total += delta;
    }
    double raw = total / kTwoPi;
    long long n = std::llround(raw);
    return WindingResult{raw, n, std::abs(raw - n)};
}

WindingResult winding_along(const ImmersionSpec& spec, int t_coef, int s_coef, int samples) {
    if (samples < 16) throw std::invalid_argument("winding_along: too few samples");
    std::vector<Cplx> loop(static_cast<std::size_t>(samples));
    double step = kTwoPi / samples;
    for (int j = 0; j < samples; ++j)
        loop[static_cast<std::size_t>(j)] =
            jacobian(spec, t_coef * j * step, s_coef * j * step);
    return winding_number(loop);
}

namespace {

// Argument increment of u -> J(u, 0) over the half period [0, pi], divided
// by pi.  Integral for the Klein-bottle index: the descent relation gives
// J(t + pi, 0) = -J(t, 0), so the increment is an odd multiple of pi.
WindingResult half_winding(const ImmersionSpec& spec, int samples) {
    double step = std::numbers::pi / samples;
    double total = 0.0;
    Cplx prev = jacobian(spec, 0.0, 0.0);
    for (int j = 1; j <= samples; ++j) {
        Cplx cur = jacobian(spec, j * step, 0.0);
        if (std::abs(prev) == 0.0 || std::abs(cur) == 0.0)
            throw std::invalid_argument("half_winding: zero sample");
        double delta = std::arg(cur / prev);
        if (std::abs(delta) >= std::numbers::pi - 1e-9)
            throw std::invalid_argument("half_winding: argument jump >= pi (undersampled)");
        total += delta;
        prev = cur;
    }
    double raw = total / std::numbers::pi;
    long long n = std::llround(raw);
    return WindingResult{raw, n, std::abs(raw - n)};
}

}  // namespace

MaslovResult maslov_index(const ImmersionSpec& spec, SurfaceMode mode, int grid_n) {
    if (const auto* f = std::get_if<FamilySpec>(&spec); f && mode == SurfaceMode::Klein) {
        if (f->k % 2 == 0 || f->l % 2 != 0)
            throw std::invalid_argument(
                "maslov_index: Klein-bottle mode needs k odd and l even");
    }
    RealityReport reality = total_reality_check(spec, grid_n);
    if (!reality.totally_real)
        throw std::runtime_error("maslov_index: Jacobian vanishes on the grid");

    Modulus inf = Modulus::infinity();
    if (mode == SurfaceMode::Torus) {
        WindingResult p = winding_along(spec, 0, 1, grid_n);
        WindingResult r = winding_along(spec, 1, 0, grid_n);
        double residual = std::max(p.residual, r.residual);
        if (residual > kResidualTol)
            throw std::runtime_error("maslov_index: residual too large, refine the grid");
        IndexClass idx{inf, {CycElem(inf, 2 * p.n), CycElem(inf, 2 * r.n)}};
        return MaslovResult{idx, residual, reality.min_abs_j};
    }
    WindingResult m = half_winding(spec, grid_n);
    if (m.residual > kResidualTol)
        throw std::runtime_error("maslov_index: residual too large, refine the grid");
    IndexClass idx{inf, {CycElem(inf, m.n), CycElem(inf, 0)}};
    return MaslovResult{idx, m.residual, reality.min_abs_j};
}

Sl2Matrix sl2_realizer(long long p, long long r) {
    if (p == 0 && r == 0)
        throw std::invalid_argument("sl2_realizer: (0, 0) needs no reparametrization");
    long long g = std::gcd(p, r);
    long long pp = p / g, rr = r / g;
    // extended gcd: u * rr + v * pp = 1
    long long old_r = rr, cur_r = pp;
    long long old_u = 1, cur_u = 0;
    long long old_v = 0, cur_v = 1;
    while (cur_r != 0) {
        long long qt = old_r / cur_r;
        std::swap(old_r -= qt * cur_r, cur_r);
        std::swap(old_u -= qt * cur_u, cur_u);
        std::swap(old_v -= qt * cur_v, cur_v);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    long long b = old_u, c = -old_v;
    Sl2Matrix out{b, c, pp, rr};
    if (b * rr - c * pp != 1)
        throw std::logic_error("sl2_realizer: determinant normalization failed");
    return out;
}

}  // namespace totreal
