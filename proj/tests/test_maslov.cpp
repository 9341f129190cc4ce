#include "totreal/maslov.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace totreal;

namespace {

using Cplx = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Cplx family_x(const FamilySpec& f, double t, double s) {
    return std::exp(Cplx(0, f.k * t)) * Cplx(std::sin(s), std::sin(2 * s));
}

Cplx family_u(const FamilySpec& f, double t, double s) {
    return std::exp(Cplx(0, f.l * t)) * (std::cos(s) + f.a);
}

// Independent route: differentiate the component functions numerically and
// assemble the Jacobian from the difference quotients.
Cplx fd_jacobian(const FamilySpec& f, double t, double s) {
    const double h = 1e-5;
    auto dx = [&](auto fn, double dt, double ds) {
        return (fn(f, t + dt * h, s + ds * h) - fn(f, t - dt * h, s - ds * h)) / (2 * h);
    };
    Cplx xs = dx(family_x, 0, 1), xt = dx(family_x, 1, 0);
    Cplx us = dx(family_u, 0, 1), ut = dx(family_u, 1, 0);
    return xs * ut - xt * us;
}

long long index_coord(const MaslovResult& r, int i) {
    return r.index.coords[static_cast<std::size_t>(i)].value_ll();
}

SampledSpec sample_family(const FamilySpec& f, int n) {
    std::vector<Cplx> x(static_cast<std::size_t>(n) * n), y(x.size()), h(x.size());
    double step = kTwoPi / n;
    for (int it = 0; it < n; ++it)
        for (int is = 0; is < n; ++is) {
            double t = it * step, s = is * step;
            auto idx = static_cast<std::size_t>(it) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(is);
            x[idx] = family_x(f, t, s);
            y[idx] = std::exp(Cplx(0, f.l * t)) * std::cos(s);
            h[idx] = std::exp(Cplx(0, f.l * t));
        }
    return SampledSpec::from_values(n, f.a, std::move(x), std::move(y), std::move(h));
}

}  // namespace

TEST_CASE("analytic Jacobian matches the finite-difference route") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (const FamilySpec& f :
         {make_family(0, 1, 0.0), make_family(1, 1, 10.0), make_family(-2, 3, 5.0),
          make_family(3, 2, 7.0)}) {
        ImmersionSpec spec{f};
        for (int i = 0; i < 50; ++i) {
            double t = angle(rng), s = angle(rng);
            Cplx got = jacobian(spec, t, s);
            Cplx want = fd_jacobian(f, t, s);
            CHECK(std::abs(got - want) < 1e-6 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("Jacobian is affine in the amplitude") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (int i = 0; i < 100; ++i) {
        double t = angle(rng), s = angle(rng);
        Cplx j0 = jacobian(ImmersionSpec{make_family(2, 1, 0.0)}, t, s);
        Cplx j1 = jacobian(ImmersionSpec{make_family(2, 1, 1.0)}, t, s);
        Cplx j7 = jacobian(ImmersionSpec{make_family(2, 1, 7.0)}, t, s);
        CHECK(std::abs(j7 - (j0 + 7.0 * (j1 - j0))) < 1e-9 * (1.0 + std::abs(j7)));
    }
}

TEST_CASE("Jacobian grows with the amplitude") {
    double prev = 0.0;
    for (double a : {10.0, 20.0, 40.0, 80.0}) {
        RealityReport r = total_reality_check(ImmersionSpec{make_family(1, 1, a)}, 64);
        CHECK(r.min_abs_j > prev);
        prev = r.min_abs_j;
    }
}

TEST_CASE("total reality of the built-in family") {
    CHECK(total_reality_check(ImmersionSpec{make_family(1, 1, 10.0)}, 256).totally_real);
    // at a = 0 with k = l = 1 the Jacobian is i - 2 cos^3 s: modulus >= 1
    RealityReport flat = total_reality_check(ImmersionSpec{make_family(1, 1, 0.0)}, 256);
    CHECK(flat.totally_real);
    CHECK(flat.min_abs_j == doctest::Approx(1.0).epsilon(1e-3));
    // with k = 0 the Jacobian vanishes where cos s = 0
    CHECK_FALSE(total_reality_check(ImmersionSpec{make_family(0, 1, 0.0)}, 256).totally_real);
    CHECK_THROWS_AS(total_reality_check(ImmersionSpec{make_family(1, 1, 1.0)}, 32),
                    std::invalid_argument);
}

TEST_CASE("doubling the grid keeps a positive verdict") {
    CHECK(total_reality_check(ImmersionSpec{make_family(1, 1, 10.0)}, 128).totally_real);
    CHECK(total_reality_check(ImmersionSpec{make_family(1, 1, 10.0)}, 256).totally_real);
    CHECK(total_reality_check(ImmersionSpec{make_family(1, 1, 10.0)}, 512).totally_real);
}

TEST_CASE("torus indices of the built-in family") {
    for (int k = -2; k <= 3; ++k) {
        MaslovResult r =
            maslov_index(ImmersionSpec{make_family(k, 1, 10.0)}, SurfaceMode::Torus, 256);
        CHECK(index_coord(r, 0) == 0);
        CHECK(index_coord(r, 1) == 2 * k + 2);
        CHECK(r.residual_max < 1e-6);
    }
}

TEST_CASE("Klein bottle indices of the built-in family") {
    for (int k : {-1, 1, 3}) {
        MaslovResult r =
            maslov_index(ImmersionSpec{make_family(k, 2, 10.0)}, SurfaceMode::Klein, 256);
        CHECK(index_coord(r, 0) == k + 2);
        CHECK(index_coord(r, 1) == 0);
        CHECK(r.residual_max < 1e-6);
    }
    CHECK_THROWS_AS(
        maslov_index(ImmersionSpec{make_family(2, 2, 10.0)}, SurfaceMode::Klein, 256),
        std::invalid_argument);
    CHECK_THROWS_AS(
        maslov_index(ImmersionSpec{make_family(1, 1, 10.0)}, SurfaceMode::Klein, 256),
        std::invalid_argument);
}

TEST_CASE("the s-loop winding vanishes for the family") {
    for (int k : {-1, 0, 2}) {
        WindingResult w =
            winding_along(ImmersionSpec{make_family(k, 1, 10.0)}, 0, 1, 256);
        CHECK(w.n == 0);
        CHECK(w.residual < 1e-9);
    }
}

TEST_CASE("finite-amplitude windings agree with the limit integrand") {
    // The s- and t-loop windings of the full Jacobian must match those of
    // its amplitude limit x_s h_t once the amplitude dominates.
    auto limit_loop = [](const FamilySpec& f, bool t_loop, int n) {
        std::vector<Cplx> loop(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            double u = kTwoPi * j / n;
            double t = t_loop ? u : 0.25;
            double s = t_loop ? 0.25 : u;
            Cplx xs = std::exp(Cplx(0, f.k * t)) * Cplx(std::cos(s), 2.0 * std::cos(2 * s));
            Cplx ht = Cplx(0, f.l) * std::exp(Cplx(0, f.l * t));
            loop[static_cast<std::size_t>(j)] = xs * ht;
        }
        return loop;
    };
    for (double a : {10.0, 50.0})
        for (int k : {-1, 2})
            for (int l : {1, 2}) {
                FamilySpec f = make_family(k, l, a);
                ImmersionSpec spec{f};
                CHECK(winding_along(spec, 0, 1, 256).n ==
                      winding_number(limit_loop(f, false, 256)).n);
                CHECK(winding_along(spec, 1, 0, 256).n ==
                      winding_number(limit_loop(f, true, 256)).n);
            }
}

TEST_CASE("index does not depend on the amplitude above threshold") {
    for (double a : {5.0, 10.0, 50.0}) {
        MaslovResult r =
            maslov_index(ImmersionSpec{make_family(2, 1, a)}, SurfaceMode::Torus, 256);
        CHECK(index_coord(r, 0) == 0);
        CHECK(index_coord(r, 1) == 6);
    }
}

TEST_CASE("indices land in the right index sets") {
    Modulus inf = Modulus::infinity();
    MaslovResult torus_r =
        maslov_index(ImmersionSpec{make_family(2, 1, 10.0)}, SurfaceMode::Torus, 256);
    CHECK(iq_set(torus(), inf).contains(torus_r.index));
    MaslovResult klein_r =
        maslov_index(ImmersionSpec{make_family(1, 2, 10.0)}, SurfaceMode::Klein, 256);
    CHECK(iq_set(klein_bottle(), inf).contains(klein_r.index));
}

TEST_CASE("grid refinement does not change the index") {
    MaslovResult coarse =
        maslov_index(ImmersionSpec{make_family(3, 1, 10.0)}, SurfaceMode::Torus, 256);
    MaslovResult fine =
        maslov_index(ImmersionSpec{make_family(3, 1, 10.0)}, SurfaceMode::Torus, 1024);
    CHECK(index_coord(coarse, 0) == index_coord(fine, 0));
    CHECK(index_coord(coarse, 1) == index_coord(fine, 1));
}

TEST_CASE("winding numbers of sampled loops") {
    auto circle = [](int turns, int n) {
        std::vector<Cplx> loop(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            loop[static_cast<std::size_t>(j)] = std::exp(Cplx(0, turns * kTwoPi * j / n));
        return loop;
    };
    WindingResult one = winding_number(circle(1, 128));
    CHECK(one.n == 1);
    CHECK(one.residual < 1e-9);
    CHECK(winding_number(std::vector<Cplx>(64, Cplx(2, 1))).n == 0);
    CHECK(winding_number(circle(3, 128)).n == 3);

    std::vector<Cplx> with_zero = circle(1, 128);
    with_zero[5] = 0.0;
    CHECK_THROWS_AS(winding_number(with_zero), std::invalid_argument);
    // a half-turn per sample is the detectable undersampling boundary
    CHECK_THROWS_AS(winding_number(circle(32, 64)), std::invalid_argument);
}

TEST_CASE("winding numbers add under pointwise products") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> turns(-3, 3);
    std::uniform_real_distribution<double> wobble(0.5, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 256;
        int ta = turns(rng), tb = turns(rng);
        std::vector<Cplx> a(static_cast<std::size_t>(n)), b(a.size()), ab(a.size());
        for (int j = 0; j < n; ++j) {
            double phase = kTwoPi * j / n;
            a[static_cast<std::size_t>(j)] = wobble(rng) * std::exp(Cplx(0, ta * phase));
            b[static_cast<std::size_t>(j)] = wobble(rng) * std::exp(Cplx(0, tb * phase));
            ab[static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)];
        }
        CHECK(winding_number(ab).n == winding_number(a).n + winding_number(b).n);
    }
}

TEST_CASE("integer reparametrization realizes prescribed indices") {
    struct Case {
        long long p, r;
    };
    for (Case c : {Case{1, 0}, Case{0, 2}, Case{2, 4}}) {
        Sl2Matrix mat = sl2_realizer(c.p, c.r);
        CHECK(mat.a * mat.d - mat.b * mat.c == 1);
        long long g = std::gcd(c.p, c.r);
        CHECK(mat.c == c.p / g);
        CHECK(mat.d == c.r / g);
        // compose the index-(0, 2g) immersion with the torus automorphism
        ImmersionSpec base{make_family(static_cast<int>(g) - 1, 1, 10.0)};
        WindingResult w1 = winding_along(base, static_cast<int>(mat.c),
                                         static_cast<int>(mat.a), 512);
        WindingResult w2 = winding_along(base, static_cast<int>(mat.d),
                                         static_cast<int>(mat.b), 512);
        CHECK(2 * w1.n == 2 * c.p);
        CHECK(2 * w2.n == 2 * c.r);
    }
    Sl2Matrix ex = sl2_realizer(1, 0);
    CHECK(ex.a == 0);
    CHECK(ex.b == -1);
    CHECK(ex.c == 1);
    CHECK(ex.d == 0);
    CHECK(sl2_realizer(2, 2).c == 1);
    CHECK(sl2_realizer(2, 2).d == 1);
    CHECK_THROWS_AS(sl2_realizer(0, 0), std::invalid_argument);

    std::mt19937 rng(13);
    std::uniform_int_distribution<long long> val(-12, 12);
    for (int i = 0; i < 200; ++i) {
        long long p = val(rng), r = val(rng);
        if (p == 0 && r == 0) continue;
        Sl2Matrix m = sl2_realizer(p, r);
        CHECK(m.a * m.d - m.b * m.c == 1);
    }
}

TEST_CASE("the trivial index needs no reparametrization") {
    MaslovResult r =
        maslov_index(ImmersionSpec{make_family(-1, 1, 10.0)}, SurfaceMode::Torus, 256);
    CHECK(index_coord(r, 0) == 0);
    CHECK(index_coord(r, 1) == 0);
}

TEST_CASE("sampled grids agree with the analytic family") {
    FamilySpec f = make_family(1, 1, 10.0);
    ImmersionSpec sampled{sample_family(f, 256)};
    ImmersionSpec analytic{f};
    double step = kTwoPi / 256;
    for (int it : {0, 17, 100, 255})
        for (int is : {3, 64, 200}) {
            Cplx got = jacobian(sampled, it * step, is * step);
            Cplx want = jacobian(analytic, it * step, is * step);
            CHECK(std::abs(got - want) < 2e-2 * (1.0 + std::abs(want)));
        }
    MaslovResult r = maslov_index(sampled, SurfaceMode::Torus, 256);
    CHECK(index_coord(r, 0) == 0);
    CHECK(index_coord(r, 1) == 4);
}
