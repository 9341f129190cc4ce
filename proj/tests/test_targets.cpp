#include "totreal/targets.hpp"

#include <doctest.h>

#include <random>

using namespace totreal;

namespace {

DegreeClass zdeg(const Target& t, std::vector<long long> c) {
    return make_degree(t, Ring::Z, std::move(c));
}

DegreeClass z2deg(const Target& t, std::vector<long long> c) {
    return make_degree(t, Ring::Z2, std::move(c));
}

DegreeClass add_deg(const DegreeClass& a, const DegreeClass& b) {
    DegreeClass out = a;
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
    return out;
}

std::vector<Target> all_targets(int max_m) {
    std::vector<Target> out{make_target(TargetKind::C2), make_target(TargetKind::CP2),
                            make_target(TargetKind::CP1xCP1)};
    for (int m = 1; m <= max_m; ++m) out.push_back(make_target(TargetKind::CP2Blowup, m));
    return out;
}

}  // namespace

TEST_CASE("frame-bundle order per target") {
    CHECK(q_of(make_target(TargetKind::CP2)) == Modulus::finite(6));
    CHECK(q_of(make_target(TargetKind::CP1xCP1)) == Modulus::finite(4));
    CHECK(q_of(make_target(TargetKind::CP2Blowup, 9)) == Modulus::finite(2));
    CHECK(q_of(make_target(TargetKind::C2)).is_infinite());
}

TEST_CASE("intersection forms") {
    Target b2 = make_target(TargetKind::CP2Blowup, 2);
    DegreeClass v = zdeg(b2, {0, 1, -1});
    CHECK(intersection(b2, v, v) == -2);

    Target quadric = make_target(TargetKind::CP1xCP1);
    DegreeClass w = zdeg(quadric, {1, -1});
    CHECK(intersection(quadric, w, w) == -2);

    DegreeClass zero = zdeg(quadric, {0, 0});
    CHECK(intersection(quadric, w, zero) == 0);
    CHECK(intersection(make_target(TargetKind::C2), zdeg(make_target(TargetKind::C2), {}),
                       zdeg(make_target(TargetKind::C2), {})) == 0);

    CHECK_THROWS_AS(intersection(quadric, w, zdeg(b2, {0, 0, 0})), std::invalid_argument);
}

TEST_CASE("first Chern class evaluation") {
    Target b9 = make_target(TargetKind::CP2Blowup, 9);
    CHECK(c1_eval(b9, zdeg(b9, {3, 1, 1, 1, 1, 1, 1, 1, 1, 1})) == 0);
    Target quadric = make_target(TargetKind::CP1xCP1);
    CHECK(c1_eval(quadric, zdeg(quadric, {1, 0})) == 2);
    Target cp2 = make_target(TargetKind::CP2);
    CHECK(c1_eval(cp2, zdeg(cp2, {1})) == 3);
    CHECK_THROWS_AS(c1_eval(cp2, z2deg(cp2, {1})), std::invalid_argument);
}

TEST_CASE("second Stiefel-Whitney class") {
    Target cp2 = make_target(TargetKind::CP2);
    CHECK(w2_eval(cp2, z2deg(cp2, {1})) == 1);
    Target quadric = make_target(TargetKind::CP1xCP1);
    CHECK(w2_eval(quadric, z2deg(quadric, {1, 1})) == 0);
    Target b1 = make_target(TargetKind::CP2Blowup, 1);
    CHECK(w2_eval(b1, z2deg(b1, {1, 1})) == 0);
}

TEST_CASE("w2 is the parity of c1 on lifts") {
    for (int m = 1; m <= 4; ++m) {
        Target t = make_target(TargetKind::CP2Blowup, m);
        for (const DegreeClass& x : enumerate_z2_classes(t)) {
            DegreeClass lift = zdeg(t, x.c);
            CHECK(w2_eval(t, x) == (c1_eval(t, lift) % 2 + 2) % 2);
        }
    }
}

TEST_CASE("admissible degree sets") {
    Target cp2 = make_target(TargetKind::CP2);
    CHECK(d_set_contains(cp2, projective_plane(), z2deg(cp2, {1})));
    Target c2 = make_target(TargetKind::C2);
    CHECK_FALSE(d_set_contains(c2, projective_plane(), z2deg(c2, {})));
    CHECK(d_set_contains(cp2, torus(), zdeg(cp2, {0})));
    CHECK_FALSE(d_set_contains(cp2, torus(), zdeg(cp2, {1})));
    CHECK_THROWS_AS(d_set_contains(cp2, torus(), z2deg(cp2, {0})), std::invalid_argument);
}

TEST_CASE("Pontryagin square values") {
    Target cp2 = make_target(TargetKind::CP2);
    CHECK(pontryagin_square(cp2, z2deg(cp2, {1})) == 1);
    Target b3 = make_target(TargetKind::CP2Blowup, 3);
    CHECK(pontryagin_square(b3, z2deg(b3, {1, 1, 1, 1})) == 2);
    Target c2 = make_target(TargetKind::C2);
    CHECK(pontryagin_square(c2, z2deg(c2, {})) == 0);
}

TEST_CASE("Pontryagin square is lift independent") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<long long> bit(0, 1);
    std::uniform_int_distribution<long long> eta(-3, 3);
    for (const Target& t : all_targets(9)) {
        if (t.kind == TargetKind::C2) continue;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<long long> mu(component_count(t));
            for (auto& v : mu) v = bit(rng);
            DegreeClass x = z2deg(t, mu);
            int sq = pontryagin_square(t, x);
            // perturb the canonical 0/1 lift by twice a random class
            DegreeClass lift = zdeg(t, x.c);
            DegreeClass shift = lift;
            for (auto& v : shift.c) v = 2 * eta(rng);
            DegreeClass other = add_deg(lift, shift);
            long long self = intersection(t, other, other);
            CHECK(((self % 4) + 4) % 4 == sq);
        }
    }
}

TEST_CASE("intersection is symmetric and bilinear") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> val(-5, 5);
    for (const Target& t : all_targets(5)) {
        for (int trial = 0; trial < 50; ++trial) {
            auto rand_deg = [&] {
                std::vector<long long> c(component_count(t));
                for (auto& v : c) v = val(rng);
                return zdeg(t, c);
            };
            DegreeClass x = rand_deg(), y = rand_deg(), z = rand_deg();
            CHECK(intersection(t, x, y) == intersection(t, y, x));
            CHECK(intersection(t, add_deg(x, y), z) ==
                  intersection(t, x, z) + intersection(t, y, z));
        }
    }
}

TEST_CASE("blow-up basis is diagonal with signature (+1, -m)") {
    Target t = make_target(TargetKind::CP2Blowup, 4);
    std::size_t n = component_count(t);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<long long> ei(n, 0), ej(n, 0);
            ei[i] = 1;
            ej[j] = 1;
            long long expect = i != j ? 0 : (i == 0 ? 1 : -1);
            CHECK(intersection(t, zdeg(t, ei), zdeg(t, ej)) == expect);
        }
    }
}

TEST_CASE("kernel of c1 reduces onto kernel of w2") {
    // explicit integral preimages for every even class, m <= 6
    for (int m = 1; m <= 6; ++m) {
        Target t = make_target(TargetKind::CP2Blowup, m);
        for (const DegreeClass& x : enumerate_z2_classes(t)) {
            bool even = w2_eval(t, x) == 0;
            CHECK(ker_c1_mod2(t, x) == even);
            auto lift = ker_c1_preimage(t, x);
            CHECK(lift.has_value() == even);
            if (lift) {
                CHECK(c1_eval(t, *lift) == 0);
                for (std::size_t j = 0; j < x.c.size(); ++j)
                    CHECK((((lift->c[j] % 2) + 2) % 2) == x.c[j]);
            }
        }
    }
}

TEST_CASE("mod-2 kernel membership for the quadric") {
    Target quadric = make_target(TargetKind::CP1xCP1);
    CHECK(ker_c1_mod2(quadric, z2deg(quadric, {1, 1})));
    CHECK_FALSE(ker_c1_mod2(quadric, z2deg(quadric, {1, 0})));
    Target cp2 = make_target(TargetKind::CP2);
    CHECK(ker_c1_mod2(cp2, z2deg(cp2, {0})));
}

TEST_CASE("degree coset descriptions") {
    Target b3 = make_target(TargetKind::CP2Blowup, 3);
    auto cd = d_set_coset(b3, torus());
    REQUIRE(cd.has_value());
    CHECK(cd->generators.size() == 3);
    for (const DegreeClass& g : cd->generators) CHECK(c1_eval(b3, g) == 0);
    CHECK_FALSE(d_set_coset(b3, projective_plane()).has_value());
}
