#include "totreal/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace totreal {

bool operator==(const IndexDegreePair& a, const IndexDegreePair& b) {
    return a.index == b.index && a.degree == b.degree;
}

bool operator==(const TotalMod2Degree& a, const TotalMod2Degree& b) {
    return a.d == b.d && a.s == b.s;
}

const char* decision_name(Decision d) {
    switch (d) {
        case Decision::Yes: return "YES";
        case Decision::No: return "NO";
        case Decision::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

namespace {

bool is_spin(const Target& t) {
    return t.kind == TargetKind::C2 || t.kind == TargetKind::CP1xCP1;
}

int mod4(int v) {
    int r = v % 4;
    return r < 0 ? r + 4 : r;
}

}  // namespace

Existence immersion_exists(const Surface& s, const Target& t) {
    if (!is_spin(t))
        return {Decision::Yes,
                "a totally real projective plane exists here, and immersibility "
                "is closed under connected sums"};
    if (euler_char(s) % 2 == 0)
        return {Decision::Yes,
                "even Euler characteristic; tori and Klein bottles immerse and "
                "connected sums preserve immersibility"};
    return {Decision::No,
            "spin target: w2 vanishes, forcing w1^2 = 0, so the Euler "
            "characteristic of an immersed surface must be even"};
}

Existence embedding_exists(const Surface& s, const Target& t) {
    int chi = euler_char(s);
    if (s.orientable) {
        if (s.genus == 1)
            return {Decision::Yes,
                    "products of planar curves give totally real tori in any "
                    "ball, hence in every model target"};
        if (s.genus == 0) {
            if (t.kind == TargetKind::CP1xCP1)
                return {Decision::Yes, "the antidiagonal sphere in the quadric is totally real"};
            if (t.kind == TargetKind::CP2Blowup && t.m >= 2)
                return {Decision::Yes,
                        "a round sphere through two blown-up points becomes "
                        "totally real after the blow-up"};
            if (t.kind == TargetKind::C2)
                return {Decision::No,
                        "trivial second homology forces self-intersection 0, "
                        "but an embedded sphere needs -2"};
            return {Decision::No,
                    "self-intersection would have to be -2, impossible in a "
                    "form equivalent to p^2 or p^2 - q^2"};
        }
        // genus >= 2
        if (t.kind == TargetKind::CP2Blowup && t.m >= 10)
            return {Decision::Unknown,
                    "degree equations admit solutions with negative chi once "
                    "m >= 10, but no construction is known"};
        if (t.kind == TargetKind::C2)
            return {Decision::No,
                    "trivial second homology forces self-intersection 0, so "
                    "the Euler characteristic of an embedded surface vanishes"};
        return {Decision::No,
                "negative Euler characteristic is excluded: the intersection "
                "form is Lorentzian with c1.c1 >= 0 here"};
    }
    // nonorientable
    int c4 = mod4(chi);
    switch (t.kind) {
        case TargetKind::C2:
            if (c4 == 0)
                return {Decision::Yes,
                        "Klein bottles embed and chi drops by 4 under summing "
                        "with a torus and a Klein bottle"};
            return {Decision::No,
                    "the Pontryagin square of an embedded degree class must be "
                    "chi mod 4, which vanishes in the affine plane"};
        case TargetKind::CP2:
            if (c4 == 0 || c4 == 1)
                return {Decision::Yes,
                        "the real projective plane and the Klein bottle embed; "
                        "chi mod 4 is preserved down the genus chain"};
            return {Decision::No,
                    "the Pontryagin square constraint forces chi = 0 or 1 mod 4 "
                    "when the form is equivalent to p^2"};
        case TargetKind::CP1xCP1:
            if (chi % 2 == 0)
                return {Decision::Yes,
                        "Klein bottles embed in the quadric, and spheres allow "
                        "the even-chi chain to continue"};
            return {Decision::No, "spin target: an immersion already requires even chi"};
        case TargetKind::CP2Blowup:
            if (t.m == 1) {
                if (c4 != 2)
                    return {Decision::Yes,
                            "blow-up constructions realize chi = -1, 0, 1 and the "
                            "genus chain descends in steps of 4"};
                return {Decision::No,
                        "the Pontryagin square constraint forces chi mod 4 in "
                        "{0, 1, 3} when the form is p^2 - q^2"};
            }
            return {Decision::Yes,
                    "spheres through blown-up points plus cross-cap steps "
                    "realize every nonorientable surface once m >= 2"};
    }
    return {Decision::Unknown, "unhandled target"};
}

ZSet z_set(const Surface& s, const Target& t) {
    Modulus q = q_of(t);
    SurfaceParams p = params(s);
    ZSet z;
    z.surface = s;
    z.target = t;
    z.index_descriptor = iq_set(s, q);

    bool half_case = !s.orientable && euler_char(s) % 2 == 0 && !q.is_infinite() &&
                     q.value() % 4 == 0;

    if (p.epsilon == 1) {
        // Integral degrees: Ker c_1 (empty for odd chi, which cannot happen
        // for closed orientable surfaces).
        auto coset = d_set_coset(t, s);
        bool degree_finite =
            t.kind == TargetKind::C2 || t.kind == TargetKind::CP2;  // Ker c_1 = {0}
        bool index_finite = z.index_descriptor.finite();
        z.finite = degree_finite && index_finite;
        if (z.finite) {
            DegreeClass zero{Ring::Z, std::vector<long long>(component_count(t), 0)};
            for (const IndexClass& ic : z.index_descriptor.enumerate())
                z.pairs.push_back(IndexDegreePair{ic, zero});
            std::sort(z.pairs.begin(), z.pairs.end(),
                      [](const IndexDegreePair& a, const IndexDegreePair& b) {
                          if (a.index == b.index) return degree_less(a.degree, b.degree);
                          return index_less(a.index, b.index);
                      });
        } else {
            z.degree_coset = coset;
        }
        return z;
    }

    // Nonorientable: Z2 degrees, always finitely many.
    std::vector<DegreeClass> degrees;
    for (const DegreeClass& d : enumerate_z2_classes(t))
        if (d_set_contains(t, s, d)) degrees.push_back(d);
    z.finite = z.index_descriptor.finite();
    if (!z.finite) {
        // Infinite index set (q infinite, even chi): describe instead of
        // enumerating; the finitely many admissible degrees are listed.
        z.degree_list = std::move(degrees);
        return z;
    }
    for (const IndexClass& ic : z.index_descriptor.enumerate()) {
        for (const DegreeClass& d : degrees) {
            if (half_case) {
                bool torsion_zero = ic.coords.back().value() == 0;
                if (torsion_zero != ker_c1_mod2(t, d)) continue;
            }
            z.pairs.push_back(IndexDegreePair{ic, d});
        }
    }
    std::sort(z.pairs.begin(), z.pairs.end(),
              [](const IndexDegreePair& a, const IndexDegreePair& b) {
                  if (a.index == b.index) return degree_less(a.degree, b.degree);
                  return index_less(a.index, b.index);
              });
    return z;
}

bool ZSet::contains(const IndexDegreePair& p) const {
    if (finite)
        return std::find(pairs.begin(), pairs.end(), p) != pairs.end();
    if (!index_descriptor.contains(p.index)) return false;
    SurfaceParams sp = params(surface);
    if ((sp.epsilon == 1) != (p.degree.ring == Ring::Z)) return false;
    if (p.degree.c.size() != component_count(target)) return false;
    if (sp.epsilon == 1) return c1_eval(target, p.degree) == 0;
    return d_set_contains(target, surface, p.degree);
}

bool ZSet::is_empty() const {
    if (finite) return pairs.empty();
    return false;  // infinite descriptors always describe nonempty sets here
}

bool embedding_admissible(const Surface& s, const Target& t, const IndexDegreePair& p) {
    ZSet z = z_set(s, t);
    if (!z.contains(p))
        throw std::invalid_argument("embedding_admissible: pair is not realizable by immersions");
    int chi = euler_char(s);
    if (s.orientable)
        return intersection(t, p.degree, p.degree) == -static_cast<long long>(chi);
    return pontryagin_square(t, p.degree) == mod4(chi);
}

Existence realized_by_embedding(const Surface& s, const Target& t, const IndexDegreePair& p) {
    if (!embedding_admissible(s, t, p))
        return {Decision::No, "self-intersection constraint on the degree fails"};
    if (t.kind != TargetKind::CP2Blowup)
        return {Decision::Yes,
                "explicit constructions realize every admissible pair in the "
                "unblown targets"};
    int m = t.m;
    if (m <= 7)
        return {Decision::Yes,
                "explicit constructions cover blow-ups of up to 7 points for "
                "all surfaces"};
    if (!s.orientable) {
        if (m <= 11)
            return {Decision::Yes,
                    "cross-cap chains through blown-up points realize all "
                    "admissible total degrees for m <= 11"};
        return {Decision::Unknown, "nonorientable realization beyond 11 blown-up points is open"};
    }
    if (m == 8)
        return {Decision::Yes,
                "deformations of pseudoholomorphic curves settle the 8-point "
                "blow-up for orientable surfaces"};
    if (m == 9 && s.genus == 1)
        return {Decision::Yes,
                "self-coverings of an embedded cubic torus realize every "
                "admissible 9-point degree"};
    if (m == 9 && s.genus == 0)
        return {Decision::Unknown,
                "the 9-point sphere degrees are classified algebraically but "
                "their realizability is open"};
    return {Decision::Unknown, "orientable realization beyond 9 blown-up points is open"};
}

TotalMod2Degree total_mod2_degree(const Target& t, const DegreeClass& x) {
    if (t.kind != TargetKind::CP2Blowup)
        throw std::invalid_argument("total_mod2_degree: target must be a blow-up");
    DegreeClass r = mod2_degree(t, x);
    int s = 0;
    for (std::size_t j = 1; j < r.c.size(); ++j) s += static_cast<int>(r.c[j]);
    return TotalMod2Degree{static_cast<int>(r.c[0]), s};
}

bool dvf_check(const Surface& s, const TotalMod2Degree& tmd) {
    if (s.orientable && s.genus >= 1)
        throw std::invalid_argument("dvf_check: stated only for nonorientable surfaces and the sphere");
    return (tmd.d - tmd.s - euler_char(s)) % 4 == 0;
}

BdmState bdm_step(const BdmState& st) {
    return BdmState{st.m + 1, connected_sum(st.surface, projective_plane()),
                    TotalMod2Degree{st.tmd.d, st.tmd.s + 1}};
}

namespace {

// Decision vector over orientable genera collapsed to a cell text.
std::string orientable_cell(const Target& t) {
    auto yes = [&](int g) {
        return embedding_exists(make_surface(true, g), t).value == Decision::Yes;
    };
    for (int g = 2; g <= 11; ++g)
        if (yes(g)) throw std::logic_error("table1: unexpected high-genus embedding");
    bool s2 = yes(0), t2 = yes(1);
    if (s2 && t2) return "S^2, T^2 only";
    if (t2) return "T^2 only";
    return "none";
}

// chi mod 4 residues realized by nonorientable surfaces, collapsed to text.
std::string nonorientable_cell(const Target& t) {
    std::array<int, 4> seen{-1, -1, -1, -1};  // -1 unseen, 0 no, 1 yes
    for (int g = 1; g <= 22; ++g) {
        Surface s = make_surface(false, g);
        int dec = embedding_exists(s, t).value == Decision::Yes ? 1 : 0;
        auto c4 = static_cast<std::size_t>(((euler_char(s) % 4) + 4) % 4);
        if (seen[c4] == -1) seen[c4] = dec;
        else if (seen[c4] != dec)
            throw std::logic_error("table1: decision not determined by chi mod 4");
    }
    std::array<bool, 4> ok{seen[0] == 1, seen[1] == 1, seen[2] == 1, seen[3] == 1};
    int count = static_cast<int>(ok[0]) + ok[1] + ok[2] + ok[3];
    if (count == 4) return "all";
    if (ok[0] && ok[2] && count == 2) return "chi(S) even";
    if (ok[0] && count == 1) return "chi(S) divisible by 4";
    if (ok[0] && ok[1] && count == 2) return "chi_4 in {0,1}";
    if (ok[0] && ok[1] && ok[3] && count == 3) return "chi_4 != 2";
    return "none";
}

std::string immersion_cell(const Target& t) {
    bool all = true;
    for (int g = 1; g <= 22; ++g)
        if (immersion_exists(make_surface(false, g), t).value != Decision::Yes) all = false;
    if (all) return "exists for all S";
    return "iff chi(S) is even";
}

}  // namespace

Table1 table1() {
    Table1 tab;
    const Target cp2 = make_target(TargetKind::CP2);
    const Target quadric = make_target(TargetKind::CP1xCP1);
    const Target c2 = make_target(TargetKind::C2);

    tab.orientable_embeddable[0] = orientable_cell(cp2);
    {
        std::string m1 = orientable_cell(make_target(TargetKind::CP2Blowup, 1));
        std::string m2 = orientable_cell(make_target(TargetKind::CP2Blowup, 2));
        for (int m = 3; m <= 9; ++m)
            if (orientable_cell(make_target(TargetKind::CP2Blowup, m)) != m2)
                throw std::logic_error("table1: unexpected blow-up variation");
        tab.orientable_embeddable[1] = m1 + " if m=1; " + m2 + " if 2<=m<=9";
    }
    tab.orientable_embeddable[2] = orientable_cell(quadric);
    tab.orientable_embeddable[3] = orientable_cell(c2);

    tab.nonorientable_embeddable[0] = nonorientable_cell(cp2);
    {
        std::string m1 = nonorientable_cell(make_target(TargetKind::CP2Blowup, 1));
        std::string m2 = nonorientable_cell(make_target(TargetKind::CP2Blowup, 2));
        for (int m = 3; m <= 9; ++m)
            if (nonorientable_cell(make_target(TargetKind::CP2Blowup, m)) != m2)
                throw std::logic_error("table1: unexpected blow-up variation");
        tab.nonorientable_embeddable[1] = m1 + " if m=1; " + m2 + " if 2<=m<=9";
    }
    tab.nonorientable_embeddable[2] = nonorientable_cell(quadric);
    tab.nonorientable_embeddable[3] = nonorientable_cell(c2);

    tab.immersion[0] = immersion_cell(cp2);
    tab.immersion[1] = immersion_cell(make_target(TargetKind::CP2Blowup, 1));
    tab.immersion[2] = immersion_cell(quadric);
    tab.immersion[3] = immersion_cell(c2);
    return tab;
}

Table2 table2() {
    // Columns are the cross-cap chain S^2 -> RP^2 -> K^2 -> K^2#RP^2 -> K^2#K^2.
    const std::array<Surface, 5> cols = {
        sphere(), projective_plane(), klein_bottle(),
        connected_sum(klein_bottle(), projective_plane()),
        connected_sum(klein_bottle(), klein_bottle())};
    // Rows are indexed by (d, k): allowed s = d - chi + 4k, shown while
    // 0 <= s <= 11.
    const std::array<std::pair<int, int>, Table2::kRows> rows = {
        {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1}}};

    Table2 tab;
    for (int r = 0; r < Table2::kRows; ++r) {
        auto [d, k] = rows[static_cast<std::size_t>(r)];
        std::optional<BdmState> chain;
        for (int c = 0; c < Table2::kCols; ++c) {
            const Surface& surf = cols[static_cast<std::size_t>(c)];
            int s = d - euler_char(surf) + 4 * k;
            if (s < 0 || s > 11) continue;
            TotalMod2Degree tmd{d, s};
            if (!dvf_check(surf, tmd))
                throw std::logic_error("table2: divisibility constraint violated");
            if (chain) {
                BdmState next = bdm_step(*chain);
                if (!(next.surface == surf) || !(next.tmd == tmd))
                    throw std::logic_error("table2: chain step mismatch");
                chain = next;
            } else {
                chain = BdmState{s, surf, tmd};
            }
            tab.cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                Table2Cell{true, tmd};
        }
    }
    return tab;
}

}  // namespace totreal
