#include "totreal/targets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace totreal {

Target make_target(TargetKind kind, int m) {
    if (kind == TargetKind::CP2Blowup) {
        if (m < 1)
            throw std::invalid_argument("make_target: blow-up count must be >= 1");
        return Target{kind, m};
    }
    return Target{kind, 0};
}

bool operator==(const Target& a, const Target& b) {
    return a.kind == b.kind && a.m == b.m;
}

std::size_t component_count(const Target& t) {
    switch (t.kind) {
        case TargetKind::C2: return 0;
        case TargetKind::CP2: return 1;
        case TargetKind::CP1xCP1: return 2;
        case TargetKind::CP2Blowup: return static_cast<std::size_t>(t.m) + 1;
    }
    return 0;
}

DegreeClass make_degree(const Target& t, Ring ring, std::vector<long long> c) {
    if (c.size() != component_count(t))
        throw std::invalid_argument("make_degree: wrong component count for target");
    if (ring == Ring::Z2)
        for (long long& v : c) {
            v %= 2;
            if (v < 0) v += 2;
        }
    return DegreeClass{ring, std::move(c)};
}

bool operator==(const DegreeClass& a, const DegreeClass& b) {
    return a.ring == b.ring && a.c == b.c;
}

bool degree_less(const DegreeClass& a, const DegreeClass& b) {
    return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

DegreeClass mod2_degree(const Target& t, const DegreeClass& x) {
    if (x.ring == Ring::Z2) return x;
    return make_degree(t, Ring::Z2, x.c);
}

Modulus q_of(const Target& t) {
    switch (t.kind) {
        case TargetKind::C2: return Modulus::infinity();
        case TargetKind::CP2: return Modulus::finite(6);
        case TargetKind::CP1xCP1: return Modulus::finite(4);
        case TargetKind::CP2Blowup: return Modulus::finite(2);
    }
    return Modulus::infinity();
}

namespace {

void check_shape(const Target& t, const DegreeClass& x) {
    if (x.c.size() != component_count(t))
        throw std::invalid_argument("degree class has wrong shape for target");
}

long long intersection_z(const Target& t, const DegreeClass& x, const DegreeClass& y) {
    switch (t.kind) {
        case TargetKind::C2:
            return 0;
        case TargetKind::CP2:
            return x.c[0] * y.c[0];
        case TargetKind::CP1xCP1:
            return x.c[0] * y.c[1] + x.c[1] * y.c[0];
        case TargetKind::CP2Blowup: {
            long long v = x.c[0] * y.c[0];
            for (std::size_t j = 1; j < x.c.size(); ++j) v -= x.c[j] * y.c[j];
            return v;
        }
    }
    return 0;
}

}  // namespace

long long intersection(const Target& t, const DegreeClass& x, const DegreeClass& y) {
    check_shape(t, x);
    check_shape(t, y);
    if (x.ring != y.ring)
        throw std::invalid_argument("intersection: mixed coefficient rings");
    long long v = intersection_z(t, x, y);
    if (x.ring == Ring::Z2) {
        v %= 2;
        if (v < 0) v += 2;
    }
    return v;
}

long long c1_eval(const Target& t, const DegreeClass& x) {
    check_shape(t, x);
    if (x.ring != Ring::Z)
        throw std::invalid_argument("c1_eval: integral coefficients required");
    switch (t.kind) {
        case TargetKind::C2:
            return 0;
        case TargetKind::CP2:
            return 3 * x.c[0];
        case TargetKind::CP1xCP1:
            return 2 * (x.c[0] + x.c[1]);
        case TargetKind::CP2Blowup: {
            long long v = 3 * x.c[0];
            for (std::size_t j = 1; j < x.c.size(); ++j) v -= x.c[j];
            return v;
        }
    }
    return 0;
}

int w2_eval(const Target& t, const DegreeClass& x) {
    check_shape(t, x);
    DegreeClass lift{Ring::Z, x.c};  // componentwise 0/1 lift of a Z2 class
    long long v = c1_eval(t, lift);
    return static_cast<int>(((v % 2) + 2) % 2);
}

bool d_set_contains(const Target& t, const Surface& s, const DegreeClass& x) {
    check_shape(t, x);
    SurfaceParams p = params(s);
    if ((p.epsilon == 1) != (x.ring == Ring::Z))
        throw std::invalid_argument(
            "d_set_contains: coefficient ring must match surface orientability");
    if (p.epsilon == 1) {
        if (p.sign < 0) return false;  // no admissible degrees for odd chi
        return c1_eval(t, x) == 0;
    }
    bool in_ker_w2 = w2_eval(t, x) == 0;
    return p.sign > 0 ? in_ker_w2 : !in_ker_w2;
}

int pontryagin_square(const Target& t, const DegreeClass& x) {
    check_shape(t, x);
    if (t.kind == TargetKind::C2) return 0;
    DegreeClass lift{Ring::Z, x.c};
    for (long long& v : lift.c) {
        v %= 2;
        if (v < 0) v += 2;
    }
    long long v = intersection_z(t, lift, lift) % 4;
    if (v < 0) v += 4;
    return static_cast<int>(v);
}

bool ker_c1_mod2(const Target& t, const DegreeClass& x) {
    check_shape(t, x);
    switch (t.kind) {
        case TargetKind::C2:
            return true;  // the only class is zero
        case TargetKind::CP2:
            return x.c[0] % 2 == 0;
        case TargetKind::CP1xCP1:
            // a + b = 0 reduces to a == b mod 2
            return (x.c[0] - x.c[1]) % 2 == 0;
        case TargetKind::CP2Blowup: {
            // Ker c_1 surjects onto Ker w_2 for these non-spin targets.
            long long sum = std::accumulate(x.c.begin() + 1, x.c.end(), 0LL);
            return ((x.c[0] + sum) % 2 + 2) % 2 == 0;
        }
    }
    return false;
}

std::optional<DegreeClass> ker_c1_preimage(const Target& t, const DegreeClass& x) {
    check_shape(t, x);
    if (!ker_c1_mod2(t, x)) return std::nullopt;
    switch (t.kind) {
        case TargetKind::C2:
            return DegreeClass{Ring::Z, {}};
        case TargetKind::CP2:
            return DegreeClass{Ring::Z, {0}};
        case TargetKind::CP1xCP1: {
            long long a = ((x.c[0] % 2) + 2) % 2;
            long long b = ((x.c[1] % 2) + 2) % 2;
            // parity (a, b) with a == b: lift (0,0) -> (0,0), (1,1) -> (1,-1)
            return DegreeClass{Ring::Z, {a, b == a ? -a : b}};
        }
        case TargetKind::CP2Blowup: {
            std::vector<long long> c(x.c.size());
            for (std::size_t j = 0; j < x.c.size(); ++j) c[j] = ((x.c[j] % 2) + 2) % 2;
            long long d = c[0];
            long long sum = std::accumulate(c.begin() + 1, c.end(), 0LL);
            c[1] += 3 * d - sum;  // even adjustment, preserves parity
            return DegreeClass{Ring::Z, std::move(c)};
        }
    }
    return std::nullopt;
}

std::vector<DegreeClass> enumerate_z2_classes(const Target& t) {
    std::size_t n = component_count(t);
    std::vector<DegreeClass> out;
    out.reserve(static_cast<std::size_t>(1) << n);
    for (std::size_t mask = 0; mask < (static_cast<std::size_t>(1) << n); ++mask) {
        std::vector<long long> c(n);
        for (std::size_t j = 0; j < n; ++j) c[j] = (mask >> (n - 1 - j)) & 1;
        out.push_back(DegreeClass{Ring::Z2, std::move(c)});
    }
    std::sort(out.begin(), out.end(), degree_less);
    return out;
}

std::optional<CosetDescription> d_set_coset(const Target& t, const Surface& s) {
    SurfaceParams p = params(s);
    if (p.epsilon != 1 || p.sign < 0) return std::nullopt;
    CosetDescription cd{DegreeClass{Ring::Z, std::vector<long long>(component_count(t), 0)}, {}};
    switch (t.kind) {
        case TargetKind::C2:
        case TargetKind::CP2:
            break;  // Ker c_1 = {0}
        case TargetKind::CP1xCP1:
            cd.generators.push_back(DegreeClass{Ring::Z, {1, -1}});
            break;
        case TargetKind::CP2Blowup: {
            std::vector<long long> g(component_count(t), 0);
            g[0] = 1;
            g[1] = 3;
            cd.generators.push_back(DegreeClass{Ring::Z, g});
            for (int j = 2; j <= t.m; ++j) {
                std::vector<long long> h(component_count(t), 0);
                h[static_cast<std::size_t>(j)] = 1;
                h[1] = -1;
                cd.generators.push_back(DegreeClass{Ring::Z, std::move(h)});
            }
            break;
        }
    }
    return cd;
}

}  // namespace totreal
