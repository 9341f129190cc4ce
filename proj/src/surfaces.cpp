#include "totreal/surfaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace totreal {

Surface make_surface(bool orientable, int genus) {
    if (genus < 0)
        throw std::invalid_argument("make_surface: genus must be nonnegative");
    if (!orientable && genus < 1)
        throw std::invalid_argument("make_surface: nonorientable surfaces need genus >= 1");
    return Surface{orientable, genus};
}

bool operator==(const Surface& a, const Surface& b) {
    return a.orientable == b.orientable && a.genus == b.genus;
}

int euler_char(const Surface& s) {
    return s.orientable ? 2 - 2 * s.genus : 2 - s.genus;
}

SurfaceParams params(const Surface& s) {
    int chi = euler_char(s);
    return SurfaceParams{s.orientable ? 1 : 0, (chi % 2 == 0) ? +1 : -1};
}

Surface connected_sum(const Surface& a, const Surface& b) {
    if (a.orientable && b.orientable)
        return Surface{true, a.genus + b.genus};
    // Cross-cap count: an orientable genus-g summand contributes 2g.
    int ga = a.orientable ? 2 * a.genus : a.genus;
    int gb = b.orientable ? 2 * b.genus : b.genus;
    return Surface{false, ga + gb};
}

std::size_t h1_factor_count(const Surface& s) {
    return s.orientable ? static_cast<std::size_t>(2 * s.genus)
                        : static_cast<std::size_t>(s.genus);
}

bool has_torsion_factor(const Surface& s) {
    return !s.orientable;
}

std::vector<int> w1_pattern(const Surface& s) {
    std::vector<int> w(h1_factor_count(s), 0);
    if (s.orientable) return w;
    if (s.genus % 2 == 0) {
        // torus factors, then the Klein-bottle pair: w_1 = 1 on its free
        // generator, 0 on the torsion generator
        w[w.size() - 2] = 1;
        w[w.size() - 1] = 0;
    } else {
        // torus factors, then the projective-plane torsion generator
        w[w.size() - 1] = 1;
    }
    return w;
}

bool operator==(const IndexClass& a, const IndexClass& b) {
    return a.q == b.q && a.coords == b.coords;
}

bool index_less(const IndexClass& a, const IndexClass& b) {
    return std::lexicographical_compare(
        a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end(),
        [](const CycElem& x, const CycElem& y) { return x.value() < y.value(); });
}

bool constraint_empty(FactorConstraint fc, Modulus q) {
    switch (fc) {
        case FactorConstraint::Even:
        case FactorConstraint::Odd:
        case FactorConstraint::Zero:
            return false;
        case FactorConstraint::Ord2Even:
            return false;  // always contains 0
        case FactorConstraint::Ord2Odd:
            // {q/2} when q/2 is odd, empty when q is infinite or q/2 even
            return q.is_infinite() || (q.value() / 2) % 2 == 0;
    }
    return false;
}

bool constraint_contains(FactorConstraint fc, const CycElem& x) {
    const Modulus& q = x.modulus();
    bool even = even_subgroup_contains(x);
    bool ord2 = x.value() == 0 || (!q.is_infinite() && x.value() == q.value() / 2);
    switch (fc) {
        case FactorConstraint::Even: return even;
        case FactorConstraint::Odd: return !even;
        case FactorConstraint::Ord2Even: return ord2 && even;
        case FactorConstraint::Ord2Odd: return ord2 && !even;
        case FactorConstraint::Zero: return x.value() == 0;
    }
    return false;
}

std::vector<CycElem> constraint_set(FactorConstraint fc, Modulus q) {
    if (q.is_infinite()) {
        if (fc == FactorConstraint::Zero || fc == FactorConstraint::Ord2Even)
            return {CycElem(q, 0)};
        if (fc == FactorConstraint::Ord2Odd)
            return {};
        throw std::invalid_argument("constraint_set: infinite constraint set");
    }
    std::vector<CycElem> out;
    for (long long v = 0; v < q.value(); ++v) {
        CycElem e(q, v);
        if (constraint_contains(fc, e)) out.push_back(e);
    }
    return out;
}

bool IqDescriptor::empty() const {
    return forced_empty ||
           std::any_of(factors.begin(), factors.end(),
                       [&](FactorConstraint fc) { return constraint_empty(fc, q); });
}

bool IqDescriptor::finite() const {
    if (empty()) return true;
    if (!q.is_infinite()) return true;
    // Over Z only the pinned/torsion factors are finite.
    return std::all_of(factors.begin(), factors.end(), [](FactorConstraint fc) {
        return fc == FactorConstraint::Zero || fc == FactorConstraint::Ord2Even ||
               fc == FactorConstraint::Ord2Odd;
    });
}

BigInt IqDescriptor::cardinality() const {
    if (empty()) return 0;
    if (!finite())
        throw std::logic_error("IqDescriptor::cardinality: set is infinite");
    BigInt n = 1;
    for (FactorConstraint fc : factors)
        n *= static_cast<long long>(constraint_set(fc, q).size());
    return n;
}

bool IqDescriptor::contains(const IndexClass& c) const {
    if (forced_empty) return false;
    if (c.q != q || c.coords.size() != factors.size()) return false;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (!constraint_contains(factors[i], c.coords[i])) return false;
    return true;
}

std::vector<IndexClass> IqDescriptor::enumerate() const {
    if (!finite())
        throw std::logic_error("IqDescriptor::enumerate: set is infinite");
    std::vector<IndexClass> out;
    if (empty()) return out;
    std::vector<std::vector<CycElem>> sets;
    sets.reserve(factors.size());
    for (FactorConstraint fc : factors) sets.push_back(constraint_set(fc, q));
    std::vector<std::size_t> idx(factors.size(), 0);
    while (true) {
        IndexClass c{q, {}};
        c.coords.reserve(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) c.coords.push_back(sets[i][idx[i]]);
        out.push_back(std::move(c));
        std::size_t i = factors.size();
        while (i > 0) {
            --i;
            if (++idx[i] < sets[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (factors.empty()) break;  // single empty tuple
    }
    return out;
}

IqDescriptor iq_set(const Surface& s, Modulus q) {
    IqDescriptor d{q, {}};
    std::size_t n = h1_factor_count(s);
    if (s.orientable) {
        d.factors.assign(n, FactorConstraint::Even);
        return d;
    }
    if (s.genus % 2 == 0) {
        d.factors.assign(n - 2, FactorConstraint::Even);
        d.factors.push_back(FactorConstraint::Odd);
        d.factors.push_back(FactorConstraint::Ord2Even);
    } else {
        d.factors.assign(n - 1, FactorConstraint::Even);
        d.factors.push_back(FactorConstraint::Ord2Odd);
    }
    return d;
}

std::vector<IndexClass> iq_enumerate(const Surface& s, Modulus q) {
    if (q.is_infinite())
        throw std::invalid_argument("iq_enumerate: infinite modulus gives an infinite set");
    auto out = iq_set(s, q).enumerate();
    std::sort(out.begin(), out.end(), index_less);
    return out;
}

IqDescriptor connected_sum_iq(const Surface& s, const Surface& t, Modulus q) {
    if (!t.orientable)
        throw std::invalid_argument("connected_sum_iq: second summand must be orientable");
    return iq_set(connected_sum(s, t), q);
}

ReductionImage modq_reduction_image(const Surface& s, Modulus q) {
    if (q.is_infinite())
        throw std::invalid_argument("modq_reduction_image: q must be finite");
    IqDescriptor image = iq_set(s, q);
    if (s.orientable)
        return ReductionImage{true, image};
    long long half = q.value() / 2;
    int chi = euler_char(s);
    bool surjective = ((static_cast<long long>(chi) - half) % 2) != 0;
    if (s.genus % 2 == 0) {
        // Torsion elements of H^1(Sigma, Z) reduce to 0, pinning the last
        // coordinate of the image.
        image.factors.back() = FactorConstraint::Zero;
    } else {
        // The integral index set is empty (Z has no odd order-2 class),
        // hence so is the image.
        image.forced_empty = true;
    }
    return ReductionImage{surjective, image};
}

}  // namespace totreal
