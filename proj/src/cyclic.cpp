#include "totreal/cyclic.hpp"

#include <limits>

namespace totreal {

long long CycElem::value_ll() const {
    if (v_ > std::numeric_limits<long long>::max() || v_ < std::numeric_limits<long long>::min())
        throw std::overflow_error("CycElem::value_ll: value exceeds 64-bit range");
    return static_cast<long long>(v_);
}

CycElem add(const CycElem& a, const CycElem& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("add: modulus mismatch");
    return CycElem(a.modulus(), a.value() + b.value());
}

CycElem reduce(const BigInt& n, Modulus q) {
    return CycElem(q, n);
}

bool even_subgroup_contains(const CycElem& x) {
    // 2Z_q consists exactly of the elements with even canonical
    // representative: for finite even q doubling hits every even residue,
    // and in Z the even subgroup is 2Z.
    return x.value() % 2 == 0;
}

std::vector<CycElem> ord2_subgroup(Modulus q) {
    std::vector<CycElem> out;
    out.emplace_back(q, 0);
    if (!q.is_infinite())
        out.emplace_back(q, q.value() / 2);
    return out;
}

CycElem mod2_reduction(const CycElem& x) {
    BigInt parity = x.value() % 2;
    return CycElem(Modulus::finite(2), parity);
}

}  // namespace totreal
