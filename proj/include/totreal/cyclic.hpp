#pragma once

// Exact arithmetic in the extended cyclic groups Z_q, where q is either an
// even positive integer or infinite (Z_inf = Z).  These groups carry the
// Maslov-index coordinates used throughout the library; only even and
// infinite orders ever occur, and the constructors enforce that.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace totreal {

using BigInt = boost::multiprecision::cpp_int;

class Modulus {
public:
    Modulus() : q_(0) {}  // infinite by default

    static Modulus infinity() { return Modulus(0); }

    static Modulus finite(long long q) {
        if (q < 2 || q % 2 != 0)
            throw std::invalid_argument("Modulus::finite: q must be a positive even integer");
        return Modulus(q);
    }

    bool is_infinite() const { return q_ == 0; }

    // Finite order; throws on the infinite modulus.
    long long value() const {
        if (is_infinite())
            throw std::logic_error("Modulus::value: modulus is infinite");
        return q_;
    }

    friend bool operator==(const Modulus& a, const Modulus& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Modulus& a, const Modulus& b) { return a.q_ != b.q_; }

private:
    explicit Modulus(long long q) : q_(q) {}
    long long q_;  // 0 encodes infinity
};

// An element of Z_q in canonical form: 0 <= value < q when q is finite,
// an unrestricted integer when q is infinite.  Values are arbitrary
// precision so correctness never depends on machine word size.
class CycElem {
public:
    CycElem(Modulus q, BigInt value) : q_(q), v_(canonical(q, std::move(value))) {}

    const Modulus& modulus() const { return q_; }
    const BigInt& value() const { return v_; }

    // Convenience accessor for small values (JSON, bindings).
    long long value_ll() const;

    friend bool operator==(const CycElem& a, const CycElem& b) {
        return a.q_ == b.q_ && a.v_ == b.v_;
    }
    friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }
    friend bool operator<(const CycElem& a, const CycElem& b) { return a.v_ < b.v_; }

private:
    static BigInt canonical(const Modulus& q, BigInt v) {
        if (q.is_infinite()) return v;
        BigInt m = q.value();
        v %= m;
        if (v < 0) v += m;
        return v;
    }

    Modulus q_;
    BigInt v_;
};

// Group sum; both operands must share a modulus.
CycElem add(const CycElem& a, const CycElem& b);

// Canonical image of an integer in Z_q (identity when q is infinite).
CycElem reduce(const BigInt& n, Modulus q);

// Membership in the even subgroup 2Z_q = {2y : y in Z_q}.
bool even_subgroup_contains(const CycElem& x);

// The subgroup of elements z with 2z = 0: {0, q/2} for finite q, {0} for Z.
std::vector<CycElem> ord2_subgroup(Modulus q);

// Image under the unique nonzero homomorphism Z_q -> Z_2 (parity; well
// defined because q is even or infinite).
CycElem mod2_reduction(const CycElem& x);

}  // namespace totreal
