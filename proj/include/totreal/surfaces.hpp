#pragma once

// Closed-surface descriptors and their first-cohomology index sets.
//
// A closed surface is encoded by orientability and genus.  Its H_1 splits
// as Z^(2g) when orientable and Z^(g-1) x Z_2 otherwise; coordinates are
// always ordered free factors first, torsion factor last, so "the torsion
// coordinate" of an index class is simply its last coordinate.

#include "totreal/cyclic.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace totreal {

struct Surface {
    bool orientable;
    int genus;
};

// Validating factory: genus >= 0, and genus >= 1 when nonorientable.
Surface make_surface(bool orientable, int genus);

inline Surface sphere() { return Surface{true, 0}; }
inline Surface torus() { return Surface{true, 1}; }
inline Surface projective_plane() { return Surface{false, 1}; }
inline Surface klein_bottle() { return Surface{false, 2}; }

bool operator==(const Surface& a, const Surface& b);

int euler_char(const Surface& s);

// (epsilon, sign): epsilon = 1 iff orientable; sign = +1 iff chi is even.
struct SurfaceParams {
    int epsilon;
    int sign;
};
SurfaceParams params(const Surface& s);

// Connected sum.  S^2 is the neutral element; the sum is nonorientable as
// soon as one summand is.
Surface connected_sum(const Surface& a, const Surface& b);

// Number of H_1 factors (= index-class coordinate count).
std::size_t h1_factor_count(const Surface& s);
// Whether the last H_1 factor is the Z_2 torsion factor.
bool has_torsion_factor(const Surface& s);
// Values of w_1 on the H_1 factors, as bits, in coordinate order.
std::vector<int> w1_pattern(const Surface& s);

// Per-factor constraint cutting the index set out of H^1(Sigma, Z_q).
// Zero ("pinned") does not occur in the sets themselves, only in images of
// the integral-to-mod-q reduction map.
enum class FactorConstraint { Even, Odd, Ord2Even, Ord2Odd, Zero };

struct IndexClass {
    Modulus q;
    std::vector<CycElem> coords;
};

bool operator==(const IndexClass& a, const IndexClass& b);
bool index_less(const IndexClass& a, const IndexClass& b);

struct IqDescriptor {
    Modulus q;
    std::vector<FactorConstraint> factors;
    bool forced_empty = false;  // marks an empty set the factors alone cannot express

    bool empty() const;                     // whether the described set is empty
    bool finite() const;                    // finite as a set
    BigInt cardinality() const;             // throws when infinite
    bool contains(const IndexClass& c) const;
    std::vector<IndexClass> enumerate() const;  // finite sets only, lexicographic
};

// Enumerate one constraint set inside Z_q (finite q), ascending.
std::vector<CycElem> constraint_set(FactorConstraint fc, Modulus q);
bool constraint_contains(FactorConstraint fc, const CycElem& x);
bool constraint_empty(FactorConstraint fc, Modulus q);

// The index set I_q(Sigma): classes in H^1(Sigma, Z_q) whose mod-2
// reduction equals w_1(Sigma).  Product structure:
//   orientable genus g:          Even^(2g)
//   nonorientable genus g even:  Even^(g-2) x Odd x Ord2Even
//   nonorientable genus g odd:   Even^(g-1) x Ord2Odd
IqDescriptor iq_set(const Surface& s, Modulus q);

// Full lexicographic enumeration (finite q only).
std::vector<IndexClass> iq_enumerate(const Surface& s, Modulus q);

// I_q(Sigma # Sigma'), requiring Sigma' orientable.
IqDescriptor connected_sum_iq(const Surface& s, const Surface& t, Modulus q);

// Image and surjectivity of the reduction I_inf(Sigma) -> I_q(Sigma).
// Surjective iff Sigma is orientable, or chi(Sigma) - q/2 is odd; in the
// even-genus nonorientable case the image pins the torsion coordinate to 0,
// and in the odd-genus case the integral index set is already empty.
struct ReductionImage {
    bool surjective;
    IqDescriptor image;
};
ReductionImage modq_reduction_image(const Surface& s, Modulus q);

}  // namespace totreal
