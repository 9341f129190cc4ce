#pragma once

// The four model complex surfaces and their second-homology data:
// intersection forms, first Chern class, second Stiefel-Whitney class,
// admissible degree sets and the Pontryagin square.
//
// Basis conventions for the blow-up of the projective plane: the line
// class first, then the m exceptional classes, each carrying the opposite
// of its complex orientation.  This makes the intersection form
// diag(1, -1, ..., -1) and c_1(d, q_1..q_m) = 3d - sum(q_j).

#include "totreal/cyclic.hpp"
#include "totreal/surfaces.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace totreal {

enum class TargetKind { C2, CP2, CP1xCP1, CP2Blowup };

struct Target {
    TargetKind kind;
    int m = 0;  // blow-up count, used only for CP2Blowup
};

Target make_target(TargetKind kind, int m = 0);
bool operator==(const Target& a, const Target& b);

// Number of components of a degree class for this target.
std::size_t component_count(const Target& t);

enum class Ring { Z, Z2 };

struct DegreeClass {
    Ring ring;
    std::vector<long long> c;  // 0/1 entries when ring == Z2
};

DegreeClass make_degree(const Target& t, Ring ring, std::vector<long long> c);
bool operator==(const DegreeClass& a, const DegreeClass& b);
bool degree_less(const DegreeClass& a, const DegreeClass& b);
DegreeClass mod2_degree(const Target& t, const DegreeClass& x);  // Z -> Z2 reduction

// Fundamental-group order of the oriented frame circle bundle:
// C^2 -> inf, CP^2 -> 6, CP^1xCP^1 -> 4, any blow-up -> 2.
Modulus q_of(const Target& t);

// Intersection pairing; Z2 classes pair mod 2.
long long intersection(const Target& t, const DegreeClass& x, const DegreeClass& y);

// First Chern class evaluated on an integral class.
long long c1_eval(const Target& t, const DegreeClass& x);

// Second Stiefel-Whitney class on a Z2 class (parity of c_1 on any lift).
int w2_eval(const Target& t, const DegreeClass& x);

// Membership in the admissible degree set determined by the surface's
// (epsilon, sign) parameters: Ker c_1 for orientable surfaces (empty for
// odd chi), Ker w_2 or its complement for nonorientable ones.
bool d_set_contains(const Target& t, const Surface& s, const DegreeClass& x);

// Pontryagin square of a Z2 class: self-intersection mod 4 of the
// componentwise 0/1 integral lift (lift-independent); 0 on C^2.
int pontryagin_square(const Target& t, const DegreeClass& x);

// Whether a Z2 class is the mod-2 reduction of an element of Ker c_1.
bool ker_c1_mod2(const Target& t, const DegreeClass& x);

// Explicit integral preimage in Ker c_1 of a Z2 class in Ker w_2, for the
// non-spin targets (and the zero class elsewhere).
std::optional<DegreeClass> ker_c1_preimage(const Target& t, const DegreeClass& x);

// All Z2 degree classes, lexicographically ordered.
std::vector<DegreeClass> enumerate_z2_classes(const Target& t);

// Coset description of a D-set over Z: a base point plus generators of the
// subgroup (Ker c_1).  Engaged when the set is nonempty.
struct CosetDescription {
    DegreeClass base;
    std::vector<DegreeClass> generators;
};
std::optional<CosetDescription> d_set_coset(const Target& t, const Surface& s);

}  // namespace totreal
