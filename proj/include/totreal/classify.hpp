#pragma once

// Top-level classification: existence of totally real immersions and
// embeddings of a closed surface in one of the four model targets, the
// realizable index-degree set, embedding admissibility of a pair, and the
// total mod-2 degree bookkeeping for blow-ups.

#include "totreal/surfaces.hpp"
#include "totreal/targets.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace totreal {

enum class Decision { Yes, No, Unknown };

struct Existence {
    Decision value;
    std::string reason;
};

struct IndexDegreePair {
    IndexClass index;
    DegreeClass degree;
};

bool operator==(const IndexDegreePair& a, const IndexDegreePair& b);

// Immersions: unobstructed for the non-spin targets; for the spin targets
// (C^2 and the quadric) they exist exactly when chi is even.
Existence immersion_exists(const Surface& s, const Target& t);

// Embeddings: the full decision matrix.  Orientable surfaces of genus >= 2
// against blow-ups of >= 10 points are undecided.
Existence embedding_exists(const Surface& s, const Target& t);

// The set of realizable index-degree pairs.  Full product of the index set
// with the admissible degree set, except when the surface is nonorientable
// with even chi and q is finite and divisible by 4; then exactly the pairs
// where the torsion coordinate vanishes iff the degree lifts to Ker c_1.
struct ZSet {
    Surface surface;
    Target target;
    bool finite;
    std::vector<IndexDegreePair> pairs;           // populated when finite
    IqDescriptor index_descriptor;                // always populated
    std::optional<CosetDescription> degree_coset; // infinite integral-degree case
    std::vector<DegreeClass> degree_list;         // finite degrees of an infinite z-set

    bool contains(const IndexDegreePair& p) const;
    bool is_empty() const;
};

ZSet z_set(const Surface& s, const Target& t);

// The self-intersection constraint satisfied by embedded degrees:
// d.d = -chi over Z for orientable surfaces, Pontryagin square = chi mod 4
// for nonorientable ones.  The pair must lie in the z-set.
bool embedding_admissible(const Surface& s, const Target& t, const IndexDegreePair& p);

// Whether an admissible pair is actually realized by a totally real
// embedding.  Decided YES within the constructive range (all three
// unblown targets; blow-ups of <= 8 points for orientable surfaces and
// <= 11 for nonorientable ones; 9-point blow-ups for the torus).  The
// sphere at 9 points and orientable cases at >= 10 remain open.
Existence realized_by_embedding(const Surface& s, const Target& t, const IndexDegreePair& p);

// Total mod-2 degree of a Z2 class on a blow-up: the line-class bit d and
// the count s of exceptional bits equal to 1.
struct TotalMod2Degree {
    int d;
    int s;
};

bool operator==(const TotalMod2Degree& a, const TotalMod2Degree& b);

TotalMod2Degree total_mod2_degree(const Target& t, const DegreeClass& x);

// Divisibility constraint d - s - chi == 0 mod 4 on total mod-2 degrees of
// embedded surfaces; stated only for nonorientable surfaces and the sphere.
bool dvf_check(const Surface& s, const TotalMod2Degree& tmd);

// Blowing up a point on the surface: m -> m+1, Sigma -> Sigma # RP^2,
// s -> s+1 with d unchanged.  Preserves dvf_check.
struct BdmState {
    int m;
    Surface surface;
    TotalMod2Degree tmd;
};

BdmState bdm_step(const BdmState& st);

// Rendered existence summary over the four targets.
struct Table1 {
    // columns: CP^2, CP^2 # m, CP^1 x CP^1, C^2
    std::array<std::string, 4> orientable_embeddable;
    std::array<std::string, 4> nonorientable_embeddable;
    std::array<std::string, 4> immersion;
};
Table1 table1();

// Allowed total mod-2 degrees for the low-genus chains.
struct Table2Cell {
    bool present = false;
    TotalMod2Degree value{0, 0};
};
struct Table2 {
    // columns: S^2, RP^2, K^2, K^2 # RP^2, K^2 # K^2
    static constexpr int kRows = 6;
    static constexpr int kCols = 5;
    std::array<std::array<Table2Cell, kCols>, kRows> cells;
};
Table2 table2();

const char* decision_name(Decision d);

}  // namespace totreal
