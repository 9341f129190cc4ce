#pragma once

// Complete enumeration of the integer degree system
//   q_1 + ... + q_m = 3d,   q_1^2 + ... + q_m^2 = d^2 + chi
// with canonicalization and the trivial-modification orbit (permutations,
// global sign flip, zero insertion/deletion).

#include <cstdint>
#include <vector>

namespace totreal {

struct DiophInstance {
    int m;          // number of exceptional components, >= 1
    long long chi;  // Euler characteristic parameter
};

DiophInstance make_instance(int m, long long chi);

struct DiophSolution {
    long long d;
    std::vector<long long> q;
    // Derived data: d = 3s + r with r in {-1, 0, 1} and s the greatest
    // integer with 3s <= d + 1; ell = |q - s*1|^2.
    long long s = 0;
    long long r = 0;
    long long ell = 0;
};

bool operator==(const DiophSolution& a, const DiophSolution& b);
bool solution_less(const DiophSolution& a, const DiophSolution& b);

// Decompose d = 3s + r.
void split_d(long long d, long long& s, long long& r);

// Attach the derived fields to a raw (d, q) tuple.
DiophSolution make_solution(long long d, std::vector<long long> q);

bool is_solution(const DiophInstance& inst, const DiophSolution& sol);
bool is_solution(const DiophInstance& inst, long long d, const std::vector<long long>& q);

// Sort q descending, then flip the global sign if the negation is
// lexicographically larger.  Idempotent.
DiophSolution canonicalize(const DiophSolution& sol);

// The full trivial-modification orbit at a prescribed length: all distinct
// tuples obtained by permutations, the global sign flip and zero padding.
// Throws when target_m cannot hold the nonzero entries.
std::vector<DiophSolution> trivial_modifications(const DiophSolution& sol, int target_m);

// All solutions with the given d, sorted-descending normalization, complete.
std::vector<DiophSolution> solve_for_d(const DiophInstance& inst, long long d);

// All descending-normalized solutions with d in [d_min, d_max], ordered by
// (d, q).  Each prescribed d contributes its own solutions; global sign
// representatives are not merged (use canonicalize for orbit
// representatives).
std::vector<DiophSolution> solve_all(const DiophInstance& inst, long long d_min, long long d_max);

// Closed-form unique descending solution at m = 9, chi = 2.
DiophSolution ppsss_formula(long long d);

// Closed-form solution families, each valid for infinitely many m.
enum class SolutionFamily {
    ZeroTuple,   // (0; 0...0), any m >= 1, chi = 0
    AllOnes,     // (d; 1...1), d >= 1, m = 3d, chi = (3-d)d
    SphereChain, // (d; d-1, 1...1), d >= 0, m = 2d+2, chi = 2
    TenPointA,   // (3c+1+2e; c,c,c, c+e x6, 3), c >= 2, e in {0,1}, m = 10, chi = 8-2e-6c
    TenPointB    // (3c+4; c+2, c, c+1 x7, 3), c >= 1, m = 10, chi = 4-6c
};

struct FamilyInstance {
    DiophInstance inst;
    DiophSolution sol;
};

// Parameters: ZeroTuple(m), AllOnes(d), SphereChain(d), TenPointA(c, e),
// TenPointB(c).  Out-of-range parameters are rejected.
FamilyInstance xmpls_family(SolutionFamily family, long long p1, long long p2 = 0);

}  // namespace totreal
