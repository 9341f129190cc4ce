#pragma once

// Numerical verification layer for the explicit totally real immersions of
// tori and Klein bottles in C^2: Jacobian nonvanishing checks and
// winding-number Maslov indices, plus the SL(2,Z) index realizer.
//
// The built-in family is
//   x(t,s) = e^{ikt} (sin s + i sin 2s),  y(t,s) = e^{ilt} cos s,
//   h(t)   = e^{ilt},
// mapped by (x, y + a h).  Klein-bottle mode needs k odd and l even so the
// map descends through (t,s) -> (t+pi, -s).

#include "totreal/surfaces.hpp"

#include <complex>
#include <variant>
#include <vector>

namespace totreal {

struct FamilySpec {
    int k;
    int l;  // nonzero
    double a;
};

FamilySpec make_family(int k, int l, double a);

// Doubly periodic sampled immersion on an n x n grid over [0, 2pi)^2;
// first partials come from central differences of the values.
struct SampledSpec {
    int n;
    double a;
    std::vector<std::complex<double>> x, y, h;  // row-major, index t*n + s

    static SampledSpec from_values(int n, double a, std::vector<std::complex<double>> x,
                                   std::vector<std::complex<double>> y,
                                   std::vector<std::complex<double>> h);
};

using ImmersionSpec = std::variant<FamilySpec, SampledSpec>;

// Complex Jacobian of (x, y + a h) at (t, s); analytic for the family,
// nearest-grid-node central differences for sampled input.
std::complex<double> jacobian(const ImmersionSpec& spec, double t, double s);

struct RealityReport {
    bool totally_real;
    double min_abs_j;
    double max_abs_j;
};

// Scans a grid_n x grid_n grid; totally real iff min |J| stays above a
// relative threshold (1e-9 of the grid maximum).
RealityReport total_reality_check(const ImmersionSpec& spec, int grid_n);

enum class SurfaceMode { Torus, Klein };

struct WindingResult {
    double raw;       // argument increment / 2pi before rounding
    long long n;      // rounded winding number
    double residual;  // |raw - n|
};

// Winding number of a sampled nonvanishing closed loop (last sample joins
// back to the first).  Throws on a zero sample or an argument jump >= pi.
WindingResult winding_number(const std::vector<std::complex<double>>& loop);

// Winding of the Jacobian along the closed loop u -> (t, s) = u * (t_coef,
// s_coef), u in [0, 2pi).  The coordinate loops are (0,1) and (1,0).
WindingResult winding_along(const ImmersionSpec& spec, int t_coef, int s_coef, int samples);

struct MaslovResult {
    IndexClass index;     // over Z (infinite modulus)
    double residual_max;  // worst rounding residual among the loop integrals
    double min_abs_j;     // total-reality margin on the verification grid
};

// Maslov index: (2p, 2r) for the torus with p, r the s- and t-loop winding
// numbers of the Jacobian; (m, 0) for the Klein bottle with m the argument
// increment of the half t-loop at s = 0 divided by pi.  Fails when the
// total-reality check fails or a residual exceeds 1e-6.
MaslovResult maslov_index(const ImmersionSpec& spec, SurfaceMode mode, int grid_n = 256);

struct Sl2Matrix {
    long long a, b;  // first row
    long long c, d;  // second row
};

// Determinant-one integer matrix with second row (p/g, r/g), g = gcd(p,r);
// reparametrizing the index-(0, 2g) torus immersion by it realizes Maslov
// index (2p, 2r).  Rejects (0, 0).
Sl2Matrix sl2_realizer(long long p, long long r);

}  // namespace totreal
