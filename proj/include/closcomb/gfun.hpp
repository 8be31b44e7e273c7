#ifndef CLOSCOMB_GFUN_HPP
#define CLOSCOMB_GFUN_HPP

#include <cstdint>

#include "closcomb/bigreal.hpp"

namespace closcomb {

// Numeric evaluation of the generating functions and their singularity data.
//
//   L(z) = ((1-z) - sqrt((1-z)^2 - 4z^2/(1-z))) / (2z)      plain terms
//   E(z) = (1 - sqrt(1 - 4L(z))) / (2L(z))                  plain environments
//   C(z) = (1 - sqrt(1 - 4L(z))) / 2                        plain closures
//
// Quadratic roots always take the branch with non-negative series
// coefficients.  z = 0 is handled via the analytic limits.

// Dominant singularity of E/C: (25 - sqrt(545))/10.  The returned value is
// nudged one scale notch below the exact root so that evaluating L/E/C at it
// stays inside every radicand domain at the same precision.
BigReal rho_plain(unsigned digits = BigReal::default_digits);

// Dominant singularity of L: the real root of (1-z)^3 = 4z^2, by the closed
// cubic-radical formula; nudged down like rho_plain.
BigReal rho_terms(unsigned digits = BigReal::default_digits);

BigReal eval_L_infty(const BigReal& z);
BigReal eval_E_infty(const BigReal& z);
BigReal eval_C_infty(const BigReal& z);

struct AsymptoticConstants {
    unsigned digits;
    BigReal rho_plain;  // 0.165476...
    BigReal rho_terms;  // 0.29559...
    BigReal C_e;        // 0.699997...
    BigReal C_c;        // 0.174999...
    BigReal C_terms;    // 0.60676...
    BigReal a_E;        // 2
    BigReal b_E;        // -(1/4) sqrt((5/47)(109 + 35 sqrt(545)))
    BigReal a_C;        // 1/2
    BigReal b_C;        // negative Puiseux slope of C at rho
    BigReal C0_lower;   // bounds on the closed-term constant
    BigReal C0_upper;
};

AsymptoticConstants constants(unsigned digits = BigReal::default_digits);

enum class PlainClass { terms, environments, closures };

// First-order approximation K * rho^(-n) * n^(-3/2) with the class's pair
// (K, rho).
BigReal asymptotic_estimate(PlainClass cls, std::uint64_t n,
                            unsigned digits = BigReal::default_digits);

// Closed h-shallow terms: solves the triangular quadratic system top-down,
// L_h from its self-referential quadratic (smaller root), then
//   L_m = (1 - sqrt(1 - 4z(z L_{m+1} + z + ... + z^m))) / (2z)
// descending to m = 0.  Internal precision is raised enough to resolve the
// top-level radicand, which shrinks like 4 z^(h+2)/(1-z) near rho_terms.
BigReal eval_shallow_L0(std::uint64_t h, const BigReal& z);

struct GrowthBounds {
    bool conclusive = false;
    BigReal shallow_at_rho_terms; // L0^(h)(rho_terms)
    BigReal rho_lower;            // bisection root of L0^(h)(z) = 1/4 (conclusive only)
    BigReal rho_upper;            // rho_plain
};

// Exponential growth bounds for closed closures: conclusive iff the h-shallow
// approximation exceeds 1/4 at rho_terms; then the root of L0^(h)(z) = 1/4 is
// bracketed by bisection to width < 10^(-digits/2).
GrowthBounds growth_bounds_closed(std::uint64_t h, unsigned digits = BigReal::default_digits);

// Expected size of a Boltzmann-distributed plain environment at parameter x,
// x E'(x)/E(x), with the derivative by central difference at a step scaled to
// the distance from rho_plain.
BigReal boltzmann_mean_env_size(const BigReal& x);

} // namespace closcomb

#endif
