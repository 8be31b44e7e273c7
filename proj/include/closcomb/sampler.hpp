#ifndef CLOSCOMB_SAMPLER_HPP
#define CLOSCOMB_SAMPLER_HPP

#include <cstdint>
#include <limits>

#include "closcomb/counting.hpp"
#include "closcomb/random.hpp"
#include "closcomb/term.hpp"

namespace closcomb {

// Exact-size uniform generation by the recursive method: every production is
// chosen by drawing a uniform big integer below the class count and walking
// the production weights, so there is no floating-point bias anywhere.
class Sampler {
  public:
    explicit Sampler(Counter& counts) : counts_(counts) {}

    Term plain_term(std::uint64_t n, RandomSource& rng);
    Term open_term(std::uint64_t m, std::uint64_t n, RandomSource& rng);
    Closure plain_closure(std::uint64_t n, RandomSource& rng);
    Env plain_environment(std::uint64_t n, RandomSource& rng);
    Closure closed_closure(std::uint64_t n, RandomSource& rng, std::uint64_t m = 0);

  private:
    // m == kPlain means no openness constraint
    static constexpr std::uint64_t kPlain = ~std::uint64_t{0};
    Term term_rec(std::uint64_t m, std::uint64_t n, RandomSource& rng);
    const BigInt& tcount(std::uint64_t m, std::uint64_t n);

    Counter& counts_;
};

// Boltzmann sampling of plain closures and environments.  Branch
// probabilities are precomputed once from the generating-function values at
// the parameter x:
//   term:        abstraction x, application x L(x), index otherwise;
//   index value: geometric with ratio x;
//   environment: cons with probability C(x).
struct BoltzmannParams {
    double x;
    double p_abs;        // x
    double p_app;        // x L(x)
    double p_cons;       // C(x)
    std::uint64_t attempt_cap = 1'000'000;
};

// Validates x in (0, rho_plain) and derives the branch probabilities; each
// probability group sums to 1 within 1e-12.
BoltzmannParams boltzmann_params(double x, unsigned digits = 50);

// Bisection on x so that the expected size x E'(x)/E(x) of a free environment
// hits the target within 1%.
BoltzmannParams calibrate(double target_mean_size, unsigned digits = 50);

inline constexpr std::uint64_t boltzmann_no_limit = std::numeric_limits<std::uint64_t>::max();

// Free generation with rejection until the size lands in [lo, hi]; an attempt
// is abandoned as soon as its size exceeds hi.  Throws retry_limit_error when
// the attempt cap is reached.
Closure boltzmann_closure(const BoltzmannParams& p, RandomSource& rng, std::uint64_t lo = 0,
                          std::uint64_t hi = boltzmann_no_limit);
Env boltzmann_environment(const BoltzmannParams& p, RandomSource& rng, std::uint64_t lo = 0,
                          std::uint64_t hi = boltzmann_no_limit);

} // namespace closcomb

#endif
