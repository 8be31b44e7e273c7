#ifndef CLOSCOMB_RANDOM_HPP
#define CLOSCOMB_RANDOM_HPP

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace closcomb {

// Deterministic, cross-platform random stream: std::mt19937_64 (bit-exact by
// the standard) plus a documented rejection scheme for big-integer bounds.
//
// below(bound): let k be the bit length of bound-1; assemble k bits from the
// engine, most significant word first, masking the top word; reject and redraw
// while the value is >= bound.  Identical seed and call sequence therefore
// produce identical values on every platform.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits64() { return eng_(); }

    // uniform real in [0,1) with 53 random bits
    double real01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, bound), bound >= 1
    mpz_class below(const mpz_class& bound);

  private:
    std::mt19937_64 eng_;
};

} // namespace closcomb

#endif
