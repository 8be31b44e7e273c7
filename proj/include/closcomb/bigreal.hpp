#ifndef CLOSCOMB_BIGREAL_HPP
#define CLOSCOMB_BIGREAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace closcomb {

// Value type over MPFR with explicit per-value precision.  Binary operations
// compute at the larger operand precision, so an expression never silently
// loses the precision it started with; narrowing is explicit via round_to().
//
// Precision is stated in decimal digits at the interface; internally a value
// carries ceil(digits * log2(10)) + 32 guard bits.  Each operation rounds
// correctly (MPFR), so a chain of k operations loses at most k ulp at the
// working precision; the guard bits absorb radical chains hundreds deep while
// keeping well over digits-5 correct decimals.
class BigReal {
  public:
    static constexpr unsigned default_digits = 50;

    BigReal() : BigReal(0.0, default_digits) {}
    BigReal(double v, unsigned digits);
    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    static BigReal from_string(const std::string& decimal, unsigned digits = default_digits);
    static BigReal from_uint(std::uint64_t v, unsigned digits = default_digits);
    static BigReal from_int(std::int64_t v, unsigned digits = default_digits);
    static BigReal from_bigint(const mpz_class& v, unsigned digits = default_digits);
    static BigReal pi(unsigned digits = default_digits);

    static mpfr_prec_t bits_for_digits(unsigned digits);

    mpfr_prec_t prec_bits() const { return mpfr_get_prec(v_); }

    BigReal round_to(unsigned digits) const;

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    BigReal operator-() const;

    BigReal sqrt() const; // requires *this >= 0
    BigReal cbrt() const;
    BigReal abs() const;
    BigReal pow_int(std::int64_t e) const;
    BigReal root_ui(unsigned long k) const; // k-th root, *this >= 0
    BigReal mul_2exp(std::int64_t e) const; // *this * 2^e, exact

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(unsigned digits) const;
    std::string to_string() const; // at the value's own precision

    // raw access for the few call sites that need direct mpfr
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

  private:
    explicit BigReal(mpfr_prec_t bits);
    mpfr_t v_;
};

} // namespace closcomb

#endif
