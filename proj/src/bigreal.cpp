#include "closcomb/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace closcomb {

mpfr_prec_t BigReal::bits_for_digits(unsigned digits) {
    if (digits == 0) digits = 1;
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

BigReal::BigReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); }

BigReal::BigReal(double v, unsigned digits) : BigReal(bits_for_digits(digits)) {
    mpfr_set_d(v_, v, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& o) : BigReal(o.prec_bits()) { mpfr_set(v_, o.v_, MPFR_RNDN); }

BigReal::BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, o.prec_bits());
    mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec_bits());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::from_string(const std::string& decimal, unsigned digits) {
    BigReal r(bits_for_digits(std::max<unsigned>(digits, decimal.size())));
    if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("not a decimal number: " + decimal);
    return r;
}

BigReal BigReal::from_uint(std::uint64_t v, unsigned digits) {
    BigReal r(bits_for_digits(digits));
    mpfr_set_ui(r.v_, static_cast<unsigned long>(v), MPFR_RNDN);
    return r;
}

BigReal BigReal::from_int(std::int64_t v, unsigned digits) {
    BigReal r(bits_for_digits(digits));
    mpfr_set_si(r.v_, static_cast<long>(v), MPFR_RNDN);
    return r;
}

BigReal BigReal::from_bigint(const mpz_class& v, unsigned digits) {
    BigReal r(bits_for_digits(digits));
    mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::pi(unsigned digits) {
    BigReal r(bits_for_digits(digits));
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::round_to(unsigned digits) const {
    BigReal r(bits_for_digits(digits));
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {
inline mpfr_prec_t join(const BigReal& a, const BigReal& b) {
    return std::max(a.prec_bits(), b.prec_bits());
}
} // namespace

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigReal BigReal::operator-() const {
    BigReal r(prec_bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::sqrt() const {
    if (mpfr_sgn(v_) < 0) throw std::domain_error("BigReal::sqrt of negative value");
    BigReal r(prec_bits());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::cbrt() const {
    BigReal r(prec_bits());
    mpfr_cbrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::abs() const {
    BigReal r(prec_bits());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::pow_int(std::int64_t e) const {
    BigReal r(prec_bits());
    mpfr_pow_si(r.v_, v_, static_cast<long>(e), MPFR_RNDN);
    return r;
}

BigReal BigReal::root_ui(unsigned long k) const {
    if (mpfr_sgn(v_) < 0) throw std::domain_error("BigReal::root_ui of negative value");
    BigReal r(prec_bits());
    mpfr_rootn_ui(r.v_, v_, k, MPFR_RNDN);
    return r;
}

BigReal BigReal::mul_2exp(std::int64_t e) const {
    BigReal r(prec_bits());
    if (e >= 0)
        mpfr_mul_2ui(r.v_, v_, static_cast<unsigned long>(e), MPFR_RNDN);
    else
        mpfr_div_2ui(r.v_, v_, static_cast<unsigned long>(-e), MPFR_RNDN);
    return r;
}

std::string BigReal::to_string(unsigned digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_) < 0)
        throw std::runtime_error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string BigReal::to_string() const {
    auto digits = static_cast<unsigned>(std::floor((prec_bits() - 32) / 3.3219280948873623));
    return to_string(std::max(digits, 1u));
}

} // namespace closcomb
