#include "closcomb/gfun.hpp"

#include <algorithm>
#include <string>

#include "closcomb/errors.hpp"

namespace closcomb {

namespace {

// Round to the target precision first, then step 2^16 ulp down: the returned
// point is strictly below the exact root by far more than any evaluation
// noise at that precision, so radicands that vanish at the root stay positive.
BigReal nudge_down(const BigReal& v, unsigned digits) {
    BigReal r = v.round_to(digits);
    return (r - r.mul_2exp(16 - static_cast<std::int64_t>(r.prec_bits()))).round_to(digits);
}

unsigned working_digits(unsigned digits) { return digits + 10; }

} // namespace

BigReal rho_plain(unsigned digits) {
    unsigned w = working_digits(digits);
    BigReal r = (BigReal::from_uint(25, w) - BigReal::from_uint(545, w).sqrt()) /
                BigReal::from_uint(10, w);
    return nudge_down(r, digits);
}

BigReal rho_terms(unsigned digits) {
    unsigned w = working_digits(digits);
    BigReal s33 = BigReal::from_uint(33, w).sqrt();
    BigReal six = BigReal::from_uint(6, w);
    BigReal a = (BigReal::from_uint(26, w) + six * s33).cbrt();
    // 4 * 2^(2/3) = 4 * cbrt(4)
    BigReal b = BigReal::from_uint(4, w) * BigReal::from_uint(4, w).cbrt() /
                (BigReal::from_uint(13, w) + BigReal::from_uint(3, w) * s33).cbrt();
    BigReal r = (a - b - BigReal::from_uint(1, w)) / BigReal::from_uint(3, w);
    return nudge_down(r, digits);
}

BigReal eval_L_infty(const BigReal& z) {
    if (z.sign() < 0) throw eval_domain_error("L evaluated at negative z");
    // literals carry z's precision so results do too
    auto lit = [&](std::uint64_t v) {
        return BigReal::from_uint(v, static_cast<unsigned>(z.prec_bits() / 3.3) + 1);
    };
    if (z.is_zero()) return lit(0); // analytic limit
    BigReal w1 = lit(1) - z;
    BigReal rad = w1 * w1 - lit(4) * z * z / w1;
    if (rad.sign() < 0)
        throw eval_domain_error(
            "z is past the dominant singularity of plain terms (rho_terms ~ 0.29559)");
    return (w1 - rad.sqrt()) / (lit(2) * z);
}

BigReal eval_E_infty(const BigReal& z) {
    if (z.is_zero()) return BigReal::from_uint(1, static_cast<unsigned>(z.prec_bits() / 3.3) + 1);
    BigReal L = eval_L_infty(z);
    auto lit = [&](std::uint64_t v) {
        return BigReal::from_uint(v, static_cast<unsigned>(z.prec_bits() / 3.3) + 1);
    };
    BigReal rad = lit(1) - lit(4) * L;
    if (rad.sign() < 0)
        throw eval_domain_error(
            "z is past the dominant singularity of plain environments (rho_plain ~ 0.165476)");
    return (lit(1) - rad.sqrt()) / (lit(2) * L);
}

BigReal eval_C_infty(const BigReal& z) {
    auto lit = [&](std::uint64_t v) {
        return BigReal::from_uint(v, static_cast<unsigned>(z.prec_bits() / 3.3) + 1);
    };
    if (z.is_zero()) return lit(0);
    BigReal L = eval_L_infty(z);
    BigReal rad = lit(1) - lit(4) * L;
    if (rad.sign() < 0)
        throw eval_domain_error(
            "z is past the dominant singularity of plain closures (rho_plain ~ 0.165476)");
    return (lit(1) - rad.sqrt()) / lit(2);
}

AsymptoticConstants constants(unsigned digits) {
    unsigned w = working_digits(digits);
    auto u = [&](std::uint64_t v) { return BigReal::from_uint(v, w); };
    BigReal sqpi = BigReal::pi(w).sqrt();
    BigReal s545 = u(545).sqrt();

    AsymptoticConstants k{digits,
                          rho_plain(digits),
                          rho_terms(digits),
                          u(0) /*C_e*/,
                          u(0) /*C_c*/,
                          u(0) /*C_terms*/,
                          u(2).round_to(digits),
                          u(0) /*b_E*/,
                          (u(1) / u(2)).round_to(digits),
                          u(0) /*b_C*/,
                          BigReal::from_string("0.07790995266", digits),
                          BigReal::from_string("0.0779099823", digits)};

    // C_e = sqrt((5/47)(109 + 35 sqrt(545))) / (8 sqrt(pi)),  b_E = -(1/4) sqrt(...)
    BigReal eRad = (u(5) / u(47) * (u(109) + u(35) * s545)).sqrt();
    k.C_e = (eRad / (u(8) * sqpi)).round_to(digits);
    k.b_E = (-(eRad / u(4))).round_to(digits);

    // C_c = sqrt(10 (48069 sqrt5 - 10295 sqrt109) / (65 sqrt109 - 301 sqrt5))
    //       / (sqrt(pi) (77 - 3 sqrt(545)))
    BigReal s5 = u(5).sqrt();
    BigReal s109 = u(109).sqrt();
    BigReal cRad =
        (u(10) * (u(48069) * s5 - u(10295) * s109) / (u(65) * s109 - u(301) * s5)).sqrt();
    BigReal denom = u(77) - u(3) * s545;
    k.C_c = (cRad / (sqpi * denom)).round_to(digits);
    k.b_C = (-(u(2) * cRad / denom)).round_to(digits);

    // C for plain terms from the first-order Puiseux expansion of L at
    // rho_terms:  |b| = sqrt(rho (3(1-rho)^2 + 8 rho)/(1-rho)) / (2 rho),
    // C = |b| / (2 sqrt(pi)).
    BigReal r = rho_terms(static_cast<unsigned>(w));
    BigReal one = u(1);
    BigReal num = (r * (u(3) * (one - r) * (one - r) + u(8) * r) / (one - r)).sqrt();
    k.C_terms = (num / (u(4) * r * sqpi)).round_to(digits);
    return k;
}

BigReal asymptotic_estimate(PlainClass cls, std::uint64_t n, unsigned digits) {
    if (n == 0) throw eval_domain_error("asymptotic estimate needs n >= 1");
    unsigned w = working_digits(digits);
    AsymptoticConstants k = constants(w);
    const BigReal& rho = cls == PlainClass::terms ? k.rho_terms : k.rho_plain;
    const BigReal& K = cls == PlainClass::terms ? k.C_terms
                       : cls == PlainClass::environments ? k.C_e
                                                         : k.C_c;
    BigReal bn = BigReal::from_uint(n, w);
    BigReal growth = rho.pow_int(-static_cast<std::int64_t>(n));
    return (K * growth / (bn * bn.sqrt())).round_to(digits);
}

BigReal eval_shallow_L0(std::uint64_t h, const BigReal& z) {
    if (h == 0) throw eval_domain_error("shallow bound h must be >= 1");
    if (z.sign() <= 0) throw eval_domain_error("shallow evaluation needs z > 0");

    // The top radicand cancels to ~ 4 z^(h+2)/(1-z) near rho_terms; raise the
    // working precision so the cancellation is fully resolved.
    mpfr_prec_t bits = z.prec_bits();
    {
        BigReal probe = z.round_to(8).pow_int(static_cast<std::int64_t>(h) + 2);
        mpfr_exp_t e = probe.is_zero() ? -4 * static_cast<mpfr_exp_t>(bits)
                                       : mpfr_get_exp(probe.raw());
        if (e < 0) bits += static_cast<mpfr_prec_t>(-e);
        bits += 64;
    }
    unsigned wdig = static_cast<unsigned>(bits / 3.32) + 2;
    auto u = [&](std::uint64_t v) { return BigReal::from_uint(v, wdig); };
    BigReal zz = z.round_to(wdig);
    BigReal one = u(1);

    auto geom = [&](std::uint64_t m) {
        // z + z^2 + ... + z^m
        if (m == 0) return u(0);
        return zz * (one - zz.pow_int(static_cast<std::int64_t>(m))) / (one - zz);
    };

    // level h: z L^2 + (z-1) L + S_h = 0, combinatorial (smaller) root
    BigReal w1 = one - zz;
    BigReal rad = w1 * w1 - u(4) * zz * geom(h);
    if (rad.sign() < 0)
        throw eval_domain_error("negative radicand at shallow level " + std::to_string(h) +
                                " (z past the h-shallow dominant singularity)");
    BigReal L = (w1 - rad.sqrt()) / (u(2) * zz);

    for (std::uint64_t m = h; m-- > 0;) {
        rad = one - u(4) * zz * (zz * L + geom(m));
        if (rad.sign() < 0)
            throw eval_domain_error("negative radicand at shallow level " + std::to_string(m));
        L = (one - rad.sqrt()) / (u(2) * zz);
    }
    return L.round_to(static_cast<unsigned>(z.prec_bits() / 3.33));
}

GrowthBounds growth_bounds_closed(std::uint64_t h, unsigned digits) {
    unsigned w = working_digits(digits);
    BigReal quarter = BigReal::from_uint(1, w) / BigReal::from_uint(4, w);
    BigReal hi = rho_terms(w);
    GrowthBounds out{false, eval_shallow_L0(h, hi).round_to(digits),
                     BigReal(0.0, digits), rho_plain(digits)};
    if (!(eval_shallow_L0(h, hi) > quarter)) return out; // inconclusive at this h

    out.conclusive = true;
    // L0^(h) is increasing on (0, rho_terms]; L0^(h)(rho_plain) <= L(rho_plain)
    // = 1/4 strictly, so [rho_plain, rho_terms] brackets the root.
    BigReal lo = rho_plain(w);
    BigReal width_target = BigReal::from_uint(10, w).pow_int(-static_cast<std::int64_t>(digits / 2));
    while (hi - lo > width_target) {
        BigReal mid = (lo + hi) / BigReal::from_uint(2, w);
        if (eval_shallow_L0(h, mid) < quarter)
            lo = mid;
        else
            hi = mid;
    }
    out.rho_lower = ((lo + hi) / BigReal::from_uint(2, w)).round_to(digits);
    return out;
}

BigReal boltzmann_mean_env_size(const BigReal& x) {
    unsigned w = static_cast<unsigned>(x.prec_bits() / 3.32) + 10;
    BigReal xx = x.round_to(w);
    BigReal gap = rho_plain(w) - xx;
    if (gap.sign() <= 0) throw eval_domain_error("Boltzmann parameter must satisfy x < rho_plain");
    // central difference with a step well inside the domain
    BigReal hstep = gap.mul_2exp(-40);
    BigReal d = (eval_E_infty(xx + hstep) - eval_E_infty(xx - hstep)) /
                (hstep.mul_2exp(1));
    return xx * d / eval_E_infty(xx);
}

} // namespace closcomb
