#include "closcomb/sampler.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "closcomb/errors.hpp"
#include "closcomb/gfun.hpp"

namespace closcomb {

const BigInt& Sampler::tcount(std::uint64_t m, std::uint64_t n) {
    return m == kPlain ? counts_.plain_terms(n) : counts_.open_terms(m, n);
}

Term Sampler::term_rec(std::uint64_t m, std::uint64_t n, RandomSource& rng) {
    const BigInt& total = tcount(m, n);
    if (total == 0)
        throw empty_class_error("no term of size " + std::to_string(n) +
                                (m == kPlain ? "" : " with openness " + std::to_string(m)));
    mpz_class r = rng.below(total);

    // index production: the one size-n index is n-1, admissible when n <= m
    if (n >= 1 && (m == kPlain || n <= m)) {
        if (r < 1) return mk_index(n - 1);
        r -= 1;
    }
    // abstraction
    std::uint64_t m_body = m == kPlain ? kPlain : m + 1;
    const BigInt& abs_w = tcount(m_body, n - 1);
    if (r < abs_w) return mk_abs(term_rec(m_body, n - 1, rng));
    r -= abs_w;
    // application, left size ascending
    for (std::uint64_t i = 1; i + 1 < n; ++i) {
        BigInt w = tcount(m, i) * tcount(m, n - 1 - i);
        if (r < w) {
            // only the split is drawn here; both operands redraw uniformly
            Term f = term_rec(m, i, rng);
            Term a = term_rec(m, n - 1 - i, rng);
            return mk_app(f, a);
        }
        r -= w;
    }
    throw std::logic_error("term weight walk exhausted: count table inconsistent");
}

Term Sampler::plain_term(std::uint64_t n, RandomSource& rng) { return term_rec(kPlain, n, rng); }

Term Sampler::open_term(std::uint64_t m, std::uint64_t n, RandomSource& rng) {
    return term_rec(m, n, rng);
}

Closure Sampler::plain_closure(std::uint64_t n, RandomSource& rng) {
    const BigInt& total = counts_.plain_closures(n);
    if (total == 0) throw empty_class_error("no plain closure of size " + std::to_string(n));
    mpz_class r = rng.below(total);
    for (std::uint64_t k = 1; k <= n; ++k) {
        BigInt w = counts_.plain_terms(k) * counts_.plain_environments(n - k);
        if (r < w) {
            Term t = plain_term(k, rng);
            Env e = plain_environment(n - k, rng);
            return mk_closure(t, e);
        }
        r -= w;
    }
    throw std::logic_error("closure weight walk exhausted: count table inconsistent");
}

Env Sampler::plain_environment(std::uint64_t n, RandomSource& rng) {
    // iterative: draw head sizes left to right, then build the list
    std::vector<Closure> heads;
    std::uint64_t rest = n;
    while (rest > 0) {
        const BigInt& total = counts_.plain_environments(rest);
        mpz_class r = rng.below(total);
        std::uint64_t k = 0;
        for (std::uint64_t i = 1; i <= rest; ++i) {
            BigInt w = counts_.plain_closures(i) * counts_.plain_environments(rest - i);
            if (r < w) {
                k = i;
                break;
            }
            r -= w;
        }
        if (k == 0) throw std::logic_error("environment weight walk exhausted");
        heads.push_back(plain_closure(k, rng));
        rest -= k;
    }
    Env e = nullptr;
    for (auto it = heads.rbegin(); it != heads.rend(); ++it) e = env_cons(*it, e);
    return e;
}

Closure Sampler::closed_closure(std::uint64_t n, RandomSource& rng, std::uint64_t m) {
    const BigInt& total = counts_.open_closures(m, n);
    if (total == 0)
        throw empty_class_error("no " + std::to_string(m) + "-open closure of size " +
                                std::to_string(n));
    std::uint64_t ms = counts_.min_open_closure_size(m);
    mpz_class r = rng.below(total);

    // pick (p, k): environment length and term size, weight l_{m+p,k} G_m(n-k,p)
    std::uint64_t pick_p = 0, pick_k = 0;
    bool found = false;
    for (std::uint64_t p = 0; !found && (p == 0 || p * ms + 1 <= n); ++p) {
        for (std::uint64_t k = 1; k + p * ms <= n; ++k) {
            const BigInt& g = counts_.env_seq_count(m, n - k, p);
            if (g == 0) continue;
            BigInt w = counts_.open_terms(m + p, k) * g;
            if (r < w) {
                pick_p = p;
                pick_k = k;
                found = true;
                break;
            }
            r -= w;
        }
    }
    if (!found) throw std::logic_error("closed closure weight walk exhausted");

    Term t = open_term(m + pick_p, pick_k, rng);

    // environment entry sizes sequentially via G ratios, then recurse
    std::vector<Closure> entries;
    std::uint64_t s = n - pick_k;
    for (std::uint64_t q = pick_p; q > 0; --q) {
        const BigInt& tot = counts_.env_seq_count(m, s, q);
        mpz_class rr = rng.below(tot);
        std::uint64_t j = 0;
        for (std::uint64_t cand = ms; cand + (q - 1) * ms <= s; ++cand) {
            BigInt w = counts_.open_closures(m, cand) * counts_.env_seq_count(m, s - cand, q - 1);
            if (w == 0) continue;
            if (rr < w) {
                j = cand;
                break;
            }
            rr -= w;
        }
        if (j == 0) throw std::logic_error("closed environment weight walk exhausted");
        entries.push_back(closed_closure(j, rng, m));
        s -= j;
    }
    Env e = nullptr;
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) e = env_cons(*it, e);
    return mk_closure(t, e);
}

// ---------------------------------------------------------------------------
// Boltzmann samplers

BoltzmannParams boltzmann_params(double x, unsigned digits) {
    BigReal bx(x, digits);
    if (!(bx.sign() > 0) || !(bx < rho_plain(digits)))
        throw eval_domain_error("Boltzmann parameter x must lie in (0, rho_plain)");
    BigReal L = eval_L_infty(bx);
    BigReal C = eval_C_infty(bx);
    BoltzmannParams p;
    p.x = x;
    p.p_abs = x;
    p.p_app = (bx * L).to_double();
    p.p_cons = C.to_double();
    double index_p = 1.0 - p.p_abs - p.p_app;
    if (index_p < 0 || p.p_cons >= 1.0)
        throw eval_domain_error("Boltzmann branch probabilities out of range");
    return p;
}

BoltzmannParams calibrate(double target_mean_size, unsigned digits) {
    if (target_mean_size < 1.0)
        throw std::invalid_argument("calibration target must be >= 1");
    unsigned w = digits + 10;
    BigReal rho = rho_plain(w);
    BigReal lo = rho.mul_2exp(-30); // mean ~ 0 here
    BigReal hi = rho - rho.mul_2exp(-40);
    BigReal target(target_mean_size, w);
    if (!(boltzmann_mean_env_size(hi) > target))
        throw std::invalid_argument("calibration target exceeds the supported mean size");
    // relative 1% is the contract; bisect to 0.1% for margin
    BigReal tol = target * BigReal(0.001, w);
    for (int it = 0; it < 400; ++it) {
        BigReal mid = (lo + hi) / BigReal::from_uint(2, w);
        BigReal mean = boltzmann_mean_env_size(mid);
        if ((mean - target).abs() < tol) {
            return boltzmann_params(mid.to_double(), digits);
        }
        if (mean < target)
            lo = mid;
        else
            hi = mid;
    }
    return boltzmann_params(((lo + hi) / BigReal::from_uint(2, w)).to_double(), digits);
}

namespace {

struct FreeGen {
    const BoltzmannParams& p;
    RandomSource& rng;
    std::uint64_t budget; // abort the attempt once the running size passes this

    bool spend(std::uint64_t cost, std::uint64_t& size) {
        size += cost;
        return size <= budget;
    }

    // each generator returns false when the budget is blown
    bool term(std::uint64_t& size, Term* out) {
        double u = rng.real01();
        if (u < p.p_abs) {
            if (!spend(1, size)) return false;
            Term body;
            if (!term(size, &body)) return false;
            *out = mk_abs(std::move(body));
            return true;
        }
        if (u < p.p_abs + p.p_app) {
            if (!spend(1, size)) return false;
            Term f, a;
            if (!term(size, &f) || !term(size, &a)) return false;
            *out = mk_app(std::move(f), std::move(a));
            return true;
        }
        // de Bruijn index, geometric on the successor count
        std::uint64_t k = 0;
        if (!spend(1, size)) return false;
        while (rng.real01() < p.x) {
            if (!spend(1, size)) return false;
            ++k;
        }
        *out = mk_index(k);
        return true;
    }

    bool environment(std::uint64_t& size, Env* out) {
        std::vector<Closure> heads;
        while (rng.real01() < p.p_cons) {
            Closure c;
            if (!closure(size, &c)) return false;
            heads.push_back(std::move(c));
        }
        Env e = nullptr;
        for (auto it = heads.rbegin(); it != heads.rend(); ++it) e = env_cons(*it, e);
        *out = std::move(e);
        return true;
    }

    bool closure(std::uint64_t& size, Closure* out) {
        Term t;
        Env e;
        if (!term(size, &t) || !environment(size, &e)) return false;
        *out = mk_closure(std::move(t), std::move(e));
        return true;
    }
};

template <class T, class Gen>
T boltzmann_reject(const BoltzmannParams& p, RandomSource& rng, std::uint64_t lo,
                   std::uint64_t hi, Gen gen) {
    std::uint64_t budget = hi == boltzmann_no_limit ? boltzmann_no_limit : hi;
    for (std::uint64_t attempt = 1; attempt <= p.attempt_cap; ++attempt) {
        FreeGen g{p, rng, budget};
        std::uint64_t size = 0;
        T out;
        if (!gen(g, size, &out)) continue; // oversize, rejected early
        if (size >= lo && size <= hi) return out;
    }
    throw retry_limit_error(p.attempt_cap, 0.0);
}

} // namespace

Closure boltzmann_closure(const BoltzmannParams& p, RandomSource& rng, std::uint64_t lo,
                          std::uint64_t hi) {
    return boltzmann_reject<Closure>(
        p, rng, lo, hi,
        [](FreeGen& g, std::uint64_t& size, Closure* out) { return g.closure(size, out); });
}

Env boltzmann_environment(const BoltzmannParams& p, RandomSource& rng, std::uint64_t lo,
                          std::uint64_t hi) {
    return boltzmann_reject<Env>(
        p, rng, lo, hi,
        [](FreeGen& g, std::uint64_t& size, Env* out) { return g.environment(size, out); });
}

} // namespace closcomb
