#include "closcomb/enumerate.hpp"

#include "closcomb/errors.hpp"

namespace closcomb {

void Enumerator::check(std::uint64_t n) const {
    if (n > bound_) throw oracle_limit_error(n, bound_);
}

const std::vector<Term>& Enumerator::terms(std::uint64_t n, std::uint64_t m, std::uint64_t h) {
    check(n);
    // Clamps that do not change the class: a size-n term contains no index of
    // value >= n and is at most n-open, and an h-shallow term is at most
    // h-open.  After them, m <= h <= n.
    if (h > n) h = n;
    if (m > h) m = h;
    auto key = std::make_tuple(n, m, h);
    auto it = terms_.find(key);
    if (it != terms_.end()) return it->second;

    std::vector<Term> out;
    if (n > 0) {
        // index production: the one index of size n has value n-1
        if (n <= m) out.push_back(mk_index(n - 1));
        // abstraction: body is (m+1)-open, saturating at h
        std::uint64_t m_body = m < h ? m + 1 : h;
        for (const Term& b : terms(n - 1, m_body, h)) out.push_back(mk_abs(b));
        // applications by increasing left size
        for (std::uint64_t i = 1; i + 1 < n; ++i) {
            const auto& lhs = terms(i, m, h);
            const auto& rhs = terms(n - 1 - i, m, h);
            for (const Term& f : lhs)
                for (const Term& a : rhs) out.push_back(mk_app(f, a));
        }
    }
    return terms_.emplace(key, std::move(out)).first->second;
}

const std::vector<Env>& Enumerator::environments(std::uint64_t n) {
    check(n);
    auto it = envs_.find(n);
    if (it != envs_.end()) return it->second;

    std::vector<Env> out;
    if (n == 0) {
        out.push_back(nullptr);
    } else {
        for (std::uint64_t k = 1; k <= n; ++k) {
            const auto& heads = closures(k);
            const auto& tails = environments(n - k);
            for (const Closure& hcl : heads)
                for (const Env& t : tails) out.push_back(env_cons(hcl, t));
        }
    }
    return envs_.emplace(n, std::move(out)).first->second;
}

const std::vector<Closure>& Enumerator::closures(std::uint64_t n) {
    check(n);
    auto it = closures_.find(n);
    if (it != closures_.end()) return it->second;

    std::vector<Closure> out;
    for (std::uint64_t k = 1; k <= n; ++k) {
        const auto& ts = terms(k);
        const auto& es = environments(n - k);
        for (const Term& t : ts)
            for (const Env& e : es) out.push_back(mk_closure(t, e));
    }
    return closures_.emplace(n, std::move(out)).first->second;
}

const std::vector<Env>& Enumerator::closure_seqs(std::uint64_t s, std::uint64_t p,
                                                 std::uint64_t m) {
    auto key = std::make_tuple(s, p, m);
    auto it = seqs_.find(key);
    if (it != seqs_.end()) return it->second;

    std::vector<Env> out;
    if (p == 0) {
        if (s == 0) out.push_back(nullptr);
    } else {
        for (std::uint64_t j = 1; j + (p - 1) <= s; ++j) {
            const auto& heads = open_closures(j, m);
            if (heads.empty()) continue;
            const auto& tails = closure_seqs(s - j, p - 1, m);
            for (const Closure& hcl : heads)
                for (const Env& t : tails) out.push_back(env_cons(hcl, t));
        }
    }
    return seqs_.emplace(key, std::move(out)).first->second;
}

const std::vector<Closure>& Enumerator::open_closures(std::uint64_t n, std::uint64_t m) {
    check(n);
    auto key = std::make_pair(n, m);
    auto it = open_closures_.find(key);
    if (it != open_closures_.end()) return it->second;

    // <t, c_1:...:c_p> with t (m+p)-open, entries m-open closures
    std::vector<Closure> out;
    for (std::uint64_t p = 0; p < n; ++p) {
        for (std::uint64_t k = 1; k + p <= n; ++k) {
            const auto& envs = closure_seqs(n - k, p, m);
            if (envs.empty()) continue;
            const auto& ts = terms(k, m + p);
            for (const Term& t : ts)
                for (const Env& e : envs) out.push_back(mk_closure(t, e));
        }
    }
    return open_closures_.emplace(key, std::move(out)).first->second;
}

} // namespace closcomb
