#include "closcomb/counting.hpp"

#include <array>
#include <cassert>
#include <stdexcept>

namespace closcomb {

void Counter::grow_plain(std::uint64_t n) {
    if (plain_.size() > n) return;
    if (plain_.empty()) plain_.push_back(0);
    for (std::uint64_t k = plain_.size(); k <= n; ++k) {
        BigInt v = plain_[k - 1] + 1; // abstraction + the one size-k index
        for (std::uint64_t i = 0; i < k; ++i) v += plain_[i] * plain_[k - 1 - i];
        plain_.push_back(v);
    }
}

const BigInt& Counter::plain_terms(std::uint64_t n) {
    grow_plain(n);
    return plain_[n];
}

// l_{m,n} with the stabilization l_{m,n} = l_n for m >= n; valid for n within
// the built range
const BigInt& Counter::open_get(std::uint64_t m, std::uint64_t n) const {
    if (m >= n) return plain_[n];
    return open_[m][n - (m + 1)];
}

void Counter::grow_open(std::uint64_t n) {
    if (open_built_ >= n) return;
    grow_plain(n);
    while (open_.size() < n) open_.emplace_back(); // rows m = 0 .. n-1
    for (std::uint64_t nn = open_built_ + 1; nn <= n; ++nn) {
        for (std::uint64_t m = 0; m < nn; ++m) {
            // index part [1 <= nn <= m] never fires for the stored m < nn
            // entries; rows with m >= nn are served from plain_
            BigInt v = open_get(m + 1, nn - 1);
            for (std::uint64_t i = 0; i < nn; ++i) v += open_get(m, i) * open_get(m, nn - 1 - i);
            assert(open_[m].size() == nn - (m + 1));
            open_[m].push_back(std::move(v));
        }
    }
    open_built_ = n;
}

const BigInt& Counter::open_terms(std::uint64_t m, std::uint64_t n) {
    grow_plain(n);
    if (m >= n) return plain_[n];
    grow_open(n);
    return open_get(m, n);
}

void Counter::grow_shallow(std::uint64_t h, std::uint64_t n) {
    if (h == 0) throw std::invalid_argument("shallow bound h must be >= 1");
    auto& tab = shallow_[h];
    if (tab.rows.empty()) {
        tab.rows.resize(h + 1);
        for (auto& row : tab.rows) row.push_back(0); // n = 0
    }
    for (std::uint64_t nn = tab.rows[0].size(); nn <= n; ++nn) {
        for (std::uint64_t m = h + 1; m-- > 0;) {
            std::uint64_t up = m < h ? m + 1 : h;
            BigInt v = tab.rows[up][nn - 1];
            for (std::uint64_t i = 0; i < nn; ++i) v += tab.rows[m][i] * tab.rows[m][nn - 1 - i];
            if (1 <= nn && nn <= m) v += 1;
            tab.rows[m].push_back(std::move(v));
        }
    }
}

const BigInt& Counter::shallow_terms(std::uint64_t h, std::uint64_t m, std::uint64_t n) {
    if (m > h) throw std::invalid_argument("shallow openness m must satisfy m <= h");
    grow_shallow(h, n);
    return shallow_[h].rows[m][n];
}

void Counter::grow_envclo(std::uint64_t n) {
    if (env_.size() > n) return;
    grow_plain(n);
    if (env_.empty()) {
        env_.push_back(1);
        clo_.push_back(0);
    }
    for (std::uint64_t k = env_.size(); k <= n; ++k) {
        BigInt c = 0;
        for (std::uint64_t i = 1; i <= k; ++i) c += plain_[i] * env_[k - i];
        clo_.push_back(std::move(c));
        BigInt e = 0;
        for (std::uint64_t i = 1; i <= k; ++i) e += clo_[i] * env_[k - i];
        env_.push_back(std::move(e));
    }
}

const BigInt& Counter::plain_environments(std::uint64_t n) {
    grow_envclo(n);
    return env_[n];
}

const BigInt& Counter::plain_closures(std::uint64_t n) {
    grow_envclo(n);
    return clo_[n];
}

void Counter::grow_open_closures(std::uint64_t m, std::uint64_t n) {
    auto& tab = open_clo_[m];
    if (tab.c.size() > n) return;

    // rows for p = 1 .. n (p entries of size >= 1 need total size >= p); a new
    // row p exceeds every already built s, so its backfill is all zeros
    std::uint64_t start = tab.c.size();
    while (tab.G.size() < n) {
        tab.G.emplace_back();
        tab.G.back().resize(start, BigInt(0));
    }

    for (std::uint64_t nn = start; nn <= n; ++nn) {
        // c_{m,nn} = sum_p sum_k l_{m+p,k} G_m(nn-k, p)
        BigInt v = 0;
        if (nn >= 1) {
            v += open_terms(m, nn); // p = 0 collapses to k = nn
            for (std::uint64_t p = 1; p < nn; ++p) {
                if (tab.min_size == 0 || p * tab.min_size > nn - 1) break;
                const auto& G = tab.G[p - 1];
                for (std::uint64_t k = 1; k + p * tab.min_size <= nn; ++k)
                    if (G[nn - k] != 0) v += open_terms(m + p, k) * G[nn - k];
            }
        }
        tab.c.push_back(std::move(v));
        if (tab.c.back() != 0 && tab.min_size == 0) tab.min_size = nn;

        // extend every G row with column s = nn
        for (std::uint64_t p = 1; p <= tab.G.size(); ++p) {
            auto& row = tab.G[p - 1];
            assert(row.size() == nn);
            if (tab.min_size == 0 || p * tab.min_size > nn) {
                row.push_back(BigInt(0));
                continue;
            }
            if (p == 1) {
                row.push_back(tab.c[nn]);
                continue;
            }
            const auto& prev = tab.G[p - 2];
            BigInt g = 0;
            for (std::uint64_t j = tab.min_size; j + 1 <= nn; ++j)
                if (tab.c[j] != 0 && prev[nn - j] != 0) g += tab.c[j] * prev[nn - j];
            row.push_back(std::move(g));
        }
    }
}

const BigInt& Counter::open_closures(std::uint64_t m, std::uint64_t n) {
    grow_open_closures(m, n);
    return open_clo_[m].c[n];
}

namespace {
const BigInt kZero = 0;
const BigInt kOne = 1;
} // namespace

const BigInt& Counter::env_seq_count(std::uint64_t m, std::uint64_t s, std::uint64_t p) {
    if (p == 0) return s == 0 ? kOne : kZero;
    grow_open_closures(m, s);
    const auto& tab = open_clo_[m];
    if (p > tab.G.size() || s >= tab.G[p - 1].size()) return kZero;
    return tab.G[p - 1][s];
}

std::uint64_t Counter::min_open_closure_size(std::uint64_t m) {
    std::uint64_t n = 1;
    while (true) {
        grow_open_closures(m, n);
        if (open_clo_[m].min_size != 0) return open_clo_[m].min_size;
        ++n;
        assert(n < 16); // the smallest closure is tiny for every m
    }
}

// ---------------------------------------------------------------------------
// holonomic recurrence for e_n (order 19, cubic polynomial coefficients)

namespace {

struct RecCoeff {
    std::int64_t a3, a2, a1, a0;
};

constexpr std::array<RecCoeff, 20> kERecurrence = {{
    {125, 0, -125, 0},
    {-475, -150, 325, 0},
    {-1625, -13650, -29125, -17100},
    {5925, 65550, 204825, 190800},
    {-10950, -149850, -609000, -744300},
    {43599, 638460, 3028701, 4633680},
    {-97781, -1680378, -9481237, -17550960},
    {122749, 2388066, 15211685, 31648968},
    {-184402, -3954630, -27717140, -63149544},
    {280081, 6826380, 54868451, 145130568},
    {-205649, -5654610, -51851989, -158722620},
    {37439, 1339686, 16635271, 70682784},
    {-68686, -3028038, -43616336, -205972920},
    {222029, 9258780, 128417911, 592399800},
    {-241115, -10519830, -152823475, -739190880},
    {134151, 6201222, 95476551, 489605640},
    {-42231, -2067834, -33729375, -183277332},
    {7470, 386418, 6659316, 38233296},
    {-678, -36972, -671670, -4065240},
    {24, 1380, 26436, 168720},
}};

const char* const kEInitial[19] = {
    "1", "1", "4", "17", "77", "364", "1776", "8881", "45296", "234806",
    "1233816", "6558106", "35202448", "190568779", "1039296373", "5704834700",
    "31494550253", "174759749005", "974155147162",
};

BigInt rec_poly(const RecCoeff& c, std::uint64_t n) {
    BigInt bn(static_cast<unsigned long>(n));
    return ((BigInt(c.a3) * bn + c.a2) * bn + c.a1) * bn + c.a0;
}

} // namespace

RecurrenceReport check_e_recurrence_on(const std::vector<BigInt>& e) {
    RecurrenceReport r;
    if (e.size() < 20) {
        r.ok = false;
        r.detail = "need at least e_0..e_19";
        return r;
    }
    for (std::uint64_t i = 0; i < 19 && i < e.size(); ++i) {
        if (e[i] != BigInt(kEInitial[i])) {
            r.ok = false;
            r.first_bad_index = i;
            r.detail = "initial condition e_" + std::to_string(i) + " mismatch";
            return r;
        }
    }
    for (std::uint64_t n = 0; n + 19 < e.size(); ++n) {
        BigInt acc = 0;
        for (std::uint64_t j = 0; j < 20; ++j) acc += rec_poly(kERecurrence[j], n) * e[n + j];
        if (acc != 0) {
            r.ok = false;
            r.first_bad_index = n;
            r.detail = "recurrence window at n = " + std::to_string(n) + " is nonzero";
            return r;
        }
    }
    return r;
}

RecurrenceReport check_e_recurrence(Counter& counter, std::uint64_t N) {
    if (N < 19) throw std::invalid_argument("recurrence check needs N >= 19");
    std::vector<BigInt> e(N + 1);
    for (std::uint64_t n = 0; n <= N; ++n) e[n] = counter.plain_environments(n);
    return check_e_recurrence_on(e);
}

// ---------------------------------------------------------------------------
// enumeration crosscheck

CrosscheckReport oracle_crosscheck(Counter& counter, std::uint64_t N,
                                   std::uint64_t oracle_bound) {
    Enumerator oracle(oracle_bound);
    CrosscheckReport rep;
    auto add = [&](std::string cls, std::uint64_t m, std::uint64_t h, std::uint64_t n,
                   const BigInt& dp, std::size_t listed) {
        CrosscheckEntry e;
        e.cls = std::move(cls);
        e.m = m;
        e.h = h;
        e.n = n;
        e.counted = dp;
        e.enumerated = static_cast<unsigned long>(listed);
        e.ok = (e.counted == e.enumerated);
        if (!e.ok) rep.ok = false;
        rep.entries.push_back(std::move(e));
    };

    for (std::uint64_t n = 0; n <= N; ++n) {
        add("plain-terms", 0, 0, n, counter.plain_terms(n), oracle.terms(n).size());
        for (std::uint64_t m : {0, 1, 2})
            add("m-open-terms", m, 0, n, counter.open_terms(m, n), oracle.terms(n, m).size());
        for (auto [h, m] : {std::pair<std::uint64_t, std::uint64_t>{1, 0}, {2, 1}, {3, 3}})
            add("shallow-terms", m, h, n, counter.shallow_terms(h, m, n),
                oracle.terms(n, m, h).size());
        add("plain-environments", 0, 0, n, counter.plain_environments(n),
            oracle.environments(n).size());
        add("plain-closures", 0, 0, n, counter.plain_closures(n), oracle.closures(n).size());
        for (std::uint64_t m : {0, 1})
            add("m-open-closures", m, 0, n, counter.open_closures(m, n),
                oracle.open_closures(n, m).size());
    }
    return rep;
}

} // namespace closcomb
