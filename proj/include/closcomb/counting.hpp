#ifndef CLOSCOMB_COUNTING_HPP
#define CLOSCOMB_COUNTING_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "closcomb/enumerate.hpp"

namespace closcomb {

using BigInt = mpz_class;

// Exact counting of every class by bottom-up dynamic programming over the
// combinatorial systems
//
//   L    = zL + zL^2 + z/(1-z)                       (plain terms)
//   L_m  = z L_{m+1} + z L_m^2 + (z + ... + z^m)     (m-open terms)
//   L^h  : the same, saturating the openness index at h and with index
//          values below h                             (h-shallow terms)
//   E    = C E + 1,  C = L E                          (environments/closures)
//   C_m  = sum_p L_{m+p} * (m-open closures)^p        (m-open closures)
//
// Tables grow lazily and are memoized per (class, parameters).  Growing is
// single-writer; once built to a size, reads are O(1) and const-safe.
// Storage only ever appends (deques, incremental fills), so returned
// references stay valid across later growth.
class Counter {
  public:
    Counter() = default;
    Counter(const Counter&) = delete;
    Counter& operator=(const Counter&) = delete;

    const BigInt& plain_terms(std::uint64_t n);                      // l_n
    const BigInt& open_terms(std::uint64_t m, std::uint64_t n);      // l_{m,n}
    const BigInt& shallow_terms(std::uint64_t h, std::uint64_t m, std::uint64_t n);
    const BigInt& plain_environments(std::uint64_t n);               // e_n
    const BigInt& plain_closures(std::uint64_t n);                   // c_n
    const BigInt& open_closures(std::uint64_t m, std::uint64_t n);   // c_{m,n}; m = 0: closed

    // G_m(s,p): number of sequences of exactly p m-open closures of total
    // size s.  G_m(0,0) = 1.
    const BigInt& env_seq_count(std::uint64_t m, std::uint64_t s, std::uint64_t p);

    // smallest size with a nonzero m-open closure count (2 for m = 0,
    // 1 otherwise); computed, not assumed
    std::uint64_t min_open_closure_size(std::uint64_t m);

  private:
    struct OpenClosureTable {
        std::deque<BigInt> c;               // c_{m,n}
        std::deque<std::deque<BigInt>> G;   // G[p-1][s] = G_m(s,p)
        std::uint64_t min_size = 0;         // 0 = none found yet
    };

    struct ShallowTable {
        std::vector<std::deque<BigInt>> rows; // rows[m][n], h+1 rows
    };

    void grow_plain(std::uint64_t n);
    void grow_open(std::uint64_t n);
    void grow_envclo(std::uint64_t n);
    void grow_shallow(std::uint64_t h, std::uint64_t n);
    void grow_open_closures(std::uint64_t m, std::uint64_t n);

    const BigInt& open_get(std::uint64_t m, std::uint64_t n) const;

    std::deque<BigInt> plain_;
    std::deque<BigInt> env_;
    std::deque<BigInt> clo_;
    // open_[m] holds columns n in [m+1, built]; entries with m >= n are the
    // stabilized plain values and never stored
    std::deque<std::deque<BigInt>> open_;
    std::uint64_t open_built_ = 0;
    std::map<std::uint64_t, ShallowTable> shallow_;       // per h
    std::map<std::uint64_t, OpenClosureTable> open_clo_;  // per m
};

// Verification of the 19-term holonomic recurrence for e_n (transcribed as
// fixed data) against the DP table, in exact integer arithmetic.
struct RecurrenceReport {
    bool ok = true;
    // when !ok: first offense
    std::uint64_t first_bad_index = 0;
    std::string detail;
};

// Checks e_0..e_18 against the published initial conditions and every
// recurrence window inside [0, N].  Requires N >= 19.
RecurrenceReport check_e_recurrence(Counter& counter, std::uint64_t N);

// Same check against a caller-supplied prefix (lets tests perturb a value).
RecurrenceReport check_e_recurrence_on(const std::vector<BigInt>& e);

struct CrosscheckEntry {
    std::string cls;
    std::uint64_t m = 0;
    std::uint64_t h = 0;
    std::uint64_t n = 0;
    BigInt counted;
    BigInt enumerated;
    bool ok = true;
};

struct CrosscheckReport {
    bool ok = true;
    std::vector<CrosscheckEntry> entries; // every (class, n) pair checked
};

// DP count == brute-force enumeration length for every class and n <= N.
CrosscheckReport oracle_crosscheck(Counter& counter, std::uint64_t N,
                                   std::uint64_t oracle_bound = 12);

} // namespace closcomb

#endif
