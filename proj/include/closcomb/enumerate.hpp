#ifndef CLOSCOMB_ENUMERATE_HPP
#define CLOSCOMB_ENUMERATE_HPP

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "closcomb/term.hpp"

namespace closcomb {

// Exhaustive brute-force enumeration of every counted class, used as the
// independent oracle for the DP tables and for sampler uniformity tests.
//
// Orders are fixed so runs are reproducible:
//   terms:        index production first, then abstraction, then applications
//                 by increasing left-operand size (then left order, then right
//                 order);
//   environments: by increasing head-closure size, then head order, then tail
//                 order;
//   closures:     plain by increasing term size; m-open by increasing
//                 environment length, then term size, then term order, then
//                 entry-size sequence.
//
// Results are memoized and share structure, so holding several size classes
// at once is cheap.
class Enumerator {
  public:
    static constexpr std::uint64_t unbounded = ~std::uint64_t{0};

    explicit Enumerator(std::uint64_t max_size = 12) : bound_(max_size) {}

    std::uint64_t bound() const { return bound_; }

    // m-open h-shallow terms of exactly size n; pass `unbounded` for a
    // missing constraint (plain terms have both unbounded).
    const std::vector<Term>& terms(std::uint64_t n, std::uint64_t m = unbounded,
                                   std::uint64_t h = unbounded);

    const std::vector<Env>& environments(std::uint64_t n);

    // plain closures
    const std::vector<Closure>& closures(std::uint64_t n);
    // m-open closures (m = 0: closed)
    const std::vector<Closure>& open_closures(std::uint64_t n, std::uint64_t m = 0);

  private:
    void check(std::uint64_t n) const;

    // sequences of exactly p m-open closures with total size s, as Env values
    const std::vector<Env>& closure_seqs(std::uint64_t s, std::uint64_t p, std::uint64_t m);

    std::uint64_t bound_;
    std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::vector<Term>> terms_;
    std::map<std::uint64_t, std::vector<Env>> envs_;
    std::map<std::uint64_t, std::vector<Closure>> closures_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<Closure>> open_closures_;
    std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::vector<Env>> seqs_;
};

} // namespace closcomb

#endif
