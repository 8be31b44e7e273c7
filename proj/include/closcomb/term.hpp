#ifndef CLOSCOMB_TERM_HPP
#define CLOSCOMB_TERM_HPP

#include <cstdint>
#include <memory>

namespace closcomb {

// de Bruijn λ-terms, closures and environments.  All values are immutable
// shared trees; structural sharing is relied on everywhere (enumeration,
// machine states), so nodes are never mutated after construction.

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

enum class TermKind : std::uint8_t { index, abs, app };

struct TermNode {
    TermKind kind;
    std::uint64_t index = 0; // kind == index
    Term fun;                // kind == app; kind == abs stores the body here
    Term arg;                // kind == app
    std::uint64_t size;      // natural size: |n| = n+1, |λM| = |M|+1, |MN| = |M|+|N|+1
};

Term mk_index(std::uint64_t k);
Term mk_abs(Term body);
Term mk_app(Term fun, Term arg);

inline std::uint64_t term_size(const Term& t) { return t->size; }

struct ClosureNode;
struct EnvNode;
using Closure = std::shared_ptr<const ClosureNode>;
using Env = std::shared_ptr<const EnvNode>; // nullptr is the empty environment

struct EnvNode {
    Closure head;
    Env tail;
    std::uint64_t size;   // |c:e| = |c| + |e|
    std::uint64_t length; // number of entries
};

struct ClosureNode {
    Term term;
    Env env;
    std::uint64_t size; // |<M,e>| = |M| + |e|
};

Closure mk_closure(Term term, Env env);
Env env_cons(Closure head, Env tail);

inline std::uint64_t env_size(const Env& e) { return e ? e->size : 0; }
inline std::uint64_t env_length(const Env& e) { return e ? e->length : 0; }
inline std::uint64_t closure_size(const Closure& c) { return c->size; }

// i-th entry, 0-based; requires i < env_length(e)
const Closure& env_at(const Env& e, std::uint64_t i);

// Least m such that the term is m-open:
//   openness(n)  = n+1
//   openness(λM) = max(openness(M) - 1, 0)
//   openness(MN) = max of both sides
std::uint64_t term_openness(const Term& t);
bool is_m_open(const Term& t, std::uint64_t m);

// Least m such that <M,e> is an m-open closure:
//   max(openness(M) - length(e), openness of every entry, 0)
std::uint64_t closure_openness(const Closure& c);

bool term_equal(const Term& a, const Term& b);
bool env_equal(const Env& a, const Env& b);
bool closure_equal(const Closure& a, const Closure& b);

} // namespace closcomb

#endif
