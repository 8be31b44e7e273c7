#ifndef CLOSCOMB_MACHINE_HPP
#define CLOSCOMB_MACHINE_HPP

#include <cstdint>
#include <memory>
#include <optional>

#include "closcomb/term.hpp"

namespace closcomb {

// Reference evaluators:
//   - substitution-based β-reduction (the oracle),
//   - the λυ explicit-substitution rewriter,
//   - the Krivine machine (with the merged Fetch rule as a variant),
//   - the U-machine with strong normalization.
//
// Every evaluator is fuel-limited; running out of fuel is a reported result
// (suspected divergence), not an exception.

// ---------------------------------------------------------------------------
// substitution and β-reduction

// Index update τ^n_i: adds n-1 to indices above the cutoff i, descending under
// abstractions with the cutoff incremented.  Defined for n >= 1 (τ^1 is the
// identity on indices); n = 0 is rejected.
Term shift(const Term& t, std::uint64_t n, std::uint64_t cutoff);

// M{level <- P}: at an index m, m > level decrements, m < level is unchanged,
// and m == level substitutes P with its free indices lifted by `level` (the
// lift is the identity at level 0).  β is then (λM)N -> M{0 <- N}.
Term substitute(const Term& t, std::uint64_t level, const Term& arg);

// one leftmost-outermost β-step, or nothing if t is β-normal
std::optional<Term> beta_step(const Term& t);

struct EvalResult {
    Term term;
    std::uint64_t steps = 0;
    bool exhausted = false; // fuel ran out; term is the last intermediate
};

EvalResult beta_normalize(const Term& t, std::uint64_t fuel);
// weak head normal form: stops at a head abstraction or head index, never
// reduces under a binder
EvalResult beta_whnf(const Term& t, std::uint64_t fuel);

// ---------------------------------------------------------------------------
// λυ-calculus

struct UpsTermNode;
struct UpsSubstNode;
using UpsTerm = std::shared_ptr<const UpsTermNode>;
using UpsSubst = std::shared_ptr<const UpsSubstNode>;

enum class UpsKind : std::uint8_t { index, abs, app, subst };
enum class UpsSubstKind : std::uint8_t { slash, lift, shift };

struct UpsTermNode {
    UpsKind kind;
    std::uint64_t index = 0;
    UpsTerm a; // abs body / app fun / subst body
    UpsTerm b; // app arg
    UpsSubst s; // subst
};

struct UpsSubstNode {
    UpsSubstKind kind;
    UpsTerm t;   // slash payload
    UpsSubst s;  // lift payload
};

UpsTerm ups_index(std::uint64_t k);
UpsTerm ups_abs(UpsTerm body);
UpsTerm ups_app(UpsTerm f, UpsTerm a);
UpsTerm ups_subst(UpsTerm body, UpsSubst s);
UpsSubst ups_slash(UpsTerm t);
UpsSubst ups_lift(UpsSubst s);
UpsSubst ups_shift();

// plain terms embed injectively (no substitution nodes)
UpsTerm ups_embed(const Term& t);
// inverse on substitution-free terms
std::optional<Term> ups_strip(const UpsTerm& t);

// one leftmost-outermost step of the eight λυ rules (Beta, App, Abs, FVar,
// RVar, FVarLift, RVarLift, VarShift)
std::optional<UpsTerm> upsilon_step(const UpsTerm& t);

// normalize the embedding of a term; the result of a completed run is
// substitution-free and β-normal
EvalResult upsilon_normalize(const Term& t, std::uint64_t fuel);

// ---------------------------------------------------------------------------
// Krivine machine

// The state is a non-empty sequence of closures (head = focus, tail = stack);
// the Env type is reused for it.
using KrivineState = Env;

// terminal iff the head is an abstraction with an empty tail, or an index its
// environment is too short to resolve
bool krivine_terminal(const KrivineState& s, bool fetch);
std::optional<KrivineState> krivine_step(const KrivineState& s, bool fetch);

struct KrivineResult {
    KrivineState state;
    std::uint64_t steps = 0;
    bool exhausted = false;
};

KrivineResult krivine_run(KrivineState s, std::uint64_t fuel, bool fetch = false);

// ---------------------------------------------------------------------------
// U-machine

struct UOpNode;
struct UEnvNode;
using UEnv = std::shared_ptr<const UEnvNode>; // list of operations; nullptr empty

// an operation (a, lifts): the action is either the shift or a closure
struct UOpNode {
    std::uint64_t lifts = 0;
    bool is_shift = false;
    Term term;  // closure action
    UEnv env;   // closure action
};
using UOp = std::shared_ptr<const UOpNode>;

struct UEnvNode {
    UOp head;
    UEnv tail;
    std::uint64_t length;
};

UOp u_op_shift(std::uint64_t lifts);
UOp u_op_closure(Term t, UEnv e, std::uint64_t lifts);
UEnv u_env_cons(UOp head, UEnv tail);
UEnv u_env_concat(const UEnv& a, const UEnv& b);
UEnv u_lift_env(const UEnv& e); // increments every operation's lift count

struct UClosure {
    Term term;
    UEnv env;
};

struct UStateNode;
using UState = std::shared_ptr<const UStateNode>; // non-empty list of pairs
struct UStateNode {
    UClosure head;
    UState tail;
    std::uint64_t length;
};

UState u_state_cons(UClosure head, UState tail);

// embedding of plain closures: every environment entry becomes a closure
// operation with zero lifts
UClosure u_embed(const Closure& c);
UEnv u_embed_env(const Env& e);

bool u_terminal(const UState& s);
std::optional<UState> u_step(const UState& s);

struct URunResult {
    UState state;
    std::uint64_t steps = 0;
    bool exhausted = false;
};

URunResult u_run(UState s, std::uint64_t fuel);

// strong normalization by recursive machine runs; fuel is shared across the
// recursion so divergence is detected globally
EvalResult u_nf(const UClosure& c, std::uint64_t fuel);

// ---------------------------------------------------------------------------
// readback

// closed closures only: decode<M, c_1:...:c_p> substitutes the decoded
// entries at index 0, left to right (entries are closed, so no shifting)
Term decode_closure(const Closure& c);

} // namespace closcomb

#endif
