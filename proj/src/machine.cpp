#include "closcomb/machine.hpp"

#include <stdexcept>
#include <vector>

#include "closcomb/errors.hpp"

namespace closcomb {

// ---------------------------------------------------------------------------
// substitution

Term shift(const Term& t, std::uint64_t n, std::uint64_t cutoff) {
    if (n == 0) throw std::invalid_argument("shift amount n must be >= 1");
    switch (t->kind) {
    case TermKind::index:
        return t->index > cutoff ? mk_index(t->index + n - 1) : t;
    case TermKind::abs:
        return mk_abs(shift(t->fun, n, cutoff + 1));
    case TermKind::app:
        return mk_app(shift(t->fun, n, cutoff), shift(t->arg, n, cutoff));
    }
    return t;
}

namespace {

// lift free indices (those >= cutoff) by d
Term lift_free(const Term& t, std::uint64_t d, std::uint64_t cutoff) {
    if (d == 0) return t;
    switch (t->kind) {
    case TermKind::index:
        return t->index >= cutoff ? mk_index(t->index + d) : t;
    case TermKind::abs:
        return mk_abs(lift_free(t->fun, d, cutoff + 1));
    case TermKind::app:
        return mk_app(lift_free(t->fun, d, cutoff), lift_free(t->arg, d, cutoff));
    }
    return t;
}

} // namespace

Term substitute(const Term& t, std::uint64_t level, const Term& arg) {
    switch (t->kind) {
    case TermKind::index:
        if (t->index > level) return mk_index(t->index - 1);
        if (t->index == level) return lift_free(arg, level, 0);
        return t;
    case TermKind::abs:
        return mk_abs(substitute(t->fun, level + 1, arg));
    case TermKind::app:
        return mk_app(substitute(t->fun, level, arg), substitute(t->arg, level, arg));
    }
    return t;
}

std::optional<Term> beta_step(const Term& t) {
    switch (t->kind) {
    case TermKind::index:
        return std::nullopt;
    case TermKind::abs: {
        auto b = beta_step(t->fun);
        if (b) return mk_abs(*b);
        return std::nullopt;
    }
    case TermKind::app: {
        if (t->fun->kind == TermKind::abs) return substitute(t->fun->fun, 0, t->arg);
        auto f = beta_step(t->fun);
        if (f) return mk_app(*f, t->arg);
        auto a = beta_step(t->arg);
        if (a) return mk_app(t->fun, *a);
        return std::nullopt;
    }
    }
    return std::nullopt;
}

EvalResult beta_normalize(const Term& t, std::uint64_t fuel) {
    Term cur = t;
    std::uint64_t steps = 0;
    while (steps < fuel) {
        auto next = beta_step(cur);
        if (!next) return {cur, steps, false};
        cur = *next;
        ++steps;
    }
    return {cur, steps, beta_step(cur).has_value()};
}

EvalResult beta_whnf(const Term& t, std::uint64_t fuel) {
    Term cur = t;
    std::uint64_t steps = 0;
    while (true) {
        // walk down the application spine
        std::vector<Term> spine;
        Term head = cur;
        while (head->kind == TermKind::app) {
            spine.push_back(head);
            head = head->fun;
        }
        if (head->kind != TermKind::abs || spine.empty()) return {cur, steps, false};
        if (steps >= fuel) return {cur, steps, true};
        // contract the head redex: (λB) A with A the innermost spine argument
        Term contracted = substitute(head->fun, 0, spine.back()->arg);
        ++steps;
        // rebuild the remaining applications
        for (std::size_t i = spine.size() - 1; i-- > 0;)
            contracted = mk_app(contracted, spine[i]->arg);
        cur = contracted;
    }
}

// ---------------------------------------------------------------------------
// λυ-calculus

UpsTerm ups_index(std::uint64_t k) {
    auto n = std::make_shared<UpsTermNode>();
    n->kind = UpsKind::index;
    n->index = k;
    return n;
}

UpsTerm ups_abs(UpsTerm body) {
    auto n = std::make_shared<UpsTermNode>();
    n->kind = UpsKind::abs;
    n->a = std::move(body);
    return n;
}

UpsTerm ups_app(UpsTerm f, UpsTerm a) {
    auto n = std::make_shared<UpsTermNode>();
    n->kind = UpsKind::app;
    n->a = std::move(f);
    n->b = std::move(a);
    return n;
}

UpsTerm ups_subst(UpsTerm body, UpsSubst s) {
    auto n = std::make_shared<UpsTermNode>();
    n->kind = UpsKind::subst;
    n->a = std::move(body);
    n->s = std::move(s);
    return n;
}

UpsSubst ups_slash(UpsTerm t) {
    auto n = std::make_shared<UpsSubstNode>();
    n->kind = UpsSubstKind::slash;
    n->t = std::move(t);
    return n;
}

UpsSubst ups_lift(UpsSubst s) {
    auto n = std::make_shared<UpsSubstNode>();
    n->kind = UpsSubstKind::lift;
    n->s = std::move(s);
    return n;
}

UpsSubst ups_shift() {
    auto n = std::make_shared<UpsSubstNode>();
    n->kind = UpsSubstKind::shift;
    return n;
}

UpsTerm ups_embed(const Term& t) {
    switch (t->kind) {
    case TermKind::index: return ups_index(t->index);
    case TermKind::abs: return ups_abs(ups_embed(t->fun));
    case TermKind::app: return ups_app(ups_embed(t->fun), ups_embed(t->arg));
    }
    return nullptr;
}

std::optional<Term> ups_strip(const UpsTerm& t) {
    switch (t->kind) {
    case UpsKind::index: return mk_index(t->index);
    case UpsKind::abs: {
        auto b = ups_strip(t->a);
        if (!b) return std::nullopt;
        return mk_abs(*b);
    }
    case UpsKind::app: {
        auto f = ups_strip(t->a);
        auto a = f ? ups_strip(t->b) : std::nullopt;
        if (!f || !a) return std::nullopt;
        return mk_app(*f, *a);
    }
    case UpsKind::subst: return std::nullopt;
    }
    return std::nullopt;
}

namespace {

// a root rule, if one applies
std::optional<UpsTerm> ups_root_step(const UpsTerm& t) {
    if (t->kind == UpsKind::app && t->a->kind == UpsKind::abs)
        return ups_subst(t->a->a, ups_slash(t->b)); // (Beta)
    if (t->kind != UpsKind::subst) return std::nullopt;
    const UpsTerm& body = t->a;
    const UpsSubst& s = t->s;
    switch (body->kind) {
    case UpsKind::app: // (App)
        return ups_app(ups_subst(body->a, s), ups_subst(body->b, s));
    case UpsKind::abs: // (Abs)
        return ups_abs(ups_subst(body->a, ups_lift(s)));
    case UpsKind::index:
        switch (s->kind) {
        case UpsSubstKind::slash:
            if (body->index == 0) return s->t;                  // (FVar)
            return ups_index(body->index - 1);                  // (RVar)
        case UpsSubstKind::lift:
            if (body->index == 0) return body;                  // (FVarLift)
            return ups_subst(ups_subst(ups_index(body->index - 1), s->s),
                             ups_shift());                      // (RVarLift)
        case UpsSubstKind::shift:
            return ups_index(body->index + 1);                  // (VarShift)
        }
        return std::nullopt;
    case UpsKind::subst:
        return std::nullopt; // reduce the inner closure first
    }
    return std::nullopt;
}

// leftmost-outermost over term positions; substitution payloads count as
// children after the body
std::optional<UpsSubst> ups_subst_child_step(const UpsSubst& s) {
    switch (s->kind) {
    case UpsSubstKind::slash: {
        auto t = upsilon_step(s->t);
        if (t) return ups_slash(*t);
        return std::nullopt;
    }
    case UpsSubstKind::lift: {
        auto inner = ups_subst_child_step(s->s);
        if (inner) return ups_lift(*inner);
        return std::nullopt;
    }
    case UpsSubstKind::shift:
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace

std::optional<UpsTerm> upsilon_step(const UpsTerm& t) {
    if (auto r = ups_root_step(t)) return r;
    switch (t->kind) {
    case UpsKind::index:
        return std::nullopt;
    case UpsKind::abs: {
        auto b = upsilon_step(t->a);
        if (b) return ups_abs(*b);
        return std::nullopt;
    }
    case UpsKind::app: {
        auto f = upsilon_step(t->a);
        if (f) return ups_app(*f, t->b);
        auto a = upsilon_step(t->b);
        if (a) return ups_app(t->a, *a);
        return std::nullopt;
    }
    case UpsKind::subst: {
        auto b = upsilon_step(t->a);
        if (b) return ups_subst(*b, t->s);
        auto s = ups_subst_child_step(t->s);
        if (s) return ups_subst(t->a, *s);
        return std::nullopt;
    }
    }
    return std::nullopt;
}

EvalResult upsilon_normalize(const Term& t, std::uint64_t fuel) {
    UpsTerm cur = ups_embed(t);
    std::uint64_t steps = 0;
    while (steps < fuel) {
        auto next = upsilon_step(cur);
        if (!next) {
            auto plain = ups_strip(cur);
            if (!plain)
                throw std::logic_error("λυ normal form still contains a substitution");
            return {*plain, steps, false};
        }
        cur = *next;
        ++steps;
    }
    // out of fuel: report the best-effort strip or the original term
    auto plain = ups_strip(cur);
    return {plain ? *plain : t, steps, true};
}

// ---------------------------------------------------------------------------
// Krivine machine

bool krivine_terminal(const KrivineState& s, bool /*fetch*/) {
    const Closure& head = s->head;
    switch (head->term->kind) {
    case TermKind::app: return false;
    case TermKind::abs: return s->length == 1;
    case TermKind::index: return env_length(head->env) <= head->term->index;
    }
    return true;
}

std::optional<KrivineState> krivine_step(const KrivineState& s, bool fetch) {
    const Closure& head = s->head;
    const Env& tail = s->tail;
    const Term& t = head->term;
    switch (t->kind) {
    case TermKind::app: // (App)
        return env_cons(mk_closure(t->fun, head->env),
                        env_cons(mk_closure(t->arg, head->env), tail));
    case TermKind::abs: { // (Abs)
        if (!tail) return std::nullopt;
        return env_cons(mk_closure(t->fun, env_cons(tail->head, head->env)), tail->tail);
    }
    case TermKind::index: {
        const Env& e = head->env;
        if (env_length(e) <= t->index) return std::nullopt; // unresolvable index
        if (fetch) // (Fetch)
            return env_cons(env_at(e, t->index), tail);
        if (t->index == 0) // (Zero)
            return env_cons(e->head, tail);
        // (Succ)
        return env_cons(mk_closure(mk_index(t->index - 1), e->tail), tail);
    }
    }
    return std::nullopt;
}

KrivineResult krivine_run(KrivineState s, std::uint64_t fuel, bool fetch) {
    std::uint64_t steps = 0;
    while (steps < fuel) {
        auto next = krivine_step(s, fetch);
        if (!next) return {s, steps, false};
        s = *next;
        ++steps;
    }
    return {s, steps, krivine_step(s, fetch).has_value()};
}

// ---------------------------------------------------------------------------
// U-machine

UOp u_op_shift(std::uint64_t lifts) {
    auto n = std::make_shared<UOpNode>();
    n->lifts = lifts;
    n->is_shift = true;
    return n;
}

UOp u_op_closure(Term t, UEnv e, std::uint64_t lifts) {
    auto n = std::make_shared<UOpNode>();
    n->lifts = lifts;
    n->is_shift = false;
    n->term = std::move(t);
    n->env = std::move(e);
    return n;
}

UEnv u_env_cons(UOp head, UEnv tail) {
    auto n = std::make_shared<UEnvNode>();
    n->length = (tail ? tail->length : 0) + 1;
    n->head = std::move(head);
    n->tail = std::move(tail);
    return n;
}

UEnv u_env_concat(const UEnv& a, const UEnv& b) {
    if (!a) return b;
    return u_env_cons(a->head, u_env_concat(a->tail, b));
}

UEnv u_lift_env(const UEnv& e) {
    if (!e) return nullptr;
    const UOpNode& op = *e->head;
    UOp lifted = op.is_shift ? u_op_shift(op.lifts + 1)
                             : u_op_closure(op.term, op.env, op.lifts + 1);
    return u_env_cons(std::move(lifted), u_lift_env(e->tail));
}

UState u_state_cons(UClosure head, UState tail) {
    auto n = std::make_shared<UStateNode>();
    n->length = (tail ? tail->length : 0) + 1;
    n->head = std::move(head);
    n->tail = std::move(tail);
    return n;
}

UEnv u_embed_env(const Env& e) {
    if (!e) return nullptr;
    return u_env_cons(u_op_closure(e->head->term, u_embed_env(e->head->env), 0),
                      u_embed_env(e->tail));
}

UClosure u_embed(const Closure& c) { return {c->term, u_embed_env(c->env)}; }

bool u_terminal(const UState& s) {
    const UClosure& head = s->head;
    switch (head.term->kind) {
    case TermKind::app: return false;
    case TermKind::abs: return s->tail == nullptr;
    case TermKind::index: return head.env == nullptr;
    }
    return true;
}

std::optional<UState> u_step(const UState& s) {
    const UClosure& head = s->head;
    const UState& tail = s->tail;
    const Term& t = head.term;
    switch (t->kind) {
    case TermKind::app: // (APP)
        return u_state_cons({t->fun, head.env}, u_state_cons({t->arg, head.env}, tail));
    case TermKind::abs: { // (LBA-BET)
        if (!tail) return std::nullopt;
        const UClosure& argc = tail->head;
        UEnv env = u_env_concat(u_lift_env(head.env),
                                u_env_cons(u_op_closure(argc.term, argc.env, 0), nullptr));
        return u_state_cons({t->fun, std::move(env)}, tail->tail);
    }
    case TermKind::index: {
        if (!head.env) return std::nullopt;
        const UOpNode& op = *head.env->head;
        const UEnv& rest = head.env->tail;
        if (op.lifts >= 1) {
            if (t->index == 0) // (FVARLIFT)
                return u_state_cons({t, rest}, tail);
            // (RVARLIFT)
            UOp dropped = op.is_shift ? u_op_shift(op.lifts - 1)
                                      : u_op_closure(op.term, op.env, op.lifts - 1);
            UEnv env = u_env_cons(std::move(dropped), u_env_cons(u_op_shift(0), rest));
            return u_state_cons({mk_index(t->index - 1), std::move(env)}, tail);
        }
        if (!op.is_shift) {
            if (t->index == 0) // (FVAR)
                return u_state_cons({op.term, u_env_concat(op.env, rest)}, tail);
            // (RVAR)
            return u_state_cons({mk_index(t->index - 1), rest}, tail);
        }
        // (VARSHIFT)
        return u_state_cons({mk_index(t->index + 1), rest}, tail);
    }
    }
    return std::nullopt;
}

URunResult u_run(UState s, std::uint64_t fuel) {
    std::uint64_t steps = 0;
    while (steps < fuel) {
        auto next = u_step(s);
        if (!next) return {s, steps, false};
        s = *next;
        ++steps;
    }
    return {s, steps, u_step(s).has_value()};
}

namespace {

// recursive strong normalization sharing one fuel budget
std::optional<Term> u_nf_rec(const UClosure& c, std::uint64_t fuel, std::uint64_t& used) {
    UState s = u_state_cons(c, nullptr);
    while (true) {
        if (used >= fuel) return std::nullopt;
        auto next = u_step(s);
        if (!next) break;
        s = *next;
        ++used;
    }
    const UClosure& head = s->head;
    if (head.term->kind == TermKind::abs && !s->tail) {
        auto body = u_nf_rec({head.term->fun, u_lift_env(head.env)}, fuel, used);
        if (!body) return std::nullopt;
        return mk_abs(*body);
    }
    // index with empty operations: apply the normal forms of the stack
    Term out = head.term;
    for (UState p = s->tail; p; p = p->tail) {
        auto nf = u_nf_rec(p->head, fuel, used);
        if (!nf) return std::nullopt;
        out = mk_app(out, *nf);
    }
    return out;
}

} // namespace

EvalResult u_nf(const UClosure& c, std::uint64_t fuel) {
    std::uint64_t used = 0;
    auto t = u_nf_rec(c, fuel, used);
    if (!t) return {nullptr, used, true};
    return {*t, used, false};
}

// ---------------------------------------------------------------------------
// readback

Term decode_closure(const Closure& c) {
    if (closure_openness(c) != 0)
        throw eval_domain_error("decode_closure requires a closed closure");
    Term out = c->term;
    for (const EnvNode* p = c->env.get(); p; p = p->tail.get())
        out = substitute(out, 0, decode_closure(p->head));
    return out;
}

} // namespace closcomb
