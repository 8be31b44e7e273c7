#include <doctest.h>

#include <optional>

#include "closcomb/enumerate.hpp"
#include "closcomb/errors.hpp"
#include "closcomb/machine.hpp"
#include "closcomb/syntax.hpp"

using namespace closcomb;

namespace {

constexpr std::uint64_t kFuel = 100000;

Term idx(std::uint64_t k) { return mk_index(k); }

Term omega() { return parse_term("(\\0 0) (\\0 0)"); }

// slow transcription of the update rules, case by case
Term slow_shift(const Term& t, std::uint64_t n, std::uint64_t i) {
    if (t->kind == TermKind::app) return mk_app(slow_shift(t->fun, n, i), slow_shift(t->arg, n, i));
    if (t->kind == TermKind::abs) return mk_abs(slow_shift(t->fun, n, i + 1));
    if (t->index > i) return mk_index(t->index + n - 1);
    return t;
}

Term slow_lift(const Term& t, std::uint64_t d, std::uint64_t cut) {
    if (t->kind == TermKind::app) return mk_app(slow_lift(t->fun, d, cut), slow_lift(t->arg, d, cut));
    if (t->kind == TermKind::abs) return mk_abs(slow_lift(t->fun, d, cut + 1));
    return t->index >= cut ? mk_index(t->index + d) : t;
}

Term slow_subst(const Term& t, std::uint64_t n, const Term& p) {
    if (t->kind == TermKind::app) return mk_app(slow_subst(t->fun, n, p), slow_subst(t->arg, n, p));
    if (t->kind == TermKind::abs) return mk_abs(slow_subst(t->fun, n + 1, p));
    if (t->index > n) return mk_index(t->index - 1);
    if (t->index == n) return slow_lift(p, n, 0);
    return t;
}

Closure worked_closure() {
    // <0 1, [<λλ0, []>, <λ0, []>]>
    return parse_closure("<0 1, [<\\\\0, []>, <\\0, []>]>");
}

} // namespace

TEST_CASE("shift implements the index update") {
    CHECK(term_equal(shift(idx(1), 2, 0), idx(2)));
    CHECK(term_equal(shift(idx(0), 2, 0), idx(0)));
    CHECK(term_equal(shift(idx(5), 1, 0), idx(5))); // amount 1 is the identity
    CHECK_THROWS(shift(idx(1), 0, 0));
}

TEST_CASE("closed terms are fixed by shift") {
    Enumerator oracle;
    for (std::uint64_t n = 2; n <= 7; ++n)
        for (const Term& t : oracle.terms(n, 0))
            for (std::uint64_t amount : {1, 2, 3})
                CHECK(term_equal(shift(t, amount, 0), t));
}

TEST_CASE("substitution base cases") {
    Term p = parse_term("\\\\1");
    CHECK(term_equal(substitute(idx(1), 0, p), idx(0)));
    CHECK(term_equal(substitute(idx(0), 1, p), idx(0)));
    CHECK(term_equal(substitute(mk_abs(idx(1)), 0, mk_abs(idx(0))), parse_term("\\\\0")));
}

TEST_CASE("substitution and shift agree with the slow transcription") {
    Enumerator oracle;
    std::vector<Term> subjects, payloads;
    for (std::uint64_t n = 1; n <= 7; ++n)
        for (const Term& t : oracle.terms(n)) subjects.push_back(t);
    for (std::uint64_t n = 1; n <= 3; ++n)
        for (const Term& t : oracle.terms(n)) payloads.push_back(t);

    for (const Term& t : subjects) {
        for (std::uint64_t n = 1; n <= 2; ++n)
            for (std::uint64_t i = 0; i <= 1; ++i)
                CHECK(term_equal(shift(t, n, i), slow_shift(t, n, i)));
        for (const Term& p : payloads)
            for (std::uint64_t lvl = 0; lvl <= 2; ++lvl)
                CHECK(term_equal(substitute(t, lvl, p), slow_subst(t, lvl, p)));
    }
}

TEST_CASE("the S K contraction chain") {
    Term sk = parse_term("(\\\\\\2 0 (1 0)) (\\\\1)");
    auto s1 = beta_step(sk);
    REQUIRE(s1);
    CHECK(render_term(*s1) == "\\\\(\\\\1) 0 (1 0)");
    auto s2 = beta_step(*s1);
    REQUIRE(s2);
    CHECK(render_term(*s2) == "\\\\(\\1) (1 0)");
    EvalResult nf = beta_normalize(sk, kFuel);
    CHECK_FALSE(nf.exhausted);
    CHECK(render_term(nf.term) == "\\\\0");
    CHECK(nf.steps == 3);
}

TEST_CASE("weak head normal form stops at the head") {
    // (λ x. x) (λ y. y ((λ z. z) 0̄)) reduces at the head only
    Term t = parse_term("(\\0) (\\0 ((\\0) 1))");
    EvalResult w = beta_whnf(t, kFuel);
    CHECK_FALSE(w.exhausted);
    CHECK(render_term(w.term) == "\\0 ((\\0) 1)"); // inner redex untouched
    EvalResult full = beta_normalize(t, kFuel);
    CHECK(render_term(full.term) == "\\0 1");

    // a head index with arguments is weak-head-normal
    Term stuck = parse_term("0 ((\\0) 1)");
    CHECK(beta_whnf(stuck, kFuel).steps == 0);
}

TEST_CASE("divergent terms exhaust fuel") {
    EvalResult r = beta_normalize(omega(), 1000);
    CHECK(r.exhausted);
    CHECK(r.steps == 1000);
}

TEST_CASE("upsilon rewriting base rules") {
    UpsTerm m = ups_embed(parse_term("\\\\0 1"));
    // (FVar) 0[M/] -> M
    auto fv = upsilon_step(ups_subst(ups_index(0), ups_slash(m)));
    REQUIRE(fv);
    CHECK(ups_strip(*fv));
    CHECK(term_equal(*ups_strip(*fv), parse_term("\\\\0 1")));
    // (RVar) (n+1)[M/] -> n
    auto rv = upsilon_step(ups_subst(ups_index(4), ups_slash(m)));
    REQUIRE(rv);
    CHECK(term_equal(*ups_strip(*rv), idx(3)));
    // (VarShift) n[^] -> n+1
    auto vs = upsilon_step(ups_subst(ups_index(7), ups_shift()));
    REQUIRE(vs);
    CHECK(term_equal(*ups_strip(*vs), idx(8)));
    // (FVarLift) 0[⇑(s)] -> 0
    auto fvl = upsilon_step(ups_subst(ups_index(0), ups_lift(ups_shift())));
    REQUIRE(fvl);
    CHECK(term_equal(*ups_strip(*fvl), idx(0)));
    // (RVarLift) (n+1)[⇑(s)] -> n[s][^]
    auto rvl = upsilon_step(ups_subst(ups_index(3), ups_lift(ups_slash(m))));
    REQUIRE(rvl);
    CHECK_FALSE(ups_strip(*rvl)); // still carries substitutions
}

TEST_CASE("upsilon normalization matches the β oracle") {
    EvalResult r = upsilon_normalize(parse_term("(\\\\\\2 0 (1 0)) (\\\\1)"), kFuel);
    CHECK_FALSE(r.exhausted);
    CHECK(render_term(r.term) == "\\\\0");
    EvalResult d = upsilon_normalize(omega(), 5000);
    CHECK(d.exhausted);
}

TEST_CASE("Krivine machine on the worked closure") {
    KrivineState s0 = env_cons(worked_closure(), nullptr);
    KrivineResult r = krivine_run(s0, kFuel, false);
    CHECK_FALSE(r.exhausted);
    REQUIRE(krivine_terminal(r.state, false));
    // head abstraction, empty stack; full normal form reads back as λ0
    CHECK(env_length(r.state) == 1);
    CHECK(r.state->head->term->kind == TermKind::abs);
    Term decoded = decode_closure(r.state->head);
    CHECK(render_term(beta_normalize(decoded, kFuel).term) == "\\0");

    // an abstraction with an empty stack is already terminal
    KrivineState lone = env_cons(parse_closure("<\\0, []>"), nullptr);
    CHECK(krivine_terminal(lone, false));
    CHECK_FALSE(krivine_step(lone, false).has_value());

    // unresolvable index is terminal
    KrivineState stuck = env_cons(parse_closure("<3, []>"), nullptr);
    CHECK(krivine_terminal(stuck, false));
}

TEST_CASE("Fetch reaches the same terminal in no more steps") {
    Enumerator oracle;
    for (std::uint64_t n = 2; n <= 9; ++n) {
        for (const Closure& c : oracle.open_closures(n, 0)) {
            KrivineState s0 = env_cons(c, nullptr);
            KrivineResult plain = krivine_run(s0, kFuel, false);
            KrivineResult fetch = krivine_run(s0, kFuel, true);
            if (plain.exhausted) {
                CHECK(fetch.exhausted);
                continue;
            }
            REQUIRE_FALSE(fetch.exhausted);
            CHECK(fetch.steps <= plain.steps);
            CHECK(env_equal(plain.state, fetch.state));
        }
    }
}

TEST_CASE("Krivine soundness: decoded terminal is β-equal to decoded input") {
    Enumerator oracle;
    for (std::uint64_t n = 2; n <= 8; ++n) {
        for (const Closure& c : oracle.open_closures(n, 0)) {
            KrivineResult r = krivine_run(env_cons(c, nullptr), kFuel, false);
            if (r.exhausted) continue;
            EvalResult in_nf = beta_normalize(decode_closure(c), kFuel);
            if (in_nf.exhausted) continue; // no common normal form to compare
            REQUIRE(env_length(r.state) == 1);
            EvalResult out_nf = beta_normalize(decode_closure(r.state->head), kFuel);
            REQUIRE_FALSE(out_nf.exhausted);
            CHECK(term_equal(in_nf.term, out_nf.term));
        }
    }
}

TEST_CASE("U-machine transitions") {
    // <(λ0)(λλ0), []> runs (APP), (LBA-BET), (FVAR) to a lone abstraction
    UState s = u_state_cons({parse_term("(\\0) (\\\\0)"), nullptr}, nullptr);
    URunResult r = u_run(s, kFuel);
    CHECK_FALSE(r.exhausted);
    CHECK(r.steps == 3);
    REQUIRE(u_terminal(r.state));
    CHECK(r.state->head.term->kind == TermKind::abs);
    CHECK(render_term(r.state->head.term) == "\\\\0");

    // (FVARLIFT) drops one lifted operation
    UEnv lifted = u_env_cons(u_op_shift(2), nullptr);
    UState s2 = u_state_cons({idx(0), lifted}, nullptr);
    auto n2 = u_step(s2);
    REQUIRE(n2);
    CHECK((*n2)->head.env == nullptr);
    CHECK(term_equal((*n2)->head.term, idx(0)));

    // (RVARLIFT) rewrites (a, i+1) to (a, i):(^, 0)
    UState s3 = u_state_cons({idx(2), lifted}, nullptr);
    auto n3 = u_step(s3);
    REQUIRE(n3);
    CHECK(term_equal((*n3)->head.term, idx(1)));
    REQUIRE((*n3)->head.env);
    CHECK((*n3)->head.env->length == 2);
    CHECK((*n3)->head.env->head->lifts == 1);
    CHECK((*n3)->head.env->tail->head->is_shift);
    CHECK((*n3)->head.env->tail->head->lifts == 0);

    // (VARSHIFT) increments past a zero-lift shift operation
    UState s5 = u_state_cons({idx(4), u_env_cons(u_op_shift(0), nullptr)}, nullptr);
    auto n5 = u_step(s5);
    REQUIRE(n5);
    CHECK(term_equal((*n5)->head.term, idx(5)));
    CHECK((*n5)->head.env == nullptr);

    // (RVAR) drops a zero-lift closure operation
    UEnv clo = u_env_cons(u_op_closure(parse_term("\\0"), nullptr, 0), nullptr);
    UState s6 = u_state_cons({idx(3), clo}, nullptr);
    auto n6 = u_step(s6);
    REQUIRE(n6);
    CHECK(term_equal((*n6)->head.term, idx(2)));
    CHECK((*n6)->head.env == nullptr);

    // an index with an empty operations list is terminal even with a stack
    UState s4 = u_state_cons({idx(1), nullptr},
                             u_state_cons({idx(0), nullptr}, nullptr));
    CHECK(u_terminal(s4));
    CHECK_FALSE(u_step(s4).has_value());
}

TEST_CASE("U-machine strong normalization") {
    EvalResult triv = u_nf({parse_term("\\0"), nullptr}, kFuel);
    CHECK_FALSE(triv.exhausted);
    CHECK(render_term(triv.term) == "\\0");

    EvalResult w = u_nf(u_embed(worked_closure()), kFuel);
    CHECK_FALSE(w.exhausted);
    CHECK(render_term(w.term) == "\\0");

    EvalResult d = u_nf({omega(), nullptr}, 2000);
    CHECK(d.exhausted);
}

TEST_CASE("the three evaluators agree on every closed term of size <= 9") {
    Enumerator oracle;
    std::uint64_t total = 0, diverged = 0;
    for (std::uint64_t n = 0; n <= 9; ++n) {
        for (const Term& t : oracle.terms(n, 0)) {
            ++total;
            EvalResult b = beta_normalize(t, kFuel);
            EvalResult u = upsilon_normalize(t, kFuel);
            EvalResult m = u_nf({t, nullptr}, kFuel);
            if (b.exhausted || u.exhausted || m.exhausted) {
                CHECK(b.exhausted);
                CHECK(u.exhausted);
                CHECK(m.exhausted);
                ++diverged;
                continue;
            }
            CHECK(term_equal(b.term, u.term));
            CHECK(term_equal(b.term, m.term));
        }
    }
    CHECK(total == 498);
    CHECK(diverged == 1); // exactly (λ(0 0))(λ(0 0))
}

TEST_CASE("decode_closure") {
    Closure trivial = parse_closure("<\\\\1 0, []>");
    CHECK(term_equal(decode_closure(trivial), trivial->term));

    Term d = decode_closure(worked_closure());
    CHECK(render_term(beta_normalize(d, kFuel).term) == "\\0");

    Closure open = parse_closure("<2, [<\\0, []>]>");
    CHECK_THROWS_AS(decode_closure(open), eval_domain_error);
}
