#include <doctest.h>

#include <string>

#include "closcomb/counting.hpp"
#include "closcomb/errors.hpp"
#include "closcomb/random.hpp"
#include "closcomb/sampler.hpp"
#include "closcomb/syntax.hpp"

using namespace closcomb;

TEST_CASE("parsing basics") {
    Term t = parse_term("\\\\0");
    CHECK(term_equal(t, mk_abs(mk_abs(mk_index(0)))));

    // abstraction bodies extend maximally right
    Term r = parse_term("\\0 1");
    CHECK(term_equal(r, mk_abs(mk_app(mk_index(0), mk_index(1)))));

    // application is left-associative
    Term a = parse_term("0 1 2");
    CHECK(term_equal(a, mk_app(mk_app(mk_index(0), mk_index(1)), mk_index(2))));

    // multi-digit indices
    CHECK(term_equal(parse_term("12"), mk_index(12)));
    CHECK(term_equal(parse_term("1 2"), mk_app(mk_index(1), mk_index(2))));

    // unicode λ is accepted
    CHECK(term_equal(parse_term("λλ0"), parse_term("\\\\0")));
}

TEST_CASE("the S K application parses") {
    Term sk = parse_term("(\\\\\\2 0 (1 0)) (\\\\1)");
    REQUIRE(sk->kind == TermKind::app);
    CHECK(term_size(sk) == 18);
    CHECK(term_openness(sk) == 0);
}

TEST_CASE("the worked closure parses") {
    Closure c = parse_closure("<0 1, [<\\\\0,[]>, <\\0,[]>]>");
    CHECK(closure_size(c) == 9);
    CHECK(env_length(c->env) == 2);
    CHECK(closure_openness(c) == 0);
    CHECK(render_closure(c) == "<0 1, [<\\\\0, []>, <\\0, []>]>");
}

TEST_CASE("rendering is canonical and idempotent") {
    const char* inputs[] = {"( ( \\ 0 ) )", "\\ \\ 0", "<  1 ,  [ ] >"};
    CHECK(render_term(parse_term(inputs[0])) == "\\0");
    CHECK(render_term(parse_term(inputs[1])) == "\\\\0");
    CHECK(render_closure(parse_closure(inputs[2])) == "<1, []>");
    for (const char* s : {"\\0", "\\\\0", "(\\0) 1", "0 (1 2)", "\\0 0"}) {
        std::string once = render_term(parse_term(s));
        CHECK(render_term(parse_term(once)) == once);
    }
}

TEST_CASE("parse errors carry position and expectation") {
    CHECK_THROWS_AS(parse_term(""), parse_error);
    CHECK_THROWS_AS(parse_term("(0"), parse_error);
    CHECK_THROWS_AS(parse_term("0)"), parse_error);
    CHECK_THROWS_AS(parse_closure("<0, [>"), parse_error);
    try {
        parse_term("\\\n  )");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("expected") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_term("9223372036854775808"), parse_error); // 2^63
    CHECK_NOTHROW(parse_term("9223372036854775807"));
}

TEST_CASE("round trip over random objects") {
    Counter counts;
    Sampler s(counts);
    RandomSource rng(97);
    for (int i = 0; i < 400; ++i) {
        std::uint64_t n = 1 + (rng.bits64() % 50);
        Term t = s.plain_term(n, rng);
        CHECK(term_equal(parse_term(render_term(t)), t));
        Closure c = s.plain_closure(n, rng);
        CHECK(closure_equal(parse_closure(render_closure(c)), c));
        Env e = s.plain_environment(n, rng);
        Closure boxed = mk_closure(mk_index(0), e);
        CHECK(closure_equal(parse_closure(render_closure(boxed)), boxed));
    }
}

TEST_CASE("unicode rendering round-trips through the parser") {
    Term t = parse_term("\\\\1 (\\0)");
    std::string u = render_term(t, true);
    CHECK(u.find("λ") != std::string::npos);
    CHECK(term_equal(parse_term(u), t));
}
