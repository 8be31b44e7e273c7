#include "closcomb/term.hpp"

#include <cassert>
#include <utility>

namespace closcomb {

Term mk_index(std::uint64_t k) {
    auto n = std::make_shared<TermNode>();
    n->kind = TermKind::index;
    n->index = k;
    n->size = k + 1;
    return n;
}

Term mk_abs(Term body) {
    auto n = std::make_shared<TermNode>();
    n->kind = TermKind::abs;
    n->size = body->size + 1;
    n->fun = std::move(body);
    return n;
}

Term mk_app(Term fun, Term arg) {
    auto n = std::make_shared<TermNode>();
    n->kind = TermKind::app;
    n->size = fun->size + arg->size + 1;
    n->fun = std::move(fun);
    n->arg = std::move(arg);
    return n;
}

Closure mk_closure(Term term, Env env) {
    auto c = std::make_shared<ClosureNode>();
    c->size = term->size + env_size(env);
    c->term = std::move(term);
    c->env = std::move(env);
    return c;
}

Env env_cons(Closure head, Env tail) {
    auto e = std::make_shared<EnvNode>();
    e->size = head->size + env_size(tail);
    e->length = env_length(tail) + 1;
    e->head = std::move(head);
    e->tail = std::move(tail);
    return e;
}

const Closure& env_at(const Env& e, std::uint64_t i) {
    const EnvNode* p = e.get();
    assert(p && i < p->length);
    while (i > 0) {
        p = p->tail.get();
        --i;
    }
    return p->head;
}

std::uint64_t term_openness(const Term& t) {
    switch (t->kind) {
    case TermKind::index: return t->index + 1;
    case TermKind::abs: {
        std::uint64_t b = term_openness(t->fun);
        return b > 0 ? b - 1 : 0;
    }
    case TermKind::app: {
        std::uint64_t f = term_openness(t->fun);
        std::uint64_t a = term_openness(t->arg);
        return f > a ? f : a;
    }
    }
    return 0;
}

bool is_m_open(const Term& t, std::uint64_t m) { return term_openness(t) <= m; }

std::uint64_t closure_openness(const Closure& c) {
    std::uint64_t t = term_openness(c->term);
    std::uint64_t len = env_length(c->env);
    std::uint64_t m = t > len ? t - len : 0;
    for (const EnvNode* p = c->env.get(); p; p = p->tail.get()) {
        std::uint64_t o = closure_openness(p->head);
        if (o > m) m = o;
    }
    return m;
}

bool term_equal(const Term& a, const Term& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind || a->size != b->size) return false;
    switch (a->kind) {
    case TermKind::index: return a->index == b->index;
    case TermKind::abs: return term_equal(a->fun, b->fun);
    case TermKind::app: return term_equal(a->fun, b->fun) && term_equal(a->arg, b->arg);
    }
    return false;
}

bool closure_equal(const Closure& a, const Closure& b) {
    if (a.get() == b.get()) return true;
    return a->size == b->size && term_equal(a->term, b->term) && env_equal(a->env, b->env);
}

bool env_equal(const Env& a, const Env& b) {
    const EnvNode* p = a.get();
    const EnvNode* q = b.get();
    while (p && q) {
        if (p == q) return true;
        if (p->length != q->length || p->size != q->size) return false;
        if (!closure_equal(p->head, q->head)) return false;
        p = p->tail.get();
        q = q->tail.get();
    }
    return p == q;
}

} // namespace closcomb
