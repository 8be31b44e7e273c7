#include "closcomb/syntax.hpp"

#include <cctype>
#include <vector>

#include "closcomb/errors.hpp"

namespace closcomb {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    [[noreturn]] void fail(const std::string& expected) {
        std::string got = pos < text.size() ? "'" + std::string(1, text[pos]) + "'"
                                            : "end of input";
        throw parse_error("expected " + expected + ", got " + got, line, col);
    }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool try_eat(char c) {
        if (!peek_is(c)) return false;
        advance();
        return true;
    }

    void expect(char c, const char* what) {
        if (!try_eat(c)) fail(what);
    }

    // 'λ' is U+03BB: 0xCE 0xBB
    bool try_eat_lambda() {
        skip_ws();
        if (pos < text.size() && text[pos] == '\\') {
            advance();
            return true;
        }
        if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos]) == 0xCE &&
            static_cast<unsigned char>(text[pos + 1]) == 0xBB) {
            advance();
            advance();
            return true;
        }
        return false;
    }

    bool at_digit() {
        skip_ws();
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    Term index() {
        std::uint64_t v = 0;
        bool overflow = false;
        std::size_t l = line, c = col;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (v >= (std::uint64_t{1} << 63)) overflow = true;
            advance();
        }
        if (overflow) throw parse_error("index literal too large (must be < 2^63)", l, c);
        return mk_index(v);
    }

    Term atom() {
        if (at_digit()) return index();
        if (try_eat('(')) {
            Term t = term();
            expect(')', "')'");
            return t;
        }
        fail("an index, '(' or '\\'");
    }

    bool atom_ahead() {
        skip_ws();
        if (pos >= text.size()) return false;
        char c = text[pos];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(';
    }

    Term term() {
        if (try_eat_lambda()) return mk_abs(term());
        Term t = atom();
        while (atom_ahead()) t = mk_app(t, atom());
        return t;
    }

    Closure closure() {
        expect('<', "'<'");
        Term t = term();
        expect(',', "','");
        Env e = env();
        expect('>', "'>'");
        return mk_closure(t, e);
    }

    Env env() {
        expect('[', "'['");
        if (try_eat(']')) return nullptr;
        std::vector<Closure> items;
        items.push_back(closure());
        while (try_eat(',')) items.push_back(closure());
        expect(']', "']' or ','");
        Env e = nullptr;
        for (auto it = items.rbegin(); it != items.rend(); ++it) e = env_cons(*it, e);
        return e;
    }

    void expect_end(const char* what) {
        skip_ws();
        if (pos != text.size()) fail(what);
    }
};

void render_term_into(const Term& t, std::string& out, bool atom_pos, bool unicode) {
    switch (t->kind) {
    case TermKind::index:
        out += std::to_string(t->index);
        return;
    case TermKind::abs:
        if (atom_pos) {
            out += '(';
            render_term_into(t, out, false, unicode);
            out += ')';
        } else {
            out += unicode ? "λ" : "\\";
            render_term_into(t->fun, out, false, unicode);
        }
        return;
    case TermKind::app:
        if (atom_pos) {
            out += '(';
            render_term_into(t, out, false, unicode);
            out += ')';
        } else {
            // left association: the function side tolerates applications,
            // abstractions still need parentheses
            if (t->fun->kind == TermKind::abs) {
                out += '(';
                render_term_into(t->fun, out, false, unicode);
                out += ')';
            } else {
                render_term_into(t->fun, out, false, unicode);
            }
            out += ' ';
            render_term_into(t->arg, out, true, unicode);
        }
        return;
    }
}

void render_closure_into(const Closure& c, std::string& out, bool unicode);

void render_env_into(const Env& e, std::string& out, bool unicode) {
    out += '[';
    bool first = true;
    for (const EnvNode* p = e.get(); p; p = p->tail.get()) {
        if (!first) out += ", ";
        first = false;
        render_closure_into(p->head, out, unicode);
    }
    out += ']';
}

void render_closure_into(const Closure& c, std::string& out, bool unicode) {
    out += '<';
    render_term_into(c->term, out, false, unicode);
    out += ", ";
    render_env_into(c->env, out, unicode);
    out += '>';
}

} // namespace

Term parse_term(std::string_view text) {
    Parser p{text};
    Term t = p.term();
    p.expect_end("end of input after term");
    return t;
}

Closure parse_closure(std::string_view text) {
    Parser p{text};
    Closure c = p.closure();
    p.expect_end("end of input after closure");
    return c;
}

std::string render_term(const Term& t, bool unicode_lambda) {
    std::string out;
    render_term_into(t, out, false, unicode_lambda);
    return out;
}

std::string render_env(const Env& e, bool unicode_lambda) {
    std::string out;
    render_env_into(e, out, unicode_lambda);
    return out;
}

std::string render_closure(const Closure& c, bool unicode_lambda) {
    std::string out;
    render_closure_into(c, out, unicode_lambda);
    return out;
}

} // namespace closcomb
