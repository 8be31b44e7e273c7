#ifndef CLOSCOMB_SYNTAX_HPP
#define CLOSCOMB_SYNTAX_HPP

#include <string>
#include <string_view>

#include "closcomb/term.hpp"

namespace closcomb {

// Concrete syntax:
//
//   term    := ('λ' | '\') term | app
//   app     := atom { atom }              (left-associative)
//   atom    := INDEX | '(' term ')'
//   INDEX   := decimal digits             (value < 2^63)
//   closure := '<' term ',' env '>'
//   env     := '[' [closure {',' closure}] ']'
//
// Abstraction bodies extend maximally to the right.  Whitespace separates
// atoms and is otherwise ignored.  render_* produce the canonical form
// (backslash abstractions, single spaces, minimal parentheses), and
// parse(render(x)) == x.

Term parse_term(std::string_view text);
Closure parse_closure(std::string_view text);

std::string render_term(const Term& t, bool unicode_lambda = false);
std::string render_env(const Env& e, bool unicode_lambda = false);
std::string render_closure(const Closure& c, bool unicode_lambda = false);

} // namespace closcomb

#endif
