#pragma once

#include <string>

#include "cplkit/formula.hpp"

namespace cplkit {

// Canonical text, guaranteed to reparse to an equal AST. Minimal parentheses
// under the precedence ~ > & > | > -> unless full_parens is set. Negation
// bodies are always parenthesized in CPL; quantifier bodies are parenthesized
// exactly when they are a binary connective.
std::string print_cpl(const CplFormula& f, bool full_parens = false);
std::string print_modal(const ModalFormula& f, bool full_parens = false);

// S-expression form with heads and/or/not/implies/iff/exists/forall/=/pred/in/N.
std::string print_fol2(const Fol2Formula& f);

std::string print_term(const Term& t);

}  // namespace cplkit
