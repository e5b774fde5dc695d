#pragma once

#include <string>
#include <vector>

#include "cplkit/formula.hpp"

namespace cplkit {

// Concrete grammar, shared across the three languages:
//   terms        v (lowercase variable) | 'w (constant, apostrophe + label)
//   CPL          t = t | P(t) | ~f | f & f | f | f | f -> f
//                | exists v. f | forall v. f | t[v: f]
//   modal        p | true | false | ~f | []f | <>f | f & f | f | f | f -> f
//   two-sorted   s-expressions: (= ..) (pred P ..) (in x U) (N x U)
//                (not f) (and f f) (or f f) (implies f f) (iff f f)
//                (exists v f) (forall v f)
// Precedence ~ > & > | > ->, with -> right-associative. Quantifier bodies
// extend maximally rightward. Neighborhood variables start uppercase.
CplFormula parse_cpl(const std::string& text, const Signature& sig = {});
ModalFormula parse_modal(const std::string& text);
Fol2Formula parse_fol2(const std::string& text);

// Non-blank, non-comment lines of a formula file, in order. `#` starts a
// comment that runs to end of line.
std::vector<std::string> formula_lines(const std::string& text);

}  // namespace cplkit
