#pragma once

#include <map>
#include <string>
#include <vector>

#include "cplkit/formula.hpp"
#include "cplkit/frame.hpp"
#include "cplkit/semantics.hpp"

namespace cplkit {

// A frame plus an explicit list of neighborhood-sort elements. Construction
// checks largeness: every neighborhood of every world must be listed, or the
// two-sorted reading of the N atom would diverge from the frame.
class TwoSortedStructure {
 public:
  static TwoSortedStructure make(NeighborhoodFrame f, std::vector<Mask> sets);

  const NeighborhoodFrame& frame() const { return frame_; }
  const std::vector<Mask>& sets() const { return sets_; }  // sorted unique
  bool has_set(Mask m) const;

 private:
  NeighborhoodFrame frame_;
  std::vector<Mask> sets_;
};

TwoSortedStructure full_powerset_structure(const NeighborhoodFrame& f);

// Neighborhood sort restricted to the sets definable with every world as a
// parameter; on finite frames this coincides with the full powerset.
TwoSortedStructure def_closed_structure(const NeighborhoodFrame& f);

// Structural translation into the two-sorted language. Boolean connectives
// and quantifiers pass through; a box becomes
//   exists Uk (and (forall y (iff (in y Uk) body)) (N t Uk))
// with Uk fresh, numbered U1, U2, ... in leftmost-innermost order.
Fol2Formula translate2(const CplFormula& phi);

struct TwoSortedAssignment {
  Assignment states;                 // state variable -> world label
  std::map<std::string, Mask> sets;  // neighborhood variable -> element
};

// Two-sorted Tarski recursion, neighborhood quantifiers ranging over the
// explicit set list. Shares no code with eval_cpl: this is the independent
// oracle the translation is checked against.
bool eval_fol2(const TwoSortedStructure& m, const Fol2Formula& phi,
               const TwoSortedAssignment& rho);

// eval_cpl(f, phi, rho) == eval_fol2 of the translation over the full
// powerset structure. Expected true always.
bool check_translation_equivalence(const NeighborhoodFrame& f, const CplFormula& phi,
                                   const Assignment& rho);

// forall y1 .. forall yk exists U forall var (iff body (in var U)) where
// y1..yk are phi's other free variables and body is phi's translation.
Fol2Formula comprehension_instance(const CplFormula& phi, const std::string& var);

}  // namespace cplkit
