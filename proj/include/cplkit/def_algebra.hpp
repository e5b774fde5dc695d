#pragma once

#include <map>
#include <string>
#include <vector>

#include "cplkit/formula.hpp"
#include "cplkit/frame.hpp"

namespace cplkit {

// Least family of subsets of a frame containing the empty set, the full set,
// the singleton {a} for each parameter a, and every predicate extension, and
// closed under complement, intersection, and X -> {w : X ∈ N(w)}. Each
// element carries one witness formula in one free variable x; witnesses are
// documentation, element identity is set equality.
class DefAlgebra {
 public:
  static DefAlgebra build(const NeighborhoodFrame& f, const std::vector<std::string>& params);

  const NeighborhoodFrame& frame() const { return frame_; }
  Mask param_mask() const { return params_; }
  const std::vector<Mask>& carrier() const { return carrier_; }
  bool contains(Mask x) const;
  const CplFormula& witness(Mask x) const;
  Mask box(Mask x) const;  // restriction of the frame's box set-operation

 private:
  NeighborhoodFrame frame_;
  Mask params_ = 0;
  std::vector<Mask> carrier_;
  std::map<Mask, CplFormula> witnesses_;
};

DefAlgebra build_def_algebra(const NeighborhoodFrame& f, const std::vector<std::string>& params);

// The ultrafilter {X in the algebra : w ∈ X}, as its generating atom.
struct TypePoint {
  Mask atom = 0;
};

TypePoint tp(const NeighborhoodFrame& f, const std::string& w,
             const std::vector<std::string>& params);

// N^e(w) = N(w) restricted to sets definable with every world as a parameter.
// On finite frames every subset is so definable, making this the identity;
// the construction still computes the restriction honestly.
NeighborhoodFrame essential_part(const NeighborhoodFrame& f);

}  // namespace cplkit
