#include "cplkit/def_algebra.hpp"

#include <algorithm>

namespace cplkit {

namespace {

Term x_var() { return Term::var("x"); }

CplFormula boxed_witness(const CplFormula& phi) {
  return CplFormula::box(x_var(), "y", substitute(phi, "x", Term::var("y")));
}

}  // namespace

DefAlgebra DefAlgebra::build(const NeighborhoodFrame& f, const std::vector<std::string>& params) {
  DefAlgebra out;
  out.frame_ = f;
  out.params_ = f.mask_of(params);

  auto add = [&](Mask set, const CplFormula& w) {
    out.witnesses_.emplace(set, w);  // first witness wins
  };

  CplFormula truth = CplFormula::equal(x_var(), x_var());
  add(f.full_mask(), truth);
  add(0, CplFormula::negation(truth));
  for (int a = 0; a < f.size(); ++a) {
    if ((out.params_ >> a) & 1) {
      add(Mask(1) << a, CplFormula::equal(x_var(), Term::constant(f.label(a))));
    }
  }
  for (const auto& [name, ext] : f.predicates()) {
    add(ext, CplFormula::pred(name, {x_var()}));
  }

  // Fixpoint rounds; inside a round, elements are taken in ascending mask
  // order so the witness picked for a new set is reproducible.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> current;
    current.reserve(out.witnesses_.size());
    for (const auto& [set, w] : out.witnesses_) current.push_back(set);
    auto size_before = out.witnesses_.size();
    for (Mask s : current) {
      const CplFormula& w = out.witnesses_.at(s);
      add(f.full_mask() & ~s, CplFormula::negation(w));
      add(box_set(f, s), boxed_witness(w));
    }
    for (Mask s : current) {
      for (Mask t : current) {
        if (t <= s) continue;
        add(s & t, CplFormula::conj(out.witnesses_.at(s), out.witnesses_.at(t)));
      }
    }
    grew = out.witnesses_.size() > size_before;
  }

  for (const auto& [set, w] : out.witnesses_) out.carrier_.push_back(set);
  return out;
}

bool DefAlgebra::contains(Mask x) const {
  return std::binary_search(carrier_.begin(), carrier_.end(), x);
}

const CplFormula& DefAlgebra::witness(Mask x) const {
  auto it = witnesses_.find(x);
  if (it == witnesses_.end()) {
    fail(ErrorCode::UsageError, "set is not an element of the definable algebra");
  }
  return it->second;
}

Mask DefAlgebra::box(Mask x) const {
  if (!contains(x)) {
    fail(ErrorCode::UsageError, "set is not an element of the definable algebra");
  }
  return box_set(frame_, x);
}

DefAlgebra build_def_algebra(const NeighborhoodFrame& f, const std::vector<std::string>& params) {
  return DefAlgebra::build(f, params);
}

TypePoint tp(const NeighborhoodFrame& f, const std::string& w,
             const std::vector<std::string>& params) {
  DefAlgebra alg = DefAlgebra::build(f, params);
  int wi = f.require_world(w);
  Mask atom = f.full_mask();
  for (Mask s : alg.carrier()) {
    if ((s >> wi) & 1) atom &= s;
  }
  return TypePoint{atom};
}

NeighborhoodFrame essential_part(const NeighborhoodFrame& f) {
  DefAlgebra alg = DefAlgebra::build(f, f.worlds());
  std::vector<std::vector<Mask>> families(f.size());
  for (int w = 0; w < f.size(); ++w) {
    for (Mask u : f.family(w)) {
      if (alg.contains(u)) families[w].push_back(u);
    }
  }
  return NeighborhoodFrame::from_masks(f.worlds(), std::move(families), f.predicates());
}

}  // namespace cplkit
