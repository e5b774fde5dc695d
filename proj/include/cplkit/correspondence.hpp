#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cplkit/formula.hpp"
#include "cplkit/frame.hpp"

namespace cplkit {

// A modal formula paired with its first-order counterpart. Local pairs tie
// validity at a world to a formula with distinguished free variable x;
// sentence pairs tie frame validity (or a structural property) to a closed
// formula. The claim is relative to the applicable frame class.
struct CorrespondencePair {
  enum class Kind { Local, ClassSentence, TopologySentence };

  std::string name;
  std::optional<ModalFormula> modal;
  CplFormula cpl;
  Kind kind;
  FrameClass applicable;
};

// The built-in pairs: B (symmetry), 4 (transitivity shape), the sentence
// defining augmented quasi-filters, the separation sentences T0 and T1, and
// the sentence pinning images of discrete spaces.
const std::vector<CorrespondencePair>& builtin_pairs();
const CorrespondencePair& lookup_pair(const std::string& name);

// Box-and-meet axioms valid on exactly the topological frames, and the same
// plus the discreteness axiom p -> []p.
const std::vector<ModalFormula>& topological_axioms();
const std::vector<ModalFormula>& discrete_class_axioms();

struct CorrespondenceReport {
  std::string pair;
  int checked = 0;
  std::vector<std::string> disagreements;  // world labels where the sides differ

  bool passed() const { return disagreements.empty(); }
};

// Compares modal validity at each world against the CPL side with x bound to
// that world. Expected to report no disagreements on frames of the pair's
// class.
CorrespondenceReport check_local_correspondence(const NeighborhoodFrame& f,
                                                const CorrespondencePair& pair);

// Whether the sentence's truth value on the frame matches the structural
// reference: the classifier for "aqf-def", the discrete-image shape for
// "discrete".
bool check_class_sentence(const NeighborhoodFrame& f, const CorrespondencePair& pair);

// Whether the sentence evaluated on the topology's frame matches the shape
// of the specialization preorder: antisymmetry for "T0", discreteness for
// "T1".
bool check_topology_sentence(const FiniteTopology& t, const CorrespondencePair& pair);

// Row x holds the worlds y whose singleton complement is not a neighborhood
// of x. On augmented quasi-filter frames with a nonempty family this is the
// intersection of the family; with an empty family the row is full, so the
// intersection identity does not apply there.
std::vector<Mask> accessibility_relation(const NeighborhoodFrame& f);

// Every family is exactly the sets containing the world: the frames that
// topological semantics assigns to discrete spaces.
bool is_discrete_image(const NeighborhoodFrame& f);

bool validates_all(const NeighborhoodFrame& f, const std::vector<ModalFormula>& delta);

struct ClosureWitness {
  std::vector<NeighborhoodFrame> inputs;  // member frames the construction used
  NeighborhoodFrame produced;             // the frame that escaped the class
};

struct ClosureCondition {
  std::string name;
  bool passed = true;
  int checked = 0;
  bool exhaustive = true;
  std::string note;
  std::optional<ClosureWitness> witness;
};

struct ClosureReport {
  ClosureCondition disjoint_unions;
  ClosureCondition morphic_images;
  ClosureCondition generated_subframes;
  ClosureCondition reflects_ue;

  bool passed() const {
    return disjoint_unions.passed && morphic_images.passed &&
           generated_subframes.passed && reflects_ue.passed;
  }
};

// Checks the four closure conditions a modally definable class must satisfy,
// over the given corpus: pairwise disjoint unions stay in the class, images
// under surjective bounded morphisms stay (codomains enumerated exhaustively
// up to three worlds), generated subframes stay, and membership of the
// ultrafilter extension pulls back. Witnesses carry the frames involved so a
// failure can be replayed.
ClosureReport gt_closure_check(const std::vector<NeighborhoodFrame>& corpus,
                               const std::function<bool(const NeighborhoodFrame&)>& member);

// Membership by validity of every formula in delta.
ClosureReport gt_closure_check(const std::vector<NeighborhoodFrame>& corpus,
                               const std::vector<ModalFormula>& delta);

}  // namespace cplkit
