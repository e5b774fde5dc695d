#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cplkit/formula.hpp"
#include "cplkit/frame.hpp"

namespace cplkit {

// A finite Boolean algebra with a monotone operator. Elements are masks over
// the atoms, in the fixed atom order, so the Boolean structure is bitwise and
// only the box needs a table. Construction rejects non-monotone tables.
class FiniteBam {
 public:
  FiniteBam() = default;

  // Labels must be sorted and unique; the table must have one entry per
  // element. Caps the atom count at kMaxAlgebraAtoms.
  static FiniteBam make(std::vector<std::string> atom_labels, std::vector<Mask> box);

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  Mask element_count() const { return Mask(1) << atom_count(); }
  Mask top() const { return element_count() - 1; }
  const std::vector<std::string>& atom_labels() const { return atoms_; }
  const std::string& atom_label(int i) const { return atoms_[i]; }

  Mask box(Mask x) const { return box_[x]; }
  const std::vector<Mask>& box_table() const { return box_; }

  // Concatenated labels of the atoms below x; the empty string is bottom.
  std::string element_name(Mask x) const;

  bool operator==(const FiniteBam&) const = default;

 private:
  std::vector<std::string> atoms_;
  std::vector<Mask> box_;
};

// Powerset algebra of a monotonic frame: atoms are the worlds in label
// order, box(X) = {w : X is a neighborhood of w}.
FiniteBam complex_algebra(const NeighborhoodFrame& f);

// In a finite Boolean algebra every ultrafilter is the upward closure of a
// single atom, so the atom index is the whole datum.
struct Ultrafilter {
  int atom;
  bool contains(Mask element) const { return (element >> atom) & 1; }
};

// One ultrafilter per atom, in atom order.
std::vector<Ultrafilter> ultrafilters(const FiniteBam& a);

struct CanonicalExtensionResult {
  FiniteBam extension;             // algebra over the ultrafilter atoms
  std::vector<Mask> embedding;     // per element of the input: {u : element in u}
  std::vector<Mask> closed_elements;  // every element: finite algebras are clopen
};

// Powerset of the ultrafilter set with the box lifted by: the join, over
// closed x below the argument, of the meet of the embedded boxes of every
// element whose embedding covers x.
CanonicalExtensionResult canonical_extension(const FiniteBam& a);

// Frame on the ultrafilters: U is a neighborhood of u when some K below U
// forces the box of every element embedding above K into u. An independent
// reading of the same data as canonical_extension; the two are compared
// table-for-table in tests.
NeighborhoodFrame ultrafilter_frame(const FiniteBam& a);

// ultrafilter_frame of the complex algebra, worlds named after the original
// ones and predicate extensions carried along the atom bijection. Isomorphic
// to the input for every finite monotonic frame.
NeighborhoodFrame ultrafilter_extension(const NeighborhoodFrame& f);

// Preimage map of a world map, as a table from codomain elements to domain
// elements: the algebra dual running against the frame arrow.
std::vector<Mask> dual_map(const WorldMap& f);

struct DualityReport {
  bool bounded = false;               // frame side: bounded morphism
  bool meet_preserved = false;        // algebra side, on the dual map
  bool complement_preserved = false;
  bool box_preserved = false;

  bool algebra_hom() const { return meet_preserved && complement_preserved && box_preserved; }
  bool agree() const { return bounded == algebra_hom(); }
};

// Evaluates both sides of the duality: whether the map is a bounded morphism
// and whether its dual preserves meet, complement, and box. agree() is the
// biconditional and is expected true for every map between monotonic frames.
DualityReport verify_duality(const WorldMap& f);

using BamAssignment = std::map<std::string, Mask>;

Mask eval_modal_bam(const FiniteBam& a, const BamAssignment& v, const ModalFormula& phi);

// Validity: the formula denotes top under every assignment of elements to
// its propositions. Assignments are enumerated with the first proposition
// name cycling slowest; the counterexample search reports the first failure.
bool bam_valid(const FiniteBam& a, const ModalFormula& phi);
std::optional<BamAssignment> find_bam_counterexample(const FiniteBam& a,
                                                     const ModalFormula& phi);

struct EmbeddingReport {
  NeighborhoodFrame product;       // the quasi-ultraproduct itself
  bool injective = false;
  bool boolean_hom = false;
  bool box_commutes = false;
  std::optional<Mask> counterexample;  // first element where the box square fails

  bool pass() const { return injective && boolean_hom && box_commutes; }
};

// Embeds the ultraproduct of the factor algebras (which a principal
// ultrafilter collapses to the selected factor's algebra) into the complex
// algebra of the quasi-ultraproduct: an element goes to the set of product
// worlds whose selected component it contains. Verifies injectivity, the
// Boolean operations, and the box square.
EmbeddingReport ultraproduct_embedding(const std::vector<NeighborhoodFrame>& frames,
                                       int principal_index);

// {"atoms": [...], "box": {element name: element name, ...}} with every
// element keyed by element_name in mask order.
std::string bam_to_json(const FiniteBam& a);

}  // namespace cplkit
