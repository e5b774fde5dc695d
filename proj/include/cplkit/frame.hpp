#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cplkit/caps.hpp"
#include "cplkit/errors.hpp"

namespace cplkit {

// Subsets of a world set are bitmasks over the lexicographic world order:
// bit i set <=> world i (in sorted label order) belongs to the subset.
using Mask = std::uint32_t;

int popcount(Mask m);

enum class FrameClass {
  Monotonic,
  QuasiFilter,
  AugmentedQuasiFilter,
  Filter,
  AugmentedFilter,
};

using FrameClassSet = std::set<FrameClass>;

std::string to_string(FrameClass c);
std::optional<FrameClass> frame_class_from_string(const std::string& name);

// A finite neighborhood frame: worlds in sorted label order, one family of
// subsets per world (each family sorted ascending by mask, duplicate-free),
// plus optional unary predicate extensions. Value type; every operation on
// frames is a pure function.
class NeighborhoodFrame {
 public:
  NeighborhoodFrame() = default;

  static NeighborhoodFrame make(
      const std::vector<std::string>& worlds,
      const std::map<std::string, std::vector<std::vector<std::string>>>& neighborhoods,
      const std::map<std::string, std::vector<std::string>>& predicates = {});

  // Fast path: labels already sorted and unique, families indexed by world.
  static NeighborhoodFrame from_masks(std::vector<std::string> sorted_worlds,
                                      std::vector<std::vector<Mask>> families,
                                      std::map<std::string, Mask> predicates = {});

  int size() const { return static_cast<int>(worlds_.size()); }
  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::string& label(int w) const { return worlds_[w]; }
  int index_of(const std::string& label) const;  // -1 if absent
  int require_world(const std::string& label) const;

  const std::vector<Mask>& family(int w) const { return families_[w]; }
  bool neighborhood_contains(int w, Mask u) const;
  Mask full_mask() const { return size() == 0 ? 0 : (Mask(1) << size()) - 1; }
  Mask subset_count() const { return Mask(1) << size(); }

  const std::map<std::string, Mask>& predicates() const { return predicates_; }
  Mask predicate_extension(const std::string& name) const;

  std::vector<std::string> mask_labels(Mask m) const;
  Mask mask_of(const std::vector<std::string>& labels) const;

  bool operator==(const NeighborhoodFrame&) const = default;

 private:
  std::vector<std::string> worlds_;
  std::vector<std::vector<Mask>> families_;
  std::map<std::string, Mask> predicates_;
};

// Which of the five closure conditions the frame satisfies:
//   monotonic          every family closed under supersets
//   quasi-filter       monotonic + closed under intersections of nonempty
//                      finite subfamilies
//   filter             quasi-filter + every family nonempty
//   augmented ones     every family empty (quasi only) or a principal upset
FrameClassSet classify(const NeighborhoodFrame& f);

// Least monotonic frame containing f's neighborhoods (superset closure).
NeighborhoodFrame monotonic_closure(const NeighborhoodFrame& f);

// {w : x ∈ N(w)}: the box set-operation shared by the complex algebra, the
// definable-set algebras, and the semantics of the binding modality.
Mask box_set(const NeighborhoodFrame& f, Mask x);

// A finite topology: points in sorted label order, open sets as masks.
// Validated to contain the empty and full sets and to be closed under
// pairwise union and intersection.
class FiniteTopology {
 public:
  FiniteTopology() = default;

  static FiniteTopology make(const std::vector<std::string>& points,
                             const std::vector<std::vector<std::string>>& opens);
  static FiniteTopology from_masks(std::vector<std::string> sorted_points,
                                   std::vector<Mask> opens);
  static FiniteTopology discrete(const std::vector<std::string>& points);

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& label(int p) const { return points_[p]; }
  int index_of(const std::string& label) const;
  int require_point(const std::string& label) const;
  const std::vector<Mask>& opens() const { return opens_; }
  Mask full_mask() const { return size() == 0 ? 0 : (Mask(1) << size()) - 1; }

  bool is_open(Mask m) const;
  Mask interior(Mask m) const;
  Mask closure(Mask m) const;
  bool is_discrete() const;

  bool operator==(const FiniteTopology&) const = default;

 private:
  std::vector<std::string> points_;
  std::vector<Mask> opens_;
};

// Neighborhoods of the induced frame: U is a neighborhood of w iff w lies in
// the interior of U.
NeighborhoodFrame from_topology(const FiniteTopology& t);

// Row x has bit y set iff x lies in the closure of {y}.
std::vector<Mask> specialization_preorder(const FiniteTopology& t);

bool preorder_antisymmetric(const std::vector<Mask>& rel);  // T0 shape
bool preorder_discrete(const std::vector<Mask>& rel);       // T1 shape

// A total map between the world sets of two frames.
class WorldMap {
 public:
  static WorldMap make(NeighborhoodFrame domain, NeighborhoodFrame codomain,
                       const std::map<std::string, std::string>& assoc);
  static WorldMap from_indices(NeighborhoodFrame domain, NeighborhoodFrame codomain,
                               std::vector<int> map);

  const NeighborhoodFrame& domain() const { return domain_; }
  const NeighborhoodFrame& codomain() const { return codomain_; }
  int apply(int w) const { return map_[w]; }
  Mask image(Mask m) const;
  Mask preimage(Mask m) const;
  bool surjective() const;

 private:
  NeighborhoodFrame domain_;
  NeighborhoodFrame codomain_;
  std::vector<int> map_;
};

struct MorphismViolation {
  enum class Kind { Forth, Back };
  Kind kind;
  std::string world;  // domain world
  Mask codomain_set;
};

// forth: preimage(U') in N(w) implies U' in N'(f(w));
// back:  U' in N'(f(w)) implies preimage(U') in N(w).
std::optional<MorphismViolation> bounded_morphism_violation(const WorldMap& f);
bool is_bounded_morphism(const WorldMap& f);

// Replaces the back condition by: every U' in N'(f(w)) has some U in N(w)
// with f(U) included in U'. Agrees with is_bounded_morphism on monotonic
// frames.
bool is_bounded_morphism_via_dosen(const WorldMap& f);

// True iff sub's worlds are a subset of sup's and the inclusion map is a
// bounded morphism (predicates must agree on the common worlds).
bool is_generated_subframe(const NeighborhoodFrame& sub, const NeighborhoodFrame& sup);

// Disjoint union of finitely many frames. World labels are tag-prefixed
// ("u0_", "u1_", ...) to force disjointness. U is a neighborhood of a world
// from factor i iff U intersected with that factor copy is one there; the
// family is kept as a membership predicate and only dumped explicitly on
// demand.
class DisjointUnion {
 public:
  explicit DisjointUnion(std::vector<NeighborhoodFrame> factors);

  const std::vector<std::string>& worlds() const { return worlds_; }
  int size() const { return static_cast<int>(worlds_.size()); }
  int factor_of(int w) const { return factor_of_[w]; }
  int factor_world(int w) const { return factor_world_[w]; }
  Mask factor_mask(int i) const { return factor_masks_[i]; }
  const std::vector<NeighborhoodFrame>& factors() const { return factors_; }

  bool contains(int w, Mask u) const;
  NeighborhoodFrame materialize() const;

 private:
  std::vector<NeighborhoodFrame> factors_;
  std::vector<std::string> worlds_;     // sorted
  std::vector<int> factor_of_;          // per union world
  std::vector<int> factor_world_;       // per union world
  std::vector<Mask> factor_masks_;      // per factor: its copy inside the union
  std::vector<std::vector<int>> world_of_;  // [factor][factor world] -> union world
};

NeighborhoodFrame disjoint_union(const std::vector<NeighborhoodFrame>& factors);

// Quasi-ultraproduct over a principal ultrafilter on the index set. The
// product of the underlying world sets modulo a principal ultrafilter
// collapses to the selected factor, and a set is induced exactly by its
// component at the principal index, so the neighborhoods come out as the
// upward closures of the selected factor's neighborhoods.
NeighborhoodFrame quasi_ultraproduct(const std::vector<NeighborhoodFrame>& frames,
                                     int principal_index);

// Backtracking search for a label-set bijection preserving neighborhoods and
// predicates. Capped at kMaxIsoWorlds worlds.
std::optional<std::vector<int>> find_isomorphism(const NeighborhoodFrame& a,
                                                 const NeighborhoodFrame& b);
bool isomorphic(const NeighborhoodFrame& a, const NeighborhoodFrame& b);

}  // namespace cplkit
