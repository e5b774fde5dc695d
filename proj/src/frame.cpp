#include "cplkit/frame.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cplkit {

int popcount(Mask m) { return std::popcount(m); }

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SortError: return "SortError";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::NotMonotonic: return "NotMonotonic";
    case ErrorCode::NotASubset: return "NotASubset";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::UnknownConstant: return "UnknownConstant";
    case ErrorCode::UnknownPredicate: return "UnknownPredicate";
    case ErrorCode::UnknownProposition: return "UnknownProposition";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Error";
}

std::string to_string(FrameClass c) {
  switch (c) {
    case FrameClass::Monotonic: return "monotonic";
    case FrameClass::QuasiFilter: return "quasi-filter";
    case FrameClass::AugmentedQuasiFilter: return "augmented-quasi-filter";
    case FrameClass::Filter: return "filter";
    case FrameClass::AugmentedFilter: return "augmented-filter";
  }
  return "";
}

std::optional<FrameClass> frame_class_from_string(const std::string& name) {
  for (FrameClass c : {FrameClass::Monotonic, FrameClass::QuasiFilter,
                       FrameClass::AugmentedQuasiFilter, FrameClass::Filter,
                       FrameClass::AugmentedFilter}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

namespace {

void check_world_labels(const std::vector<std::string>& sorted) {
  if (static_cast<int>(sorted.size()) > kMaxWorlds) {
    fail(ErrorCode::SizeCapExceeded,
         "frame has " + std::to_string(sorted.size()) + " worlds, cap is " +
             std::to_string(kMaxWorlds));
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].empty()) fail(ErrorCode::ParseError, "empty world label");
    if (i > 0 && sorted[i - 1] >= sorted[i]) {
      fail(ErrorCode::ParseError, "duplicate world label \"" + sorted[i] + "\"");
    }
  }
}

}  // namespace

NeighborhoodFrame NeighborhoodFrame::make(
    const std::vector<std::string>& worlds,
    const std::map<std::string, std::vector<std::vector<std::string>>>& neighborhoods,
    const std::map<std::string, std::vector<std::string>>& predicates) {
  std::vector<std::string> sorted = worlds;
  std::sort(sorted.begin(), sorted.end());
  check_world_labels(sorted);

  auto index_of = [&sorted](const std::string& label) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), label);
    if (it == sorted.end() || *it != label) return -1;
    return static_cast<int>(it - sorted.begin());
  };

  std::vector<std::vector<Mask>> families(sorted.size());
  for (const auto& [world, sets] : neighborhoods) {
    int w = index_of(world);
    if (w < 0) {
      fail(ErrorCode::ParseError, "neighborhoods mention unknown world \"" + world + "\"");
    }
    std::vector<Mask>& family = families[w];
    for (const auto& set : sets) {
      Mask m = 0;
      for (const auto& member : set) {
        int v = index_of(member);
        if (v < 0) {
          fail(ErrorCode::ParseError, "neighborhood of world \"" + world +
                                          "\" mentions unknown world \"" + member + "\"");
        }
        m |= Mask(1) << v;
      }
      family.push_back(m);
    }
    std::sort(family.begin(), family.end());
    if (std::adjacent_find(family.begin(), family.end()) != family.end()) {
      fail(ErrorCode::ParseError, "duplicate neighborhood set for world \"" + world + "\"");
    }
  }

  std::map<std::string, Mask> preds;
  for (const auto& [name, members] : predicates) {
    if (name.empty()) fail(ErrorCode::ParseError, "empty predicate name");
    Mask m = 0;
    for (const auto& member : members) {
      int v = index_of(member);
      if (v < 0) {
        fail(ErrorCode::ParseError, "predicate \"" + name +
                                        "\" mentions unknown world \"" + member + "\"");
      }
      m |= Mask(1) << v;
    }
    preds[name] = m;
  }

  return from_masks(std::move(sorted), std::move(families), std::move(preds));
}

NeighborhoodFrame NeighborhoodFrame::from_masks(std::vector<std::string> sorted_worlds,
                                                std::vector<std::vector<Mask>> families,
                                                std::map<std::string, Mask> predicates) {
  check_world_labels(sorted_worlds);
  NeighborhoodFrame f;
  f.worlds_ = std::move(sorted_worlds);
  if (families.size() != f.worlds_.size()) {
    fail(ErrorCode::ParseError, "family count does not match world count");
  }
  Mask full = f.worlds_.empty() ? 0 : (Mask(1) << f.worlds_.size()) - 1;
  for (std::size_t w = 0; w < families.size(); ++w) {
    std::vector<Mask>& family = families[w];
    std::sort(family.begin(), family.end());
    if (std::adjacent_find(family.begin(), family.end()) != family.end()) {
      fail(ErrorCode::ParseError,
           "duplicate neighborhood set for world \"" + f.worlds_[w] + "\"");
    }
    for (Mask m : family) {
      if ((m & ~full) != 0) {
        fail(ErrorCode::ParseError,
             "neighborhood mask out of range for world \"" + f.worlds_[w] + "\"");
      }
    }
  }
  f.families_ = std::move(families);
  for (const auto& [name, m] : predicates) {
    if ((m & ~full) != 0) {
      fail(ErrorCode::ParseError, "predicate \"" + name + "\" mask out of range");
    }
  }
  f.predicates_ = std::move(predicates);
  return f;
}

int NeighborhoodFrame::index_of(const std::string& label) const {
  auto it = std::lower_bound(worlds_.begin(), worlds_.end(), label);
  if (it == worlds_.end() || *it != label) return -1;
  return static_cast<int>(it - worlds_.begin());
}

int NeighborhoodFrame::require_world(const std::string& label) const {
  int w = index_of(label);
  if (w < 0) fail(ErrorCode::UnknownConstant, "unknown world \"" + label + "\"");
  return w;
}

bool NeighborhoodFrame::neighborhood_contains(int w, Mask u) const {
  const std::vector<Mask>& family = families_[w];
  return std::binary_search(family.begin(), family.end(), u);
}

Mask NeighborhoodFrame::predicate_extension(const std::string& name) const {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) {
    fail(ErrorCode::UnknownPredicate, "unknown predicate \"" + name + "\"");
  }
  return it->second;
}

std::vector<std::string> NeighborhoodFrame::mask_labels(Mask m) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (m & (Mask(1) << i)) out.push_back(worlds_[i]);
  }
  return out;
}

Mask NeighborhoodFrame::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& label : labels) m |= Mask(1) << require_world(label);
  return m;
}

namespace {

bool family_superset_closed(const std::vector<Mask>& family, Mask full) {
  for (Mask u : family) {
    // enumerate supersets of u inside full
    Mask rest = full & ~u;
    for (Mask s = rest;; s = (s - 1) & rest) {
      if (s != 0 && !std::binary_search(family.begin(), family.end(), u | s)) return false;
      if (s == 0) break;
    }
  }
  return true;
}

bool family_intersection_closed(const std::vector<Mask>& family) {
  for (Mask u : family) {
    for (Mask v : family) {
      if (!std::binary_search(family.begin(), family.end(), u & v)) return false;
    }
  }
  return true;
}

// empty or the full upset of a single generator
bool family_empty_or_principal(const std::vector<Mask>& family, int n) {
  if (family.empty()) return true;
  Mask core = family.front();
  for (Mask u : family) core &= u;
  if (!std::binary_search(family.begin(), family.end(), core)) return false;
  return family.size() == (std::size_t(1) << (n - popcount(core)));
}

}  // namespace

FrameClassSet classify(const NeighborhoodFrame& f) {
  Mask full = f.full_mask();
  bool monotonic = true, intersections = true, nonempty = true, principal = true;
  for (int w = 0; w < f.size(); ++w) {
    const auto& family = f.family(w);
    monotonic = monotonic && family_superset_closed(family, full);
    intersections = intersections && family_intersection_closed(family);
    nonempty = nonempty && !family.empty();
    principal = principal && family_empty_or_principal(family, f.size());
  }
  FrameClassSet out;
  if (monotonic) out.insert(FrameClass::Monotonic);
  if (monotonic && intersections) out.insert(FrameClass::QuasiFilter);
  if (monotonic && intersections && nonempty) out.insert(FrameClass::Filter);
  if (principal) out.insert(FrameClass::AugmentedQuasiFilter);
  if (principal && nonempty) out.insert(FrameClass::AugmentedFilter);
  return out;
}

Mask box_set(const NeighborhoodFrame& f, Mask x) {
  Mask out = 0;
  for (int w = 0; w < f.size(); ++w) {
    if (f.neighborhood_contains(w, x)) out |= Mask(1) << w;
  }
  return out;
}

NeighborhoodFrame monotonic_closure(const NeighborhoodFrame& f) {
  Mask full = f.full_mask();
  std::vector<std::vector<Mask>> families(f.size());
  for (int w = 0; w < f.size(); ++w) {
    std::vector<bool> member(f.subset_count(), false);
    for (Mask u : f.family(w)) {
      Mask rest = full & ~u;
      for (Mask s = rest;; s = (s - 1) & rest) {
        member[u | s] = true;
        if (s == 0) break;
      }
    }
    for (Mask m = 0; m < f.subset_count(); ++m) {
      if (member[m]) families[w].push_back(m);
    }
  }
  return NeighborhoodFrame::from_masks(f.worlds(), std::move(families), f.predicates());
}

FiniteTopology FiniteTopology::make(const std::vector<std::string>& points,
                                    const std::vector<std::vector<std::string>>& opens) {
  std::vector<std::string> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  check_world_labels(sorted);
  auto index_of = [&sorted](const std::string& label) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), label);
    if (it == sorted.end() || *it != label) return -1;
    return static_cast<int>(it - sorted.begin());
  };
  std::vector<Mask> masks;
  for (const auto& open : opens) {
    Mask m = 0;
    for (const auto& member : open) {
      int p = index_of(member);
      if (p < 0) fail(ErrorCode::ParseError, "open set mentions unknown point \"" + member + "\"");
      m |= Mask(1) << p;
    }
    masks.push_back(m);
  }
  return from_masks(std::move(sorted), std::move(masks));
}

FiniteTopology FiniteTopology::from_masks(std::vector<std::string> sorted_points,
                                          std::vector<Mask> opens) {
  check_world_labels(sorted_points);
  FiniteTopology t;
  t.points_ = std::move(sorted_points);
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  Mask full = t.points_.empty() ? 0 : (Mask(1) << t.points_.size()) - 1;
  for (Mask m : opens) {
    if ((m & ~full) != 0) fail(ErrorCode::ParseError, "open set mask out of range");
  }
  auto is_open = [&opens](Mask m) {
    return std::binary_search(opens.begin(), opens.end(), m);
  };
  if (!is_open(0) || !is_open(full)) {
    fail(ErrorCode::ParseError, "opens must contain the empty and the full set");
  }
  for (Mask a : opens) {
    for (Mask b : opens) {
      if (!is_open(a | b)) fail(ErrorCode::ParseError, "opens not closed under union");
      if (!is_open(a & b)) fail(ErrorCode::ParseError, "opens not closed under intersection");
    }
  }
  t.opens_ = std::move(opens);
  return t;
}

FiniteTopology FiniteTopology::discrete(const std::vector<std::string>& points) {
  std::vector<std::string> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  check_world_labels(sorted);
  std::vector<Mask> opens;
  Mask count = sorted.empty() ? 1 : Mask(1) << sorted.size();
  for (Mask m = 0; m < count; ++m) opens.push_back(m);
  return from_masks(std::move(sorted), std::move(opens));
}

int FiniteTopology::index_of(const std::string& label) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), label);
  if (it == points_.end() || *it != label) return -1;
  return static_cast<int>(it - points_.begin());
}

int FiniteTopology::require_point(const std::string& label) const {
  int p = index_of(label);
  if (p < 0) fail(ErrorCode::UnknownConstant, "no point labeled \"" + label + "\"");
  return p;
}

bool FiniteTopology::is_open(Mask m) const {
  return std::binary_search(opens_.begin(), opens_.end(), m);
}

Mask FiniteTopology::interior(Mask m) const {
  Mask out = 0;
  for (Mask open : opens_) {
    if ((open & ~m) == 0) out |= open;
  }
  return out;
}

Mask FiniteTopology::closure(Mask m) const {
  return full_mask() & ~interior(full_mask() & ~m);
}

bool FiniteTopology::is_discrete() const {
  return opens_.size() == (std::size_t(1) << points_.size());
}

NeighborhoodFrame from_topology(const FiniteTopology& t) {
  int n = t.size();
  std::vector<std::vector<Mask>> families(n);
  Mask count = n == 0 ? 0 : Mask(1) << n;
  for (Mask u = 0; u < count; ++u) {
    Mask interior = t.interior(u);
    for (int w = 0; w < n; ++w) {
      if (interior & (Mask(1) << w)) families[w].push_back(u);
    }
  }
  return NeighborhoodFrame::from_masks(t.points(), std::move(families));
}

std::vector<Mask> specialization_preorder(const FiniteTopology& t) {
  std::vector<Mask> rel(t.size(), 0);
  for (int y = 0; y < t.size(); ++y) {
    Mask cl = t.closure(Mask(1) << y);
    for (int x = 0; x < t.size(); ++x) {
      if (cl & (Mask(1) << x)) rel[x] |= Mask(1) << y;
    }
  }
  return rel;
}

bool preorder_antisymmetric(const std::vector<Mask>& rel) {
  for (std::size_t x = 0; x < rel.size(); ++x) {
    for (std::size_t y = 0; y < rel.size(); ++y) {
      if (x != y && (rel[x] & (Mask(1) << y)) && (rel[y] & (Mask(1) << x))) return false;
    }
  }
  return true;
}

bool preorder_discrete(const std::vector<Mask>& rel) {
  for (std::size_t x = 0; x < rel.size(); ++x) {
    if (rel[x] != (Mask(1) << x)) return false;
  }
  return true;
}

WorldMap WorldMap::make(NeighborhoodFrame domain, NeighborhoodFrame codomain,
                        const std::map<std::string, std::string>& assoc) {
  std::vector<int> map(domain.size(), -1);
  for (const auto& [from, to] : assoc) {
    map[domain.require_world(from)] = codomain.require_world(to);
  }
  for (int w = 0; w < domain.size(); ++w) {
    if (map[w] < 0) {
      fail(ErrorCode::ParseError, "map does not cover world \"" + domain.label(w) + "\"");
    }
  }
  return from_indices(std::move(domain), std::move(codomain), std::move(map));
}

WorldMap WorldMap::from_indices(NeighborhoodFrame domain, NeighborhoodFrame codomain,
                                std::vector<int> map) {
  if (static_cast<int>(map.size()) != domain.size()) {
    fail(ErrorCode::ParseError, "map size does not match domain size");
  }
  for (int v : map) {
    if (v < 0 || v >= codomain.size()) fail(ErrorCode::ParseError, "map target out of range");
  }
  WorldMap f;
  f.domain_ = std::move(domain);
  f.codomain_ = std::move(codomain);
  f.map_ = std::move(map);
  return f;
}

Mask WorldMap::image(Mask m) const {
  Mask out = 0;
  for (int w = 0; w < domain_.size(); ++w) {
    if (m & (Mask(1) << w)) out |= Mask(1) << map_[w];
  }
  return out;
}

Mask WorldMap::preimage(Mask m) const {
  Mask out = 0;
  for (int w = 0; w < domain_.size(); ++w) {
    if (m & (Mask(1) << map_[w])) out |= Mask(1) << w;
  }
  return out;
}

bool WorldMap::surjective() const {
  Mask hit = 0;
  for (int w = 0; w < domain_.size(); ++w) hit |= Mask(1) << map_[w];
  return hit == codomain_.full_mask();
}

std::optional<MorphismViolation> bounded_morphism_violation(const WorldMap& f) {
  const NeighborhoodFrame& dom = f.domain();
  const NeighborhoodFrame& cod = f.codomain();
  for (int w = 0; w < dom.size(); ++w) {
    for (Mask u = 0; u < cod.subset_count(); ++u) {
      bool below = dom.neighborhood_contains(w, f.preimage(u));
      bool above = cod.neighborhood_contains(f.apply(w), u);
      if (below && !above) {
        return MorphismViolation{MorphismViolation::Kind::Forth, dom.label(w), u};
      }
      if (above && !below) {
        return MorphismViolation{MorphismViolation::Kind::Back, dom.label(w), u};
      }
    }
  }
  return std::nullopt;
}

bool is_bounded_morphism(const WorldMap& f) {
  return !bounded_morphism_violation(f).has_value();
}

bool is_bounded_morphism_via_dosen(const WorldMap& f) {
  const NeighborhoodFrame& dom = f.domain();
  const NeighborhoodFrame& cod = f.codomain();
  for (int w = 0; w < dom.size(); ++w) {
    for (Mask u = 0; u < cod.subset_count(); ++u) {
      if (dom.neighborhood_contains(w, f.preimage(u)) &&
          !cod.neighborhood_contains(f.apply(w), u)) {
        return false;  // forth fails
      }
    }
    for (Mask u : cod.family(f.apply(w))) {
      bool witnessed = false;
      for (Mask v : dom.family(w)) {
        if ((f.image(v) & ~u) == 0) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) return false;
    }
  }
  return true;
}

bool is_generated_subframe(const NeighborhoodFrame& sub, const NeighborhoodFrame& sup) {
  std::map<std::string, std::string> assoc;
  for (const auto& label : sub.worlds()) {
    if (sup.index_of(label) < 0) {
      fail(ErrorCode::NotASubset, "world \"" + label + "\" is not in the superframe");
    }
    assoc[label] = label;
  }
  Mask sub_in_sup = 0;
  for (const auto& label : sub.worlds()) sub_in_sup |= Mask(1) << sup.index_of(label);
  for (const auto& [name, ext] : sub.predicates()) {
    auto it = sup.predicates().find(name);
    Mask restricted = it == sup.predicates().end() ? 0 : it->second & sub_in_sup;
    Mask lifted = 0;
    for (int w = 0; w < sub.size(); ++w) {
      if (ext & (Mask(1) << w)) lifted |= Mask(1) << sup.index_of(sub.label(w));
    }
    if (lifted != restricted) return false;
  }
  return is_bounded_morphism(WorldMap::make(sub, sup, assoc));
}

DisjointUnion::DisjointUnion(std::vector<NeighborhoodFrame> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) fail(ErrorCode::EmptyFamily, "disjoint union of no frames");
  int total = 0;
  for (const auto& f : factors_) total += f.size();
  if (total > kMaxWorlds) {
    fail(ErrorCode::SizeCapExceeded, "disjoint union has " + std::to_string(total) +
                                         " worlds, cap is " + std::to_string(kMaxWorlds));
  }
  std::vector<std::pair<std::string, std::pair<int, int>>> labeled;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (int w = 0; w < factors_[i].size(); ++w) {
      labeled.push_back({"u" + std::to_string(i) + "_" + factors_[i].label(w),
                         {static_cast<int>(i), w}});
    }
  }
  std::sort(labeled.begin(), labeled.end());
  factor_masks_.assign(factors_.size(), 0);
  world_of_.resize(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    world_of_[i].assign(factors_[i].size(), -1);
  }
  for (std::size_t u = 0; u < labeled.size(); ++u) {
    worlds_.push_back(labeled[u].first);
    int i = labeled[u].second.first;
    int w = labeled[u].second.second;
    factor_of_.push_back(i);
    factor_world_.push_back(w);
    factor_masks_[i] |= Mask(1) << u;
    world_of_[i][w] = static_cast<int>(u);
  }
}

bool DisjointUnion::contains(int w, Mask u) const {
  int i = factor_of_[w];
  Mask local = 0;
  for (int fw = 0; fw < factors_[i].size(); ++fw) {
    if (u & (Mask(1) << world_of_[i][fw])) local |= Mask(1) << fw;
  }
  return factors_[i].neighborhood_contains(factor_world_[w], local);
}

NeighborhoodFrame DisjointUnion::materialize() const {
  // family of w = { local neighborhood lifted to the union, padded with any
  // subset of the other factors' worlds }
  int n = size();
  Mask full = n == 0 ? 0 : (Mask(1) << n) - 1;
  std::vector<std::vector<Mask>> families(n);
  for (int w = 0; w < n; ++w) {
    int i = factor_of_[w];
    Mask rest = full & ~factor_masks_[i];
    for (Mask local : factors_[i].family(factor_world_[w])) {
      Mask lifted = 0;
      for (int fw = 0; fw < factors_[i].size(); ++fw) {
        if (local & (Mask(1) << fw)) lifted |= Mask(1) << world_of_[i][fw];
      }
      for (Mask pad = rest;; pad = (pad - 1) & rest) {
        families[w].push_back(lifted | pad);
        if (pad == 0) break;
      }
    }
  }
  std::map<std::string, Mask> preds;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (const auto& [name, ext] : factors_[i].predicates()) {
      Mask lifted = 0;
      for (int fw = 0; fw < factors_[i].size(); ++fw) {
        if (ext & (Mask(1) << fw)) lifted |= Mask(1) << world_of_[i][fw];
      }
      preds[name] |= lifted;
    }
  }
  return NeighborhoodFrame::from_masks(worlds_, std::move(families), std::move(preds));
}

NeighborhoodFrame disjoint_union(const std::vector<NeighborhoodFrame>& factors) {
  return DisjointUnion(factors).materialize();
}

NeighborhoodFrame quasi_ultraproduct(const std::vector<NeighborhoodFrame>& frames,
                                     int principal_index) {
  if (frames.empty()) fail(ErrorCode::EmptyFamily, "quasi-ultraproduct of no frames");
  if (principal_index < 0 || principal_index >= static_cast<int>(frames.size())) {
    fail(ErrorCode::UsageError, "principal index out of range");
  }
  const NeighborhoodFrame& factor = frames[principal_index];
  Mask full = factor.full_mask();
  std::vector<std::vector<Mask>> families(factor.size());
  for (int w = 0; w < factor.size(); ++w) {
    std::vector<bool> member(factor.subset_count(), false);
    for (Mask induced : factor.family(w)) {
      Mask rest = full & ~induced;
      for (Mask pad = rest;; pad = (pad - 1) & rest) {
        member[induced | pad] = true;
        if (pad == 0) break;
      }
    }
    for (Mask m = 0; m < factor.subset_count(); ++m) {
      if (member[m]) families[w].push_back(m);
    }
  }
  return NeighborhoodFrame::from_masks(factor.worlds(), std::move(families),
                                       factor.predicates());
}

namespace {

bool extend_isomorphism(const NeighborhoodFrame& a, const NeighborhoodFrame& b,
                        std::vector<int>& map, Mask& used, int w) {
  int n = a.size();
  if (w == n) {
    for (int x = 0; x < n; ++x) {
      std::vector<Mask> mapped;
      for (Mask u : a.family(x)) {
        Mask out = 0;
        for (int i = 0; i < n; ++i) {
          if (u & (Mask(1) << i)) out |= Mask(1) << map[i];
        }
        mapped.push_back(out);
      }
      std::sort(mapped.begin(), mapped.end());
      if (mapped != b.family(map[x])) return false;
    }
    for (const auto& [name, ext] : a.predicates()) {
      auto it = b.predicates().find(name);
      if (it == b.predicates().end()) return false;
      Mask out = 0;
      for (int i = 0; i < n; ++i) {
        if (ext & (Mask(1) << i)) out |= Mask(1) << map[i];
      }
      if (out != it->second) return false;
    }
    return true;
  }
  for (int v = 0; v < n; ++v) {
    if (used & (Mask(1) << v)) continue;
    if (a.family(w).size() != b.family(v).size()) continue;
    map[w] = v;
    used |= Mask(1) << v;
    if (extend_isomorphism(a, b, map, used, w + 1)) return true;
    used &= ~(Mask(1) << v);
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const NeighborhoodFrame& a,
                                                 const NeighborhoodFrame& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() > kMaxIsoWorlds) {
    fail(ErrorCode::SizeCapExceeded, "isomorphism search capped at " +
                                         std::to_string(kMaxIsoWorlds) + " worlds");
  }
  if (a.predicates().size() != b.predicates().size()) return std::nullopt;
  std::vector<int> map(a.size(), -1);
  Mask used = 0;
  if (extend_isomorphism(a, b, map, used, 0)) return map;
  return std::nullopt;
}

bool isomorphic(const NeighborhoodFrame& a, const NeighborhoodFrame& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace cplkit
