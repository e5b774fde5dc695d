#include "cplkit/correspondence.hpp"

#include <algorithm>

#include "cplkit/bam.hpp"
#include "cplkit/frame_gen.hpp"
#include "cplkit/parser.hpp"
#include "cplkit/semantics.hpp"

namespace cplkit {

const std::vector<CorrespondencePair>& builtin_pairs() {
  using Kind = CorrespondencePair::Kind;
  static const std::vector<CorrespondencePair> pairs = {
      {"B", parse_modal("p -> [](~([](~p)))"), parse_cpl("x[y: ~(y[z: ~(z = x)])]"),
       Kind::Local, FrameClass::Monotonic},
      {"4", parse_modal("[]p -> [][]p"),
       parse_cpl("~(x[y: y = y]) | (x[y: y = y] & x[y1: y1[y2: ~(x[z: ~(z = y2)])]])"),
       Kind::Local, FrameClass::AugmentedQuasiFilter},
      {"aqf-def", std::nullopt,
       parse_cpl("forall x. (x[y: y = y] -> x[y: ~(x[z: ~(z = y)])])"),
       Kind::ClassSentence, FrameClass::Monotonic},
      {"T0", std::nullopt,
       parse_cpl("forall z. forall w. (~(z[y: ~(y = w)]) & ~(w[y: ~(y = z)]) -> w = z)"),
       Kind::TopologySentence, FrameClass::AugmentedFilter},
      {"T1", std::nullopt,
       parse_cpl("forall z. forall w. (~(z[y: ~(y = w)]) -> w = z)"),
       Kind::TopologySentence, FrameClass::AugmentedFilter},
      {"discrete", parse_modal("p -> []p"),
       parse_cpl("(forall x. ~(x[z: ~(z = x)])) & (forall x. x[y: y = x])"),
       Kind::ClassSentence, FrameClass::QuasiFilter},
  };
  return pairs;
}

const CorrespondencePair& lookup_pair(const std::string& name) {
  for (const CorrespondencePair& p : builtin_pairs()) {
    if (p.name == name) return p;
  }
  fail(ErrorCode::UsageError, "no built-in correspondence pair named \"" + name + "\"");
}

const std::vector<ModalFormula>& topological_axioms() {
  static const std::vector<ModalFormula> axioms = {
      parse_modal("[]p & []q -> [](p & q)"),
      parse_modal("[]p -> p"),
      parse_modal("[]p -> [][]p"),
  };
  return axioms;
}

const std::vector<ModalFormula>& discrete_class_axioms() {
  static const std::vector<ModalFormula> axioms = [] {
    std::vector<ModalFormula> out = topological_axioms();
    out.push_back(parse_modal("p -> []p"));
    return out;
  }();
  return axioms;
}

CorrespondenceReport check_local_correspondence(const NeighborhoodFrame& f,
                                                const CorrespondencePair& pair) {
  if (pair.kind != CorrespondencePair::Kind::Local || !pair.modal) {
    fail(ErrorCode::UsageError, "pair \"" + pair.name + "\" has no local correspondent");
  }
  if (!classify(f).contains(pair.applicable)) {
    fail(ErrorCode::ClassMismatch,
         "frame is outside the pair's class " + to_string(pair.applicable));
  }
  CorrespondenceReport report;
  report.pair = pair.name;
  for (int w = 0; w < f.size(); ++w) {
    bool modal_side = frame_valid_at(f, f.label(w), *pair.modal);
    bool cpl_side = eval_cpl(f, pair.cpl, {{"x", f.label(w)}});
    ++report.checked;
    if (modal_side != cpl_side) report.disagreements.push_back(f.label(w));
  }
  return report;
}

bool check_class_sentence(const NeighborhoodFrame& f, const CorrespondencePair& pair) {
  if (pair.kind != CorrespondencePair::Kind::ClassSentence) {
    fail(ErrorCode::UsageError, "pair \"" + pair.name + "\" is not a class sentence");
  }
  if (!classify(f).contains(pair.applicable)) {
    fail(ErrorCode::ClassMismatch,
         "frame is outside the pair's class " + to_string(pair.applicable));
  }
  bool sentence = eval_cpl(f, pair.cpl, {});
  bool reference;
  if (pair.name == "aqf-def") {
    reference = classify(f).contains(FrameClass::AugmentedQuasiFilter);
  } else if (pair.name == "discrete") {
    reference = is_discrete_image(f);
  } else {
    fail(ErrorCode::UsageError, "no structural reference for pair \"" + pair.name + "\"");
  }
  return sentence == reference;
}

bool check_topology_sentence(const FiniteTopology& t, const CorrespondencePair& pair) {
  if (pair.kind != CorrespondencePair::Kind::TopologySentence) {
    fail(ErrorCode::UsageError, "pair \"" + pair.name + "\" is not a topology sentence");
  }
  bool sentence = eval_cpl(from_topology(t), pair.cpl, {});
  std::vector<Mask> rel = specialization_preorder(t);
  bool reference = pair.name == "T0" ? preorder_antisymmetric(rel) : preorder_discrete(rel);
  return sentence == reference;
}

std::vector<Mask> accessibility_relation(const NeighborhoodFrame& f) {
  std::vector<Mask> rows(f.size(), 0);
  for (int x = 0; x < f.size(); ++x) {
    for (int y = 0; y < f.size(); ++y) {
      Mask complement = f.full_mask() & ~(Mask(1) << y);
      if (!f.neighborhood_contains(x, complement)) rows[x] |= Mask(1) << y;
    }
  }
  return rows;
}

bool is_discrete_image(const NeighborhoodFrame& f) {
  for (int w = 0; w < f.size(); ++w) {
    Mask count = 0;
    for (Mask u : f.family(w)) {
      if (!((u >> w) & 1)) return false;
      ++count;
    }
    // Exactly the sets containing w: half of all subsets.
    if (count != f.subset_count() / 2) return false;
  }
  return true;
}

bool validates_all(const NeighborhoodFrame& f, const std::vector<ModalFormula>& delta) {
  for (const ModalFormula& phi : delta) {
    if (!frame_valid(f, phi)) return false;
  }
  return true;
}

namespace {

// Restriction of the frame to the world subset: each neighborhood is cut
// down to the subset. The result is a generated subframe exactly when the
// inclusion turns out to be a bounded morphism, which the caller re-checks.
NeighborhoodFrame restrict_frame(const NeighborhoodFrame& f, Mask subset) {
  std::vector<std::string> labels;
  std::vector<int> origin;
  for (int w = 0; w < f.size(); ++w) {
    if ((subset >> w) & 1) {
      labels.push_back(f.label(w));
      origin.push_back(w);
    }
  }
  auto cut = [&](Mask u) {
    Mask out = 0;
    for (std::size_t j = 0; j < origin.size(); ++j) {
      if ((u >> origin[j]) & 1) out |= Mask(1) << j;
    }
    return out;
  };
  std::vector<std::vector<Mask>> families(labels.size());
  for (std::size_t j = 0; j < origin.size(); ++j) {
    for (Mask u : f.family(origin[j])) families[j].push_back(cut(u));
    std::sort(families[j].begin(), families[j].end());
    families[j].erase(std::unique(families[j].begin(), families[j].end()),
                      families[j].end());
  }
  std::map<std::string, Mask> predicates;
  for (const auto& [name, ext] : f.predicates()) predicates[name] = cut(ext);
  return NeighborhoodFrame::from_masks(std::move(labels), std::move(families),
                                       std::move(predicates));
}

}  // namespace

ClosureReport gt_closure_check(const std::vector<NeighborhoodFrame>& corpus,
                               const std::function<bool(const NeighborhoodFrame&)>& member) {
  ClosureReport r;
  r.disjoint_unions.name = "disjoint-unions";
  r.morphic_images.name = "bounded-morphic-images";
  r.generated_subframes.name = "generated-subframes";
  r.reflects_ue.name = "reflects-ultrafilter-extensions";

  std::vector<NeighborhoodFrame> members;
  for (const NeighborhoodFrame& f : corpus) {
    if (member(f)) members.push_back(f);
  }

  for (const NeighborhoodFrame& f : members) {
    if (!r.disjoint_unions.passed) break;
    for (const NeighborhoodFrame& g : members) {
      NeighborhoodFrame du = disjoint_union({f, g});
      ++r.disjoint_unions.checked;
      if (!member(du)) {
        r.disjoint_unions.passed = false;
        r.disjoint_unions.witness = ClosureWitness{{f, g}, du};
        break;
      }
    }
  }

  for (const NeighborhoodFrame& f : members) {
    if (!r.morphic_images.passed) break;
    if (f.size() > kMaxEnumerationWorlds) {
      r.morphic_images.exhaustive = false;
      r.morphic_images.note = "sampled, not exhaustive: a member exceeds the "
                              "codomain enumeration cap";
      continue;
    }
    for (int m = 1; m <= f.size() && r.morphic_images.passed; ++m) {
      for (const NeighborhoodFrame& g : enumerate_monotonic_frames(m)) {
        int maps = 1;
        for (int i = 0; i < f.size(); ++i) maps *= g.size();
        bool failed = false;
        for (int code = 0; code < maps && !failed; ++code) {
          std::vector<int> assoc(f.size());
          int rest = code;
          for (int i = 0; i < f.size(); ++i) {
            assoc[i] = rest % g.size();
            rest /= g.size();
          }
          WorldMap map = WorldMap::from_indices(f, g, assoc);
          if (!map.surjective() || !is_bounded_morphism(map)) continue;
          ++r.morphic_images.checked;
          if (!member(g)) {
            r.morphic_images.passed = false;
            r.morphic_images.witness = ClosureWitness{{f}, g};
            failed = true;
          }
        }
        if (failed) break;
      }
    }
  }

  for (const NeighborhoodFrame& f : members) {
    if (!r.generated_subframes.passed) break;
    for (Mask subset = 1; subset <= f.full_mask(); ++subset) {
      NeighborhoodFrame sub = restrict_frame(f, subset);
      if (!is_generated_subframe(sub, f)) continue;
      ++r.generated_subframes.checked;
      if (!member(sub)) {
        r.generated_subframes.passed = false;
        r.generated_subframes.witness = ClosureWitness{{f}, sub};
        break;
      }
    }
  }

  r.reflects_ue.note = "near-vacuous at finite scale: the ultrafilter extension "
                       "of a finite frame is isomorphic to the frame";
  for (const NeighborhoodFrame& f : corpus) {
    NeighborhoodFrame ue = ultrafilter_extension(f);
    ++r.reflects_ue.checked;
    if (member(ue) && !member(f)) {
      r.reflects_ue.passed = false;
      r.reflects_ue.witness = ClosureWitness{{f}, ue};
      break;
    }
  }
  return r;
}

ClosureReport gt_closure_check(const std::vector<NeighborhoodFrame>& corpus,
                               const std::vector<ModalFormula>& delta) {
  return gt_closure_check(
      corpus, [&](const NeighborhoodFrame& f) { return validates_all(f, delta); });
}

}  // namespace cplkit
