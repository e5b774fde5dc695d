// Acceptance gate: one line per criterion, PASS or FAIL with counts and
// timing, nonzero exit when anything fails. Every check is brute force over
// the small-frame corpora; seeds are fixed, so two runs print identical
// numbers.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cplkit/bam.hpp"
#include "cplkit/caps.hpp"
#include "cplkit/correspondence.hpp"
#include "cplkit/formula.hpp"
#include "cplkit/frame.hpp"
#include "cplkit/frame_gen.hpp"
#include "cplkit/parser.hpp"
#include "cplkit/printer.hpp"
#include "cplkit/semantics.hpp"
#include "cplkit/translation.hpp"

namespace {

using namespace cplkit;

// Raw engine with modulo, never a distribution: distribution output is
// implementation-defined and would break cross-platform determinism.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t pick(std::uint64_t n) { return eng() % n; }
  bool coin() { return eng() & 1; }
};

struct Criterion {
  std::string name;
  double budget_seconds;
  bool passed;
  std::string detail;
  double elapsed;
};

NeighborhoodFrame random_arbitrary_frame(Rng& rng, int n) {
  std::vector<std::string> labels = standard_world_labels(n);
  Mask subsets = Mask(1) << n;
  std::vector<std::vector<Mask>> families(n);
  for (int w = 0; w < n; ++w) {
    for (Mask u = 0; u < subsets; ++u) {
      if (rng.coin()) families[w].push_back(u);
    }
  }
  std::map<std::string, Mask> preds{{"P", static_cast<Mask>(rng.pick(subsets))}};
  return NeighborhoodFrame::from_masks(std::move(labels), std::move(families),
                                       std::move(preds));
}

Term random_term(Rng& rng, const NeighborhoodFrame& f) {
  static const char* vars[] = {"x", "y", "z"};
  if (rng.pick(4) == 0) return Term::constant(f.label(static_cast<int>(rng.pick(f.size()))));
  return Term::var(vars[rng.pick(3)]);
}

CplFormula random_cpl(Rng& rng, const NeighborhoodFrame& f, int depth) {
  static const char* vars[] = {"x", "y", "z"};
  int kind = depth <= 0 ? static_cast<int>(rng.pick(2)) : static_cast<int>(rng.pick(9));
  switch (kind) {
    case 0: return CplFormula::equal(random_term(rng, f), random_term(rng, f));
    case 1: return CplFormula::pred("P", {random_term(rng, f)});
    case 2: return CplFormula::negation(random_cpl(rng, f, depth - 1));
    case 3: {
      CplFormula l = random_cpl(rng, f, depth - 1);
      return CplFormula::conj(std::move(l), random_cpl(rng, f, depth - 1));
    }
    case 4: {
      CplFormula l = random_cpl(rng, f, depth - 1);
      return CplFormula::disj(std::move(l), random_cpl(rng, f, depth - 1));
    }
    case 5: {
      CplFormula l = random_cpl(rng, f, depth - 1);
      return CplFormula::implies(std::move(l), random_cpl(rng, f, depth - 1));
    }
    case 6: return CplFormula::exists(vars[rng.pick(3)], random_cpl(rng, f, depth - 1));
    case 7: return CplFormula::forall(vars[rng.pick(3)], random_cpl(rng, f, depth - 1));
    default:
      return CplFormula::box(random_term(rng, f), vars[rng.pick(3)],
                             random_cpl(rng, f, depth - 1));
  }
}

std::vector<NeighborhoodFrame> corpus_n2() {
  return enumerate_monotonic_frames(2);
}

std::vector<NeighborhoodFrame> corpus_up_to_2() {
  std::vector<NeighborhoodFrame> corpus = enumerate_monotonic_frames(1);
  for (NeighborhoodFrame& f : enumerate_monotonic_frames(2)) corpus.push_back(std::move(f));
  return corpus;
}

Criterion check_translation() {
  Criterion c{"translation agreement", 60.0, true, "", 0};
  Rng rng(20260816);
  int triples = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 1 + static_cast<int>(rng.pick(3));
    NeighborhoodFrame f = random_arbitrary_frame(rng, n);
    CplFormula phi = random_cpl(rng, f, 3);
    Assignment rho;
    for (const char* v : {"x", "y", "z"}) {
      rho[v] = f.label(static_cast<int>(rng.pick(f.size())));
    }
    ++triples;
    if (!check_translation_equivalence(f, phi, rho)) {
      c.passed = false;
      c.detail = "disagreement on trial " + std::to_string(trial) + ": " + print_cpl(phi);
      return c;
    }
  }
  int correspondent_checks = 0;
  for (const CorrespondencePair& pair : builtin_pairs()) {
    for (const NeighborhoodFrame& f : corpus_n2()) {
      std::vector<Assignment> assignments;
      if (pair.kind == CorrespondencePair::Kind::Local) {
        for (const std::string& w : f.worlds()) assignments.push_back({{"x", w}});
      } else {
        assignments.push_back({});
      }
      for (const Assignment& rho : assignments) {
        ++correspondent_checks;
        if (!check_translation_equivalence(f, pair.cpl, rho)) {
          c.passed = false;
          c.detail = "pair " + pair.name + " disagrees on a 2-world frame";
          return c;
        }
      }
    }
  }
  c.detail = std::to_string(triples) + " random triples + " +
             std::to_string(correspondent_checks) + " correspondent instances agree";
  return c;
}

Criterion check_duality() {
  Criterion c{"duality biconditional", 30.0, true, "", 0};
  std::vector<NeighborhoodFrame> frames = corpus_n2();
  int maps = 0;
  for (const NeighborhoodFrame& f : frames) {
    for (const NeighborhoodFrame& g : frames) {
      std::vector<int> idx(f.size(), 0);
      while (true) {
        WorldMap m = WorldMap::from_indices(f, g, idx);
        ++maps;
        if (!verify_duality(m).agree()) {
          c.passed = false;
          c.detail = "biconditional broken for a map between 2-world frames";
          return c;
        }
        int k = 0;
        while (k < f.size() && ++idx[k] == g.size()) idx[k++] = 0;
        if (k == f.size()) break;
      }
    }
  }
  c.detail = std::to_string(maps) + " maps across " + std::to_string(frames.size()) + "x" +
             std::to_string(frames.size()) + " frame pairs, zero exceptions";
  return c;
}

Criterion check_algebra_frame_coherence() {
  Criterion c{"algebra-frame coherence", 30.0, true, "", 0};
  int checked = 0;
  for (const NeighborhoodFrame& f : corpus_n2()) {
    FiniteBam a = complex_algebra(f);
    CanonicalExtensionResult ce = canonical_extension(a);
    NeighborhoodFrame uf = ultrafilter_frame(a);
    ++checked;
    if (!classify(uf).contains(FrameClass::Monotonic)) {
      c.passed = false;
      c.detail = "ultrafilter frame not monotonic";
      return c;
    }
    if (!(complex_algebra(uf) == ce.extension)) {
      c.passed = false;
      c.detail = "the two box liftings disagree table-for-table";
      return c;
    }
  }
  c.detail = std::to_string(checked) +
             " algebras: complex(ultrafilter frame) equals the canonical extension via two "
             "independent code paths";
  return c;
}

bool embedding_is_isomorphism(const FiniteBam& a, const CanonicalExtensionResult& ce) {
  const FiniteBam& ext = ce.extension;
  if (a.element_count() != ext.element_count()) return false;
  std::vector<bool> hit(ext.element_count(), false);
  for (Mask x = 0; x < a.element_count(); ++x) {
    Mask img = ce.embedding[x];
    if (img >= ext.element_count() || hit[img]) return false;
    hit[img] = true;
  }
  for (Mask x = 0; x < a.element_count(); ++x) {
    for (Mask y = 0; y < a.element_count(); ++y) {
      if (ce.embedding[x & y] != (ce.embedding[x] & ce.embedding[y])) return false;
    }
    if (ce.embedding[~x & a.top()] != (~ce.embedding[x] & ext.top())) return false;
    if (ce.embedding[a.box(x)] != ext.box(ce.embedding[x])) return false;
  }
  return true;
}

Criterion check_finite_fixed_points() {
  Criterion c{"finite fixed points", 60.0, true, "", 0};
  std::vector<NeighborhoodFrame> frames = corpus_n2();
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    frames.push_back(random_monotonic_frame(3, seed));
  }
  int checked = 0;
  for (const NeighborhoodFrame& f : frames) {
    NeighborhoodFrame ue = ultrafilter_extension(f);
    FiniteBam a = complex_algebra(f);
    CanonicalExtensionResult ce = canonical_extension(a);
    ++checked;
    if (!(ue == f) || !isomorphic(ue, f)) {
      c.passed = false;
      c.detail = "ultrafilter extension moved a finite frame";
      return c;
    }
    if (!(ce.extension == a) || !embedding_is_isomorphism(a, ce)) {
      c.passed = false;
      c.detail = "canonical-extension embedding is not an isomorphism";
      return c;
    }
  }
  c.detail = std::to_string(checked) +
             " frames: ue F = F and A^σ ≅ A, canonicity vacuous at this scale";
  return c;
}

Criterion check_correspondence() {
  Criterion c{"correspondence pairs", 300.0, true, "", 0};
  const CorrespondencePair& b = lookup_pair("B");
  const CorrespondencePair& four = lookup_pair("4");
  const CorrespondencePair& aqfdef = lookup_pair("aqf-def");

  std::vector<NeighborhoodFrame> frames = corpus_n2();
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    frames.push_back(random_monotonic_frame(3, seed));
  }
  int b_checked = 0;
  int four_checked = 0;
  for (const NeighborhoodFrame& f : frames) {
    ++b_checked;
    if (!check_local_correspondence(f, b).passed()) {
      c.passed = false;
      c.detail = "pair B disagrees";
      return c;
    }
    if (classify(f).contains(FrameClass::AugmentedQuasiFilter)) {
      ++four_checked;
      if (!check_local_correspondence(f, four).passed()) {
        c.passed = false;
        c.detail = "pair 4 disagrees on an augmented quasi-filter frame";
        return c;
      }
    }
  }
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    NeighborhoodFrame f = random_monotonic_frame(3, seed, FrameClass::AugmentedQuasiFilter);
    ++four_checked;
    if (!check_local_correspondence(f, four).passed()) {
      c.passed = false;
      c.detail = "pair 4 disagrees on a random augmented quasi-filter frame";
      return c;
    }
  }
  int aqf_checked = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const NeighborhoodFrame& f : enumerate_monotonic_frames(n)) {
      ++aqf_checked;
      if (!check_class_sentence(f, aqfdef)) {
        c.passed = false;
        c.detail = "aqf-def sentence disagrees with the classifier";
        return c;
      }
    }
  }
  c.detail = "B on " + std::to_string(b_checked) + " frames, 4 on " +
             std::to_string(four_checked) + " augmented quasi-filter frames, aqf-def vs " +
             "classifier on " + std::to_string(aqf_checked) + " frames";
  return c;
}

Criterion check_topology_bridge() {
  Criterion c{"topology bridge", 120.0, true, "", 0};
  std::vector<ModalFormula> formulas = all_modal_formulas(3, {"p", "q"});
  CplFormula reaches = parse_cpl("~(x[z: ~(z = y)])");
  int topologies = 0;
  long long grid = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteTopology& t : enumerate_topologies(n)) {
      ++topologies;
      NeighborhoodFrame f = from_topology(t);
      bool agreed = for_each_valuation({"p", "q"}, n, [&](const Valuation& v) {
        for (const ModalFormula& phi : formulas) {
          ++grid;
          if (modal_extension_top(t, v, phi) != modal_extension(f, v, phi)) return false;
        }
        return true;
      });
      if (!agreed) {
        c.passed = false;
        c.detail = "interior and neighborhood semantics disagree on a topology";
        return c;
      }
      std::vector<Mask> rel = specialization_preorder(t);
      if (rel != accessibility_relation(f)) {
        c.passed = false;
        c.detail = "specialization preorder differs from the derived accessibility relation";
        return c;
      }
      for (int x = 0; x < t.size(); ++x) {
        for (int y = 0; y < t.size(); ++y) {
          bool via_formula =
              eval_cpl(f, reaches, {{"x", t.label(x)}, {"y", t.label(y)}});
          if (via_formula != (((rel[x] >> y) & 1) != 0)) {
            c.passed = false;
            c.detail = "the reachability formula disagrees with the preorder";
            return c;
          }
        }
      }
    }
  }
  c.detail = std::to_string(topologies) + " topologies, " + std::to_string(grid) +
             " formula-valuation extensions, preorder agreement included";
  return c;
}

Criterion check_closure_conditions() {
  Criterion c{"definability closure conditions", 120.0, true, "", 0};
  std::vector<NeighborhoodFrame> corpus = corpus_up_to_2();
  std::vector<std::pair<std::string, ModalFormula>> deltas = {
      {"B", *lookup_pair("B").modal},
      {"4", *lookup_pair("4").modal},
      {"[]p -> p", parse_modal("[]p -> p")},
      {"p -> []p", parse_modal("p -> []p")},
  };
  for (const auto& [name, axiom] : deltas) {
    ClosureReport r = gt_closure_check(corpus, std::vector<ModalFormula>{axiom});
    if (!r.passed()) {
      c.passed = false;
      c.detail = "closure fails for the validity class of " + name;
      return c;
    }
  }
  ClosureReport bad = gt_closure_check(
      corpus, [](const NeighborhoodFrame& f) { return f.size() == 2; });
  if (bad.passed() || !bad.disjoint_unions.witness) {
    c.passed = false;
    c.detail = "the two-world class was not refuted with a witness";
    return c;
  }
  const ClosureWitness& w = *bad.disjoint_unions.witness;
  bool replays = disjoint_union(w.inputs) == w.produced && w.produced.size() != 2;
  for (const NeighborhoodFrame& f : w.inputs) replays = replays && f.size() == 2;
  if (!replays) {
    c.passed = false;
    c.detail = "the counterexample witness does not replay";
    return c;
  }
  c.detail = "4 axiom classes closed on " + std::to_string(corpus.size()) +
             " frames; the two-world class fails with a replayable disjoint-union witness";
  return c;
}

Criterion check_quasi_ultraproducts() {
  Criterion c{"quasi-ultraproducts", 60.0, true, "", 0};
  std::vector<NeighborhoodFrame> corpus = corpus_up_to_2();
  int checked = 0;
  for (const NeighborhoodFrame& f : corpus) {
    for (const NeighborhoodFrame& g : corpus) {
      std::vector<NeighborhoodFrame> pair{f, g};
      for (int index = 0; index < 2; ++index) {
        ++checked;
        NeighborhoodFrame qup = quasi_ultraproduct(pair, index);
        if (!isomorphic(qup, pair[index])) {
          c.passed = false;
          c.detail = "quasi-ultraproduct not isomorphic to the selected factor";
          return c;
        }
        if (!ultraproduct_embedding(pair, index).pass()) {
          c.passed = false;
          c.detail = "the factor algebra does not embed into the product algebra";
          return c;
        }
      }
    }
  }
  c.detail = std::to_string(checked) +
             " principal products isomorphic to their factor, with the algebra embedding "
             "verified";
  return c;
}

Criterion check_cli_determinism() {
  Criterion c{"CLI determinism", 120.0, true, "", 0};
  const char* golden_test = std::getenv("CPLKIT_GOLDEN_TEST");
  if (golden_test == nullptr) {
    c.passed = false;
    c.detail = "CPLKIT_GOLDEN_TEST is not set";
    return c;
  }
  std::string cmd = std::string("'") + golden_test + "' >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  c.passed = rc == 0;
  c.detail = c.passed
                 ? "every subcommand byte-identical across two runs and equal to its golden file"
                 : "the golden suite reported a difference";
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion (*)()> checks = {
      check_translation,        check_duality,
      check_algebra_frame_coherence, check_finite_fixed_points,
      check_correspondence,     check_topology_bridge,
      check_closure_conditions, check_quasi_ultraproducts,
      check_cli_determinism,
  };
  bool all = true;
  int i = 0;
  for (auto* check : checks) {
    auto start = std::chrono::steady_clock::now();
    Criterion c = check();
    c.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ++i;
    bool in_budget = c.elapsed < c.budget_seconds;
    bool ok = c.passed && in_budget;
    all = all && ok;
    char timing[64];
    std::snprintf(timing, sizeof(timing), "%.2f s, budget %.0f s", c.elapsed,
                  c.budget_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << "  " << i << "/9 " << c.name << ": " << c.detail
              << (in_budget ? "" : " [over budget]") << " (" << timing << ")\n";
  }
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES above") << "\n";
  return all ? 0 : 1;
}
