#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <string>
#include <vector>

#include "cplkit/correspondence.hpp"
#include "cplkit/frame_gen.hpp"
#include "cplkit/frame_io.hpp"
#include "cplkit/parser.hpp"
#include "cplkit/printer.hpp"
#include "cplkit/semantics.hpp"
#include "doctest.h"

using namespace cplkit;

namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::UsageError;
}

NeighborhoodFrame fixture(const std::string& name) {
  const char* dir = std::getenv("CPLKIT_FIXTURES");
  REQUIRE(dir != nullptr);
  return parse_frame_json(read_file(std::string(dir) + "/" + name + ".json"));
}

std::vector<NeighborhoodFrame> small_monotonic_frames() {
  std::vector<NeighborhoodFrame> frames = enumerate_monotonic_frames(1);
  for (NeighborhoodFrame& f : enumerate_monotonic_frames(2)) frames.push_back(std::move(f));
  return frames;
}

std::vector<FiniteTopology> small_topologies() {
  std::vector<FiniteTopology> all;
  for (int n = 1; n <= 3; ++n) {
    for (FiniteTopology& t : enumerate_topologies(n)) all.push_back(std::move(t));
  }
  return all;
}

}  // namespace

TEST_CASE("built-in pairs print in canonical form") {
  CHECK(print_cpl(lookup_pair("B").cpl) == "x[y: ~(y[z: ~(z = x)])]");
  CHECK(print_modal(*lookup_pair("B").modal) == "p -> [](~([](~p)))");
  CHECK(print_cpl(lookup_pair("4").cpl) ==
        "~(x[y: y = y]) | x[y: y = y] & x[y1: y1[y2: ~(x[z: ~(z = y2)])]]");
  CHECK(print_modal(*lookup_pair("4").modal) == "[]p -> [][]p");
  CHECK(print_cpl(lookup_pair("aqf-def").cpl) ==
        "forall x. (x[y: y = y] -> x[y: ~(x[z: ~(z = y)])])");
  CHECK(lookup_pair("T0").kind == CorrespondencePair::Kind::TopologySentence);
  CHECK(lookup_pair("discrete").applicable == FrameClass::QuasiFilter);
  CHECK(builtin_pairs().size() == 6);
  CHECK(code_of([] { lookup_pair("5"); }) == ErrorCode::UsageError);
}

TEST_CASE("symmetry pair agrees world by world") {
  NeighborhoodFrame f2 = fixture("f2");
  const CorrespondencePair& b = lookup_pair("B");

  CHECK_FALSE(frame_valid_at(f2, "a", *b.modal));
  CHECK_FALSE(eval_cpl(f2, b.cpl, {{"x", "a"}}));
  CHECK(frame_valid_at(f2, "b", *b.modal));
  CHECK(eval_cpl(f2, b.cpl, {{"x", "b"}}));

  CorrespondenceReport report = check_local_correspondence(f2, b);
  CHECK(report.pair == "B");
  CHECK(report.checked == 2);
  CHECK(report.passed());

  // On the frame of a discrete space the box is the identity, so the
  // symmetry instance holds everywhere.
  NeighborhoodFrame discrete = from_topology(FiniteTopology::discrete({"a", "b"}));
  CHECK(frame_valid_at(discrete, "a", *b.modal));
  CHECK(check_local_correspondence(discrete, b).passed());
}

TEST_CASE("local pairs agree on every frame of their class") {
  const CorrespondencePair& b = lookup_pair("B");
  const CorrespondencePair& four = lookup_pair("4");
  for (const NeighborhoodFrame& f : small_monotonic_frames()) {
    CHECK(check_local_correspondence(f, b).passed());
    if (classify(f).contains(FrameClass::AugmentedQuasiFilter)) {
      CHECK(check_local_correspondence(f, four).passed());
    }
  }
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    CHECK(check_local_correspondence(random_monotonic_frame(3, seed), b).passed());
    NeighborhoodFrame aqf =
        random_monotonic_frame(3, seed, FrameClass::AugmentedQuasiFilter);
    CHECK(check_local_correspondence(aqf, four).passed());
  }
}

TEST_CASE("local checks reject out-of-class frames and sentence pairs") {
  NeighborhoodFrame bare = NeighborhoodFrame::make({"a"}, {{"a", {{}}}});
  CHECK(code_of([&] { check_local_correspondence(bare, lookup_pair("B")); }) ==
        ErrorCode::ClassMismatch);
  // F4 is monotonic but not an augmented quasi-filter.
  CHECK(code_of([&] { check_local_correspondence(fixture("f4"), lookup_pair("4")); }) ==
        ErrorCode::ClassMismatch);
  CHECK(code_of([&] { check_local_correspondence(fixture("f1"), lookup_pair("aqf-def")); }) ==
        ErrorCode::UsageError);
}

TEST_CASE("the augmented quasi-filter sentence tracks the classifier") {
  NeighborhoodFrame f4 = fixture("f4");
  const CorrespondencePair& aqf = lookup_pair("aqf-def");
  CHECK_FALSE(eval_cpl(f4, aqf.cpl, {}));
  CHECK_FALSE(classify(f4).contains(FrameClass::AugmentedQuasiFilter));
  CHECK(check_class_sentence(f4, aqf));

  CHECK(eval_cpl(fixture("f1"), aqf.cpl, {}));
  CHECK(check_class_sentence(fixture("f1"), aqf));

  for (int n = 1; n <= 3; ++n) {
    for (const NeighborhoodFrame& f : enumerate_monotonic_frames(n)) {
      CHECK(check_class_sentence(f, aqf));
    }
  }
}

TEST_CASE("the discrete sentence pins the discrete-space frames") {
  const CorrespondencePair& discrete = lookup_pair("discrete");
  NeighborhoodFrame two = from_topology(FiniteTopology::discrete({"a", "b"}));
  CHECK(is_discrete_image(two));
  CHECK(eval_cpl(two, discrete.cpl, {}));
  CHECK(check_class_sentence(two, discrete));

  CHECK_FALSE(is_discrete_image(fixture("f2")));
  CHECK(check_class_sentence(fixture("f2"), discrete));

  for (const NeighborhoodFrame& f : small_monotonic_frames()) {
    if (!classify(f).contains(FrameClass::QuasiFilter)) continue;
    CHECK(check_class_sentence(f, discrete));
  }
  CHECK(code_of([&] { check_class_sentence(fixture("f4"), discrete); }) ==
        ErrorCode::ClassMismatch);
}

TEST_CASE("separation sentences follow the specialization preorder") {
  FiniteTopology sier = FiniteTopology::make({"a", "b"}, {{}, {"a"}, {"a", "b"}});
  CHECK(eval_cpl(from_topology(sier), lookup_pair("T0").cpl, {}));
  CHECK_FALSE(eval_cpl(from_topology(sier), lookup_pair("T1").cpl, {}));
  CHECK(check_topology_sentence(sier, lookup_pair("T0")));
  CHECK(check_topology_sentence(sier, lookup_pair("T1")));

  FiniteTopology indiscrete = FiniteTopology::make({"a", "b"}, {{}, {"a", "b"}});
  CHECK_FALSE(eval_cpl(from_topology(indiscrete), lookup_pair("T0").cpl, {}));
  CHECK(eval_cpl(from_topology(FiniteTopology::discrete({"a", "b"})),
                 lookup_pair("T1").cpl, {}));

  for (const FiniteTopology& t : small_topologies()) {
    CHECK(check_topology_sentence(t, lookup_pair("T0")));
    CHECK(check_topology_sentence(t, lookup_pair("T1")));
  }
}

TEST_CASE("the accessibility relation reads off singleton complements") {
  CHECK(accessibility_relation(fixture("f2")) == std::vector<Mask>{0b10, 0b10});
  CHECK(accessibility_relation(fixture("f3")) == std::vector<Mask>{0b1});
  CHECK(accessibility_relation(fixture("f1")) == std::vector<Mask>{0b01, 0b11});

  // On augmented quasi-filter frames with a nonempty family the row is the
  // intersection of the family; an empty family makes the row full instead.
  for (const NeighborhoodFrame& f : small_monotonic_frames()) {
    if (!classify(f).contains(FrameClass::AugmentedQuasiFilter)) continue;
    std::vector<Mask> rel = accessibility_relation(f);
    for (int w = 0; w < f.size(); ++w) {
      if (f.family(w).empty()) {
        CHECK(rel[w] == f.full_mask());
        continue;
      }
      Mask meet = f.full_mask();
      for (Mask u : f.family(w)) meet &= u;
      CHECK(rel[w] == meet);
    }
  }
}

TEST_CASE("the preorder formula computes the specialization preorder") {
  CplFormula closeness = parse_cpl("~(x[z: ~(z = y)])");
  for (const FiniteTopology& t : small_topologies()) {
    NeighborhoodFrame f = from_topology(t);
    std::vector<Mask> direct = specialization_preorder(t);
    CHECK(direct == accessibility_relation(f));
    for (int x = 0; x < f.size(); ++x) {
      for (int y = 0; y < f.size(); ++y) {
        bool formula = eval_cpl(f, closeness, {{"x", f.label(x)}, {"y", f.label(y)}});
        CHECK(formula == bool((direct[x] >> y) & 1));
      }
    }
  }
}

TEST_CASE("discrete spaces are the frames validating the axiom set") {
  REQUIRE(topological_axioms().size() == 3);
  REQUIRE(discrete_class_axioms().size() == 4);

  for (const FiniteTopology& t : small_topologies()) {
    NeighborhoodFrame f = from_topology(t);
    CHECK(validates_all(f, topological_axioms()));
    bool discrete = t.is_discrete();
    CHECK(validates_all(f, discrete_class_axioms()) == discrete);
    CHECK(is_discrete_image(f) == discrete);
  }

  int discrete_count = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const NeighborhoodFrame& f : enumerate_monotonic_frames(n)) {
      bool axioms = validates_all(f, discrete_class_axioms());
      CHECK(axioms == is_discrete_image(f));
      discrete_count += axioms;
    }
  }
  CHECK(discrete_count == 3);  // one discrete-image frame per world count
}

TEST_CASE("modally definable classes pass the closure conditions") {
  std::vector<NeighborhoodFrame> corpus = small_monotonic_frames();
  std::vector<std::vector<ModalFormula>> deltas = {
      {*lookup_pair("B").modal},
      {*lookup_pair("4").modal},
      {parse_modal("[]p -> p")},
      {parse_modal("p -> []p")},
      {},
  };
  for (const std::vector<ModalFormula>& delta : deltas) {
    ClosureReport report = gt_closure_check(corpus, delta);
    CHECK(report.passed());
    CHECK(report.disjoint_unions.checked > 0);
    CHECK(report.morphic_images.checked > 0);
    CHECK(report.generated_subframes.checked > 0);
    CHECK(report.reflects_ue.checked == static_cast<int>(corpus.size()));
    CHECK(report.disjoint_unions.exhaustive);
    CHECK(report.morphic_images.exhaustive);
    CHECK_FALSE(report.reflects_ue.note.empty());
  }
}

TEST_CASE("a non-definable class fails with a replayable witness") {
  std::vector<NeighborhoodFrame> corpus = small_monotonic_frames();
  auto exactly_two = [](const NeighborhoodFrame& f) { return f.size() == 2; };
  ClosureReport report = gt_closure_check(corpus, exactly_two);

  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.disjoint_unions.passed);
  REQUIRE(report.disjoint_unions.witness.has_value());

  const ClosureWitness& w = *report.disjoint_unions.witness;
  REQUIRE(w.inputs.size() == 2);
  CHECK(exactly_two(w.inputs[0]));
  CHECK(exactly_two(w.inputs[1]));
  CHECK(w.produced.size() == 4);
  // Replaying the construction reproduces the escaping frame.
  CHECK(disjoint_union({w.inputs[0], w.inputs[1]}) == w.produced);
  CHECK_FALSE(exactly_two(w.produced));
}
