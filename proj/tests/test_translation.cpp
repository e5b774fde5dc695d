#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cplkit/def_algebra.hpp"
#include "cplkit/frame_gen.hpp"
#include "cplkit/frame_io.hpp"
#include "cplkit/parser.hpp"
#include "cplkit/printer.hpp"
#include "cplkit/translation.hpp"
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

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t pick(std::uint64_t n) { return eng() % n; }
};

// Arbitrary (not necessarily monotonic) frame: each subset joins each
// world's family with probability 1/2, plus a random extension for P.
NeighborhoodFrame random_frame(Rng& r, int n) {
  std::vector<std::vector<Mask>> families(n);
  Mask subsets = Mask(1) << n;
  for (int w = 0; w < n; ++w) {
    for (Mask u = 0; u < subsets; ++u) {
      if (r.pick(2)) families[w].push_back(u);
    }
  }
  Mask p = r.pick(subsets);
  return NeighborhoodFrame::from_masks(standard_world_labels(n), std::move(families),
                                       {{"P", p}});
}

Term random_term(Rng& r, int n) {
  static const std::string vars[] = {"x", "y", "z"};
  if (r.pick(4) == 3) return Term::constant(standard_world_labels(n)[r.pick(n)]);
  return Term::var(vars[r.pick(3)]);
}

CplFormula random_cpl(Rng& r, int n, int depth) {
  if (depth <= 1) {
    if (r.pick(3) == 0) return CplFormula::pred("P", {random_term(r, n)});
    return CplFormula::equal(random_term(r, n), random_term(r, n));
  }
  static const std::string vars[] = {"x", "y", "z"};
  switch (r.pick(8)) {
    case 0: return CplFormula::negation(random_cpl(r, n, depth - 1));
    case 1: return CplFormula::conj(random_cpl(r, n, depth - 1), random_cpl(r, n, depth - 1));
    case 2: return CplFormula::disj(random_cpl(r, n, depth - 1), random_cpl(r, n, depth - 1));
    case 3: return CplFormula::implies(random_cpl(r, n, depth - 1), random_cpl(r, n, depth - 1));
    case 4: return CplFormula::exists(vars[r.pick(3)], random_cpl(r, n, depth - 1));
    case 5: return CplFormula::forall(vars[r.pick(3)], random_cpl(r, n, depth - 1));
    case 6: return CplFormula::box(random_term(r, n), vars[r.pick(3)], random_cpl(r, n, depth - 1));
    default: return random_cpl(r, n, 1);
  }
}

Assignment random_assignment(Rng& r, const NeighborhoodFrame& f) {
  Assignment rho;
  for (const char* v : {"x", "y", "z"}) {
    rho[v] = f.label(static_cast<int>(r.pick(f.size())));
  }
  return rho;
}

int count_boxes(const CplFormula& phi) {
  switch (phi.kind()) {
    case CplFormula::Kind::Equal:
    case CplFormula::Kind::Pred:
      return 0;
    case CplFormula::Kind::Not:
    case CplFormula::Kind::Exists:
    case CplFormula::Kind::Forall:
      return count_boxes(phi.body());
    case CplFormula::Kind::And:
    case CplFormula::Kind::Or:
    case CplFormula::Kind::Implies:
      return count_boxes(phi.left()) + count_boxes(phi.right());
    case CplFormula::Kind::Box:
      return 1 + count_boxes(phi.body());
  }
  return 0;
}

}  // namespace

TEST_CASE("a box translates to the set-abstraction clause") {
  Fol2Formula got = translate2(parse_cpl("x[y: y = y]"));
  CHECK(print_fol2(got) ==
        "(exists U1 (and (forall y (iff (in y U1) (= y y))) (N x U1)))");
  CHECK(got == parse_fol2(print_fol2(got)));
}

TEST_CASE("translation is the identity on atoms and commutes with the rest") {
  Signature sig;
  sig.predicates["P"] = 1;
  CHECK(print_fol2(translate2(parse_cpl("x = z"))) == "(= x z)");
  CHECK(print_fol2(translate2(parse_cpl("P('a)", sig))) == "(pred P 'a)");

  CplFormula eq = parse_cpl("x = x");
  CHECK(translate2(CplFormula::negation(eq)) == Fol2Formula::negation(translate2(eq)));
  CHECK(translate2(CplFormula::conj(eq, eq)) ==
        Fol2Formula::conj(translate2(eq), translate2(eq)));
  CHECK(translate2(CplFormula::disj(eq, eq)) ==
        Fol2Formula::disj(translate2(eq), translate2(eq)));
  CHECK(translate2(CplFormula::implies(eq, eq)) ==
        Fol2Formula::implies(translate2(eq), translate2(eq)));
  CHECK(translate2(parse_cpl("exists w. w = x")) ==
        Fol2Formula::exists("w", parse_fol2("(= w x)")));
  CHECK(translate2(parse_cpl("forall w. w = x")) ==
        Fol2Formula::forall("w", parse_fol2("(= w x)")));
}

TEST_CASE("nested boxes number set variables innermost first") {
  // Each box's set variable is assigned after its body is translated, so an
  // inner box always gets the smaller index and no two boxes share one.
  CplFormula four = parse_cpl(
      "~(x[y: y = y]) | (x[y: y = y] & x[y1: y1[y2: ~(x[z: ~(z = y2)])]])");
  REQUIRE(count_boxes(four) == 5);
  std::string printed = print_fol2(translate2(four));

  std::vector<std::size_t> at;
  for (int i = 1; i <= 5; ++i) {
    at.push_back(printed.find("(exists U" + std::to_string(i) + " "));
    CHECK(at.back() != std::string::npos);
  }
  CHECK(printed.find("U6") == std::string::npos);
  // Left disjunct first, then the conjunction's left box, then the nested
  // tower with the innermost box opening last in the printed text.
  CHECK(at[0] < at[1]);
  CHECK(at[1] < at[4]);
  CHECK(at[4] < at[3]);
  CHECK(at[3] < at[2]);

  // The innermost clause binds U3 inside U4 inside U5.
  std::string tower = printed.substr(at[4]);
  CHECK(tower.find("(exists U4 ") != std::string::npos);
  CHECK(tower.substr(tower.find("(exists U4 ")).find("(exists U3 ") != std::string::npos);
}

TEST_CASE("translated output is well sorted with pairwise distinct set variables") {
  Rng r(411);
  for (int trial = 0; trial < 1000; ++trial) {
    CplFormula phi = random_cpl(r, 2, 1 + static_cast<int>(r.pick(4)));
    Fol2Formula got = translate2(phi);
    // Round-tripping through the sort-checking parser re-validates every atom.
    CHECK(parse_fol2(print_fol2(got)) == got);

    int boxes = count_boxes(phi);
    std::set<std::string> uppercase;
    for (const std::string& v : fol2_all_variables(got)) {
      if (is_nbhd_variable(v)) uppercase.insert(v);
    }
    CHECK(static_cast<int>(uppercase.size()) == boxes);
    for (int i = 1; i <= boxes; ++i) {
      CHECK(uppercase.count("U" + std::to_string(i)) == 1);
    }
  }
}

TEST_CASE("full powerset structures list every subset") {
  TwoSortedStructure small = full_powerset_structure(fixture("f3"));
  CHECK(small.sets() == std::vector<Mask>{0b0, 0b1});

  TwoSortedStructure m = full_powerset_structure(fixture("f2"));
  CHECK(m.sets().size() == 4);
  CHECK(m.has_set(0b10));
  CHECK_FALSE(m.has_set(0b100));
  for (int w = 0; w < m.frame().size(); ++w) {
    for (Mask u : m.frame().family(w)) CHECK(m.has_set(u));
  }
}

TEST_CASE("structure construction rejects missing neighborhoods and alien sets") {
  NeighborhoodFrame f2 = fixture("f2");
  // {b} is a neighborhood of both worlds, so leaving it out breaks largeness.
  CHECK(code_of([&] { TwoSortedStructure::make(f2, {0b00, 0b01, 0b11}); }) ==
        ErrorCode::UsageError);
  CHECK(code_of([&] { TwoSortedStructure::make(fixture("f3"), {0b0, 0b1, 0b10}); }) ==
        ErrorCode::NotASubset);

  // Subsets of the powerset are fine as long as every neighborhood is there.
  TwoSortedStructure lean = TwoSortedStructure::make(fixture("f1"), {0b01, 0b11});
  CHECK(lean.sets().size() == 2);
}

TEST_CASE("neighborhood quantifiers range over the listed sets only") {
  // "some set is empty" needs the empty set in the neighborhood sort.
  Fol2Formula some_empty = parse_fol2("(exists U (forall x (not (in x U))))");
  CHECK(eval_fol2(full_powerset_structure(fixture("f1")), some_empty, {}));
  CHECK_FALSE(eval_fol2(TwoSortedStructure::make(fixture("f1"), {0b01, 0b11}),
                        some_empty, {}));
}

TEST_CASE("oracle evaluation of translated sentences") {
  TwoSortedStructure m = full_powerset_structure(fixture("f2"));
  CHECK(eval_fol2(m, translate2(parse_cpl("forall x. x[y: y = y]")), {}));

  Fol2Formula extensionality = parse_fol2(
      "(forall U (forall V (implies (forall x (iff (in x U) (in x V))) (= U V))))");
  CHECK(eval_fol2(full_powerset_structure(fixture("f1")), extensionality, {}));
  CHECK(eval_fol2(m, extensionality, {}));
}

TEST_CASE("oracle evaluation errors") {
  TwoSortedStructure m = full_powerset_structure(fixture("f2"));
  CHECK(code_of([&] { eval_fol2(m, parse_fol2("(= x x)"), {}); }) ==
        ErrorCode::UnboundVariable);
  CHECK(code_of([&] { eval_fol2(m, parse_fol2("(in 'a U)"), {}); }) ==
        ErrorCode::UnboundVariable);
  CHECK(code_of([&] { eval_fol2(m, parse_fol2("(= 'c 'c)"), {}); }) ==
        ErrorCode::UnknownConstant);
  CHECK(code_of([&] { eval_fol2(m, parse_fol2("(pred Q x)"), {{{"x", "a"}}, {}}); }) ==
        ErrorCode::UnknownPredicate);
  // An assigned set must be an element of the neighborhood sort.
  TwoSortedStructure lean = TwoSortedStructure::make(fixture("f1"), {0b01, 0b11});
  CHECK(code_of([&] { eval_fol2(lean, parse_fol2("(in 'a U)"), {{}, {{"U", 0b10}}}); }) ==
        ErrorCode::SortError);
  CHECK(eval_fol2(lean, parse_fol2("(in 'a U)"), {{}, {{"U", 0b01}}}));
}

TEST_CASE("comprehension instances hold on full powerset structures") {
  CplFormula phi = parse_cpl("x[z: z = y]");
  Fol2Formula inst = comprehension_instance(phi, "x");
  std::string printed = print_fol2(inst);
  CHECK(printed.substr(0, 30) == "(forall y (exists U (forall x ");
  CHECK(printed.find("(in x U)") != std::string::npos);
  CHECK(eval_fol2(full_powerset_structure(fixture("f2")), inst, {}));
  CHECK(eval_fol2(full_powerset_structure(fixture("f1")), inst, {}));

  // A closed formula needs no outer universal prefix.
  Fol2Formula closed = comprehension_instance(parse_cpl("x = x"), "x");
  CHECK(print_fol2(closed).substr(0, 10) == "(exists U ");
  CHECK(eval_fol2(full_powerset_structure(fixture("f3")), closed, {}));
}

TEST_CASE("translation equivalence on the named correspondents") {
  CplFormula symmetry = parse_cpl("x[y: ~(y[z: ~(z = x)])]");
  NeighborhoodFrame f1 = fixture("f1");
  NeighborhoodFrame f2 = fixture("f2");
  CHECK(check_translation_equivalence(f1, symmetry, {{"x", "a"}}));
  CHECK(check_translation_equivalence(f1, symmetry, {{"x", "b"}}));
  CHECK(check_translation_equivalence(f2, symmetry, {{"x", "a"}}));

  CplFormula aqf = parse_cpl(
      "forall x. (x[y: y = y] -> x[y: ~(x[z: ~(z = y)])])");
  CHECK(check_translation_equivalence(f2, aqf, {}));
  CHECK(check_translation_equivalence(f1, aqf, {}));
  CHECK(check_translation_equivalence(fixture("f4"), aqf, {}));
}

TEST_CASE("translation equivalence over ten thousand random triples") {
  Rng r(20260816);
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 1 + static_cast<int>(r.pick(3));
    NeighborhoodFrame f = random_frame(r, n);
    CplFormula phi = random_cpl(r, n, 1 + static_cast<int>(r.pick(3)));
    Assignment rho = random_assignment(r, f);
    if (!check_translation_equivalence(f, phi, rho)) {
      std::string printed = print_cpl(phi);
      CAPTURE(trial);
      CAPTURE(printed);
      FAIL("direct and translated evaluation disagree");
    }
  }
}

TEST_CASE("the definable-set structure agrees and coincides with the powerset") {
  Rng r(77);
  std::vector<NeighborhoodFrame> frames = {fixture("f1"), fixture("f2"), fixture("f3")};
  for (const NeighborhoodFrame& f : enumerate_monotonic_frames(2)) frames.push_back(f);

  for (const NeighborhoodFrame& f : frames) {
    TwoSortedStructure def = def_closed_structure(f);
    CHECK(def.sets() == full_powerset_structure(f).sets());
  }

  // Equivalence holds verbatim with the definable sets as neighborhood sort.
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(r.pick(3));
    NeighborhoodFrame f = random_frame(r, n);
    CplFormula phi = random_cpl(r, n, 1 + static_cast<int>(r.pick(3)));
    Assignment rho = random_assignment(r, f);
    bool direct = eval_cpl(f, phi, rho);
    CHECK(eval_fol2(def_closed_structure(f), translate2(phi), {rho, {}}) == direct);
  }
}
