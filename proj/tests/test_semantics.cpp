#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>

#include "cplkit/def_algebra.hpp"
#include "cplkit/frame_gen.hpp"
#include "cplkit/frame_io.hpp"
#include "cplkit/parser.hpp"
#include "cplkit/printer.hpp"
#include "cplkit/semantics.hpp"
#include "doctest.h"

using namespace cplkit;

namespace {

NeighborhoodFrame load(const std::string& name) {
  const char* dir = std::getenv("CPLKIT_FIXTURES");
  REQUIRE(dir != nullptr);
  return parse_frame_json(read_file(std::string(dir) + "/" + name));
}

FiniteTopology load_topology(const std::string& name) {
  const char* dir = std::getenv("CPLKIT_FIXTURES");
  REQUIRE(dir != nullptr);
  return parse_topology_json(read_file(std::string(dir) + "/" + name));
}

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

}  // namespace

TEST_CASE("binding modality over an empty family") {
  NeighborhoodFrame f3 = load("f3.json");
  CHECK(eval_cpl(f3, parse_cpl("~('a[y: y = y])"), {}));
  CHECK(!eval_cpl(f3, parse_cpl("'a[y: y = y]"), {}));
}

TEST_CASE("the full set is a neighborhood everywhere on f2") {
  CHECK(eval_cpl(load("f2.json"), parse_cpl("forall x. x[y: y = y]"), {}));
}

TEST_CASE("symmetry instance fails at a and holds at b on f2") {
  NeighborhoodFrame f2 = load("f2.json");
  CHECK(!eval_cpl(f2, parse_cpl("'a[y: ~(y[z: ~(z = 'a)])]"), {}));

  CplFormula local = parse_cpl("x[y: ~(y[z: ~(z = x)])]");
  CHECK(!eval_cpl(f2, local, {{"x", "a"}}));
  CHECK(eval_cpl(f2, local, {{"x", "b"}}));
}

TEST_CASE("quantifiers and connectives evaluate classically") {
  NeighborhoodFrame f2 = load("f2.json");
  CHECK(eval_cpl(f2, parse_cpl("exists x. exists y. ~(x = y)"), {}));
  CHECK(!eval_cpl(f2, parse_cpl("forall x. forall y. x = y"), {}));
  CHECK(eval_cpl(f2, parse_cpl("x = x -> x = x"), {{"x", "a"}}));
  CHECK(eval_cpl(f2, parse_cpl("x = 'a | x = 'b"), {{"x", "b"}}));
}

TEST_CASE("predicates evaluate from the frame interpretation") {
  NeighborhoodFrame f = parse_frame_json(
      R"({"worlds": ["a", "b"], "neighborhoods": {"a": [], "b": []}, "predicates": {"P": ["a"]}})");
  Signature sig = Signature::from_frame(f);
  CHECK(eval_cpl(f, parse_cpl("P(x)", sig), {{"x", "a"}}));
  CHECK(!eval_cpl(f, parse_cpl("P(x)", sig), {{"x", "b"}}));
  CHECK(eval_cpl(f, parse_cpl("exists x. P(x) & ~(P('b))", sig), {}));
}

TEST_CASE("evaluation errors") {
  NeighborhoodFrame f2 = load("f2.json");
  CHECK(code_of([&] { eval_cpl(f2, parse_cpl("x = x"), {}); }) == ErrorCode::UnboundVariable);
  CHECK(code_of([&] { eval_cpl(f2, parse_cpl("'zz[y: y = y]"), {}); }) ==
        ErrorCode::UnknownConstant);
  Signature sig;
  sig.predicates["P"] = 1;
  CHECK(code_of([&] { eval_cpl(f2, parse_cpl("P(x)", sig), {{"x", "a"}}); }) ==
        ErrorCode::UnknownPredicate);
  CHECK(code_of([&] { eval_cpl(f2, parse_cpl("x = x"), {{"x", "zz"}}); }) ==
        ErrorCode::UnknownConstant);
}

TEST_CASE("modal box clause tests extension membership") {
  NeighborhoodFrame f2 = load("f2.json");
  Valuation v = {{"p", 0b01}};
  // extension(~p) = {b}, box -> {a,b}, ~ -> empty, box -> empty
  CHECK(modal_extension(f2, v, parse_modal("~p")) == 0b10);
  CHECK(modal_extension(f2, v, parse_modal("[](~p)")) == 0b11);
  CHECK(modal_extension(f2, v, parse_modal("~([](~p))")) == 0b00);
  CHECK(!eval_modal_nbhd(f2, v, "a", parse_modal("[](~([](~p)))")));

  CHECK(eval_modal_nbhd(f2, v, "a", parse_modal("p | ~p")));
  CHECK(eval_modal_nbhd(f2, v, "b", parse_modal("p | ~p")));

  NeighborhoodFrame f3 = load("f3.json");
  CHECK(!eval_modal_nbhd(f3, {{"p", 0b0}}, "a", parse_modal("[]p")));
  CHECK(!eval_modal_nbhd(f3, {{"p", 0b1}}, "a", parse_modal("[]p")));

  CHECK(code_of([&] { eval_modal_nbhd(f2, v, "a", parse_modal("[]q")); }) ==
        ErrorCode::UnknownProposition);
}

TEST_CASE("diamond is the dual of box") {
  NeighborhoodFrame f2 = load("f2.json");
  for (Mask pm = 0; pm < 4; ++pm) {
    Valuation v = {{"p", pm}};
    CHECK(modal_extension(f2, v, parse_modal("<>p")) ==
          modal_extension(f2, v, parse_modal("~([](~p))")));
  }
}

TEST_CASE("interior semantics on the sierpinski space") {
  FiniteTopology t = load_topology("sierpinski.json");
  Valuation v = {{"p", 0b01}};
  CHECK(eval_modal_top(t, v, "a", parse_modal("[]p")));
  CHECK(!eval_modal_top(t, v, "b", parse_modal("[]p")));

  FiniteTopology indisc = FiniteTopology::make({"a", "b"}, {{}, {"a", "b"}});
  CHECK(!eval_modal_top(indisc, v, "a", parse_modal("[]p")));

  FiniteTopology disc = FiniteTopology::discrete({"a", "b"});
  for (Mask pm = 0; pm < 4; ++pm) {
    Valuation val = {{"p", pm}};
    for (const std::string w : {"a", "b"}) {
      CHECK(eval_modal_top(disc, val, w, parse_modal("p")) ==
            eval_modal_top(disc, val, w, parse_modal("[]p")));
    }
  }
}

TEST_CASE("interior and neighborhood semantics agree through the induced frame") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<ModalFormula> formulas = all_modal_formulas(2, {"p", "q"});
    for (const FiniteTopology& t : enumerate_topologies(n)) {
      NeighborhoodFrame f = from_topology(t);
      for_each_valuation({"p", "q"}, n, [&](const Valuation& v) {
        for (const ModalFormula& phi : formulas) {
          if (modal_extension_top(t, v, phi) != modal_extension(f, v, phi)) {
            CAPTURE(print_modal(phi));
            CHECK(modal_extension_top(t, v, phi) == modal_extension(f, v, phi));
            return false;
          }
        }
        return true;
      });
    }
  }
}

TEST_CASE("validity by valuation enumeration") {
  NeighborhoodFrame f2 = load("f2.json");
  CHECK(!frame_valid(f2, parse_modal("[]p -> p")));
  auto cex = find_modal_counterexample(f2, parse_modal("[]p -> p"));
  REQUIRE(cex.has_value());
  CHECK(cex->valuation.at("p") == 0b10);
  CHECK(cex->world == "a");

  CHECK(frame_valid(f2, parse_modal("p -> p")));
  CHECK(frame_valid_at(f2, "b", parse_modal("[]p -> p")));
  CHECK(!frame_valid_at(f2, "a", parse_modal("[]p -> p")));

  NeighborhoodFrame disc = from_topology(FiniteTopology::discrete({"a", "b"}));
  CHECK(frame_valid(disc, parse_modal("p -> []p")));
  CHECK(frame_valid(disc, parse_modal("[]p -> p")));
}

TEST_CASE("valuation enumeration order is the documented odometer") {
  std::vector<Valuation> seen;
  for_each_valuation({"q", "p"}, 1, [&](const Valuation& v) {
    seen.push_back(v);
    return true;
  });
  REQUIRE(seen.size() == 4);
  // Sorted names: p cycles slowest, q fastest.
  CHECK(seen[0] == Valuation{{"p", 0}, {"q", 0}});
  CHECK(seen[1] == Valuation{{"p", 0}, {"q", 1}});
  CHECK(seen[2] == Valuation{{"p", 1}, {"q", 0}});
  CHECK(seen[3] == Valuation{{"p", 1}, {"q", 1}});

  CHECK(code_of([] {
          for_each_valuation({"p", "q", "r"}, 7, [](const Valuation&) { return true; });
        }) == ErrorCode::SizeCapExceeded);
}

TEST_CASE("monotone rule holds on monotonic frames") {
  for (const NeighborhoodFrame& f : enumerate_monotonic_frames(2)) {
    for (Mask pm = 0; pm < 4; ++pm) {
      for (Mask qm = 0; qm < 4; ++qm) {
        if ((pm & qm) != pm) continue;  // extension(p) must lie inside extension(q)
        Valuation v = {{"p", pm}, {"q", qm}};
        Mask bp = modal_extension(f, v, parse_modal("[]p"));
        Mask bq = modal_extension(f, v, parse_modal("[]q"));
        CHECK((bp & bq) == bp);
      }
    }
  }
}

TEST_CASE("definable sets of f2 without parameters") {
  DefAlgebra alg = build_def_algebra(load("f2.json"), {});
  CHECK(alg.carrier() == std::vector<Mask>{0b00, 0b11});
  CHECK(alg.box(0b11) == 0b11);
  CHECK(alg.box(0b00) == 0b00);
  CHECK(code_of([&] { alg.box(0b01); }) == ErrorCode::UsageError);
  CHECK(code_of([&] { alg.witness(0b01); }) == ErrorCode::UsageError);
}

TEST_CASE("a parameter separates f2 into the full powerset") {
  DefAlgebra alg = build_def_algebra(load("f2.json"), {"a"});
  CHECK(alg.carrier() == std::vector<Mask>{0b00, 0b01, 0b10, 0b11});
}

TEST_CASE("one box application separates f1 without parameters") {
  DefAlgebra alg = build_def_algebra(load("f1.json"), {});
  CHECK(alg.carrier() == std::vector<Mask>{0b00, 0b01, 0b10, 0b11});
}

TEST_CASE("witness formulas define their sets") {
  NeighborhoodFrame f1 = load("f1.json");
  DefAlgebra alg = build_def_algebra(f1, {});
  for (Mask s : alg.carrier()) {
    const CplFormula& w = alg.witness(s);
    CHECK(free_variables(w) == std::set<std::string>{"x"});
    Mask defined = 0;
    for (int i = 0; i < f1.size(); ++i) {
      if (eval_cpl(f1, w, {{"x", f1.label(i)}})) defined |= Mask(1) << i;
    }
    CHECK(defined == s);
  }
}

TEST_CASE("definable algebras are closed sub-bams over the enumeration") {
  for (int n = 1; n <= 2; ++n) {
    for (const NeighborhoodFrame& f : enumerate_monotonic_frames(n)) {
      DefAlgebra alg = build_def_algebra(f, {});
      Mask full = f.full_mask();
      for (Mask s : alg.carrier()) {
        CHECK(alg.contains(full & ~s));
        CHECK(alg.contains(alg.box(s)));
        for (Mask t : alg.carrier()) CHECK(alg.contains(s & t));
      }
      CHECK(alg.contains(0));
      CHECK(alg.contains(full));
    }
  }
}

TEST_CASE("types are atoms of the definable algebra") {
  NeighborhoodFrame f2 = load("f2.json");
  CHECK(tp(f2, "a", {}).atom == 0b11);
  CHECK(tp(f2, "a", {"a"}).atom == 0b01);
  CHECK(tp(f2, "b", {"a"}).atom == 0b10);
}

TEST_CASE("every type over the full parameter set is realized by its world") {
  for (const NeighborhoodFrame& f : enumerate_monotonic_frames(2)) {
    DefAlgebra alg = build_def_algebra(f, f.worlds());
    for (int w = 0; w < f.size(); ++w) {
      TypePoint t = tp(f, f.label(w), f.worlds());
      CHECK(t.atom == Mask(1) << w);
      // Ultrafilter shape: the members are exactly the carrier sets above
      // the atom, closed under intersection and supersets, missing none.
      for (Mask s : alg.carrier()) {
        bool member = (s & t.atom) == t.atom;
        CHECK(member == ((s >> w) & 1));
      }
    }
  }
}

TEST_CASE("essential part is the identity on finite frames") {
  CHECK(essential_part(load("f1.json")) == load("f1.json"));
  CHECK(essential_part(load("f2.json")) == load("f2.json"));
  for (const NeighborhoodFrame& f : enumerate_monotonic_frames(2)) {
    CHECK(essential_part(f) == f);
  }
}
