#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "cplkit/parser.hpp"
#include "cplkit/printer.hpp"
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

Signature sig_p() {
  Signature s;
  s.predicates["P"] = 1;
  return s;
}

// Deterministic formula samplers; raw engine arithmetic keeps the sequence
// identical everywhere.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t pick(std::uint64_t n) { return eng() % n; }
};

Term random_term(Rng& r) {
  switch (r.pick(4)) {
    case 0: return Term::var("x");
    case 1: return Term::var("y");
    case 2: return Term::var("z");
    default: return Term::constant(r.pick(2) ? "a" : "b");
  }
}

CplFormula random_cpl(Rng& r, int depth) {
  if (depth <= 1) {
    if (r.pick(3) == 0) return CplFormula::pred("P", {random_term(r)});
    return CplFormula::equal(random_term(r), random_term(r));
  }
  static const std::string vars[] = {"x", "y", "z"};
  switch (r.pick(8)) {
    case 0: return CplFormula::negation(random_cpl(r, depth - 1));
    case 1: return CplFormula::conj(random_cpl(r, depth - 1), random_cpl(r, depth - 1));
    case 2: return CplFormula::disj(random_cpl(r, depth - 1), random_cpl(r, depth - 1));
    case 3: return CplFormula::implies(random_cpl(r, depth - 1), random_cpl(r, depth - 1));
    case 4: return CplFormula::exists(vars[r.pick(3)], random_cpl(r, depth - 1));
    case 5: return CplFormula::forall(vars[r.pick(3)], random_cpl(r, depth - 1));
    case 6: return CplFormula::box(random_term(r), vars[r.pick(3)], random_cpl(r, depth - 1));
    default: return random_cpl(r, 1);
  }
}

ModalFormula random_modal(Rng& r, int depth) {
  if (depth <= 1) {
    switch (r.pick(4)) {
      case 0: return ModalFormula::top();
      case 1: return ModalFormula::bottom();
      case 2: return ModalFormula::prop("p");
      default: return ModalFormula::prop("q");
    }
  }
  switch (r.pick(7)) {
    case 0: return ModalFormula::negation(random_modal(r, depth - 1));
    case 1: return ModalFormula::conj(random_modal(r, depth - 1), random_modal(r, depth - 1));
    case 2: return ModalFormula::disj(random_modal(r, depth - 1), random_modal(r, depth - 1));
    case 3: return ModalFormula::implies(random_modal(r, depth - 1), random_modal(r, depth - 1));
    case 4: return ModalFormula::box(random_modal(r, depth - 1));
    case 5: return ModalFormula::diamond(random_modal(r, depth - 1));
    default: return random_modal(r, 1);
  }
}

Fol2Formula random_fol2(Rng& r, int depth) {
  static const std::string svars[] = {"x", "y", "z"};
  static const std::string nvars[] = {"U", "V"};
  if (depth <= 1) {
    switch (r.pick(5)) {
      case 0: return Fol2Formula::equal_state(random_term(r), random_term(r));
      case 1: return Fol2Formula::equal_nbhd(nvars[r.pick(2)], nvars[r.pick(2)]);
      case 2: return Fol2Formula::pred("P", {random_term(r)});
      case 3: return Fol2Formula::in(random_term(r), nvars[r.pick(2)]);
      default: return Fol2Formula::n(random_term(r), nvars[r.pick(2)]);
    }
  }
  switch (r.pick(8)) {
    case 0: return Fol2Formula::negation(random_fol2(r, depth - 1));
    case 1: return Fol2Formula::conj(random_fol2(r, depth - 1), random_fol2(r, depth - 1));
    case 2: return Fol2Formula::disj(random_fol2(r, depth - 1), random_fol2(r, depth - 1));
    case 3: return Fol2Formula::implies(random_fol2(r, depth - 1), random_fol2(r, depth - 1));
    case 4: return Fol2Formula::iff(random_fol2(r, depth - 1), random_fol2(r, depth - 1));
    case 5: return Fol2Formula::exists(r.pick(2) ? svars[r.pick(3)] : nvars[r.pick(2)],
                                       random_fol2(r, depth - 1));
    case 6: return Fol2Formula::forall(r.pick(2) ? svars[r.pick(3)] : nvars[r.pick(2)],
                                       random_fol2(r, depth - 1));
    default: return random_fol2(r, 1);
  }
}

}  // namespace

TEST_CASE("smallest box formula") {
  CplFormula f = parse_cpl("x[y: y = y]");
  CHECK(f.kind() == CplFormula::Kind::Box);
  CHECK(f.subject() == Term::var("x"));
  CHECK(f.bound_var() == "y");
  CHECK(f.body().kind() == CplFormula::Kind::Equal);
  CHECK(print_cpl(f) == "x[y: y = y]");
}

TEST_CASE("principal upset sentence parses and reprints verbatim") {
  std::string text = "forall x. (x[y: y = y] -> x[y: ~(x[z: ~(z = y)])])";
  CplFormula f = parse_cpl(text);
  CHECK(f.kind() == CplFormula::Kind::Forall);
  CHECK(f.body().kind() == CplFormula::Kind::Implies);
  CHECK(print_cpl(f) == text);
  CHECK(parse_cpl(print_cpl(f)) == f);
}

TEST_CASE("constants in box bodies") {
  CplFormula f = parse_cpl("x[y: ~(y[z: ~(z = 'a)])]");
  CHECK(f.kind() == CplFormula::Kind::Box);
  CplFormula inner = f.body().body();  // strip the ~
  CHECK(inner.kind() == CplFormula::Kind::Box);
  CHECK(inner.subject() == Term::var("y"));
  CHECK(inner.body().body().rhs() == Term::constant("a"));
  CHECK(print_cpl(f) == "x[y: ~(y[z: ~(z = 'a)])]");
}

TEST_CASE("cpl precedence and associativity") {
  CplFormula f = parse_cpl("~(x = y) & y = z | x = z -> x = x");
  REQUIRE(f.kind() == CplFormula::Kind::Implies);
  REQUIRE(f.left().kind() == CplFormula::Kind::Or);
  CHECK(f.left().left().kind() == CplFormula::Kind::And);
  CHECK(f.left().left().left().kind() == CplFormula::Kind::Not);

  CplFormula chain = parse_cpl("x = x -> y = y -> z = z");
  CHECK(chain.right().kind() == CplFormula::Kind::Implies);

  // Quantifiers swallow everything to their right.
  CplFormula q = parse_cpl("forall x. x = x -> x = y");
  CHECK(q.kind() == CplFormula::Kind::Forall);
  CHECK(q.body().kind() == CplFormula::Kind::Implies);
  CHECK(free_variables(q) == std::set<std::string>{"y"});

  CplFormula mixed = parse_cpl("x = x & exists y. y = y | y = x");
  REQUIRE(mixed.kind() == CplFormula::Kind::And);
  CHECK(mixed.right().kind() == CplFormula::Kind::Exists);
  CHECK(mixed.right().body().kind() == CplFormula::Kind::Or);
}

TEST_CASE("cpl parse errors carry positions") {
  try {
    parse_cpl("x = ");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("1:5") != std::string::npos);
  }
  CHECK(code_of([] { parse_cpl("x ="); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_cpl("(x = x"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_cpl("x [y: y = y"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_cpl("x = x x = x"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_cpl("x = x @"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_cpl("' = x"); }) == ErrorCode::ParseError);
}

TEST_CASE("cpl variables are lowercase") {
  CHECK(code_of([] { parse_cpl("X = X"); }) == ErrorCode::SortError);
  CHECK(code_of([] { parse_cpl("exists X. X = X"); }) == ErrorCode::SortError);
  CHECK(code_of([] { parse_cpl("x[Y: x = x]"); }) == ErrorCode::SortError);
}

TEST_CASE("cpl predicates come from the signature") {
  CplFormula f = parse_cpl("P(x) & P('a)", sig_p());
  CHECK(f.left().kind() == CplFormula::Kind::Pred);
  CHECK(f.left().name() == "P");
  CHECK(print_cpl(f) == "P(x) & P('a)");

  CHECK(code_of([] { parse_cpl("Q(x)", sig_p()); }) == ErrorCode::UnknownPredicate);
  CHECK(code_of([] { parse_cpl("P(x, y)", sig_p()); }) == ErrorCode::SortError);

  // Without a '(' an identifier is a term even if a predicate shares its name.
  Signature lower;
  lower.predicates["p"] = 1;
  CHECK(parse_cpl("p = x", lower).kind() == CplFormula::Kind::Equal);
  CHECK(parse_cpl("p(p)", lower).kind() == CplFormula::Kind::Pred);
}

TEST_CASE("free variables and depth") {
  CplFormula f = parse_cpl("x[y: y = z]");
  CHECK(free_variables(f) == std::set<std::string>{"x", "z"});
  CHECK(all_variables(f) == std::set<std::string>{"x", "y", "z"});
  CHECK(cpl_depth(f) == 2);
  CHECK(free_variables(parse_cpl("forall x. exists y. x = y")).empty());
}

TEST_CASE("substitution") {
  CplFormula f = parse_cpl("x[y: y = z]");

  CplFormula renamed = substitute(f, "z", Term::var("y"));
  CHECK(print_cpl(renamed) == "x[y1: y1 = y]");
  CHECK(free_variables(renamed) == std::set<std::string>{"x", "y"});

  CplFormula grounded = substitute(f, "x", Term::constant("a"));
  CHECK(print_cpl(grounded) == "'a[y: y = z]");

  // No capture risk: binder untouched.
  CHECK(print_cpl(substitute(f, "z", Term::var("w"))) == "x[y: y = w]");
  // Substituting the bound variable changes nothing.
  CHECK(substitute(f, "y", Term::var("z")) == f);
}

TEST_CASE("substitution keeps the free-variable identity") {
  Rng r(2024);
  int exercised = 0;
  while (exercised < 300) {
    CplFormula f = random_cpl(r, 4);
    std::string var = r.pick(2) ? "x" : "y";
    Term repl = random_term(r);
    auto before = free_variables(f);
    if (!before.count(var)) continue;
    ++exercised;
    auto after = free_variables(substitute(f, var, repl));
    std::set<std::string> expect = before;
    expect.erase(var);
    if (repl.is_variable()) expect.insert(repl.name);
    CHECK(after == expect);
  }
}

TEST_CASE("cpl round trip on random formulas") {
  Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    CplFormula f = random_cpl(r, 5);
    std::string once = print_cpl(f);
    CHECK(parse_cpl(once, sig_p()) == f);
    CHECK(print_cpl(parse_cpl(once, sig_p())) == once);

    std::string full = print_cpl(f, true);
    CHECK(parse_cpl(full, sig_p()) == f);
  }
}

TEST_CASE("modal axioms parse to the expected shapes") {
  ModalFormula b = parse_modal("p -> [](~([](~p)))");
  REQUIRE(b.kind() == ModalFormula::Kind::Implies);
  CHECK(b.right().kind() == ModalFormula::Kind::Box);
  CHECK(b.right().child().kind() == ModalFormula::Kind::Not);
  CHECK(print_modal(b) == "p -> [](~([](~p)))");

  ModalFormula four = parse_modal("[]p -> [][]p");
  CHECK(four.right().child().kind() == ModalFormula::Kind::Box);
  CHECK(print_modal(four) == "[]p -> [][]p");

  ModalFormula dia = parse_modal("<>p");
  CHECK(dia.kind() == ModalFormula::Kind::Diamond);
  CHECK(dia == ModalFormula::diamond(ModalFormula::prop("p")));

  CHECK(parse_modal("true").kind() == ModalFormula::Kind::Top);
  CHECK(parse_modal("false").kind() == ModalFormula::Kind::Bottom);
}

TEST_CASE("modal precedence") {
  ModalFormula f = parse_modal("~p & q | r -> s");
  REQUIRE(f.kind() == ModalFormula::Kind::Implies);
  REQUIRE(f.left().kind() == ModalFormula::Kind::Or);
  CHECK(f.left().left().kind() == ModalFormula::Kind::And);
  CHECK(f.left().left().left().kind() == ModalFormula::Kind::Not);

  CHECK(parse_modal("[]p & q") ==
        ModalFormula::conj(ModalFormula::box(ModalFormula::prop("p")), ModalFormula::prop("q")));
  CHECK(propositions(parse_modal("[]p & <>q")) == std::set<std::string>{"p", "q"});
  CHECK(modal_depth(parse_modal("[][]p")) == 3);
}

TEST_CASE("modal round trip on random formulas") {
  Rng r(11);
  for (int i = 0; i < 1000; ++i) {
    ModalFormula f = random_modal(r, 5);
    std::string once = print_modal(f);
    CHECK(parse_modal(once) == f);
    CHECK(print_modal(parse_modal(once)) == once);
    CHECK(parse_modal(print_modal(f, true)) == f);
  }
}

TEST_CASE("two-sorted s-expressions") {
  std::string text = "(exists U1 (and (forall y (iff (in y U1) (= y 'a))) (N x U1)))";
  Fol2Formula f = parse_fol2(text);
  REQUIRE(f.kind() == Fol2Formula::Kind::Exists);
  CHECK(f.name() == "U1");
  CHECK(f.body().kind() == Fol2Formula::Kind::And);
  CHECK(f.body().right().kind() == Fol2Formula::Kind::N);
  CHECK(print_fol2(f) == text);

  Fol2Formula ext = parse_fol2(
      "(forall U (forall V (implies (forall x (iff (in x U) (in x V))) (= U V))))");
  CHECK(ext.body().body().right().kind() == Fol2Formula::Kind::EqualNbhd);

  CHECK(fol2_free_variables(parse_fol2("(and (in x U) (pred P y))")) ==
        std::set<std::string>{"U", "x", "y"});
}

TEST_CASE("two-sorted sort discipline") {
  CHECK(code_of([] { parse_fol2("(in U x)"); }) == ErrorCode::SortError);
  CHECK(code_of([] { parse_fol2("(N U x)"); }) == ErrorCode::SortError);
  CHECK(code_of([] { parse_fol2("(= x U)"); }) == ErrorCode::SortError);
  CHECK(code_of([] { parse_fol2("(= U x)"); }) == ErrorCode::SortError);
  CHECK(code_of([] { parse_fol2("(pred P U)"); }) == ErrorCode::SortError);
  CHECK(code_of([] { parse_fol2("(frob x U)"); }) == ErrorCode::ParseError);

  CHECK(is_nbhd_variable("U"));
  CHECK(is_nbhd_variable("U1"));
  CHECK(!is_nbhd_variable("x"));
  CHECK(!is_nbhd_variable(""));
}

TEST_CASE("two-sorted atoms accept both term kinds at state sort") {
  Fol2Formula f = parse_fol2("(in 'a U)");
  CHECK(f.lhs() == Term::constant("a"));
}

TEST_CASE("fol2 round trip on random formulas") {
  Rng r(23);
  for (int i = 0; i < 1000; ++i) {
    Fol2Formula f = random_fol2(r, 5);
    std::string once = print_fol2(f);
    CHECK(parse_fol2(once) == f);
    CHECK(print_fol2(parse_fol2(once)) == once);
  }
}

TEST_CASE("formula files split into lines") {
  std::string text = "# heading\n x = x \n\n  # comment\ny = y # trailing\n";
  CHECK(formula_lines(text) == std::vector<std::string>{"x = x", "y = y"});
}
