#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cplkit/errors.hpp"

namespace cplkit {

class NeighborhoodFrame;

struct Term {
  enum class Kind { Variable, Constant };
  Kind kind = Kind::Variable;
  std::string name;

  static Term var(std::string n) { return {Kind::Variable, std::move(n)}; }
  static Term constant(std::string n) { return {Kind::Constant, std::move(n)}; }
  bool is_variable() const { return kind == Kind::Variable; }
  bool operator==(const Term&) const = default;
  auto operator<=>(const Term&) const = default;
};

struct Signature {
  std::map<std::string, int> predicates;  // name -> arity
  static Signature from_frame(const NeighborhoodFrame& f);
};

// First-order formulas with the binding neighborhood modality t[v: body].
// Immutable; nodes shared freely.
class CplFormula {
 public:
  enum class Kind { Equal, Pred, Not, And, Or, Implies, Exists, Forall, Box };

  static CplFormula equal(Term lhs, Term rhs);
  static CplFormula pred(std::string name, std::vector<Term> args);
  static CplFormula negation(CplFormula a);
  static CplFormula conj(CplFormula a, CplFormula b);
  static CplFormula disj(CplFormula a, CplFormula b);
  static CplFormula implies(CplFormula a, CplFormula b);
  static CplFormula exists(std::string var, CplFormula body);
  static CplFormula forall(std::string var, CplFormula body);
  static CplFormula box(Term subject, std::string var, CplFormula body);

  Kind kind() const { return node_->kind; }
  const Term& lhs() const { return node_->t1; }       // Equal
  const Term& rhs() const { return node_->t2; }       // Equal
  const Term& subject() const { return node_->t1; }   // Box
  const std::string& name() const { return node_->name; }
  const std::vector<Term>& args() const { return node_->args; }
  const std::string& bound_var() const { return node_->name; }  // Exists/Forall/Box
  CplFormula left() const { return CplFormula(node_->a); }
  CplFormula right() const { return CplFormula(node_->b); }
  CplFormula body() const { return CplFormula(node_->a); }

  bool operator==(const CplFormula& other) const;

 private:
  struct Node {
    Kind kind;
    Term t1, t2;
    std::string name;
    std::vector<Term> args;
    std::shared_ptr<const Node> a, b;
  };
  explicit CplFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_variables(const CplFormula& f);
std::set<std::string> all_variables(const CplFormula& f);  // free and bound
int cpl_depth(const CplFormula& f);

// Capture-avoiding; bound variables are renamed to name1, name2, ... when the
// replacement would otherwise be captured.
CplFormula substitute(const CplFormula& f, const std::string& var, const Term& replacement);

// Propositional modal formulas.
class ModalFormula {
 public:
  enum class Kind { Prop, Top, Bottom, Not, And, Or, Implies, Box, Diamond };

  static ModalFormula prop(std::string name);
  static ModalFormula top();
  static ModalFormula bottom();
  static ModalFormula negation(ModalFormula a);
  static ModalFormula conj(ModalFormula a, ModalFormula b);
  static ModalFormula disj(ModalFormula a, ModalFormula b);
  static ModalFormula implies(ModalFormula a, ModalFormula b);
  static ModalFormula box(ModalFormula a);
  static ModalFormula diamond(ModalFormula a);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  ModalFormula left() const { return ModalFormula(node_->a); }
  ModalFormula right() const { return ModalFormula(node_->b); }
  ModalFormula child() const { return ModalFormula(node_->a); }

  bool operator==(const ModalFormula& other) const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> a, b;
  };
  explicit ModalFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> propositions(const ModalFormula& f);
int modal_depth(const ModalFormula& f);

// Every AST of depth ≤ depth over the given atoms with connectives
// ~ [] <> & | ->, each exactly once, in a fixed order. Grows doubly
// exponentially: two atoms give 20 formulas at depth 2 and 1262 at depth 3.
std::vector<ModalFormula> all_modal_formulas(int depth,
                                             const std::vector<std::string>& props);

// Two-sorted first-order formulas. The sort of a variable is encoded in its
// name: an uppercase first letter means neighborhood sort, anything else is
// state sort. Constants are always state sort. Factories reject ill-sorted
// atoms, so every Fol2Formula is well sorted by construction.
bool is_nbhd_variable(const std::string& name);

class Fol2Formula {
 public:
  enum class Kind {
    EqualState, EqualNbhd, Pred, In, N,
    Not, And, Or, Implies, Iff, Exists, Forall,
  };

  static Fol2Formula equal_state(Term lhs, Term rhs);
  static Fol2Formula equal_nbhd(std::string lhs, std::string rhs);
  static Fol2Formula pred(std::string name, std::vector<Term> args);
  static Fol2Formula in(Term state, std::string nbhd_var);
  static Fol2Formula n(Term state, std::string nbhd_var);
  static Fol2Formula negation(Fol2Formula a);
  static Fol2Formula conj(Fol2Formula a, Fol2Formula b);
  static Fol2Formula disj(Fol2Formula a, Fol2Formula b);
  static Fol2Formula implies(Fol2Formula a, Fol2Formula b);
  static Fol2Formula iff(Fol2Formula a, Fol2Formula b);
  static Fol2Formula exists(std::string var, Fol2Formula body);  // either sort
  static Fol2Formula forall(std::string var, Fol2Formula body);

  Kind kind() const { return node_->kind; }
  const Term& lhs() const { return node_->t1; }
  const Term& rhs() const { return node_->t2; }
  const std::string& name() const { return node_->name; }  // Pred name, nbhd var of In/N/EqualNbhd (lhs), quantifier var
  const std::string& nbhd_rhs() const { return node_->name2; }  // EqualNbhd rhs
  const std::vector<Term>& args() const { return node_->args; }
  Fol2Formula left() const { return Fol2Formula(node_->a); }
  Fol2Formula right() const { return Fol2Formula(node_->b); }
  Fol2Formula body() const { return Fol2Formula(node_->a); }

  bool operator==(const Fol2Formula& other) const;

 private:
  struct Node {
    Kind kind;
    Term t1, t2;
    std::string name, name2;
    std::vector<Term> args;
    std::shared_ptr<const Node> a, b;
  };
  explicit Fol2Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> fol2_free_variables(const Fol2Formula& f);  // both sorts
std::set<std::string> fol2_all_variables(const Fol2Formula& f);

}  // namespace cplkit
