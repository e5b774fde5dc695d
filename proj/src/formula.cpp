#include "cplkit/formula.hpp"

#include <algorithm>

#include "cplkit/frame.hpp"

namespace cplkit {

Signature Signature::from_frame(const NeighborhoodFrame& f) {
  Signature sig;
  for (const auto& [name, ext] : f.predicates()) sig.predicates[name] = 1;
  return sig;
}

namespace {

void check_state_variable(const std::string& name, const char* where) {
  if (name.empty() || is_nbhd_variable(name)) {
    fail(ErrorCode::SortError,
         std::string(where) + ": state variables must start with a lowercase letter, got \"" +
             name + "\"");
  }
}

}  // namespace

CplFormula CplFormula::equal(Term lhs, Term rhs) {
  if (lhs.is_variable()) check_state_variable(lhs.name, "=");
  if (rhs.is_variable()) check_state_variable(rhs.name, "=");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Equal;
  node->t1 = std::move(lhs);
  node->t2 = std::move(rhs);
  return CplFormula(node);
}

CplFormula CplFormula::pred(std::string name, std::vector<Term> args) {
  for (const Term& t : args) {
    if (t.is_variable()) check_state_variable(t.name, "pred");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pred;
  node->name = std::move(name);
  node->args = std::move(args);
  return CplFormula(node);
}

CplFormula CplFormula::negation(CplFormula a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->a = a.node_;
  return CplFormula(node);
}

CplFormula CplFormula::conj(CplFormula a, CplFormula b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->a = a.node_;
  node->b = b.node_;
  return CplFormula(node);
}

CplFormula CplFormula::disj(CplFormula a, CplFormula b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->a = a.node_;
  node->b = b.node_;
  return CplFormula(node);
}

CplFormula CplFormula::implies(CplFormula a, CplFormula b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Implies;
  node->a = a.node_;
  node->b = b.node_;
  return CplFormula(node);
}

CplFormula CplFormula::exists(std::string var, CplFormula body) {
  check_state_variable(var, "exists");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Exists;
  node->name = std::move(var);
  node->a = body.node_;
  return CplFormula(node);
}

CplFormula CplFormula::forall(std::string var, CplFormula body) {
  check_state_variable(var, "forall");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Forall;
  node->name = std::move(var);
  node->a = body.node_;
  return CplFormula(node);
}

CplFormula CplFormula::box(Term subject, std::string var, CplFormula body) {
  if (subject.is_variable()) check_state_variable(subject.name, "box subject");
  check_state_variable(var, "box binder");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Box;
  node->t1 = std::move(subject);
  node->name = std::move(var);
  node->a = body.node_;
  return CplFormula(node);
}

bool CplFormula::operator==(const CplFormula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Equal:
      return lhs() == other.lhs() && rhs() == other.rhs();
    case Kind::Pred:
      return name() == other.name() && args() == other.args();
    case Kind::Not:
      return body() == other.body();
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      return left() == other.left() && right() == other.right();
    case Kind::Exists:
    case Kind::Forall:
      return bound_var() == other.bound_var() && body() == other.body();
    case Kind::Box:
      return subject() == other.subject() && bound_var() == other.bound_var() &&
             body() == other.body();
  }
  return false;
}

namespace {

void collect_free(const CplFormula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f.kind()) {
    case CplFormula::Kind::Equal:
      for (const Term* t : {&f.lhs(), &f.rhs()}) {
        if (t->is_variable() && !bound.count(t->name)) out.insert(t->name);
      }
      return;
    case CplFormula::Kind::Pred:
      for (const Term& t : f.args()) {
        if (t.is_variable() && !bound.count(t.name)) out.insert(t.name);
      }
      return;
    case CplFormula::Kind::Not:
      collect_free(f.body(), bound, out);
      return;
    case CplFormula::Kind::And:
    case CplFormula::Kind::Or:
    case CplFormula::Kind::Implies:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
      return;
    case CplFormula::Kind::Exists:
    case CplFormula::Kind::Forall: {
      bool fresh = bound.insert(f.bound_var()).second;
      collect_free(f.body(), bound, out);
      if (fresh) bound.erase(f.bound_var());
      return;
    }
    case CplFormula::Kind::Box: {
      if (f.subject().is_variable() && !bound.count(f.subject().name)) {
        out.insert(f.subject().name);
      }
      bool fresh = bound.insert(f.bound_var()).second;
      collect_free(f.body(), bound, out);
      if (fresh) bound.erase(f.bound_var());
      return;
    }
  }
}

void collect_all(const CplFormula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case CplFormula::Kind::Equal:
      for (const Term* t : {&f.lhs(), &f.rhs()}) {
        if (t->is_variable()) out.insert(t->name);
      }
      return;
    case CplFormula::Kind::Pred:
      for (const Term& t : f.args()) {
        if (t.is_variable()) out.insert(t.name);
      }
      return;
    case CplFormula::Kind::Not:
      collect_all(f.body(), out);
      return;
    case CplFormula::Kind::And:
    case CplFormula::Kind::Or:
    case CplFormula::Kind::Implies:
      collect_all(f.left(), out);
      collect_all(f.right(), out);
      return;
    case CplFormula::Kind::Exists:
    case CplFormula::Kind::Forall:
      out.insert(f.bound_var());
      collect_all(f.body(), out);
      return;
    case CplFormula::Kind::Box:
      if (f.subject().is_variable()) out.insert(f.subject().name);
      out.insert(f.bound_var());
      collect_all(f.body(), out);
      return;
  }
}

}  // namespace

std::set<std::string> free_variables(const CplFormula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_variables(const CplFormula& f) {
  std::set<std::string> out;
  collect_all(f, out);
  return out;
}

int cpl_depth(const CplFormula& f) {
  switch (f.kind()) {
    case CplFormula::Kind::Equal:
    case CplFormula::Kind::Pred:
      return 1;
    case CplFormula::Kind::Not:
    case CplFormula::Kind::Exists:
    case CplFormula::Kind::Forall:
    case CplFormula::Kind::Box:
      return 1 + cpl_depth(f.body());
    case CplFormula::Kind::And:
    case CplFormula::Kind::Or:
    case CplFormula::Kind::Implies:
      return 1 + std::max(cpl_depth(f.left()), cpl_depth(f.right()));
  }
  return 1;
}

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

Term substitute_term(const Term& t, const std::string& var, const Term& replacement) {
  if (t.is_variable() && t.name == var) return replacement;
  return t;
}

}  // namespace

CplFormula substitute(const CplFormula& f, const std::string& var, const Term& replacement) {
  switch (f.kind()) {
    case CplFormula::Kind::Equal:
      return CplFormula::equal(substitute_term(f.lhs(), var, replacement),
                               substitute_term(f.rhs(), var, replacement));
    case CplFormula::Kind::Pred: {
      std::vector<Term> args;
      for (const Term& t : f.args()) args.push_back(substitute_term(t, var, replacement));
      return CplFormula::pred(f.name(), std::move(args));
    }
    case CplFormula::Kind::Not:
      return CplFormula::negation(substitute(f.body(), var, replacement));
    case CplFormula::Kind::And:
      return CplFormula::conj(substitute(f.left(), var, replacement),
                              substitute(f.right(), var, replacement));
    case CplFormula::Kind::Or:
      return CplFormula::disj(substitute(f.left(), var, replacement),
                              substitute(f.right(), var, replacement));
    case CplFormula::Kind::Implies:
      return CplFormula::implies(substitute(f.left(), var, replacement),
                                 substitute(f.right(), var, replacement));
    case CplFormula::Kind::Exists:
    case CplFormula::Kind::Forall:
    case CplFormula::Kind::Box: {
      Term subject = f.kind() == CplFormula::Kind::Box
                         ? substitute_term(f.subject(), var, replacement)
                         : Term{};
      std::string bound = f.bound_var();
      CplFormula body = f.body();
      if (bound != var) {
        bool capture = replacement.is_variable() && replacement.name == bound &&
                       free_variables(body).count(var) > 0;
        if (capture) {
          std::set<std::string> avoid = all_variables(body);
          avoid.insert(replacement.name);
          avoid.insert(var);
          std::string renamed = fresh_name(bound, avoid);
          body = substitute(body, bound, Term::var(renamed));
          bound = renamed;
        }
        body = substitute(body, var, replacement);
      }
      if (f.kind() == CplFormula::Kind::Exists) return CplFormula::exists(bound, body);
      if (f.kind() == CplFormula::Kind::Forall) return CplFormula::forall(bound, body);
      return CplFormula::box(subject, bound, body);
    }
  }
  return f;
}

ModalFormula ModalFormula::prop(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Prop;
  node->name = std::move(name);
  return ModalFormula(node);
}

ModalFormula ModalFormula::top() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Top;
  return ModalFormula(node);
}

ModalFormula ModalFormula::bottom() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Bottom;
  return ModalFormula(node);
}

ModalFormula ModalFormula::negation(ModalFormula a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->a = a.node_;
  return ModalFormula(node);
}

ModalFormula ModalFormula::conj(ModalFormula a, ModalFormula b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->a = a.node_;
  node->b = b.node_;
  return ModalFormula(node);
}

ModalFormula ModalFormula::disj(ModalFormula a, ModalFormula b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->a = a.node_;
  node->b = b.node_;
  return ModalFormula(node);
}

ModalFormula ModalFormula::implies(ModalFormula a, ModalFormula b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Implies;
  node->a = a.node_;
  node->b = b.node_;
  return ModalFormula(node);
}

ModalFormula ModalFormula::box(ModalFormula a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Box;
  node->a = a.node_;
  return ModalFormula(node);
}

ModalFormula ModalFormula::diamond(ModalFormula a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Diamond;
  node->a = a.node_;
  return ModalFormula(node);
}

bool ModalFormula::operator==(const ModalFormula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Prop:
      return name() == other.name();
    case Kind::Top:
    case Kind::Bottom:
      return true;
    case Kind::Not:
    case Kind::Box:
    case Kind::Diamond:
      return child() == other.child();
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      return left() == other.left() && right() == other.right();
  }
  return false;
}

std::set<std::string> propositions(const ModalFormula& f) {
  switch (f.kind()) {
    case ModalFormula::Kind::Prop:
      return {f.name()};
    case ModalFormula::Kind::Top:
    case ModalFormula::Kind::Bottom:
      return {};
    case ModalFormula::Kind::Not:
    case ModalFormula::Kind::Box:
    case ModalFormula::Kind::Diamond:
      return propositions(f.child());
    default: {
      std::set<std::string> out = propositions(f.left());
      std::set<std::string> rhs = propositions(f.right());
      out.insert(rhs.begin(), rhs.end());
      return out;
    }
  }
}

std::vector<ModalFormula> all_modal_formulas(int depth,
                                             const std::vector<std::string>& props) {
  std::vector<ModalFormula> level;
  for (const auto& p : props) level.push_back(ModalFormula::prop(p));
  for (int d = 2; d <= depth; ++d) {
    // S(d) = atoms, then every top connective over S(d-1); each AST of depth
    // ≤ d appears exactly once, identified by its top construction.
    std::vector<ModalFormula> next;
    for (const auto& p : props) next.push_back(ModalFormula::prop(p));
    for (const auto& f : level) next.push_back(ModalFormula::negation(f));
    for (const auto& f : level) next.push_back(ModalFormula::box(f));
    for (const auto& f : level) next.push_back(ModalFormula::diamond(f));
    for (const auto& f : level) {
      for (const auto& g : level) next.push_back(ModalFormula::conj(f, g));
    }
    for (const auto& f : level) {
      for (const auto& g : level) next.push_back(ModalFormula::disj(f, g));
    }
    for (const auto& f : level) {
      for (const auto& g : level) next.push_back(ModalFormula::implies(f, g));
    }
    level = std::move(next);
  }
  return level;
}

int modal_depth(const ModalFormula& f) {
  switch (f.kind()) {
    case ModalFormula::Kind::Prop:
    case ModalFormula::Kind::Top:
    case ModalFormula::Kind::Bottom:
      return 1;
    case ModalFormula::Kind::Not:
    case ModalFormula::Kind::Box:
    case ModalFormula::Kind::Diamond:
      return 1 + modal_depth(f.child());
    default:
      return 1 + std::max(modal_depth(f.left()), modal_depth(f.right()));
  }
}

bool is_nbhd_variable(const std::string& name) {
  return !name.empty() && name[0] >= 'A' && name[0] <= 'Z';
}

namespace {

void check_fol2_state_term(const Term& t, const char* where) {
  if (t.is_variable() && is_nbhd_variable(t.name)) {
    fail(ErrorCode::SortError, std::string(where) + ": \"" + t.name +
                                   "\" is neighborhood-sorted, expected a state term");
  }
}

void check_fol2_nbhd_var(const std::string& name, const char* where) {
  if (!is_nbhd_variable(name)) {
    fail(ErrorCode::SortError, std::string(where) + ": \"" + name +
                                   "\" is state-sorted, expected a neighborhood variable");
  }
}

}  // namespace

Fol2Formula Fol2Formula::equal_state(Term lhs, Term rhs) {
  check_fol2_state_term(lhs, "=");
  check_fol2_state_term(rhs, "=");
  auto node = std::make_shared<Node>();
  node->kind = Kind::EqualState;
  node->t1 = std::move(lhs);
  node->t2 = std::move(rhs);
  return Fol2Formula(node);
}

Fol2Formula Fol2Formula::equal_nbhd(std::string lhs, std::string rhs) {
  check_fol2_nbhd_var(lhs, "=");
  check_fol2_nbhd_var(rhs, "=");
  auto node = std::make_shared<Node>();
  node->kind = Kind::EqualNbhd;
  node->name = std::move(lhs);
  node->name2 = std::move(rhs);
  return Fol2Formula(node);
}

Fol2Formula Fol2Formula::pred(std::string name, std::vector<Term> args) {
  for (const Term& t : args) check_fol2_state_term(t, "pred");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pred;
  node->name = std::move(name);
  node->args = std::move(args);
  return Fol2Formula(node);
}

Fol2Formula Fol2Formula::in(Term state, std::string nbhd_var) {
  check_fol2_state_term(state, "in");
  check_fol2_nbhd_var(nbhd_var, "in");
  auto node = std::make_shared<Node>();
  node->kind = Kind::In;
  node->t1 = std::move(state);
  node->name = std::move(nbhd_var);
  return Fol2Formula(node);
}

Fol2Formula Fol2Formula::n(Term state, std::string nbhd_var) {
  check_fol2_state_term(state, "N");
  check_fol2_nbhd_var(nbhd_var, "N");
  auto node = std::make_shared<Node>();
  node->kind = Kind::N;
  node->t1 = std::move(state);
  node->name = std::move(nbhd_var);
  return Fol2Formula(node);
}

Fol2Formula Fol2Formula::negation(Fol2Formula a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->a = a.node_;
  return Fol2Formula(node);
}

Fol2Formula Fol2Formula::conj(Fol2Formula a, Fol2Formula b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->a = a.node_;
  node->b = b.node_;
  return Fol2Formula(node);
}

Fol2Formula Fol2Formula::disj(Fol2Formula a, Fol2Formula b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->a = a.node_;
  node->b = b.node_;
  return Fol2Formula(node);
}

Fol2Formula Fol2Formula::implies(Fol2Formula a, Fol2Formula b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Implies;
  node->a = a.node_;
  node->b = b.node_;
  return Fol2Formula(node);
}

Fol2Formula Fol2Formula::iff(Fol2Formula a, Fol2Formula b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Iff;
  node->a = a.node_;
  node->b = b.node_;
  return Fol2Formula(node);
}

Fol2Formula Fol2Formula::exists(std::string var, Fol2Formula body) {
  if (var.empty()) fail(ErrorCode::SortError, "exists: empty variable");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Exists;
  node->name = std::move(var);
  node->a = body.node_;
  return Fol2Formula(node);
}

Fol2Formula Fol2Formula::forall(std::string var, Fol2Formula body) {
  if (var.empty()) fail(ErrorCode::SortError, "forall: empty variable");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Forall;
  node->name = std::move(var);
  node->a = body.node_;
  return Fol2Formula(node);
}

bool Fol2Formula::operator==(const Fol2Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::EqualState:
      return lhs() == other.lhs() && rhs() == other.rhs();
    case Kind::EqualNbhd:
      return name() == other.name() && nbhd_rhs() == other.nbhd_rhs();
    case Kind::Pred:
      return name() == other.name() && args() == other.args();
    case Kind::In:
    case Kind::N:
      return lhs() == other.lhs() && name() == other.name();
    case Kind::Not:
      return body() == other.body();
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      return left() == other.left() && right() == other.right();
    case Kind::Exists:
    case Kind::Forall:
      return name() == other.name() && body() == other.body();
  }
  return false;
}

namespace {

void fol2_collect(const Fol2Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out, bool free_only) {
  auto note_term = [&](const Term& t) {
    if (t.is_variable() && (!free_only || !bound.count(t.name))) out.insert(t.name);
  };
  auto note_var = [&](const std::string& v) {
    if (!free_only || !bound.count(v)) out.insert(v);
  };
  switch (f.kind()) {
    case Fol2Formula::Kind::EqualState:
      note_term(f.lhs());
      note_term(f.rhs());
      return;
    case Fol2Formula::Kind::EqualNbhd:
      note_var(f.name());
      note_var(f.nbhd_rhs());
      return;
    case Fol2Formula::Kind::Pred:
      for (const Term& t : f.args()) note_term(t);
      return;
    case Fol2Formula::Kind::In:
    case Fol2Formula::Kind::N:
      note_term(f.lhs());
      note_var(f.name());
      return;
    case Fol2Formula::Kind::Not:
      fol2_collect(f.body(), bound, out, free_only);
      return;
    case Fol2Formula::Kind::And:
    case Fol2Formula::Kind::Or:
    case Fol2Formula::Kind::Implies:
    case Fol2Formula::Kind::Iff:
      fol2_collect(f.left(), bound, out, free_only);
      fol2_collect(f.right(), bound, out, free_only);
      return;
    case Fol2Formula::Kind::Exists:
    case Fol2Formula::Kind::Forall: {
      if (!free_only) out.insert(f.name());
      bool fresh = bound.insert(f.name()).second;
      fol2_collect(f.body(), bound, out, free_only);
      if (fresh) bound.erase(f.name());
      return;
    }
  }
}

}  // namespace

std::set<std::string> fol2_free_variables(const Fol2Formula& f) {
  std::set<std::string> bound, out;
  fol2_collect(f, bound, out, true);
  return out;
}

std::set<std::string> fol2_all_variables(const Fol2Formula& f) {
  std::set<std::string> bound, out;
  fol2_collect(f, bound, out, false);
  return out;
}

}  // namespace cplkit
