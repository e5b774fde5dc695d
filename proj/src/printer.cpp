#include "cplkit/printer.hpp"

namespace cplkit {

std::string print_term(const Term& t) {
  return t.is_variable() ? t.name : "'" + t.name;
}

namespace {

// Precedence: -> is 1 (right-associative), | is 2, & is 3, self-delimiting
// nodes are 4. Quantifiers are 0: bare only where nothing can leak into their
// maximally-rightward scope.
int cpl_prec(const CplFormula& f) {
  switch (f.kind()) {
    case CplFormula::Kind::Implies: return 1;
    case CplFormula::Kind::Or: return 2;
    case CplFormula::Kind::And: return 3;
    case CplFormula::Kind::Exists:
    case CplFormula::Kind::Forall: return 0;
    default: return 4;
  }
}

bool cpl_is_binary(const CplFormula& f) {
  switch (f.kind()) {
    case CplFormula::Kind::And:
    case CplFormula::Kind::Or:
    case CplFormula::Kind::Implies: return true;
    default: return false;
  }
}

std::string cpl_render(const CplFormula& f, int required, bool full) {
  auto child = [&](const CplFormula& c, int req) {
    return cpl_render(c, full ? 4 : req, full);
  };
  std::string out;
  switch (f.kind()) {
    case CplFormula::Kind::Equal:
      out = print_term(f.lhs()) + " = " + print_term(f.rhs());
      break;
    case CplFormula::Kind::Pred: {
      out = f.name() + "(";
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += ", ";
        out += print_term(f.args()[i]);
      }
      out += ")";
      break;
    }
    case CplFormula::Kind::Not:
      return "~(" + cpl_render(f.body(), 0, full) + ")";
    case CplFormula::Kind::And:
      out = child(f.left(), 3) + " & " + child(f.right(), 4);
      break;
    case CplFormula::Kind::Or:
      out = child(f.left(), 2) + " | " + child(f.right(), 3);
      break;
    case CplFormula::Kind::Implies:
      out = child(f.left(), 2) + " -> " + child(f.right(), 1);
      break;
    case CplFormula::Kind::Exists:
    case CplFormula::Kind::Forall: {
      std::string body = cpl_is_binary(f.body())
                             ? "(" + cpl_render(f.body(), 0, full) + ")"
                             : cpl_render(f.body(), 0, full);
      out = (f.kind() == CplFormula::Kind::Exists ? "exists " : "forall ") +
            f.bound_var() + ". " + body;
      break;
    }
    case CplFormula::Kind::Box:
      return print_term(f.subject()) + "[" + f.bound_var() + ": " +
             cpl_render(f.body(), 0, full) + "]";
  }
  if (cpl_prec(f) < required) return "(" + out + ")";
  return out;
}

int modal_prec(const ModalFormula& f) {
  switch (f.kind()) {
    case ModalFormula::Kind::Implies: return 1;
    case ModalFormula::Kind::Or: return 2;
    case ModalFormula::Kind::And: return 3;
    case ModalFormula::Kind::Not:
    case ModalFormula::Kind::Box:
    case ModalFormula::Kind::Diamond: return 4;
    default: return 5;
  }
}

bool modal_is_literal(const ModalFormula& f) {
  switch (f.kind()) {
    case ModalFormula::Kind::Prop:
    case ModalFormula::Kind::Top:
    case ModalFormula::Kind::Bottom: return true;
    default: return false;
  }
}

bool modal_is_modality(const ModalFormula& f) {
  return f.kind() == ModalFormula::Kind::Box || f.kind() == ModalFormula::Kind::Diamond;
}

std::string modal_render(const ModalFormula& f, int required, bool full) {
  auto child = [&](const ModalFormula& c, int req) {
    return modal_render(c, full ? 4 : req, full);
  };
  std::string out;
  switch (f.kind()) {
    case ModalFormula::Kind::Prop:
      out = f.name();
      break;
    case ModalFormula::Kind::Top:
      out = "true";
      break;
    case ModalFormula::Kind::Bottom:
      out = "false";
      break;
    case ModalFormula::Kind::Not: {
      bool bare = modal_is_literal(f.child()) && !full;
      return "~" + (bare ? modal_render(f.child(), 5, full)
                         : "(" + modal_render(f.child(), 0, full) + ")");
    }
    case ModalFormula::Kind::Box:
    case ModalFormula::Kind::Diamond: {
      std::string op = f.kind() == ModalFormula::Kind::Box ? "[]" : "<>";
      bool bare = (modal_is_literal(f.child()) || modal_is_modality(f.child())) && !full;
      return op + (bare ? modal_render(f.child(), 4, full)
                        : "(" + modal_render(f.child(), 0, full) + ")");
    }
    case ModalFormula::Kind::And:
      out = child(f.left(), 3) + " & " + child(f.right(), 4);
      break;
    case ModalFormula::Kind::Or:
      out = child(f.left(), 2) + " | " + child(f.right(), 3);
      break;
    case ModalFormula::Kind::Implies:
      out = child(f.left(), 2) + " -> " + child(f.right(), 1);
      break;
  }
  if (modal_prec(f) < required) return "(" + out + ")";
  return out;
}

}  // namespace

std::string print_cpl(const CplFormula& f, bool full_parens) {
  return cpl_render(f, 0, full_parens);
}

std::string print_modal(const ModalFormula& f, bool full_parens) {
  return modal_render(f, 0, full_parens);
}

std::string print_fol2(const Fol2Formula& f) {
  switch (f.kind()) {
    case Fol2Formula::Kind::EqualState:
      return "(= " + print_term(f.lhs()) + " " + print_term(f.rhs()) + ")";
    case Fol2Formula::Kind::EqualNbhd:
      return "(= " + f.name() + " " + f.nbhd_rhs() + ")";
    case Fol2Formula::Kind::Pred: {
      std::string out = "(pred " + f.name();
      for (const Term& t : f.args()) out += " " + print_term(t);
      return out + ")";
    }
    case Fol2Formula::Kind::In:
      return "(in " + print_term(f.lhs()) + " " + f.name() + ")";
    case Fol2Formula::Kind::N:
      return "(N " + print_term(f.lhs()) + " " + f.name() + ")";
    case Fol2Formula::Kind::Not:
      return "(not " + print_fol2(f.body()) + ")";
    case Fol2Formula::Kind::And:
      return "(and " + print_fol2(f.left()) + " " + print_fol2(f.right()) + ")";
    case Fol2Formula::Kind::Or:
      return "(or " + print_fol2(f.left()) + " " + print_fol2(f.right()) + ")";
    case Fol2Formula::Kind::Implies:
      return "(implies " + print_fol2(f.left()) + " " + print_fol2(f.right()) + ")";
    case Fol2Formula::Kind::Iff:
      return "(iff " + print_fol2(f.left()) + " " + print_fol2(f.right()) + ")";
    case Fol2Formula::Kind::Exists:
      return "(exists " + f.name() + " " + print_fol2(f.body()) + ")";
    case Fol2Formula::Kind::Forall:
      return "(forall " + f.name() + " " + print_fol2(f.body()) + ")";
  }
  return {};
}

}  // namespace cplkit
