#include "cplkit/translation.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "cplkit/def_algebra.hpp"

namespace cplkit {

TwoSortedStructure TwoSortedStructure::make(NeighborhoodFrame f, std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  if (!sets.empty() && sets.back() > f.full_mask()) {
    fail(ErrorCode::NotASubset, "neighborhood-sort element is not a subset of the worlds");
  }
  for (int w = 0; w < f.size(); ++w) {
    for (Mask u : f.family(w)) {
      if (!std::binary_search(sets.begin(), sets.end(), u)) {
        fail(ErrorCode::UsageError,
             "largeness violated: a neighborhood of \"" + f.label(w) + "\" is not listed");
      }
    }
  }
  TwoSortedStructure m;
  m.frame_ = std::move(f);
  m.sets_ = std::move(sets);
  return m;
}

bool TwoSortedStructure::has_set(Mask m) const {
  return std::binary_search(sets_.begin(), sets_.end(), m);
}

TwoSortedStructure full_powerset_structure(const NeighborhoodFrame& f) {
  std::vector<Mask> sets;
  sets.reserve(f.subset_count());
  for (Mask m = 0; m < f.subset_count(); ++m) sets.push_back(m);
  return TwoSortedStructure::make(f, std::move(sets));
}

TwoSortedStructure def_closed_structure(const NeighborhoodFrame& f) {
  return TwoSortedStructure::make(f, build_def_algebra(f, f.worlds()).carrier());
}

namespace {

Fol2Formula translate_rec(const CplFormula& phi, int& counter) {
  switch (phi.kind()) {
    case CplFormula::Kind::Equal:
      return Fol2Formula::equal_state(phi.lhs(), phi.rhs());
    case CplFormula::Kind::Pred:
      return Fol2Formula::pred(phi.name(), phi.args());
    case CplFormula::Kind::Not:
      return Fol2Formula::negation(translate_rec(phi.body(), counter));
    // The left recursion must be sequenced before the right one, or the
    // argument evaluation order would scramble the variable numbering.
    case CplFormula::Kind::And: {
      Fol2Formula l = translate_rec(phi.left(), counter);
      return Fol2Formula::conj(std::move(l), translate_rec(phi.right(), counter));
    }
    case CplFormula::Kind::Or: {
      Fol2Formula l = translate_rec(phi.left(), counter);
      return Fol2Formula::disj(std::move(l), translate_rec(phi.right(), counter));
    }
    case CplFormula::Kind::Implies: {
      Fol2Formula l = translate_rec(phi.left(), counter);
      return Fol2Formula::implies(std::move(l), translate_rec(phi.right(), counter));
    }
    case CplFormula::Kind::Exists:
      return Fol2Formula::exists(phi.bound_var(), translate_rec(phi.body(), counter));
    case CplFormula::Kind::Forall:
      return Fol2Formula::forall(phi.bound_var(), translate_rec(phi.body(), counter));
    case CplFormula::Kind::Box: {
      Fol2Formula body = translate_rec(phi.body(), counter);
      std::string u = "U" + std::to_string(++counter);  // inner boxes numbered first
      Fol2Formula member = Fol2Formula::in(Term::var(phi.bound_var()), u);
      Fol2Formula defines = Fol2Formula::forall(phi.bound_var(),
                                                Fol2Formula::iff(member, body));
      Fol2Formula named = Fol2Formula::n(phi.subject(), u);
      return Fol2Formula::exists(u, Fol2Formula::conj(defines, named));
    }
  }
  fail(ErrorCode::UsageError, "unreachable formula kind");
}

struct Fol2Eval {
  const TwoSortedStructure& m;
  std::map<std::string, int> states;  // world index
  std::map<std::string, Mask> sets;

  int world_of(const Term& t) {
    if (t.is_variable()) {
      auto it = states.find(t.name);
      if (it == states.end()) {
        fail(ErrorCode::UnboundVariable, "unbound state variable \"" + t.name + "\"");
      }
      return it->second;
    }
    return m.frame().require_world(t.name);
  }

  Mask set_of(const std::string& name) {
    auto it = sets.find(name);
    if (it == sets.end()) {
      fail(ErrorCode::UnboundVariable, "unbound neighborhood variable \"" + name + "\"");
    }
    return it->second;
  }

  bool eval(const Fol2Formula& phi) {
    switch (phi.kind()) {
      case Fol2Formula::Kind::EqualState:
        return world_of(phi.lhs()) == world_of(phi.rhs());
      case Fol2Formula::Kind::EqualNbhd:
        return set_of(phi.name()) == set_of(phi.nbhd_rhs());
      case Fol2Formula::Kind::Pred: {
        if (phi.args().size() != 1) {
          fail(ErrorCode::SortError, "predicate \"" + phi.name() + "\" must be unary here");
        }
        return (m.frame().predicate_extension(phi.name()) >> world_of(phi.args()[0])) & 1;
      }
      case Fol2Formula::Kind::In:
        return (set_of(phi.name()) >> world_of(phi.lhs())) & 1;
      case Fol2Formula::Kind::N:
        return m.frame().neighborhood_contains(world_of(phi.lhs()), set_of(phi.name()));
      case Fol2Formula::Kind::Not:
        return !eval(phi.body());
      case Fol2Formula::Kind::And:
        return eval(phi.left()) && eval(phi.right());
      case Fol2Formula::Kind::Or:
        return eval(phi.left()) || eval(phi.right());
      case Fol2Formula::Kind::Implies:
        return !eval(phi.left()) || eval(phi.right());
      case Fol2Formula::Kind::Iff:
        return eval(phi.left()) == eval(phi.right());
      case Fol2Formula::Kind::Exists:
      case Fol2Formula::Kind::Forall: {
        bool ex = phi.kind() == Fol2Formula::Kind::Exists;
        if (is_nbhd_variable(phi.name())) {
          auto old = stash(sets, phi.name());
          for (Mask s : m.sets()) {
            sets[phi.name()] = s;
            if (eval(phi.body()) == ex) {
              unstash(sets, phi.name(), old);
              return ex;
            }
          }
          unstash(sets, phi.name(), old);
          return !ex;
        }
        auto old = stash(states, phi.name());
        for (int w = 0; w < m.frame().size(); ++w) {
          states[phi.name()] = w;
          if (eval(phi.body()) == ex) {
            unstash(states, phi.name(), old);
            return ex;
          }
        }
        unstash(states, phi.name(), old);
        return !ex;
      }
    }
    return false;
  }

  template <typename M>
  static std::optional<typename M::mapped_type> stash(M& env, const std::string& key) {
    auto it = env.find(key);
    if (it == env.end()) return std::nullopt;
    return it->second;
  }

  template <typename M, typename V>
  static void unstash(M& env, const std::string& key, const std::optional<V>& old) {
    if (old) env[key] = *old;
    else env.erase(key);
  }
};

}  // namespace

Fol2Formula translate2(const CplFormula& phi) {
  int counter = 0;
  return translate_rec(phi, counter);
}

bool eval_fol2(const TwoSortedStructure& m, const Fol2Formula& phi,
               const TwoSortedAssignment& rho) {
  Fol2Eval ev{m, {}, {}};
  for (const auto& [var, label] : rho.states) {
    ev.states[var] = m.frame().require_world(label);
  }
  for (const auto& [var, mask] : rho.sets) {
    if (!m.has_set(mask)) {
      fail(ErrorCode::SortError, "assigned set is not a neighborhood-sort element");
    }
    ev.sets[var] = mask;
  }
  return ev.eval(phi);
}

bool check_translation_equivalence(const NeighborhoodFrame& f, const CplFormula& phi,
                                   const Assignment& rho) {
  bool direct = eval_cpl(f, phi, rho);
  bool translated = eval_fol2(full_powerset_structure(f), translate2(phi), {rho, {}});
  return direct == translated;
}

Fol2Formula comprehension_instance(const CplFormula& phi, const std::string& var) {
  Fol2Formula body = translate2(phi);
  std::set<std::string> used = fol2_all_variables(body);
  std::string u = "U";
  for (int i = 0; used.count(u); ++i) u = "U" + std::to_string(i);
  Fol2Formula inner = Fol2Formula::forall(
      var, Fol2Formula::iff(body, Fol2Formula::in(Term::var(var), u)));
  Fol2Formula out = Fol2Formula::exists(u, inner);
  std::set<std::string> free = free_variables(phi);
  free.erase(var);
  for (auto it = free.rbegin(); it != free.rend(); ++it) {
    out = Fol2Formula::forall(*it, out);
  }
  return out;
}

}  // namespace cplkit
