#include "cplkit/semantics.hpp"

#include <algorithm>

#include "cplkit/caps.hpp"

namespace cplkit {

Valuation valuation_from_labels(const NeighborhoodFrame& f,
                                const std::map<std::string, std::vector<std::string>>& v) {
  Valuation out;
  for (const auto& [name, labels] : v) out[name] = f.mask_of(labels);
  return out;
}

namespace {

struct CplEval {
  const NeighborhoodFrame& f;
  std::map<std::string, int> env;

  int world_of(const Term& t) {
    if (t.is_variable()) {
      auto it = env.find(t.name);
      if (it == env.end()) fail(ErrorCode::UnboundVariable, "unbound variable \"" + t.name + "\"");
      return it->second;
    }
    return f.require_world(t.name);
  }

  bool eval(const CplFormula& phi) {
    switch (phi.kind()) {
      case CplFormula::Kind::Equal:
        return world_of(phi.lhs()) == world_of(phi.rhs());
      case CplFormula::Kind::Pred: {
        if (phi.args().size() != 1) {
          fail(ErrorCode::SortError, "predicate \"" + phi.name() + "\" must be unary here");
        }
        Mask ext = f.predicate_extension(phi.name());
        return (ext >> world_of(phi.args()[0])) & 1;
      }
      case CplFormula::Kind::Not:
        return !eval(phi.body());
      case CplFormula::Kind::And:
        return eval(phi.left()) && eval(phi.right());
      case CplFormula::Kind::Or:
        return eval(phi.left()) || eval(phi.right());
      case CplFormula::Kind::Implies:
        return !eval(phi.left()) || eval(phi.right());
      case CplFormula::Kind::Exists:
      case CplFormula::Kind::Forall: {
        bool ex = phi.kind() == CplFormula::Kind::Exists;
        auto saved = env.find(phi.bound_var());
        std::optional<int> old;
        if (saved != env.end()) old = saved->second;
        for (int v = 0; v < f.size(); ++v) {
          env[phi.bound_var()] = v;
          bool r = eval(phi.body());
          if (r == ex) {
            restore(phi.bound_var(), old);
            return ex;
          }
        }
        restore(phi.bound_var(), old);
        return !ex;
      }
      case CplFormula::Kind::Box: {
        int w = world_of(phi.subject());
        auto saved = env.find(phi.bound_var());
        std::optional<int> old;
        if (saved != env.end()) old = saved->second;
        Mask ext = 0;
        for (int v = 0; v < f.size(); ++v) {
          env[phi.bound_var()] = v;
          if (eval(phi.body())) ext |= Mask(1) << v;
        }
        restore(phi.bound_var(), old);
        return f.neighborhood_contains(w, ext);
      }
    }
    return false;
  }

  void restore(const std::string& var, const std::optional<int>& old) {
    if (old) env[var] = *old;
    else env.erase(var);
  }
};

}  // namespace

bool eval_cpl(const NeighborhoodFrame& f, const CplFormula& phi, const Assignment& rho) {
  CplEval ev{f, {}};
  for (const auto& [var, label] : rho) ev.env[var] = f.require_world(label);
  return ev.eval(phi);
}

namespace {

Mask prop_extension(const Valuation& v, const std::string& name) {
  auto it = v.find(name);
  if (it == v.end()) fail(ErrorCode::UnknownProposition, "unknown proposition \"" + name + "\"");
  return it->second;
}

// One recursion, parameterized on the box clause: set -> set of satisfying
// worlds. Diamond runs through the same clause as ~[]~.
Mask extension_with_box(const ModalFormula& phi, const Valuation& v, Mask full,
                        const std::function<Mask(Mask)>& box) {
  auto rec = [&](auto&& self, const ModalFormula& g) -> Mask {
    switch (g.kind()) {
      case ModalFormula::Kind::Prop:
        return prop_extension(v, g.name()) & full;
      case ModalFormula::Kind::Top:
        return full;
      case ModalFormula::Kind::Bottom:
        return 0;
      case ModalFormula::Kind::Not:
        return full & ~self(self, g.child());
      case ModalFormula::Kind::And:
        return self(self, g.left()) & self(self, g.right());
      case ModalFormula::Kind::Or:
        return self(self, g.left()) | self(self, g.right());
      case ModalFormula::Kind::Implies:
        return (full & ~self(self, g.left())) | self(self, g.right());
      case ModalFormula::Kind::Box:
        return box(self(self, g.child()));
      case ModalFormula::Kind::Diamond:
        return full & ~box(full & ~self(self, g.child()));
    }
    return 0;
  };
  return rec(rec, phi);
}

}  // namespace

Mask modal_extension(const NeighborhoodFrame& f, const Valuation& v, const ModalFormula& phi) {
  return extension_with_box(phi, v, f.full_mask(), [&](Mask x) { return box_set(f, x); });
}

bool eval_modal_nbhd(const NeighborhoodFrame& f, const Valuation& v, const std::string& w,
                     const ModalFormula& phi) {
  return (modal_extension(f, v, phi) >> f.require_world(w)) & 1;
}

Mask modal_extension_top(const FiniteTopology& t, const Valuation& v, const ModalFormula& phi) {
  return extension_with_box(phi, v, t.full_mask(), [&](Mask x) { return t.interior(x); });
}

bool eval_modal_top(const FiniteTopology& t, const Valuation& v, const std::string& w,
                    const ModalFormula& phi) {
  return (modal_extension_top(t, v, phi) >> t.require_point(w)) & 1;
}

bool for_each_valuation(const std::vector<std::string>& props, int world_count,
                        const std::function<bool(const Valuation&)>& fn) {
  std::vector<std::string> names = props;
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (static_cast<int>(names.size()) * world_count > kMaxValuationBits) {
    fail(ErrorCode::SizeCapExceeded,
         "valuation space needs " + std::to_string(names.size() * world_count) +
             " bits, cap is " + std::to_string(kMaxValuationBits));
  }
  Mask full = world_count >= 1 ? (Mask(1) << world_count) - 1 : 0;
  Valuation v;
  for (const auto& name : names) v[name] = 0;
  // Odometer over extensions, the lexicographically first proposition
  // cycling slowest.
  while (true) {
    if (!fn(v)) return false;
    int i = static_cast<int>(names.size()) - 1;
    for (; i >= 0; --i) {
      Mask& m = v[names[i]];
      if (m < full) {
        ++m;
        break;
      }
      m = 0;
    }
    if (i < 0) return true;
  }
}

bool frame_valid(const NeighborhoodFrame& f, const ModalFormula& phi) {
  return !find_modal_counterexample(f, phi).has_value();
}

bool frame_valid_at(const NeighborhoodFrame& f, const std::string& w, const ModalFormula& phi) {
  return !find_modal_counterexample_at(f, w, phi).has_value();
}

std::optional<ModalCounterexample> find_modal_counterexample(const NeighborhoodFrame& f,
                                                             const ModalFormula& phi) {
  std::set<std::string> props = propositions(phi);
  std::optional<ModalCounterexample> out;
  for_each_valuation({props.begin(), props.end()}, f.size(), [&](const Valuation& v) {
    Mask ext = modal_extension(f, v, phi);
    if (ext != f.full_mask()) {
      for (int w = 0; w < f.size(); ++w) {
        if (!((ext >> w) & 1)) {
          out = ModalCounterexample{v, f.label(w)};
          return false;
        }
      }
    }
    return true;
  });
  return out;
}

std::optional<Valuation> find_modal_counterexample_at(const NeighborhoodFrame& f,
                                                      const std::string& w,
                                                      const ModalFormula& phi) {
  int wi = f.require_world(w);
  std::set<std::string> props = propositions(phi);
  std::optional<Valuation> out;
  for_each_valuation({props.begin(), props.end()}, f.size(), [&](const Valuation& v) {
    if (!((modal_extension(f, v, phi) >> wi) & 1)) {
      out = v;
      return false;
    }
    return true;
  });
  return out;
}

}  // namespace cplkit
