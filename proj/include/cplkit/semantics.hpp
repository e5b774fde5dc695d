#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cplkit/formula.hpp"
#include "cplkit/frame.hpp"

namespace cplkit {

// Variable -> world label. Must cover the free variables of the formula
// under evaluation.
using Assignment = std::map<std::string, std::string>;

// Proposition name -> extension mask.
using Valuation = std::map<std::string, Mask>;

Valuation valuation_from_labels(const NeighborhoodFrame& f,
                                const std::map<std::string, std::vector<std::string>>& v);

// Satisfaction over a frame. The binding modality t[y: φ] holds iff the set
// {v : φ holds with y := v} is a neighborhood of t's world.
bool eval_cpl(const NeighborhoodFrame& f, const CplFormula& phi, const Assignment& rho);

// Modal satisfaction with the neighborhood box clause: extension(φ) ∈ N(w).
// Diamond is expanded to ~[]~ before evaluation.
bool eval_modal_nbhd(const NeighborhoodFrame& f, const Valuation& v, const std::string& w,
                     const ModalFormula& phi);
Mask modal_extension(const NeighborhoodFrame& f, const Valuation& v, const ModalFormula& phi);

// Modal satisfaction with the interior box clause: w ∈ extension(φ)°. Kept
// independent of eval_modal_nbhd; their agreement through from_topology is a
// tested theorem, not a shared code path.
bool eval_modal_top(const FiniteTopology& t, const Valuation& v, const std::string& w,
                    const ModalFormula& phi);
Mask modal_extension_top(const FiniteTopology& t, const Valuation& v, const ModalFormula& phi);

// Deterministic valuation enumeration: propositions in sorted name order, the
// first cycling slowest, each extension counting 0..2^n-1. Stops early and
// returns false when fn returns false.
bool for_each_valuation(const std::vector<std::string>& props, int world_count,
                        const std::function<bool(const Valuation&)>& fn);

struct ModalCounterexample {
  Valuation valuation;
  std::string world;
};

// Validity by exhaustive valuation enumeration: the oracle every
// correspondence check is judged against. Cap: props * worlds ≤ 20 bits.
bool frame_valid(const NeighborhoodFrame& f, const ModalFormula& phi);
bool frame_valid_at(const NeighborhoodFrame& f, const std::string& w, const ModalFormula& phi);
std::optional<ModalCounterexample> find_modal_counterexample(const NeighborhoodFrame& f,
                                                             const ModalFormula& phi);
std::optional<Valuation> find_modal_counterexample_at(const NeighborhoodFrame& f,
                                                      const std::string& w,
                                                      const ModalFormula& phi);

}  // namespace cplkit
