"""Finite neighborhood frames: classification, satisfaction, translation,
and algebraic duals. Thin re-export of the compiled module."""

from ._cplkit import (
    CplError,
    Frame,
    Topology,
    accessibility_relation,
    check_correspondence,
    check_topology_pair,
    classify,
    complex_algebra,
    comprehension,
    disjoint_union,
    enumerate_frames,
    enumerate_topologies,
    eval_cpl,
    frame_valid,
    from_topology,
    gt_closure_check,
    is_bounded_morphism,
    is_generated_subframe,
    isomorphic,
    modal_counterexample,
    pair_names,
    quasi_ultraproduct,
    random_frame,
    translate,
    ultrafilter_extension,
    verify_duality,
)

__all__ = [
    "CplError",
    "Frame",
    "Topology",
    "accessibility_relation",
    "check_correspondence",
    "check_topology_pair",
    "classify",
    "complex_algebra",
    "comprehension",
    "disjoint_union",
    "enumerate_frames",
    "enumerate_topologies",
    "eval_cpl",
    "frame_valid",
    "from_topology",
    "gt_closure_check",
    "is_bounded_morphism",
    "is_generated_subframe",
    "isomorphic",
    "modal_counterexample",
    "pair_names",
    "quasi_ultraproduct",
    "random_frame",
    "translate",
    "ultrafilter_extension",
    "verify_duality",
]
