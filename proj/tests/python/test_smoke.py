"""End-to-end smoke tests for the Python bindings."""

import json
import os

import pytest

import cplkit

FIXTURES = os.environ.get("CPLKIT_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "fixtures"))


def load(name):
    with open(os.path.join(FIXTURES, name), encoding="utf-8") as fh:
        return fh.read()


def test_classify_fixture():
    f = cplkit.Frame.from_json(load("f1.json"))
    assert cplkit.classify(f) == ["monotonic", "quasi-filter", "augmented-quasi-filter"]


def test_eval_and_assignment():
    f = cplkit.Frame.from_json(load("f2.json"))
    assert cplkit.eval_cpl(f, "forall x. x[y: y = y]")
    assert not cplkit.eval_cpl(f, "x[y: ~(y[z: ~(z = x)])]", {"x": "a"})
    assert cplkit.eval_cpl(f, "x[y: ~(y[z: ~(z = x)])]", {"x": "b"})


def test_modal_validity_and_counterexample():
    f = cplkit.Frame.from_json(load("f2.json"))
    assert not cplkit.frame_valid(f, "[]p -> p")
    ce = cplkit.modal_counterexample(f, "[]p -> p")
    assert ce == {"world": "a", "valuation": {"p": ["b"]}}
    assert cplkit.modal_counterexample(f, "p -> p") is None


def test_translation_shape():
    out = cplkit.translate("x[y: y = y] & x[z: z = x]")
    assert out.startswith("(and (exists U1 ")
    assert "(N x U1)" in out and "(N x U2)" in out
    comp = cplkit.comprehension("y = y", "y")
    assert comp.startswith("(exists U ")


def test_ultrafilter_extension_is_identity_here():
    f = cplkit.Frame.from_json(load("f2.json"))
    assert cplkit.ultrafilter_extension(f) == f
    assert cplkit.isomorphic(cplkit.ultrafilter_extension(f), f)


def test_complex_algebra_box_table():
    f = cplkit.Frame.from_json(load("f1.json"))
    dump = json.loads(cplkit.complex_algebra(f))
    assert dump == {"atoms": ["a", "b"], "box": {"": "", "a": "a", "b": "", "ab": "a"}}


def test_duality_report():
    f1 = cplkit.Frame.from_json(load("f1.json"))
    f3 = cplkit.Frame.from_json(load("f3.json"))
    identity = cplkit.verify_duality(f1, f1, {"a": "a", "b": "b"})
    assert identity["bounded"] and identity["algebra_hom"] and identity["agree"]
    collapse = cplkit.verify_duality(f1, f3, {"a": "a", "b": "a"})
    assert not collapse["bounded"] and not collapse["box_preserved"] and collapse["agree"]
    assert not cplkit.is_bounded_morphism(f1, f3, {"a": "a", "b": "a"})


def test_constructions_round_trip():
    f1 = cplkit.Frame.from_json(load("f1.json"))
    f2 = cplkit.Frame.from_json(load("f2.json"))
    union = cplkit.disjoint_union([f1, f2])
    assert len(union) == 4
    qup = cplkit.quasi_ultraproduct([f1, f2], 1)
    assert cplkit.isomorphic(qup, f2)
    sub = cplkit.Frame.from_json(load("f1b.json"))
    assert cplkit.is_generated_subframe(sub, f1)


def test_topology_bridge():
    t = cplkit.Topology.from_json(load("sierpinski.json"))
    assert not t.is_discrete()
    # check_topology_pair reports sentence-vs-preorder agreement, so both hold.
    assert cplkit.check_topology_pair(t, "T0")
    assert cplkit.check_topology_pair(t, "T1")
    f = cplkit.from_topology(t)
    separated = "forall z. forall w. (~(z[y: ~(y = w)]) -> w = z)"
    assert not cplkit.eval_cpl(f, separated)
    assert cplkit.frame_valid(f, "[]p -> p")
    assert cplkit.accessibility_relation(f) == [["a"], ["a", "b"]]


def test_enumeration_and_correspondence():
    frames = cplkit.enumerate_frames(2)
    assert len(frames) == 36
    for f in frames:
        report = cplkit.check_correspondence(f, "B")
        assert report["ok"], report
    report = cplkit.gt_closure_check(frames, ["[]p -> p"])
    assert report["passed"]
    names = [c["name"] for c in report["conditions"]]
    assert names == [
        "disjoint-unions",
        "bounded-morphic-images",
        "generated-subframes",
        "reflects-ultrafilter-extensions",
    ]


def test_random_frame_determinism_and_errors():
    a = cplkit.random_frame(3, seed=7, target="augmented-quasi-filter")
    b = cplkit.random_frame(3, seed=7, target="augmented-quasi-filter")
    assert a == b and "augmented-quasi-filter" in cplkit.classify(a)
    with pytest.raises(cplkit.CplError):
        cplkit.Frame.from_json("{not json")
    with pytest.raises(cplkit.CplError):
        cplkit.eval_cpl(cplkit.Frame.from_json(load("f3.json")), "x = x")
