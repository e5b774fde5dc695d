// Python bindings for the main operations. Formulas cross the boundary as
// text and are parsed against the frame's signature; structured results come
// back as plain dicts and lists so the Python side needs no mirror types.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cplkit/bam.hpp"
#include "cplkit/correspondence.hpp"
#include "cplkit/errors.hpp"
#include "cplkit/formula.hpp"
#include "cplkit/frame.hpp"
#include "cplkit/frame_gen.hpp"
#include "cplkit/frame_io.hpp"
#include "cplkit/parser.hpp"
#include "cplkit/printer.hpp"
#include "cplkit/semantics.hpp"
#include "cplkit/translation.hpp"

namespace py = pybind11;

namespace {

using namespace cplkit;

std::vector<std::string> class_names(const NeighborhoodFrame& f) {
  std::vector<std::string> out;
  for (FrameClass c : classify(f)) out.push_back(to_string(c));
  return out;
}

py::dict valuation_dict(const NeighborhoodFrame& f, const Valuation& v) {
  py::dict out;
  for (const auto& [name, mask] : v) out[py::str(name)] = f.mask_labels(mask);
  return out;
}

WorldMap make_map(const NeighborhoodFrame& domain, const NeighborhoodFrame& codomain,
                  const std::map<std::string, std::string>& assoc) {
  return WorldMap::make(domain, codomain, assoc);
}

std::optional<FrameClass> class_from_name(const std::optional<std::string>& name) {
  if (!name) return std::nullopt;
  std::optional<FrameClass> c = frame_class_from_string(*name);
  if (!c) fail(ErrorCode::UsageError, "unknown frame class \"" + *name + "\"");
  return c;
}

py::dict condition_dict(const ClosureCondition& c) {
  py::dict out;
  out["name"] = c.name;
  out["passed"] = c.passed;
  out["checked"] = c.checked;
  out["exhaustive"] = c.exhaustive;
  out["note"] = c.note;
  if (c.witness) {
    py::dict w;
    std::vector<NeighborhoodFrame> inputs = c.witness->inputs;
    w["inputs"] = inputs;
    w["produced"] = c.witness->produced;
    out["witness"] = w;
  } else {
    out["witness"] = py::none();
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_cplkit, m) {
  m.doc() = "finite neighborhood frames: classification, satisfaction, translation, and "
            "algebraic duals";

  py::register_exception<Error>(m, "CplError");

  py::class_<NeighborhoodFrame>(m, "Frame")
      .def_static("from_json", &parse_frame_json, py::arg("text"))
      .def("to_json", &frame_to_json)
      .def_property_readonly("worlds", &NeighborhoodFrame::worlds)
      .def("neighborhoods", [](const NeighborhoodFrame& f, const std::string& world) {
        std::vector<std::vector<std::string>> out;
        for (Mask u : f.family(f.require_world(world))) out.push_back(f.mask_labels(u));
        return out;
      })
      .def("__len__", &NeighborhoodFrame::size)
      .def("__eq__",
           [](const NeighborhoodFrame& a, const NeighborhoodFrame& b) { return a == b; })
      .def("__repr__", [](const NeighborhoodFrame& f) {
        std::string out = "Frame(worlds=[";
        for (int w = 0; w < f.size(); ++w) out += (w ? ", " : "") + f.label(w);
        return out + "])";
      });

  py::class_<FiniteTopology>(m, "Topology")
      .def_static("from_json", &parse_topology_json, py::arg("text"))
      .def("to_json", &topology_to_json)
      .def_property_readonly("points", &FiniteTopology::points)
      .def("is_discrete", &FiniteTopology::is_discrete)
      .def("__len__", &FiniteTopology::size)
      .def("__repr__", [](const FiniteTopology& t) {
        std::string out = "Topology(points=[";
        for (int p = 0; p < t.size(); ++p) out += (p ? ", " : "") + t.label(p);
        return out + "])";
      });

  m.def("classify", &class_names, py::arg("frame"),
        "closure classes of the frame, as a list of names");

  m.def(
      "eval_cpl",
      [](const NeighborhoodFrame& f, const std::string& formula, const Assignment& assignment) {
        return eval_cpl(f, parse_cpl(formula, Signature::from_frame(f)), assignment);
      },
      py::arg("frame"), py::arg("formula"), py::arg("assignment") = Assignment{},
      "truth of a predicate-logic formula under a free-variable assignment");

  m.def(
      "frame_valid",
      [](const NeighborhoodFrame& f, const std::string& formula) {
        return frame_valid(f, parse_modal(formula));
      },
      py::arg("frame"), py::arg("formula"),
      "modal validity by exhaustive valuation enumeration");

  m.def(
      "modal_counterexample",
      [](const NeighborhoodFrame& f, const std::string& formula) -> py::object {
        std::optional<ModalCounterexample> ce =
            find_modal_counterexample(f, parse_modal(formula));
        if (!ce) return py::none();
        py::dict out;
        out["world"] = ce->world;
        out["valuation"] = valuation_dict(f, ce->valuation);
        return out;
      },
      py::arg("frame"), py::arg("formula"),
      "a falsifying world and valuation, or None when the formula is valid");

  m.def(
      "translate",
      [](const std::string& formula) { return print_fol2(translate2(parse_cpl(formula))); },
      py::arg("formula"),
      "two-sorted translation of a predicate-logic formula, as an s-expression");

  m.def(
      "comprehension",
      [](const std::string& formula, const std::string& var) {
        return print_fol2(comprehension_instance(parse_cpl(formula), var));
      },
      py::arg("formula"), py::arg("var"),
      "the comprehension sentence asserting the formula's extension over var is a listed set");

  m.def("ultrafilter_extension", &ultrafilter_extension, py::arg("frame"));

  m.def(
      "complex_algebra",
      [](const NeighborhoodFrame& f) { return bam_to_json(complex_algebra(f)); },
      py::arg("frame"), "the frame's algebra of subsets with its box table, as JSON text");

  m.def(
      "is_bounded_morphism",
      [](const NeighborhoodFrame& domain, const NeighborhoodFrame& codomain,
         const std::map<std::string, std::string>& map) {
        return is_bounded_morphism(make_map(domain, codomain, map));
      },
      py::arg("domain"), py::arg("codomain"), py::arg("map"));

  m.def(
      "verify_duality",
      [](const NeighborhoodFrame& domain, const NeighborhoodFrame& codomain,
         const std::map<std::string, std::string>& map) {
        DualityReport r = verify_duality(make_map(domain, codomain, map));
        py::dict out;
        out["bounded"] = r.bounded;
        out["meet_preserved"] = r.meet_preserved;
        out["complement_preserved"] = r.complement_preserved;
        out["box_preserved"] = r.box_preserved;
        out["algebra_hom"] = r.algebra_hom();
        out["agree"] = r.agree();
        return out;
      },
      py::arg("domain"), py::arg("codomain"), py::arg("map"),
      "bounded-morphism check against the dual algebra map, both directions");

  m.def("is_generated_subframe", &is_generated_subframe, py::arg("sub"), py::arg("frame"));
  m.def("disjoint_union", &disjoint_union, py::arg("factors"));
  m.def("quasi_ultraproduct", &quasi_ultraproduct, py::arg("factors"), py::arg("index"));
  m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"));
  m.def("from_topology", &from_topology, py::arg("topology"));

  m.def(
      "accessibility_relation",
      [](const NeighborhoodFrame& f) {
        std::vector<std::vector<std::string>> rows;
        for (Mask row : accessibility_relation(f)) rows.push_back(f.mask_labels(row));
        return rows;
      },
      py::arg("frame"), "per world, the worlds whose singleton complement is no neighborhood");

  m.def("enumerate_frames", &enumerate_monotonic_frames, py::arg("worlds"),
        "every monotonic frame on that many standard-labeled worlds");
  m.def("enumerate_topologies", &enumerate_topologies, py::arg("points"));

  m.def(
      "random_frame",
      [](int worlds, std::uint64_t seed, const std::optional<std::string>& target) {
        return random_monotonic_frame(worlds, seed, class_from_name(target));
      },
      py::arg("worlds"), py::arg("seed"), py::arg("target") = py::none(),
      "seeded random monotonic frame, optionally repaired toward a class");

  m.def("pair_names", [] {
    std::vector<std::string> names;
    for (const CorrespondencePair& p : builtin_pairs()) names.push_back(p.name);
    return names;
  });

  m.def(
      "check_correspondence",
      [](const NeighborhoodFrame& f, const std::string& pair_name) {
        const CorrespondencePair& pair = lookup_pair(pair_name);
        py::dict out;
        out["pair"] = pair.name;
        if (pair.kind == CorrespondencePair::Kind::Local) {
          CorrespondenceReport r = check_local_correspondence(f, pair);
          out["checked"] = r.checked;
          out["disagreements"] = r.disagreements;
          out["ok"] = r.passed();
        } else if (pair.kind == CorrespondencePair::Kind::ClassSentence) {
          out["checked"] = f.size();
          out["disagreements"] = std::vector<std::string>{};
          out["ok"] = check_class_sentence(f, pair);
        } else {
          fail(ErrorCode::UsageError,
               "pair \"" + pair.name + "\" speaks about topologies; use check_topology_pair");
        }
        return out;
      },
      py::arg("frame"), py::arg("pair"),
      "modal side against first-order side of a built-in pair, on one frame");

  m.def(
      "check_topology_pair",
      [](const FiniteTopology& t, const std::string& pair_name) {
        return check_topology_sentence(t, lookup_pair(pair_name));
      },
      py::arg("topology"), py::arg("pair"));

  m.def(
      "gt_closure_check",
      [](const std::vector<NeighborhoodFrame>& corpus, const std::vector<std::string>& axioms) {
        std::vector<ModalFormula> delta;
        for (const std::string& text : axioms) delta.push_back(parse_modal(text));
        ClosureReport r = gt_closure_check(corpus, delta);
        py::dict out;
        out["passed"] = r.passed();
        out["conditions"] =
            std::vector<py::dict>{condition_dict(r.disjoint_unions),
                                  condition_dict(r.morphic_images),
                                  condition_dict(r.generated_subframes),
                                  condition_dict(r.reflects_ue)};
        return out;
      },
      py::arg("corpus"), py::arg("axioms"),
      "the four closure conditions a modally definable frame class must satisfy");
}
