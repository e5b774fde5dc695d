#include "cplkit/bam.hpp"

#include <algorithm>

#include "cplkit/caps.hpp"
#include "json.hpp"

namespace cplkit {

FiniteBam FiniteBam::make(std::vector<std::string> atom_labels, std::vector<Mask> box) {
  if (static_cast<int>(atom_labels.size()) > kMaxAlgebraAtoms) {
    fail(ErrorCode::SizeCapExceeded,
         "algebra has " + std::to_string(atom_labels.size()) + " atoms, cap is " +
             std::to_string(kMaxAlgebraAtoms));
  }
  if (!std::is_sorted(atom_labels.begin(), atom_labels.end()) ||
      std::adjacent_find(atom_labels.begin(), atom_labels.end()) != atom_labels.end()) {
    fail(ErrorCode::UsageError, "atom labels must be sorted and unique");
  }
  Mask count = Mask(1) << atom_labels.size();
  if (box.size() != count) {
    fail(ErrorCode::UsageError, "box table must have one entry per element");
  }
  for (Mask x = 0; x < count; ++x) {
    if (box[x] >= count) {
      fail(ErrorCode::UsageError, "box table entry is not an element");
    }
    // Monotonicity against the immediate successors covers all comparable
    // pairs by transitivity.
    for (int i = 0; (Mask(1) << i) < count; ++i) {
      Mask above = x | (Mask(1) << i);
      if (above != x && (box[x] & ~box[above])) {
        fail(ErrorCode::NotMonotonic, "box is not monotone between " +
                                          std::to_string(x) + " and " + std::to_string(above));
      }
    }
  }
  FiniteBam a;
  a.atoms_ = std::move(atom_labels);
  a.box_ = std::move(box);
  return a;
}

std::string FiniteBam::element_name(Mask x) const {
  std::string out;
  for (int i = 0; i < atom_count(); ++i) {
    if ((x >> i) & 1) out += atoms_[i];
  }
  return out;
}

FiniteBam complex_algebra(const NeighborhoodFrame& f) {
  if (!classify(f).contains(FrameClass::Monotonic)) {
    fail(ErrorCode::NotMonotonic, "complex algebra needs a monotonic frame");
  }
  std::vector<Mask> box(f.subset_count());
  for (Mask x = 0; x < f.subset_count(); ++x) box[x] = box_set(f, x);
  return FiniteBam::make(f.worlds(), std::move(box));
}

std::vector<Ultrafilter> ultrafilters(const FiniteBam& a) {
  std::vector<Ultrafilter> out;
  out.reserve(a.atom_count());
  for (int i = 0; i < a.atom_count(); ++i) out.push_back({i});
  return out;
}

CanonicalExtensionResult canonical_extension(const FiniteBam& a) {
  std::vector<Ultrafilter> ufs = ultrafilters(a);
  int m = static_cast<int>(ufs.size());
  Mask ext_count = Mask(1) << m;

  std::vector<Mask> embedding(a.element_count());
  for (Mask x = 0; x < a.element_count(); ++x) {
    Mask img = 0;
    for (int j = 0; j < m; ++j) {
      if (ufs[j].contains(x)) img |= Mask(1) << j;
    }
    embedding[x] = img;
  }

  // Every element of a finite algebra is a meet of clopens, hence closed.
  // The join below therefore ranges over all x under u; restricting K to
  // some smaller class would change nothing here but would not be the
  // definition, so it stays the full list.
  std::vector<Mask> closed;
  closed.reserve(ext_count);
  for (Mask x = 0; x < ext_count; ++x) closed.push_back(x);

  Mask ext_top = ext_count - 1;
  std::vector<Mask> box(ext_count);
  for (Mask u = 0; u < ext_count; ++u) {
    Mask join = 0;
    for (Mask x : closed) {
      if ((x & u) != x) continue;
      Mask meet = ext_top;
      for (Mask elem = 0; elem < a.element_count(); ++elem) {
        if ((embedding[elem] & x) == x) meet &= embedding[a.box(elem)];
      }
      join |= meet;
    }
    box[u] = join;
  }

  CanonicalExtensionResult r;
  r.extension = FiniteBam::make(a.atom_labels(), std::move(box));
  r.embedding = std::move(embedding);
  r.closed_elements = std::move(closed);
  return r;
}

NeighborhoodFrame ultrafilter_frame(const FiniteBam& a) {
  std::vector<Ultrafilter> ufs = ultrafilters(a);
  int m = static_cast<int>(ufs.size());
  Mask set_count = Mask(1) << m;

  std::vector<std::vector<Mask>> families(m);
  for (int u = 0; u < m; ++u) {
    for (Mask set = 0; set < set_count; ++set) {
      // K ranges over every subset: each element of a finite algebra is
      // closed, so thinning the candidates would be an unfounded shortcut.
      bool member = false;
      for (Mask k = 0; k <= set && !member; ++k) {
        if ((k & set) != k) continue;
        bool forces = true;
        for (Mask elem = 0; elem < a.element_count() && forces; ++elem) {
          Mask img = 0;
          for (int j = 0; j < m; ++j) {
            if (ufs[j].contains(elem)) img |= Mask(1) << j;
          }
          if ((img & k) == k && !ufs[u].contains(a.box(elem))) forces = false;
        }
        member = forces;
      }
      if (member) families[u].push_back(set);
    }
  }
  return NeighborhoodFrame::from_masks(a.atom_labels(), std::move(families));
}

NeighborhoodFrame ultrafilter_extension(const NeighborhoodFrame& f) {
  NeighborhoodFrame uf = ultrafilter_frame(complex_algebra(f));
  // Principal ultrafilters inherit their generating world's label, so the
  // world list carries over verbatim; predicate extensions ride the same
  // atom bijection.
  std::vector<std::vector<Mask>> families;
  families.reserve(uf.size());
  for (int w = 0; w < uf.size(); ++w) families.push_back(uf.family(w));
  return NeighborhoodFrame::from_masks(f.worlds(), std::move(families), f.predicates());
}

std::vector<Mask> dual_map(const WorldMap& f) {
  std::vector<Mask> table(f.codomain().subset_count());
  for (Mask x = 0; x < f.codomain().subset_count(); ++x) table[x] = f.preimage(x);
  return table;
}

DualityReport verify_duality(const WorldMap& f) {
  const NeighborhoodFrame& dom = f.domain();
  const NeighborhoodFrame& cod = f.codomain();
  FiniteBam dom_alg = complex_algebra(dom);
  FiniteBam cod_alg = complex_algebra(cod);

  DualityReport r;
  r.bounded = is_bounded_morphism(f);

  std::vector<Mask> dual = dual_map(f);
  r.meet_preserved = true;
  for (Mask x = 0; x < cod.subset_count() && r.meet_preserved; ++x) {
    for (Mask y = 0; y < cod.subset_count(); ++y) {
      if (dual[x & y] != (dual[x] & dual[y])) {
        r.meet_preserved = false;
        break;
      }
    }
  }
  r.complement_preserved = true;
  r.box_preserved = true;
  for (Mask x = 0; x < cod.subset_count(); ++x) {
    if (dual[cod.full_mask() & ~x] != (dom.full_mask() & ~dual[x])) {
      r.complement_preserved = false;
    }
    if (dual[cod_alg.box(x)] != dom_alg.box(dual[x])) {
      r.box_preserved = false;
    }
  }
  return r;
}

namespace {

struct BamEval {
  const FiniteBam& a;
  const BamAssignment& v;

  Mask eval(const ModalFormula& phi) {
    switch (phi.kind()) {
      case ModalFormula::Kind::Prop: {
        auto it = v.find(phi.name());
        if (it == v.end()) {
          fail(ErrorCode::UnknownProposition,
               "no element assigned to \"" + phi.name() + "\"");
        }
        return it->second;
      }
      case ModalFormula::Kind::Top: return a.top();
      case ModalFormula::Kind::Bottom: return 0;
      case ModalFormula::Kind::Not: return a.top() & ~eval(phi.child());
      case ModalFormula::Kind::And: return eval(phi.left()) & eval(phi.right());
      case ModalFormula::Kind::Or: return eval(phi.left()) | eval(phi.right());
      case ModalFormula::Kind::Implies:
        return (a.top() & ~eval(phi.left())) | eval(phi.right());
      case ModalFormula::Kind::Box: return a.box(eval(phi.child()));
      case ModalFormula::Kind::Diamond:
        return a.top() & ~a.box(a.top() & ~eval(phi.child()));
    }
    fail(ErrorCode::UsageError, "unreachable formula kind");
  }
};

}  // namespace

Mask eval_modal_bam(const FiniteBam& a, const BamAssignment& v, const ModalFormula& phi) {
  return BamEval{a, v}.eval(phi);
}

std::optional<BamAssignment> find_bam_counterexample(const FiniteBam& a,
                                                     const ModalFormula& phi) {
  std::set<std::string> prop_set = propositions(phi);
  std::vector<std::string> props(prop_set.begin(), prop_set.end());
  if (static_cast<int>(props.size()) * a.atom_count() > kMaxValuationBits) {
    fail(ErrorCode::SizeCapExceeded,
         "assignment space exceeds 2^" + std::to_string(kMaxValuationBits));
  }
  BamAssignment v;
  for (const std::string& p : props) v[p] = 0;
  // Odometer over elements, the first proposition name cycling slowest.
  while (true) {
    if (eval_modal_bam(a, v, phi) != a.top()) return v;
    int i = static_cast<int>(props.size()) - 1;
    for (; i >= 0; --i) {
      Mask& x = v[props[i]];
      if (++x < a.element_count()) break;
      x = 0;
    }
    if (i < 0) return std::nullopt;
  }
}

bool bam_valid(const FiniteBam& a, const ModalFormula& phi) {
  return !find_bam_counterexample(a, phi).has_value();
}

EmbeddingReport ultraproduct_embedding(const std::vector<NeighborhoodFrame>& frames,
                                       int principal_index) {
  if (frames.empty()) {
    fail(ErrorCode::EmptyFamily, "ultraproduct of no frames");
  }
  if (principal_index < 0 || principal_index >= static_cast<int>(frames.size())) {
    fail(ErrorCode::UsageError, "principal index out of range");
  }
  // A principal ultrafilter collapses the product of the algebras onto the
  // selected factor's algebra, so that is the domain of the embedding.
  FiniteBam pu = complex_algebra(frames[principal_index]);

  EmbeddingReport r;
  r.product = quasi_ultraproduct(frames, principal_index);
  FiniteBam cm = complex_algebra(r.product);

  // A product world goes into the image of an element iff its selected
  // component lies in it; with the collapse this matches worlds by label.
  std::vector<int> component(r.product.size());
  for (int w = 0; w < r.product.size(); ++w) {
    component[w] = frames[principal_index].require_world(r.product.label(w));
  }
  auto iota = [&](Mask x) {
    Mask img = 0;
    for (int w = 0; w < r.product.size(); ++w) {
      if ((x >> component[w]) & 1) img |= Mask(1) << w;
    }
    return img;
  };

  std::vector<Mask> image(pu.element_count());
  for (Mask x = 0; x < pu.element_count(); ++x) image[x] = iota(x);

  r.injective = true;
  std::vector<Mask> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    r.injective = false;
  }

  r.boolean_hom = image[pu.top()] == cm.top();
  for (Mask x = 0; x < pu.element_count() && r.boolean_hom; ++x) {
    if (image[pu.top() & ~x] != (cm.top() & ~image[x])) r.boolean_hom = false;
    for (Mask y = 0; y < pu.element_count(); ++y) {
      if (image[x & y] != (image[x] & image[y])) {
        r.boolean_hom = false;
        break;
      }
    }
  }

  r.box_commutes = true;
  for (Mask x = 0; x < pu.element_count(); ++x) {
    if (image[pu.box(x)] != cm.box(image[x])) {
      r.box_commutes = false;
      r.counterexample = x;
      break;
    }
  }
  return r;
}

std::string bam_to_json(const FiniteBam& a) {
  nlohmann::ordered_json j;
  j["atoms"] = a.atom_labels();
  nlohmann::ordered_json box = nlohmann::ordered_json::object();
  for (Mask x = 0; x < a.element_count(); ++x) {
    box[a.element_name(x)] = a.element_name(a.box(x));
  }
  j["box"] = std::move(box);
  return j.dump(2) + "\n";
}

}  // namespace cplkit
