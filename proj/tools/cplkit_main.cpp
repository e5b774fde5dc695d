// Command-line front door. Exit codes: 0 the checked property holds (or the
// command only computes output), 1 the checked property fails and a JSON
// counterexample goes to standard output, 2 usage, parse, or cap errors with
// the message on standard error. Every command is deterministic given its
// inputs and --seed; randomized commands refuse to run without a seed.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cplkit/bam.hpp"
#include "cplkit/caps.hpp"
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

namespace {

using namespace cplkit;
using ordered_json = nlohmann::ordered_json;

struct Opts {
  std::string frame;
  std::string sub;
  std::string from;
  std::string to;
  std::string map;
  std::string pair;
  std::string frames_dir;
  std::string out_dir;
  std::string klass;
  std::string assign;
  std::string formula_file;
  std::vector<std::string> frames;
  std::vector<std::string> formulas;
  std::vector<std::string> axioms;
  bool json = false;
  int max_worlds = kMaxWorlds;
  int jobs = 1;
  int worlds = 0;
  int count = 1;
  int index = 0;
  std::uint64_t seed = 0;
};

int effective_cap(const Opts& o) {
  if (o.max_worlds < 1 || o.max_worlds > kMaxWorlds) {
    fail(ErrorCode::UsageError,
         "--max-worlds must be between 1 and " + std::to_string(kMaxWorlds));
  }
  return o.max_worlds;
}

NeighborhoodFrame load_frame(const std::string& path, int cap) {
  NeighborhoodFrame f = parse_frame_json(read_file(path));
  if (f.size() > cap) {
    fail(ErrorCode::SizeCapExceeded, "\"" + path + "\" has " + std::to_string(f.size()) +
                                         " worlds, over the --max-worlds bound of " +
                                         std::to_string(cap));
  }
  return f;
}

FiniteTopology load_topology(const std::string& path, int cap) {
  FiniteTopology t = parse_topology_json(read_file(path));
  if (t.size() > cap) {
    fail(ErrorCode::SizeCapExceeded, "\"" + path + "\" has " + std::to_string(t.size()) +
                                         " points, over the --max-worlds bound of " +
                                         std::to_string(cap));
  }
  return t;
}

// "a=x,b=y" into an ordered map; duplicate keys and malformed items rejected.
std::map<std::string, std::string> parse_assoc(const std::string& text, const std::string& flag) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item =
        comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      fail(ErrorCode::UsageError,
           flag + " expects comma-separated key=value items, got \"" + item + "\"");
    }
    std::string key = item.substr(0, eq);
    if (out.count(key)) fail(ErrorCode::UsageError, flag + " repeats \"" + key + "\"");
    out[key] = item.substr(eq + 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// The corpus order every report uses: explicit --frame paths first in the
// given order, then the directory's *.json files sorted by filename. The
// order is a property of the inputs, never of scheduling.
std::vector<std::string> corpus_files(const Opts& o) {
  std::vector<std::string> files = o.frames;
  if (!o.frames_dir.empty()) {
    std::error_code ec;
    if (!std::filesystem::is_directory(o.frames_dir, ec)) {
      fail(ErrorCode::UsageError, "\"" + o.frames_dir + "\" is not a directory");
    }
    std::vector<std::string> dir_files;
    for (const auto& entry : std::filesystem::directory_iterator(o.frames_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        dir_files.push_back(entry.path().string());
      }
    }
    std::sort(dir_files.begin(), dir_files.end());
    files.insert(files.end(), dir_files.begin(), dir_files.end());
  }
  if (files.empty()) {
    fail(ErrorCode::UsageError, "no input frames; use --frame and/or --frames-dir");
  }
  return files;
}

// Index-sharded worker pool. Tasks must not throw; callers collect errors
// per index and rethrow the lowest one after the join, so failure messages
// do not depend on thread interleaving.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  if (jobs < 1) fail(ErrorCode::UsageError, "--jobs must be at least 1");
  jobs = std::min(jobs, n);
  if (jobs <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

void rethrow_first(const std::vector<std::optional<Error>>& errors) {
  for (const std::optional<Error>& e : errors) {
    if (e) throw *e;
  }
}

ordered_json frame_json(const NeighborhoodFrame& f) {
  return ordered_json::parse(frame_to_json(f));
}

ordered_json valuation_json(const NeighborhoodFrame& f, const Valuation& v) {
  ordered_json out = ordered_json::object();
  for (const auto& [name, mask] : v) out[name] = f.mask_labels(mask);
  return out;
}

void emit(const ordered_json& doc, bool pretty) {
  std::cout << (pretty ? doc.dump(2) : doc.dump()) << "\n";
}

std::vector<std::string> gather_formulas(const Opts& o) {
  std::vector<std::string> texts = o.formulas;
  if (!o.formula_file.empty()) {
    for (const std::string& line : formula_lines(read_file(o.formula_file))) {
      texts.push_back(line);
    }
  }
  if (texts.empty()) {
    fail(ErrorCode::UsageError, "no formula given; use --formula and/or --formula-file");
  }
  return texts;
}

int run_classify(const Opts& o) {
  NeighborhoodFrame f = load_frame(o.frame, effective_cap(o));
  FrameClassSet classes = classify(f);
  if (o.json) {
    ordered_json names = ordered_json::array();
    for (FrameClass c : classes) names.push_back(to_string(c));
    emit(ordered_json{{"classes", names}}, true);
  } else {
    std::string line;
    for (FrameClass c : classes) {
      if (!line.empty()) line += " ";
      line += to_string(c);
    }
    std::cout << line << "\n";
  }
  return 0;
}

int run_eval(const Opts& o) {
  NeighborhoodFrame f = load_frame(o.frame, effective_cap(o));
  Assignment rho;
  if (!o.assign.empty()) {
    for (const auto& [var, world] : parse_assoc(o.assign, "--assign")) rho[var] = world;
  }
  Signature sig = Signature::from_frame(f);
  ordered_json results = ordered_json::array();
  bool all_true = true;
  for (const std::string& text : gather_formulas(o)) {
    CplFormula phi = parse_cpl(text, sig);
    bool value = eval_cpl(f, phi, rho);
    all_true = all_true && value;
    if (o.json) {
      results.push_back(ordered_json{{"formula", print_cpl(phi)}, {"value", value}});
    } else {
      std::cout << (value ? "true" : "false") << "\n";
    }
  }
  if (o.json) emit(ordered_json{{"results", results}}, true);
  return all_true ? 0 : 1;
}

int run_modal_check(const Opts& o) {
  NeighborhoodFrame f = load_frame(o.frame, effective_cap(o));
  ordered_json results = ordered_json::array();
  bool all_valid = true;
  for (const std::string& text : gather_formulas(o)) {
    ModalFormula phi = parse_modal(text);
    std::optional<ModalCounterexample> ce = find_modal_counterexample(f, phi);
    all_valid = all_valid && !ce;
    ordered_json witness;
    if (ce) {
      witness = ordered_json{{"formula", print_modal(phi)},
                             {"world", ce->world},
                             {"valuation", valuation_json(f, ce->valuation)}};
    }
    if (o.json) {
      results.push_back(ordered_json{{"formula", print_modal(phi)},
                                     {"valid", !ce},
                                     {"counterexample", ce ? witness : ordered_json()}});
    } else if (ce) {
      emit(witness, false);
    } else {
      std::cout << "valid\n";
    }
  }
  if (o.json) emit(ordered_json{{"results", results}}, true);
  return all_valid ? 0 : 1;
}

int run_translate(const Opts& o) {
  Signature sig;
  if (!o.frame.empty()) sig = Signature::from_frame(load_frame(o.frame, effective_cap(o)));
  for (const std::string& text : gather_formulas(o)) {
    std::cout << print_fol2(translate2(parse_cpl(text, sig))) << "\n";
  }
  return 0;
}

int run_ue(const Opts& o) {
  std::cout << frame_to_json(ultrafilter_extension(load_frame(o.frame, effective_cap(o))));
  return 0;
}

int run_complex(const Opts& o) {
  std::cout << bam_to_json(complex_algebra(load_frame(o.frame, effective_cap(o))));
  return 0;
}

WorldMap load_map(const Opts& o) {
  int cap = effective_cap(o);
  NeighborhoodFrame domain = load_frame(o.from, cap);
  NeighborhoodFrame codomain = load_frame(o.to, cap);
  return WorldMap::make(std::move(domain), std::move(codomain),
                        parse_assoc(o.map, "--map"));
}

ordered_json violation_json(const WorldMap& m, const MorphismViolation& v) {
  return ordered_json{{"kind", v.kind == MorphismViolation::Kind::Forth ? "forth" : "back"},
                      {"world", v.world},
                      {"codomain_set", m.codomain().mask_labels(v.codomain_set)}};
}

int run_dual_check(const Opts& o) {
  WorldMap m = load_map(o);
  DualityReport r = verify_duality(m);
  std::optional<MorphismViolation> v = bounded_morphism_violation(m);
  ordered_json doc{{"bounded", r.bounded},
                   {"meet_preserved", r.meet_preserved},
                   {"complement_preserved", r.complement_preserved},
                   {"box_preserved", r.box_preserved},
                   {"algebra_hom", r.algebra_hom()},
                   {"agree", r.agree()},
                   {"violation", v ? violation_json(m, *v) : ordered_json()}};
  bool holds = r.bounded && r.algebra_hom();
  if (o.json) {
    emit(doc, true);
  } else {
    std::cout << "bounded morphism: " << (r.bounded ? "yes" : "no") << "\n"
              << "dual preserves meets: " << (r.meet_preserved ? "yes" : "no") << "\n"
              << "dual preserves complements: " << (r.complement_preserved ? "yes" : "no")
              << "\n"
              << "dual preserves box: " << (r.box_preserved ? "yes" : "no") << "\n"
              << "biconditional: " << (r.agree() ? "holds" : "VIOLATED") << "\n";
    if (!holds) emit(doc, false);
  }
  return holds ? 0 : 1;
}

int run_bmorph_check(const Opts& o) {
  WorldMap m = load_map(o);
  std::optional<MorphismViolation> v = bounded_morphism_violation(m);
  ordered_json doc{{"bounded", !v}, {"violation", v ? violation_json(m, *v) : ordered_json()}};
  if (o.json) {
    emit(doc, true);
  } else if (v) {
    std::cout << "not a bounded morphism\n";
    emit(doc, false);
  } else {
    std::cout << "bounded morphism\n";
  }
  return v ? 1 : 0;
}

int run_gensub_check(const Opts& o) {
  int cap = effective_cap(o);
  NeighborhoodFrame sub = load_frame(o.sub, cap);
  NeighborhoodFrame sup = load_frame(o.frame, cap);
  bool ok = is_generated_subframe(sub, sup);
  ordered_json doc{{"generated_subframe", ok}};
  if (o.json) {
    emit(doc, true);
  } else if (ok) {
    std::cout << "generated subframe\n";
  } else {
    std::cout << "not a generated subframe\n";
    emit(doc, false);
  }
  return ok ? 0 : 1;
}

int run_disjoint_union(const Opts& o) {
  int cap = effective_cap(o);
  std::vector<NeighborhoodFrame> factors;
  int total = 0;
  for (const std::string& path : o.frames) {
    factors.push_back(load_frame(path, cap));
    total += factors.back().size();
  }
  if (total > cap) {
    fail(ErrorCode::SizeCapExceeded, "the union has " + std::to_string(total) +
                                         " worlds, over the --max-worlds bound of " +
                                         std::to_string(cap));
  }
  std::cout << frame_to_json(disjoint_union(factors));
  return 0;
}

int run_qup(const Opts& o) {
  int cap = effective_cap(o);
  std::vector<NeighborhoodFrame> factors;
  for (const std::string& path : o.frames) factors.push_back(load_frame(path, cap));
  std::cout << frame_to_json(quasi_ultraproduct(factors, o.index));
  return 0;
}

// One corpus entry's verdict; workers fill these, the merge stays in
// filename order.
struct PairOutcome {
  bool skipped = false;
  std::vector<ordered_json> disagreements;
  std::optional<Error> error;
};

int run_correspond(const Opts& o) {
  const CorrespondencePair& pair = lookup_pair(o.pair);
  int cap = effective_cap(o);
  std::vector<std::string> files = corpus_files(o);
  std::vector<PairOutcome> outcomes(files.size());

  parallel_for(static_cast<int>(files.size()), o.jobs, [&](int i) {
    PairOutcome& out = outcomes[i];
    try {
      if (pair.kind == CorrespondencePair::Kind::TopologySentence) {
        FiniteTopology t = load_topology(files[i], cap);
        if (!check_topology_sentence(t, pair)) {
          out.disagreements.push_back(ordered_json{{"file", files[i]}});
        }
        return;
      }
      NeighborhoodFrame f = load_frame(files[i], cap);
      if (!classify(f).contains(pair.applicable)) {
        out.skipped = true;
        return;
      }
      if (pair.kind == CorrespondencePair::Kind::Local) {
        CorrespondenceReport r = check_local_correspondence(f, pair);
        for (const std::string& world : r.disagreements) {
          out.disagreements.push_back(ordered_json{{"file", files[i]}, {"world", world}});
        }
      } else if (!check_class_sentence(f, pair)) {
        out.disagreements.push_back(ordered_json{{"file", files[i]}});
      }
    } catch (const Error& e) {
      out.error = e;
    }
  });

  std::vector<std::optional<Error>> errors;
  for (const PairOutcome& out : outcomes) errors.push_back(out.error);
  rethrow_first(errors);

  int checked = 0;
  int skipped = 0;
  ordered_json disagreements = ordered_json::array();
  for (const PairOutcome& out : outcomes) {
    if (out.skipped) {
      ++skipped;
      continue;
    }
    ++checked;
    for (const ordered_json& d : out.disagreements) disagreements.push_back(d);
  }
  ordered_json doc{{"pair", pair.name},
                   {"frames_checked", checked},
                   {"skipped", skipped},
                   {"disagreements", disagreements}};
  bool ok = disagreements.empty();
  if (o.json) {
    emit(doc, true);
  } else {
    std::cout << "pair " << pair.name << ": " << checked << " frames checked, " << skipped
              << " skipped, " << disagreements.size() << " disagreements\n";
    if (!ok) emit(doc, false);
  }
  return ok ? 0 : 1;
}

ModalFormula resolve_axiom(const std::string& text) {
  for (const CorrespondencePair& p : builtin_pairs()) {
    if (p.name == text && p.modal) return *p.modal;
  }
  return parse_modal(text);
}

ordered_json condition_json(const ClosureCondition& c) {
  return ordered_json{{"name", c.name},
                      {"passed", c.passed},
                      {"checked", c.checked},
                      {"exhaustive", c.exhaustive},
                      {"note", c.note}};
}

int run_gt_check(const Opts& o) {
  std::vector<ModalFormula> delta;
  std::string pair_label;
  for (const std::string& text : o.axioms) {
    delta.push_back(resolve_axiom(text));
    if (!pair_label.empty()) pair_label += ", ";
    pair_label += text;
  }
  int cap = effective_cap(o);
  std::vector<std::string> files = corpus_files(o);
  std::vector<NeighborhoodFrame> corpus(files.size());
  std::vector<std::optional<Error>> errors(files.size());
  parallel_for(static_cast<int>(files.size()), o.jobs, [&](int i) {
    try {
      corpus[i] = load_frame(files[i], cap);
    } catch (const Error& e) {
      errors[i] = e;
    }
  });
  rethrow_first(errors);

  ClosureReport r = gt_closure_check(corpus, delta);
  const ClosureCondition* conditions[] = {&r.disjoint_unions, &r.morphic_images,
                                          &r.generated_subframes, &r.reflects_ue};
  ordered_json disagreements = ordered_json::array();
  ordered_json condition_docs = ordered_json::array();
  for (const ClosureCondition* c : conditions) {
    condition_docs.push_back(condition_json(*c));
    if (c->passed) continue;
    ordered_json inputs = ordered_json::array();
    if (c->witness) {
      for (const NeighborhoodFrame& f : c->witness->inputs) inputs.push_back(frame_json(f));
    }
    disagreements.push_back(ordered_json{
        {"condition", c->name},
        {"inputs", inputs},
        {"produced", c->witness ? frame_json(c->witness->produced) : ordered_json()}});
  }
  ordered_json doc{{"pair", pair_label},
                   {"frames_checked", static_cast<int>(corpus.size())},
                   {"disagreements", disagreements},
                   {"conditions", condition_docs}};
  if (o.json) {
    emit(doc, true);
  } else {
    for (const ClosureCondition* c : conditions) {
      std::cout << c->name << ": " << (c->passed ? "pass" : "FAIL") << " (" << c->checked
                << " checked, " << (c->exhaustive ? "exhaustive" : "sampled") << ")\n";
      if (!c->note.empty()) std::cout << "  note: " << c->note << "\n";
    }
    if (!r.passed()) emit(doc, false);
  }
  return r.passed() ? 0 : 1;
}

std::optional<FrameClass> parse_class(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::optional<FrameClass> c = frame_class_from_string(text);
  if (!c) {
    fail(ErrorCode::UsageError,
         "unknown class \"" + text +
             "\"; expected monotonic, quasi-filter, augmented-quasi-filter, filter, or "
             "augmented-filter");
  }
  return c;
}

void emit_frames(const std::vector<NeighborhoodFrame>& frames, const std::string& out_dir) {
  if (out_dir.empty()) {
    for (const NeighborhoodFrame& f : frames) emit(frame_json(f), false);
    return;
  }
  std::filesystem::create_directories(out_dir);
  int i = 0;
  for (const NeighborhoodFrame& f : frames) {
    char name[32];
    std::snprintf(name, sizeof(name), "frame-%04d.json", i++);
    write_file((std::filesystem::path(out_dir) / name).string(), frame_to_json(f));
  }
  std::cout << "wrote " << frames.size() << " frames to " << out_dir << "\n";
}

int run_enumerate(const Opts& o) {
  if (o.worlds < 1 || o.worlds > kMaxEnumerationWorlds) {
    fail(ErrorCode::SizeCapExceeded, "enumeration is hard-capped at " +
                                         std::to_string(kMaxEnumerationWorlds) + " worlds");
  }
  std::optional<FrameClass> target = parse_class(o.klass);
  std::vector<NeighborhoodFrame> frames;
  for (const NeighborhoodFrame& f : enumerate_monotonic_frames(o.worlds)) {
    if (!target || classify(f).contains(*target)) frames.push_back(f);
  }
  emit_frames(frames, o.out_dir);
  return 0;
}

int run_random_frame(const Opts& o) {
  int cap = effective_cap(o);
  if (o.worlds < 1 || o.worlds > cap) {
    fail(ErrorCode::SizeCapExceeded,
         "--worlds must be between 1 and the --max-worlds bound of " + std::to_string(cap));
  }
  if (o.count < 1) fail(ErrorCode::UsageError, "--count must be at least 1");
  std::optional<FrameClass> target = parse_class(o.klass);
  std::vector<NeighborhoodFrame> frames;
  for (int i = 0; i < o.count; ++i) {
    frames.push_back(random_monotonic_frame(o.worlds, o.seed + static_cast<std::uint64_t>(i),
                                            target));
  }
  emit_frames(frames, o.out_dir);
  return 0;
}

void add_json_flag(CLI::App* cmd, Opts& o) {
  cmd->add_flag("--json", o.json, "machine-readable JSON output");
}

void add_cap_option(CLI::App* cmd, Opts& o) {
  cmd->add_option("--max-worlds", o.max_worlds, "world-count bound for inputs (at most 16)");
}

void add_formula_options(CLI::App* cmd, Opts& o) {
  cmd->add_option("--formula", o.formulas, "formula text (repeatable)");
  cmd->add_option("--formula-file", o.formula_file,
                  "file with one formula per line, # comments");
}

void add_corpus_options(CLI::App* cmd, Opts& o) {
  cmd->add_option("--frame", o.frames, "frame JSON file (repeatable)");
  cmd->add_option("--frames-dir", o.frames_dir, "directory of frame JSON files");
  cmd->add_option("--jobs", o.jobs, "worker threads; output order stays by filename");
  add_cap_option(cmd, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite neighborhood frames: classification, satisfaction, translation, and "
               "algebraic duals"};
  app.require_subcommand(1);
  Opts o;
  int rc = 0;

  CLI::App* classify_cmd = app.add_subcommand("classify", "closure classes of a frame");
  classify_cmd->add_option("--frame", o.frame, "frame JSON file")->required();
  add_json_flag(classify_cmd, o);
  add_cap_option(classify_cmd, o);
  classify_cmd->callback([&] { rc = run_classify(o); });

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate predicate-logic formulas on a frame");
  eval_cmd->add_option("--frame", o.frame, "frame JSON file")->required();
  add_formula_options(eval_cmd, o);
  eval_cmd->add_option("--assign", o.assign, "free-variable assignment, e.g. x=a,y=b");
  add_json_flag(eval_cmd, o);
  add_cap_option(eval_cmd, o);
  eval_cmd->callback([&] { rc = run_eval(o); });

  CLI::App* modal_cmd = app.add_subcommand("modal-check", "modal validity on a frame");
  modal_cmd->add_option("--frame", o.frame, "frame JSON file")->required();
  add_formula_options(modal_cmd, o);
  add_json_flag(modal_cmd, o);
  add_cap_option(modal_cmd, o);
  modal_cmd->callback([&] { rc = run_modal_check(o); });

  CLI::App* translate_cmd =
      app.add_subcommand("translate", "two-sorted translation of predicate-logic formulas");
  add_formula_options(translate_cmd, o);
  translate_cmd->add_option("--frame", o.frame, "frame JSON file supplying the predicates");
  add_cap_option(translate_cmd, o);
  translate_cmd->callback([&] { rc = run_translate(o); });

  CLI::App* ue_cmd = app.add_subcommand("ue", "ultrafilter extension of a frame");
  ue_cmd->add_option("--frame", o.frame, "frame JSON file")->required();
  add_cap_option(ue_cmd, o);
  ue_cmd->callback([&] { rc = run_ue(o); });

  CLI::App* complex_cmd = app.add_subcommand("complex", "complex algebra of a frame");
  complex_cmd->add_option("--frame", o.frame, "frame JSON file")->required();
  add_cap_option(complex_cmd, o);
  complex_cmd->callback([&] { rc = run_complex(o); });

  CLI::App* dual_cmd = app.add_subcommand(
      "dual-check", "bounded morphism against its dual algebra map, both directions");
  dual_cmd->add_option("--from", o.from, "domain frame JSON file")->required();
  dual_cmd->add_option("--to", o.to, "codomain frame JSON file")->required();
  dual_cmd->add_option("--map", o.map, "world map, e.g. a=x,b=y")->required();
  add_json_flag(dual_cmd, o);
  add_cap_option(dual_cmd, o);
  dual_cmd->callback([&] { rc = run_dual_check(o); });

  CLI::App* du_cmd = app.add_subcommand("disjoint-union", "disjoint union of frames");
  du_cmd->add_option("--frame", o.frames, "frame JSON file (repeatable)")->required();
  add_cap_option(du_cmd, o);
  du_cmd->callback([&] { rc = run_disjoint_union(o); });

  CLI::App* gensub_cmd =
      app.add_subcommand("gensub-check", "whether one frame is a generated subframe of another");
  gensub_cmd->add_option("--frame", o.frame, "ambient frame JSON file")->required();
  gensub_cmd->add_option("--sub", o.sub, "candidate subframe JSON file")->required();
  add_json_flag(gensub_cmd, o);
  add_cap_option(gensub_cmd, o);
  gensub_cmd->callback([&] { rc = run_gensub_check(o); });

  CLI::App* bmorph_cmd = app.add_subcommand("bmorph-check", "bounded morphism check");
  bmorph_cmd->add_option("--from", o.from, "domain frame JSON file")->required();
  bmorph_cmd->add_option("--to", o.to, "codomain frame JSON file")->required();
  bmorph_cmd->add_option("--map", o.map, "world map, e.g. a=x,b=y")->required();
  add_json_flag(bmorph_cmd, o);
  add_cap_option(bmorph_cmd, o);
  bmorph_cmd->callback([&] { rc = run_bmorph_check(o); });

  CLI::App* qup_cmd =
      app.add_subcommand("qup", "quasi-ultraproduct over a principal index");
  qup_cmd->add_option("--frame", o.frames, "factor frame JSON file (repeatable)")->required();
  qup_cmd->add_option("--index", o.index, "principal index into the factor list")->required();
  add_cap_option(qup_cmd, o);
  qup_cmd->callback([&] { rc = run_qup(o); });

  CLI::App* correspond_cmd =
      app.add_subcommand("correspond", "check a built-in correspondence pair over a corpus");
  correspond_cmd->add_option("--pair", o.pair, "pair name: B, 4, aqf-def, discrete, T0, T1")
      ->required();
  add_corpus_options(correspond_cmd, o);
  add_json_flag(correspond_cmd, o);
  correspond_cmd->callback([&] { rc = run_correspond(o); });

  CLI::App* gt_cmd = app.add_subcommand(
      "gt-check", "closure conditions for modal definability of a validity class");
  gt_cmd->add_option("--axiom", o.axioms,
                     "modal axiom or built-in pair name (repeatable)")
      ->required();
  add_corpus_options(gt_cmd, o);
  add_json_flag(gt_cmd, o);
  gt_cmd->callback([&] { rc = run_gt_check(o); });

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "all monotonic frames on n worlds");
  enum_cmd->add_option("--worlds", o.worlds, "world count (hard cap 3)")->required();
  enum_cmd->add_option("--class", o.klass, "keep only frames of this class");
  enum_cmd->add_option("--out-dir", o.out_dir, "write numbered frame files here");
  enum_cmd->callback([&] { rc = run_enumerate(o); });

  CLI::App* random_cmd = app.add_subcommand("random-frame", "seeded random monotonic frames");
  random_cmd->add_option("--worlds", o.worlds, "world count")->required();
  random_cmd->add_option("--seed", o.seed, "RNG seed; frame i uses seed+i")->required();
  random_cmd->add_option("--count", o.count, "how many frames");
  random_cmd->add_option("--class", o.klass, "repair each frame toward this class");
  random_cmd->add_option("--out-dir", o.out_dir, "write numbered frame files here");
  add_cap_option(random_cmd, o);
  random_cmd->callback([&] { rc = run_random_frame(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int cli_rc = app.exit(e);
    return cli_rc == 0 ? 0 : 2;
  } catch (const cplkit::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return rc;
}
