#include "intens/validity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "intens/conform.hpp"
#include "intens/match.hpp"
#include "intens/pretty.hpp"

namespace intens {

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::compositionality: return "Compositionality";
    case Criterion::name_invariance: return "NameInvariance";
    case Criterion::operational_correspondence: return "OperationalCorrespondence";
    case Criterion::divergence_reflection: return "DivergenceReflection";
    case Criterion::success_sensitiveness: return "SuccessSensitiveness";
  }
  return "?";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "Pass";
    case Status::fail: return "Fail";
    case Status::inconclusive: return "Inconclusive";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// EncodingPipeline

EncodingPipeline EncodingPipeline::synch(SynchMutation m) {
  EncodingPipeline p;
  p.mode_ = Mode::synch;
  p.mutation_ = m;
  p.label_ = "synch";
  switch (m) {
    case SynchMutation::none: break;
    case SynchMutation::drop_ack: p.label_ += "[drop-ack]"; break;
    case SynchMutation::drop_ok: p.label_ += "[drop-ok]"; break;
    case SynchMutation::loop_ack: p.label_ += "[loop-ack]"; break;
    case SynchMutation::tag_ack: p.label_ += "[tag-ack]"; break;
  }
  return p;
}

EncodingPipeline EncodingPipeline::arity() {
  EncodingPipeline p;
  p.mode_ = Mode::arity;
  p.label_ = "arity";
  return p;
}

EncodingPipeline EncodingPipeline::medium() {
  EncodingPipeline p;
  p.mode_ = Mode::medium;
  p.label_ = "medium";
  return p;
}

EncodingPipeline EncodingPipeline::into(const Language& target, SynchMutation m) {
  EncodingPipeline p;
  p.mode_ = Mode::into;
  p.target_ = target;
  p.mutation_ = m;
  p.label_ = "to:" + code(target);
  if (m != SynchMutation::none) p.label_ += " (mutant)";
  return p;
}

bool EncodingPipeline::applicable(const Language& source) const {
  switch (mode_) {
    case Mode::synch: return source.synchronism == Synchronism::synchronous;
    case Mode::arity: return source.arity == DataArity::polyadic;
    case Mode::medium: return source.medium == Medium::channel;
    case Mode::into:
      return leq(source, target_) || target_.matching == MatchDegree::intensional;
  }
  return false;
}

std::vector<EncodingStep> EncodingPipeline::plan(const Language& source) const {
  switch (mode_) {
    case Mode::synch: {
      Language target = source;
      target.synchronism = Synchronism::asynchronous;
      target.matching = MatchDegree::intensional;
      return {EncodingStep{EncodingStep::Kind::synch, source, target, 1, 2}};
    }
    case Mode::arity: {
      Language target = source;
      target.arity = DataArity::monadic;
      target.matching = MatchDegree::intensional;
      return {EncodingStep{EncodingStep::Kind::arity, source, target, 1, 1}};
    }
    case Mode::medium: {
      Language target = source;
      target.medium = Medium::dataspace;
      target.matching = MatchDegree::intensional;
      return {EncodingStep{EncodingStep::Kind::medium, source, target, 1, 1}};
    }
    case Mode::into:
      return plan_encoding(source, target_);
  }
  throw std::logic_error("unreachable");
}

Language EncodingPipeline::target_of(const Language& source) const {
  return plan(source).back().target;
}

Process EncodingPipeline::apply(const Process& p, const Language& source) const {
  Process cur = p;
  for (const EncodingStep& step : plan(source)) {
    cur = apply_step(step, cur, mutation_);
  }
  return cur;
}

int EncodingPipeline::factor(const Language& source) const {
  const auto steps = plan(source);
  return step_factor(steps);
}

// ---------------------------------------------------------------------------
// Checks

namespace {

Verdict verdict(const SourceUnit& unit, Criterion c, Status s, std::string witness = "") {
  return Verdict{unit.name, c, s, std::move(witness)};
}

// Compares a whole-stage encoding of every subprocess against the stage's
// one-level context filled with the encoded children; alpha-equivalence
// absorbs the differing fresh-name counters.
bool compositional_everywhere(const EncodingStep& step, const Process& p,
                              SynchMutation m, std::string& witness) {
  const std::vector<Process> children = process_children(p);
  for (const Process& c : children) {
    if (!compositional_everywhere(step, c, m, witness)) return false;
  }
  std::vector<Process> encoded_children;
  encoded_children.reserve(children.size());
  for (const Process& c : children) encoded_children.push_back(apply_step(step, c, m));
  const Process whole = apply_step(step, p, m);
  const Process composed = apply_step_one_level(step, p, encoded_children, m);
  if (!alpha_eq(whole, composed)) {
    witness = "encoding of '" + pretty(p) + "' is " + pretty(whole) +
              " but the context filled with encoded parts gives " + pretty(composed);
    return false;
  }
  return true;
}

}  // namespace

Verdict check_compositionality(const SourceUnit& unit, const EncodingPipeline& enc) {
  Process cur = unit.body;
  std::string witness;
  for (const EncodingStep& step : enc.plan(unit.language)) {
    if (!compositional_everywhere(step, cur, enc.mutation(), witness)) {
      return verdict(unit, Criterion::compositionality, Status::fail,
                     describe(step) + ": " + witness);
    }
    cur = apply_step(step, cur, enc.mutation());
  }
  return verdict(unit, Criterion::compositionality, Status::pass);
}

Substitution rotation_subst(const Process& p) {
  std::vector<Name> names;
  for (const Name& n : free_names(p)) {
    if (!n.reserved()) names.push_back(n);
  }
  Substitution s;
  if (names.size() < 2) return s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    s.set(names[i], Term::leaf(names[(i + 1) % names.size()]));
  }
  return s;
}

Verdict check_name_invariance(const SourceUnit& unit, const EncodingPipeline& enc,
                              const Substitution& sigma) {
  for (const auto& [from, to] : sigma) {
    if (from.reserved() || !to.is_leaf() || to.name().reserved()) {
      throw std::invalid_argument(
          "check_name_invariance: sigma must map user names to user names");
    }
  }
  std::set<Name> images;
  bool injective = true;
  for (const auto& [from, to] : sigma) {
    if (!images.insert(to.name()).second) injective = false;
  }
  if (!injective) {
    return verdict(unit, Criterion::name_invariance, Status::inconclusive,
                   "non-injective renaming needs a behavioural equivalence");
  }
  const Process renamed_then_encoded =
      enc.apply(apply_subst(sigma, unit.body), unit.language);
  const Process encoded_then_renamed =
      apply_subst(sigma, enc.apply(unit.body, unit.language));
  if (alpha_eq(renamed_then_encoded, encoded_then_renamed)) {
    return verdict(unit, Criterion::name_invariance, Status::pass);
  }
  return verdict(unit, Criterion::name_invariance, Status::fail,
                 "encode(sigma S) = " + pretty(renamed_then_encoded) +
                     " but sigma'(encode S) = " + pretty(encoded_then_renamed));
}

namespace {

struct Graphs {
  ReductionGraph source;
  ReductionGraph target;
  std::vector<std::string> image_keys;  // per source node: key of its encoding
};

Graphs explore_both(const SourceUnit& unit, const EncodingPipeline& enc,
                    const Limits& limits) {
  Graphs g;
  g.source = explore(unit.body, unit.language, limits);
  const Process encoded = enc.apply(unit.body, unit.language);
  g.target = explore(encoded, enc.target_of(unit.language), limits);
  g.image_keys.reserve(g.source.nodes.size());
  for (const CanonicalForm& node : g.source.nodes) {
    const Process image = enc.apply(to_process(node), unit.language);
    g.image_keys.push_back(canonicalize(image).key);
  }
  return g;
}

// Nodes reachable from `start` in at most `budget` edges.
std::set<int> reachable_within(const ReductionGraph& g, int start, int budget) {
  std::set<int> seen{start};
  std::deque<std::pair<int, int>> queue{{start, 0}};
  while (!queue.empty()) {
    auto [id, dist] = queue.front();
    queue.pop_front();
    if (dist == budget) continue;
    for (int succ : g.edges[id]) {
      if (seen.insert(succ).second) queue.push_back({succ, dist + 1});
    }
  }
  return seen;
}

}  // namespace

Verdict check_operational_correspondence(const SourceUnit& unit,
                                         const EncodingPipeline& enc,
                                         const Limits& limits) {
  const Graphs g = explore_both(unit, enc, limits);
  const int factor = enc.factor(unit.language);
  bool bounded = false;

  // Forward: the image of every reduct is reachable within the composed
  // step profile.
  for (std::size_t i = 0; i < g.source.nodes.size(); ++i) {
    const int tid = g.target.node_id(g.image_keys[i]);
    if (tid < 0) {
      if (g.target.truncated) {
        bounded = true;
        continue;
      }
      return verdict(unit, Criterion::operational_correspondence, Status::fail,
                     "no target state corresponds to source reduct " +
                         g.source.nodes[i].key);
    }
    if (g.target.depth[tid] > factor * g.source.depth[i]) {
      if (g.target.truncated) {
        bounded = true;  // dropped edges can inflate the measured distance
        continue;
      }
      return verdict(unit, Criterion::operational_correspondence, Status::fail,
                     "image of " + g.source.nodes[i].key + " sits at depth " +
                         std::to_string(g.target.depth[tid]) + " > " +
                         std::to_string(factor * g.source.depth[i]));
    }
  }

  // Backward: every target state completes to the image of some reduct
  // within the profile plus slack for acknowledgment interleavings.
  const std::set<std::string> images(g.image_keys.begin(), g.image_keys.end());
  const int budget = factor + 2;
  for (std::size_t t = 0; t < g.target.nodes.size(); ++t) {
    bool completes = false;
    for (int id : reachable_within(g.target, static_cast<int>(t), budget)) {
      if (images.contains(g.target.nodes[id].key)) {
        completes = true;
        break;
      }
    }
    if (!completes) {
      if (g.target.truncated) {
        bounded = true;
        continue;
      }
      return verdict(unit, Criterion::operational_correspondence, Status::fail,
                     "target state cannot complete to any encoded reduct: " +
                         g.target.nodes[t].key);
    }
  }

  if (bounded || g.source.truncated) {
    return verdict(unit, Criterion::operational_correspondence, Status::inconclusive,
                   "exploration bound hit");
  }
  return verdict(unit, Criterion::operational_correspondence, Status::pass);
}

Verdict check_divergence_reflection(const SourceUnit& unit, const EncodingPipeline& enc,
                                    const Limits& limits) {
  const Graphs g = explore_both(unit, enc, limits);
  if (g.source.cycle_found) {
    // The source itself diverges; reflection holds vacuously.
    return verdict(unit, Criterion::divergence_reflection, Status::pass);
  }
  if (g.source.truncated) {
    return verdict(unit, Criterion::divergence_reflection, Status::inconclusive,
                   "source exploration bound hit");
  }
  if (g.target.cycle_found) {
    return verdict(unit, Criterion::divergence_reflection, Status::fail,
                   "target diverges (cycle found) while the source is finite "
                   "and acyclic");
  }
  if (g.target.depth_truncated) {
    return verdict(unit, Criterion::divergence_reflection, Status::fail,
                   "target still reduces at the depth limit while the source "
                   "is finite and acyclic");
  }
  if (g.target.truncated) {
    return verdict(unit, Criterion::divergence_reflection, Status::inconclusive,
                   "target exploration bound hit");
  }
  return verdict(unit, Criterion::divergence_reflection, Status::pass);
}

Verdict check_success_sensitiveness(const SourceUnit& unit, const EncodingPipeline& enc,
                                    const Limits& limits) {
  const Graphs g = explore_both(unit, enc, limits);
  const bool source_success = g.source.has_success();
  const bool target_success = g.target.has_success();
  if (source_success && target_success) {
    return verdict(unit, Criterion::success_sensitiveness, Status::pass);
  }
  if (source_success && !target_success) {
    if (g.target.truncated) {
      return verdict(unit, Criterion::success_sensitiveness, Status::inconclusive,
                     "target exploration bound hit");
    }
    return verdict(unit, Criterion::success_sensitiveness, Status::fail,
                   "source succeeds but the encoding does not; target root: " +
                       g.target.nodes[0].key);
  }
  if (!source_success && target_success) {
    if (g.source.truncated) {
      return verdict(unit, Criterion::success_sensitiveness, Status::inconclusive,
                     "source exploration bound hit");
    }
    return verdict(unit, Criterion::success_sensitiveness, Status::fail,
                   "encoding succeeds but the source does not");
  }
  if (g.source.truncated || g.target.truncated) {
    return verdict(unit, Criterion::success_sensitiveness, Status::inconclusive,
                   "exploration bound hit");
  }
  return verdict(unit, Criterion::success_sensitiveness, Status::pass);
}

// ---------------------------------------------------------------------------
// Corpus runner

std::string Report::text() const {
  std::string out;
  for (const Verdict& v : verdicts) {
    out += v.unit;
    out += '\t';
    out += to_string(v.criterion);
    out += '\t';
    out += to_string(v.status);
    if (!v.witness.empty()) {
      out += '\t';
      out += v.witness;
    }
    out += '\n';
  }
  out += "PASS " + std::to_string(passed) + " / FAIL " + std::to_string(failed) +
         " / INCONCLUSIVE " + std::to_string(inconclusive) + "\n";
  return out;
}

Report run_corpus(std::span<const SourceUnit> units, const EncodingPipeline& enc,
                  const Limits& limits) {
  std::vector<const SourceUnit*> ordered;
  for (const SourceUnit& u : units) ordered.push_back(&u);
  std::sort(ordered.begin(), ordered.end(),
            [](const SourceUnit* a, const SourceUnit* b) { return a->name < b->name; });

  Report report;
  for (const SourceUnit* u : ordered) {
    if (!enc.applicable(u->language)) {
      ++report.skipped_units;
      continue;
    }
    std::vector<Verdict> vs;
    vs.push_back(check_compositionality(*u, enc));
    vs.push_back(check_name_invariance(*u, enc, rotation_subst(u->body)));
    vs.push_back(check_operational_correspondence(*u, enc, limits));
    vs.push_back(check_divergence_reflection(*u, enc, limits));
    vs.push_back(check_success_sensitiveness(*u, enc, limits));
    for (Verdict& v : vs) {
      switch (v.status) {
        case Status::pass: ++report.passed; break;
        case Status::fail: ++report.failed; break;
        case Status::inconclusive: ++report.inconclusive; break;
      }
      report.verdicts.push_back(std::move(v));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Graph-shape helpers

GraphMatch graphs_isomorphic_via(const ReductionGraph& source,
                                 const ReductionGraph& target,
                                 const std::function<Process(const Process&)>& enc) {
  if (source.nodes.size() != target.nodes.size()) {
    return {false, "node counts differ: " + std::to_string(source.nodes.size()) +
                       " vs " + std::to_string(target.nodes.size())};
  }
  std::vector<int> image(source.nodes.size(), -1);
  std::set<int> hit;
  for (std::size_t i = 0; i < source.nodes.size(); ++i) {
    const std::string key = canonicalize(enc(to_process(source.nodes[i]))).key;
    const int tid = target.node_id(key);
    if (tid < 0) {
      return {false, "no target node for the image of " + source.nodes[i].key};
    }
    if (!hit.insert(tid).second) {
      return {false, "two source nodes map to the same target node " + key};
    }
    image[i] = tid;
  }
  for (std::size_t i = 0; i < source.nodes.size(); ++i) {
    std::set<int> mapped;
    for (int succ : source.edges[i]) mapped.insert(image[succ]);
    const std::set<int> actual(target.edges[image[i]].begin(),
                               target.edges[image[i]].end());
    if (mapped != actual) {
      return {false, "edge sets differ at " + source.nodes[i].key};
    }
  }
  return {true, ""};
}

GraphMatch synch_two_step_profile(const ReductionGraph& source,
                                  const ReductionGraph& target,
                                  const std::function<Process(const Process&)>& enc) {
  // Map every source node to its target image; all images must be present.
  std::vector<int> image(source.nodes.size(), -1);
  for (std::size_t i = 0; i < source.nodes.size(); ++i) {
    const std::string key = canonicalize(enc(to_process(source.nodes[i]))).key;
    const int tid = target.node_id(key);
    if (tid < 0) {
      return {false, "no target node for the image of " + source.nodes[i].key};
    }
    image[i] = tid;
  }
  for (std::size_t i = 0; i < source.nodes.size(); ++i) {
    // Forward: each source step completes in exactly two target steps.
    for (int succ : source.edges[i]) {
      bool two_step = false;
      for (int mid : target.edges[image[i]]) {
        for (int end : target.edges[mid]) {
          if (end == image[succ]) {
            two_step = true;
            break;
          }
        }
        if (two_step) break;
      }
      if (!two_step) {
        return {false, "no two-step path from the image of " + source.nodes[i].key +
                           " to the image of its reduct " + source.nodes[succ].key};
      }
    }
    // Completion: every half-step from an image state finishes the exchange
    // in exactly one more step, landing on the image of some source reduct.
    std::set<int> successor_images;
    for (int succ : source.edges[i]) successor_images.insert(image[succ]);
    for (int mid : target.edges[image[i]]) {
      bool completes = false;
      for (int end : target.edges[mid]) {
        if (successor_images.contains(end)) {
          completes = true;
          break;
        }
      }
      if (!completes) {
        return {false, "intermediate state does not complete: " +
                           target.nodes[mid].key};
      }
    }
  }
  return {true, ""};
}

}  // namespace intens
