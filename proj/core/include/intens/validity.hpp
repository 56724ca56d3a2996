#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "intens/corpus.hpp"
#include "intens/encode.hpp"
#include "intens/reduce.hpp"

namespace intens {

enum class Criterion {
  compositionality,
  name_invariance,
  operational_correspondence,
  divergence_reflection,
  success_sensitiveness,
};

enum class Status { pass, fail, inconclusive };

const char* to_string(Criterion c);
const char* to_string(Status s);

/// Outcome of one criterion check on one unit. A Fail always carries a
/// witness (a concrete process or trace); Inconclusive only arises when an
/// exploration bound was hit.
struct Verdict {
  std::string unit;
  Criterion criterion;
  Status status;
  std::string witness;
};

/// A checkable translation: one of the three feature encoders applied at the
/// unit's own language, or the composite translation into a fixed target.
class EncodingPipeline {
 public:
  static EncodingPipeline synch(SynchMutation m = SynchMutation::none);
  static EncodingPipeline arity();
  static EncodingPipeline medium();
  static EncodingPipeline into(const Language& target,
                               SynchMutation m = SynchMutation::none);

  const std::string& label() const { return label_; }
  SynchMutation mutation() const { return mutation_; }

  bool applicable(const Language& source) const;
  std::vector<EncodingStep> plan(const Language& source) const;
  Language target_of(const Language& source) const;
  Process apply(const Process& p, const Language& source) const;
  int factor(const Language& source) const;

 private:
  enum class Mode { synch, arity, medium, into };
  Mode mode_;
  Language target_{};
  SynchMutation mutation_ = SynchMutation::none;
  std::string label_;
};

// The five checks of the valid-encoding criteria, bounded and executable.
// Structural equivalence stands in for the reference behavioural
// equivalence, which makes every check at least as strict as the criterion
// it implements.

Verdict check_compositionality(const SourceUnit& unit, const EncodingPipeline& enc);

/// `sigma` must be injective on the unit's free names and must not mention
/// reserved names (throws std::invalid_argument). Non-injective maps need a
/// behavioural equivalence and report Inconclusive.
Verdict check_name_invariance(const SourceUnit& unit, const EncodingPipeline& enc,
                              const Substitution& sigma);

Verdict check_operational_correspondence(const SourceUnit& unit,
                                         const EncodingPipeline& enc,
                                         const Limits& limits);

Verdict check_divergence_reflection(const SourceUnit& unit,
                                    const EncodingPipeline& enc, const Limits& limits);

Verdict check_success_sensitiveness(const SourceUnit& unit,
                                    const EncodingPipeline& enc, const Limits& limits);

/// Deterministic injective rename used by run_corpus for the name-invariance
/// check: rotates the unit's free names.
Substitution rotation_subst(const Process& p);

struct Report {
  std::vector<Verdict> verdicts;
  int passed = 0;
  int failed = 0;
  int inconclusive = 0;
  int skipped_units = 0;  // units the pipeline does not apply to

  /// `unit<TAB>criterion<TAB>status[<TAB>witness]` lines plus a summary
  /// `PASS n / FAIL m / INCONCLUSIVE k` line.
  std::string text() const;
};

/// Runs all five checks on every applicable unit, sorted by unit name.
Report run_corpus(std::span<const SourceUnit> units, const EncodingPipeline& enc,
                  const Limits& limits);

/// Node-for-node correspondence of reduction graphs under a translation that
/// maps one source step to one target step.
struct GraphMatch {
  bool ok;
  std::string detail;
};
GraphMatch graphs_isomorphic_via(const ReductionGraph& source,
                                 const ReductionGraph& target,
                                 const std::function<Process(const Process&)>& enc);

/// The two-steps-per-source-step shape of the synchronism encoding: every
/// image node reaches the image of each successor in exactly two steps, and
/// every intermediate state completes in exactly one more step.
GraphMatch synch_two_step_profile(const ReductionGraph& source,
                                  const ReductionGraph& target,
                                  const std::function<Process(const Process&)>& enc);

}  // namespace intens
