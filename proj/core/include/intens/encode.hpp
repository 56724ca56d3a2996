#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "intens/language.hpp"
#include "intens/process.hpp"

namespace intens {

/// Deliberately broken variants of the synchronism encoder, shipped so the
/// validity harness can demonstrate that its checks are able to fail:
/// drop_ack omits the acknowledgment output, drop_ok translates success to
/// nil, loop_ack attaches a diverging acknowledgment loop to every output,
/// and tag_ack leaks a position-dependent free name into every
/// acknowledgment, so no per-operator context can reproduce the encoding.
enum class SynchMutation { none, drop_ack, drop_ok, loop_ack, tag_ack };

/// Synchronous communication into asynchronous intensional communication:
/// inputs receive an extra fresh name and echo it back; outputs restrict a
/// fresh name, send it compounded with the first payload, and park their
/// continuation under an input that only the echo can satisfy. One source
/// step becomes exactly two target steps.
Process encode_synch(const Process& p, const Language& src,
                     SynchMutation m = SynchMutation::none);

/// Polyadic communication into monadic intensional communication: tuples
/// fold into a single left-nested compound seeded with the reserved name
/// `#r`, so tuples of different arity can never match each other.
Process encode_arity(const Process& p, const Language& src);

/// Channel-based communication into dataspace intensional communication:
/// the channel moves into the first tuple slot, compounded with the payload
/// on the output side and name-matched on the input side.
Process encode_medium(const Process& p, const Language& src);

/// The order embedding for leq(from, to): asynchronous outputs gain a nil
/// continuation going synchronous, dataspace prefixes gain the reserved
/// channel `#k<arity>` going channel-based; arity and matching raises are
/// identities.
Process embed(const Process& p, const Language& from, const Language& to);

struct EncodingStep {
  enum class Kind { synch, arity, medium, embed };
  Kind kind;
  Language source;
  Language target;
  int source_steps;  // reduction-step profile: source_steps -> target_steps
  int target_steps;
};

std::string describe(const EncodingStep& step);

/// Requested target cannot be reached: the source out-matches it and no
/// valid encoding exists into a non-intensional language.
class UnreachableTarget : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Stage plan from one language into another: the identity embedding when
/// leq holds, otherwise matching-raise, then synchronism, then arity, then
/// medium, then a final embedding. Throws UnreachableTarget when `to` is
/// non-intensional and not above `from`.
std::vector<EncodingStep> plan_encoding(const Language& from, const Language& to);

Process apply_step(const EncodingStep& step, const Process& p,
                   SynchMutation m = SynchMutation::none);

/// Composite translation along plan_encoding, asserting conformance after
/// every stage.
Process encode_to(const Process& p, const Language& from, const Language& to,
                  SynchMutation m = SynchMutation::none);

/// Product of the per-step reduction profiles (2 when a synchronism stage is
/// present, 1 otherwise).
int step_factor(std::span<const EncodingStep> steps);

/// Subprocesses in traversal order (continuations, bodies, branches).
std::vector<Process> process_children(const Process& p);

/// Same top operator as `p` with the children replaced.
Process rebuild_with_children(const Process& p, std::span<const Process> children);

/// The top-level clause of a stage applied to pre-encoded children: what the
/// stage's compositional context produces for the root operator of `p`.
/// Comparing this with apply_step(step, p) realizes the compositionality
/// check.
Process apply_step_one_level(const EncodingStep& step, const Process& p,
                             std::span<const Process> encoded_children,
                             SynchMutation m = SynchMutation::none);

}  // namespace intens
