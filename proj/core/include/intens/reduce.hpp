#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "intens/canonical.hpp"
#include "intens/language.hpp"
#include "intens/subst.hpp"

namespace intens {

/// One enabled interaction in a canonical form: an output thread and an
/// input thread whose channels agree and whose poly-match is defined. A
/// replicated thread takes part through one unfolding of its body; the
/// component index then locates the piece inside that unfolding.
struct Redex {
  int output_thread;
  int input_thread;
  Substitution subst;
  bool output_from_unfold = false;
  int output_component = -1;
  bool input_from_unfold = false;
  int input_component = -1;

  friend bool operator==(const Redex&, const Redex&) = default;
};

/// All redexes, in deterministic thread-index order. Each replicated thread
/// is unfolded exactly once for the enumeration.
std::vector<Redex> redexes(const CanonicalForm& c, const Language& lang);

/// Fires one redex: the input thread is consumed, the output thread is
/// consumed (asynchronous) or replaced by its continuation (synchronous),
/// and the matched substitution is applied to the input's continuation.
/// Throws std::invalid_argument if `r` is not a redex of `c` (stale redex).
CanonicalForm step(const CanonicalForm& c, const Redex& r, const Language& lang);

struct Limits {
  int depth = 64;
  int nodes = 10000;
};

struct ReductionGraph {
  std::vector<CanonicalForm> nodes;      // nodes[0] is the root
  std::vector<std::vector<int>> edges;   // sorted, deduplicated successor ids
  std::vector<int> depth;                // BFS depth per node
  int root = 0;
  bool truncated = false;        // some limit cut the exploration short
  bool depth_truncated = false;  // specifically the depth limit
  std::vector<int> success_nodes;
  bool cycle_found = false;
  std::unordered_map<std::string, int> index;  // canonical key -> node id

  bool has_success() const { return !success_nodes.empty(); }
  int node_id(const std::string& key) const;
};

/// Breadth-first exploration from canonicalize(p), deduplicating states by
/// canonical key. Limits must be >= 1.
ReductionGraph explore(const Process& p, const Language& lang, const Limits& limits);

enum class SuccessVerdict { yes, not_within_bounds };

/// Whether a state with a top-level success thread is reachable within the
/// exploration bounds.
SuccessVerdict succeeds(const Process& p, const Language& lang, const Limits& limits);

/// `<id>: <pretty-form>` lines followed by `edge: <id> -> <id>` lines.
std::string to_edge_list(const ReductionGraph& g);

/// Graphviz rendering for visualization tools.
std::string to_dot(const ReductionGraph& g);

}  // namespace intens
