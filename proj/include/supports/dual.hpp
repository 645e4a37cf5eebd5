#pragma once

#include "supports/graph.hpp"
#include "supports/treedecomp.hpp"

namespace supports {

struct SparsityReport {
  int k = 0;          // max number of members intersecting one bag
  int worst_bag = -1;  // lowest node id attaining the max
};

SparsityReport sparsity(const Graph& g, const SubgraphFamily& fam, const TreeDecomposition& td);

// Algorithm k-SDS: members intersecting a common bag become a clique.
// Labels are the member indices 0..|fam|-1.
Support k_sds(const Graph& g, const SubgraphFamily& fam, const TreeDecomposition& td);

struct PushEntry {
  int pushed = -1;
  int pusher = -1;
  std::pair<int, int> adhesion_edge{-1, -1};    // (child, parent) tree edge
  std::pair<int, int> connecting_edge{-1, -1};  // u in pushed-after, v in pusher
  std::vector<int> before;                      // pushed member before this push
  std::vector<int> after;                       // = before \ pusher_at_push
  std::vector<int> pusher_at_push;
};

struct PushLedger {
  std::vector<PushEntry> entries;
  SubgraphFamily final_family;    // bijective with the input family
  std::vector<int> unique_map;    // member index -> representative index in unique(H')
  std::vector<int> push_counts;   // per member; at most 1 for non-piercing inputs
};

// Post-order pushing over the adhesion sets: per realized trace the pusher is
// the member with minimal restriction to G_x (lowest index on ties); every
// same-trace member properly extending it inside G_x is replaced by the
// difference. g must be the chordal completion for the decomposition and fam
// containment-free. Detects piercing breakdowns (difference mismatch,
// disconnected difference, missing connecting edge) and refuses.
PushLedger push_sparsify(const Graph& g, const SubgraphFamily& fam, const TreeDecomposition& td);

// Full dual pipeline: containment reduction, pushing, k-SDS on unique(H'),
// duplicate and containment pendants. Labels are the original member indices.
Support dual_support(const GraphSystem& sys, const TreeDecomposition& td);

Support build_dual(const GraphSystem& sys, const TreeDecomposition* provided = nullptr);

// Shared core used by the dual and intersection pipelines. When the
// decomposition is already k-sparse for the target bound, k-SDS runs
// directly (pushing is only sound for non-piercing inputs);
// otherwise: containment reduction, pushing, k-SDS on unique(H'),
// re-attachment. Exposes the ledger for audits.
struct DualCore {
  Support support;
  PushLedger ledger;               // empty on the sparse shortcut
  std::vector<int> kept;           // original indices behind the ledger's positions
  bool pushed = false;
};

DualCore dual_pipeline_core(const Graph& chordal_host, const SubgraphFamily& fam,
                            const TreeDecomposition& rooted_td, double sparsity_bound,
                            bool force_push = false);

Support dual_support(const GraphSystem& sys, const TreeDecomposition& td, bool force_push);

}  // namespace supports
