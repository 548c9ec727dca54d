#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "apflood/graph.hpp"
#include "apflood/protocol.hpp"
#include "apflood/rng.hpp"

namespace apflood {

/// A pending delivery. Processed in (deliver_at, seq) order.
struct Event {
  std::uint32_t deliver_at = 0;
  std::uint64_t seq = 0;
  NodeId to = 0;
  NodeId from = 0;
  AdvMessage message;
};

struct RunReport {
  std::uint64_t transmissions_total = 0;
  /// Transmissions emitted in each slot. Ends with the 0 of the slot in
  /// which the last deliveries were processed.
  std::vector<std::uint64_t> transmissions_per_slot;
  /// Transmissions sent by each node.
  std::vector<std::uint64_t> transmissions_per_node;
  std::vector<NodeState> route_tables;
  std::uint32_t slots_elapsed = 0;
  /// Deliveries that were processed vs. discarded as loops. Their sum equals
  /// transmissions_total.
  std::uint64_t accepted_deliveries = 0;
  std::uint64_t loop_drops = 0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Fresh per-node state for g.
std::vector<NodeState> initial_states(const Graph& g);

/// One advertisement from `source` with unit link delay: the source emits at
/// slot 0, a transmission sent in slot t is delivered in slot t + 1, and the
/// run ends when nothing is in flight. Route tables in `states` are updated
/// in place; the returned report holds this advertisement's counts and
/// trace only (route_tables left empty).
///
/// `observer`, when set, sees every delivery just before it is processed.
using DeliveryObserver = std::function<void(const Event&)>;
RunReport run_advertisement(const Graph& g, NodeId source, double beta, std::vector<NodeState>& states, Rng& rng,
                            const DeliveryObserver& observer = {});

/// Every node advertises once, in id order, over shared route tables with
/// a single generator seeded from `seed`. Per-slot traces of the individual
/// advertisements are summed slot by slot (each aligned at slot 0).
RunReport run_full_round(const Graph& g, double beta, std::uint64_t seed);

}  // namespace apflood
