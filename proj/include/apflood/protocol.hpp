#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "apflood/graph.hpp"
#include "apflood/rng.hpp"

namespace apflood {

/// Advertisement. ids[0] is the originating source; every relay appends
/// itself before forwarding.
struct AdvMessage {
  std::vector<NodeId> ids;

  NodeId source() const { return ids.front(); }
  NodeId last_hop() const { return ids.back(); }
  bool visited(NodeId v) const;

  friend bool operator==(const AdvMessage&, const AdvMessage&) = default;
};

/// Primary and secondary route from the owning node toward one destination.
struct RouteEntry {
  std::optional<Path> primary;
  std::optional<Path> secondary;

  friend bool operator==(const RouteEntry&, const RouteEntry&) = default;
};

/// Per-node protocol state: routes indexed by destination and the
/// per-source reception counters n_s.
class NodeState {
 public:
  NodeState() = default;
  NodeState(NodeId id, std::size_t node_count) : id_(id), counters_(node_count, 0), routes_(node_count) {}

  NodeId id() const noexcept { return id_; }
  std::uint32_t counter(NodeId source) const { return counters_.at(source); }
  void increment_counter(NodeId source) { ++counters_.at(source); }
  /// Round boundary.
  void reset_counters();

  const RouteEntry& route(NodeId destination) const { return routes_.at(destination); }
  RouteEntry& route(NodeId destination) { return routes_.at(destination); }
  std::span<const RouteEntry> routes() const noexcept { return routes_; }

  friend bool operator==(const NodeState&, const NodeState&) = default;

 private:
  NodeId id_ = 0;
  std::vector<std::uint32_t> counters_;
  std::vector<RouteEntry> routes_;
};

struct Transmission {
  NodeId to;
  AdvMessage message;
};

struct FloodDecision {
  std::vector<Transmission> transmissions;
  /// The receiver found itself in the id list and discarded the message.
  bool loop_dropped = false;
};

/// beta^n, with beta^0 = 1 for every beta (including 0).
/// Throws std::invalid_argument unless 0 <= beta < 1.
double flood_probability(double beta, std::uint32_t n);

void require_valid_beta(double beta);

/// Routes node j overhears from adv: for each i in [0, len), destination
/// ids[i] reached by the reversed suffix j, ids[len-1], ..., ids[i].
/// j must not already appear in adv.
std::vector<std::pair<NodeId, Path>> candidate_paths(NodeId j, const AdvMessage& adv);

enum class RouteUpdate { kNone, kPrimary, kSecondary };

/// Offers one overheard path to a route entry.
///
/// The primary is taken when absent or when the candidate is strictly
/// shorter; a candidate taken as primary is not also considered as
/// secondary. Otherwise the candidate becomes secondary when none is stored,
/// when it shares fewer links with the current primary, or when it shares
/// as many and is strictly shorter. Equal (shared links, length) ties are
/// settled by a fair coin from rng. The secondary never equals the primary.
///
/// Throws std::invalid_argument if the candidate does not run owner -> destination.
RouteUpdate consider_candidate(RouteEntry& entry, NodeId owner, NodeId destination, const Path& candidate,
                               Rng& rng);

/// Processes one received advertisement at `state`'s node.
///
/// Loops are dropped untouched. Otherwise every overheard route is offered
/// to the table, the node appends itself, and each neighbor other than
/// `from` independently receives a copy with probability beta^n_s, where
/// n_s counts earlier non-loop receptions from the same source. The counter
/// is incremented after the draws.
FloodDecision handle_adv(NodeState& state, const AdvMessage& adv, NodeId from, double beta,
                         std::span<const NodeId> neighbors, Rng& rng);

/// The source's unconditional first transmission of [source] to each neighbor.
FloodDecision initiate_adv(NodeId source, std::span<const NodeId> neighbors);

}  // namespace apflood
