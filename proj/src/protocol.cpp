#include "apflood/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "apflood/oracle.hpp"

namespace apflood {

bool AdvMessage::visited(NodeId v) const { return std::find(ids.begin(), ids.end(), v) != ids.end(); }

void NodeState::reset_counters() { std::fill(counters_.begin(), counters_.end(), 0); }

void require_valid_beta(double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("beta must lie in [0, 1), got " + std::to_string(beta));
  }
}

double flood_probability(double beta, std::uint32_t n) {
  require_valid_beta(beta);
  if (n == 0) return 1.0;
  return std::pow(beta, static_cast<double>(n));
}

std::vector<std::pair<NodeId, Path>> candidate_paths(NodeId j, const AdvMessage& adv) {
  std::vector<std::pair<NodeId, Path>> out;
  const std::size_t len = adv.ids.size();
  out.reserve(len);
  // Nearest destination first: ids[len-1] at one hop, down to the source.
  for (std::size_t i = len; i-- > 0;) {
    std::vector<NodeId> nodes;
    nodes.reserve(len - i + 1);
    nodes.push_back(j);
    for (std::size_t k = len; k-- > i;) nodes.push_back(adv.ids[k]);
    out.emplace_back(adv.ids[i], Path(std::move(nodes)));
  }
  return out;
}

RouteUpdate consider_candidate(RouteEntry& entry, NodeId owner, NodeId destination, const Path& candidate,
                               Rng& rng) {
  if (candidate.hops() == 0 || candidate.front() != owner || candidate.back() != destination) {
    throw std::invalid_argument("candidate " + to_string(candidate) + " does not run " + std::to_string(owner) +
                                " -> " + std::to_string(destination));
  }

  if (!entry.primary || candidate.hops() < entry.primary->hops()) {
    entry.primary = candidate;
    return RouteUpdate::kPrimary;
  }
  const Path& primary = *entry.primary;
  if (candidate == primary) return RouteUpdate::kNone;
  if (!entry.secondary) {
    entry.secondary = candidate;
    return RouteUpdate::kSecondary;
  }
  if (candidate == *entry.secondary) return RouteUpdate::kNone;

  const std::size_t cand_shared = similarity(primary, candidate);
  const std::size_t held_shared = similarity(primary, *entry.secondary);
  const std::size_t cand_len = candidate.hops();
  const std::size_t held_len = entry.secondary->hops();

  bool take = cand_shared < held_shared || (cand_shared == held_shared && cand_len < held_len);
  if (!take && cand_shared == held_shared && cand_len == held_len) take = rng.coin();
  if (!take) return RouteUpdate::kNone;
  entry.secondary = candidate;
  return RouteUpdate::kSecondary;
}

FloodDecision handle_adv(NodeState& state, const AdvMessage& adv, NodeId from, double beta,
                         std::span<const NodeId> neighbors, Rng& rng) {
  if (adv.ids.empty()) throw std::invalid_argument("empty advertisement");
  if (adv.last_hop() != from) {
    throw std::invalid_argument("advertisement last hop " + std::to_string(adv.last_hop()) +
                                " differs from sender " + std::to_string(from));
  }
  if (std::find(neighbors.begin(), neighbors.end(), from) == neighbors.end()) {
    throw std::invalid_argument("node " + std::to_string(state.id()) + " received from non-neighbor " +
                                std::to_string(from));
  }

  FloodDecision decision;
  const NodeId self = state.id();
  if (adv.visited(self)) {
    decision.loop_dropped = true;
    return decision;
  }

  for (const auto& [destination, path] : candidate_paths(self, adv)) {
    consider_candidate(state.route(destination), self, destination, path, rng);
  }

  AdvMessage forwarded = adv;
  forwarded.ids.push_back(self);
  const NodeId source = adv.source();
  const double p = flood_probability(beta, state.counter(source));
  for (NodeId next : neighbors) {
    if (next == from) continue;
    if (rng.uniform() < p) decision.transmissions.push_back({next, forwarded});
  }
  state.increment_counter(source);
  return decision;
}

FloodDecision initiate_adv(NodeId source, std::span<const NodeId> neighbors) {
  FloodDecision decision;
  decision.transmissions.reserve(neighbors.size());
  for (NodeId next : neighbors) decision.transmissions.push_back({next, AdvMessage{{source}}});
  return decision;
}

}  // namespace apflood
