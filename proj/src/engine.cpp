#include "apflood/engine.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace apflood {

namespace {

struct LaterEvent {
  bool operator()(const Event& a, const Event& b) const {
    if (a.deliver_at != b.deliver_at) return a.deliver_at > b.deliver_at;
    return a.seq > b.seq;
  }
};

void add_slot(std::vector<std::uint64_t>& trace, std::uint32_t slot, std::uint64_t count) {
  if (trace.size() <= slot) trace.resize(slot + 1, 0);
  trace[slot] += count;
}

}  // namespace

std::vector<NodeState> initial_states(const Graph& g) {
  std::vector<NodeState> states;
  states.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) states.emplace_back(v, g.node_count());
  return states;
}

RunReport run_advertisement(const Graph& g, NodeId source, double beta, std::vector<NodeState>& states, Rng& rng,
                            const DeliveryObserver& observer) {
  require_valid_beta(beta);
  if (!g.contains(source)) throw std::out_of_range("source " + std::to_string(source) + " out of range");
  if (states.size() != g.node_count()) throw std::invalid_argument("one NodeState per node required");

  RunReport report;
  report.transmissions_per_node.assign(g.node_count(), 0);
  std::priority_queue<Event, std::vector<Event>, LaterEvent> queue;
  std::uint64_t seq = 0;

  auto emit = [&](NodeId sender, std::uint32_t slot, FloodDecision&& decision) {
    const auto count = decision.transmissions.size();
    add_slot(report.transmissions_per_slot, slot, count);
    report.transmissions_per_node[sender] += count;
    report.transmissions_total += count;
    for (Transmission& t : decision.transmissions) {
      queue.push(Event{slot + 1, seq++, t.to, sender, std::move(t.message)});
    }
  };

  emit(source, 0, initiate_adv(source, g.neighbors(source)));
  while (!queue.empty()) {
    Event ev = queue.top();
    queue.pop();
    report.slots_elapsed = ev.deliver_at;
    if (observer) observer(ev);
    FloodDecision decision = handle_adv(states[ev.to], ev.message, ev.from, beta, g.neighbors(ev.to), rng);
    if (decision.loop_dropped) {
      ++report.loop_drops;
    } else {
      ++report.accepted_deliveries;
    }
    emit(ev.to, ev.deliver_at, std::move(decision));
  }
  return report;
}

RunReport run_full_round(const Graph& g, double beta, std::uint64_t seed) {
  require_valid_beta(beta);
  Rng rng(seed);
  RunReport total;
  total.route_tables = initial_states(g);
  total.transmissions_per_node.assign(g.node_count(), 0);
  for (NodeId source = 0; source < g.node_count(); ++source) {
    const RunReport one = run_advertisement(g, source, beta, total.route_tables, rng);
    total.transmissions_total += one.transmissions_total;
    total.accepted_deliveries += one.accepted_deliveries;
    total.loop_drops += one.loop_drops;
    total.slots_elapsed = std::max(total.slots_elapsed, one.slots_elapsed);
    for (std::size_t t = 0; t < one.transmissions_per_slot.size(); ++t) {
      add_slot(total.transmissions_per_slot, static_cast<std::uint32_t>(t), one.transmissions_per_slot[t]);
    }
    for (std::size_t v = 0; v < g.node_count(); ++v) total.transmissions_per_node[v] += one.transmissions_per_node[v];
  }
  return total;
}

}  // namespace apflood
