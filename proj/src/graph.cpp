#include "apflood/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace apflood {

Graph::Graph(std::size_t node_count, std::initializer_list<std::pair<NodeId, NodeId>> edges)
    : adj_(node_count) {
  for (auto [u, v] : edges) add_edge(u, v);
}

bool Graph::add_edge(NodeId u, NodeId v) {
  if (u >= adj_.size() || v >= adj_.size()) {
    throw std::out_of_range("edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " outside node range [0, " + std::to_string(adj_.size()) + ")");
  }
  if (u == v) throw ValidationError("self-loop on node " + std::to_string(u));
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
  return true;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Link> Graph::links() const {
  std::vector<Link> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adj_.size(); ++u) {
    for (NodeId v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_connected() const {
  if (adj_.empty()) return true;
  std::vector<char> seen(adj_.size(), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : adj_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == adj_.size();
}

double Graph::mean_degree() const {
  if (adj_.empty()) return 0.0;
  return 2.0 * static_cast<double>(edge_count_) / static_cast<double>(adj_.size());
}

bool Path::contains(NodeId v) const {
  return std::find(nodes_.begin(), nodes_.end(), v) != nodes_.end();
}

std::vector<Link> Path::links() const {
  std::vector<Link> out;
  for (std::size_t i = 1; i < nodes_.size(); ++i) out.emplace_back(nodes_[i - 1], nodes_[i]);
  return out;
}

std::string to_string(const Path& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

namespace {

const char* path_defect(const Graph& g, const Path& p) {
  if (p.empty()) return "empty path";
  std::unordered_set<NodeId> seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.contains(p[i])) return "node outside graph";
    if (!seen.insert(p[i]).second) return "repeated node";
    if (i > 0 && !g.has_edge(p[i - 1], p[i])) return "consecutive nodes not adjacent";
  }
  return nullptr;
}

}  // namespace

bool is_valid_path(const Graph& g, const Path& p) { return path_defect(g, p) == nullptr; }

void require_valid_path(const Graph& g, const Path& p) {
  if (const char* why = path_defect(g, p)) {
    throw ValidationError("invalid path " + to_string(p) + ": " + why);
  }
}

}  // namespace apflood
