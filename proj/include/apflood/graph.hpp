#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace apflood {

using NodeId = std::uint32_t;

/// Raised by the topology reader. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when a well-formed input violates a structural requirement
/// (disconnected topology, invalid path for a graph, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected link with normalized endpoints (a < b).
struct Link {
  NodeId a{};
  NodeId b{};

  Link() = default;
  Link(NodeId u, NodeId v) : a(u < v ? u : v), b(u < v ? v : u) {}

  friend bool operator==(const Link&, const Link&) = default;
  friend auto operator<=>(const Link&, const Link&) = default;
};

/// Undirected simple graph on nodes 0..N-1. Neighbor lists are kept sorted,
/// so iteration order is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count) : adj_(node_count) {}
  Graph(std::size_t node_count, std::initializer_list<std::pair<NodeId, NodeId>> edges);

  /// Inserts u-v. Duplicates collapse; self-loops and out-of-range ids throw.
  /// Returns false when the link was already present.
  bool add_edge(NodeId u, NodeId v);

  std::size_t node_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t degree(NodeId u) const { return adj_.at(u).size(); }
  std::span<const NodeId> neighbors(NodeId u) const { return adj_.at(u); }
  bool has_edge(NodeId u, NodeId v) const;
  bool contains(NodeId u) const noexcept { return u < adj_.size(); }

  /// All links, sorted by (min endpoint, max endpoint).
  std::vector<Link> links() const;

  /// Every node reachable from node 0. The empty graph counts as connected.
  bool is_connected() const;

  double mean_degree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<NodeId>> adj_;
  std::size_t edge_count_ = 0;
};

/// Loop-free node sequence. Hop length is node count minus one.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {}
  Path(std::initializer_list<NodeId> nodes) : nodes_(nodes) {}

  std::size_t hops() const noexcept { return nodes_.empty() ? 0 : nodes_.size() - 1; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  NodeId front() const { return nodes_.front(); }
  NodeId back() const { return nodes_.back(); }
  NodeId operator[](std::size_t i) const { return nodes_[i]; }
  std::span<const NodeId> nodes() const noexcept { return nodes_; }
  bool contains(NodeId v) const;
  std::vector<Link> links() const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  std::vector<NodeId> nodes_;
};

std::string to_string(const Path& p);

/// True when p is non-empty, simple, and every hop is a link of g.
bool is_valid_path(const Graph& g, const Path& p);

/// Throws ValidationError naming the first defect.
void require_valid_path(const Graph& g, const Path& p);

}  // namespace apflood
