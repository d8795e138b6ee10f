#ifndef BLOWUP_GRAPH_HPP
#define BLOWUP_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blowup/divisor.hpp"
#include "blowup/report.hpp"

namespace blowup {

/// Fixed-size bit set over vertex indices.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t size);

  std::size_t capacity() const { return size_; }
  bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  std::size_t count() const;
  bool none() const;
  VertexSet operator&(const VertexSet& o) const;
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  /// Ascending member indices.
  std::vector<std::size_t> members() const;
  /// Smallest member, or capacity() when empty.
  std::size_t first() const;

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Mutual-compatibility graph over divisor classes, vertices in lexicographic
/// (a,b,c) order.
class CompatGraph {
public:
  CompatGraph() = default;
  CompatGraph(std::int64_t n, std::vector<DivisorClass> vertices);

  std::int64_t n() const { return n_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<DivisorClass>& vertices() const { return vertices_; }
  const DivisorClass& vertex(std::size_t i) const { return vertices_[i]; }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i].test(j); }
  const VertexSet& neighbours(std::size_t i) const { return adj_[i]; }
  void add_edge(std::size_t i, std::size_t j);
  std::size_t edge_count() const;
  /// Index of d, or size() when absent.
  std::size_t index_of(const DivisorClass& d) const;
  /// Subgraph on the given vertex indices, keeping their order.
  CompatGraph induced(const std::vector<std::size_t>& keep) const;
  bool is_clique(const std::vector<std::size_t>& members) const;

  const std::optional<Window>& window() const { return window_; }
  void set_window(const Window& w) { window_ = w; }

private:
  std::int64_t n_ = 0;
  std::optional<Window> window_;
  std::vector<DivisorClass> vertices_;
  std::vector<VertexSet> adj_;
};

/// Graph over the given classes with edges by is_compatible. jobs > 1 splits
/// the rows over worker threads.
CompatGraph build_graph(FamilyParam n, std::vector<DivisorClass> vertices, unsigned jobs = 1);
CompatGraph build_graph(FamilyParam n, const Window& w, unsigned jobs = 1);

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::size_t> members; // ascending vertex indices
};

/// Exact maximum clique by branch and bound with greedy colouring bounds.
/// Deterministic for a fixed vertex order. Throws on an empty graph.
CliqueResult max_clique(const CompatGraph& g);

/// Maximum clique among cliques containing vertex v.
CliqueResult max_clique_containing(const CompatGraph& g, std::size_t v);

/// Calls visit on every maximal clique (Bron-Kerbosch with pivoting).
void for_each_maximal_clique(const CompatGraph& g,
                             const std::function<void(const std::vector<std::size_t>&)>& visit);

void to_json(nlohmann::json& j, const CompatGraph& g);
std::string to_dot(const CompatGraph& g);

} // namespace blowup

#endif // BLOWUP_GRAPH_HPP
