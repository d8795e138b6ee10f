#include "blowup/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "blowup/forbidden.hpp"

namespace blowup {

VertexSet::VertexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  VertexSet r = *this;
  return r &= o;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= ~o.words_[i];
  return *this;
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w)
    for (auto bits = words_[w]; bits; bits &= bits - 1)
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
  return out;
}

std::size_t VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w])
      return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return size_;
}

CompatGraph::CompatGraph(std::int64_t n, std::vector<DivisorClass> vertices)
    : n_(n), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  adj_.assign(vertices_.size(), VertexSet(vertices_.size()));
}

void CompatGraph::add_edge(std::size_t i, std::size_t j) {
  if (i == j)
    return;
  adj_[i].set(j);
  adj_[j].set(i);
}

std::size_t CompatGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adj_)
    twice += a.count();
  return twice / 2;
}

std::size_t CompatGraph::index_of(const DivisorClass& d) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), d);
  if (it == vertices_.end() || *it != d)
    return size();
  return static_cast<std::size_t>(it - vertices_.begin());
}

CompatGraph CompatGraph::induced(const std::vector<std::size_t>& keep) const {
  std::vector<DivisorClass> vs;
  for (auto i : keep)
    vs.push_back(vertices_[i]);
  CompatGraph g(n_, vs);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j]))
        g.add_edge(g.index_of(vertices_[keep[i]]), g.index_of(vertices_[keep[j]]));
  return g;
}

bool CompatGraph::is_clique(const std::vector<std::size_t>& members) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i] == members[j] || !adjacent(members[i], members[j]))
        return false;
  return true;
}

CompatGraph build_graph(FamilyParam n, std::vector<DivisorClass> vertices, unsigned jobs) {
  CompatGraph g(n.value(), std::move(vertices));
  const std::size_t size = g.size();
  // Each worker fills complete rows; add_edge only touches rows i and j, so
  // rows are collected first and merged afterwards.
  std::vector<std::vector<std::size_t>> rows(size);
  auto fill = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < size; i += step)
      for (std::size_t j = i + 1; j < size; ++j)
        if (is_compatible(n, g.vertex(i), g.vertex(j)).compatible())
          rows[i].push_back(j);
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1 || size < 64) {
    fill(0, 1);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back(fill, w, jobs);
  }
  for (std::size_t i = 0; i < size; ++i)
    for (auto j : rows[i])
      g.add_edge(i, j);
  return g;
}

CompatGraph build_graph(FamilyParam n, const Window& w, unsigned jobs) {
  if (w.empty())
    throw std::invalid_argument("empty window");
  auto g = build_graph(n, w.points(), jobs);
  g.set_window(w);
  return g;
}

namespace {

// MCQ-style search: colour the candidates greedily, branch on the highest
// colour class first, prune when |clique| + colour <= best.
class CliqueSearch {
public:
  explicit CliqueSearch(const CompatGraph& g) : g_(g) {}

  CliqueResult run(VertexSet candidates, std::vector<std::size_t> forced) {
    current_ = std::move(forced);
    best_ = current_;
    expand(std::move(candidates));
    std::sort(best_.begin(), best_.end());
    return {best_.size(), best_};
  }

private:
  void colour_sort(const VertexSet& cand, std::vector<std::size_t>& order,
                   std::vector<std::size_t>& colours) const {
    VertexSet uncoloured = cand;
    std::size_t colour = 0;
    while (!uncoloured.none()) {
      ++colour;
      VertexSet available = uncoloured;
      while (!available.none()) {
        std::size_t v = available.first();
        available.reset(v);
        available -= g_.neighbours(v);
        uncoloured.reset(v);
        order.push_back(v);
        colours.push_back(colour);
      }
    }
  }

  void expand(VertexSet cand) {
    std::vector<std::size_t> order, colours;
    colour_sort(cand, order, colours);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current_.size() + colours[k] <= best_.size())
        return;
      std::size_t v = order[k];
      current_.push_back(v);
      VertexSet next = cand & g_.neighbours(v);
      if (next.none()) {
        if (current_.size() > best_.size())
          best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      cand.reset(v);
    }
  }

  const CompatGraph& g_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

void bron_kerbosch(const CompatGraph& g, std::vector<std::size_t>& r, VertexSet p, VertexSet x,
                   const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (p.none() && x.none()) {
    auto sorted = r;
    std::sort(sorted.begin(), sorted.end());
    visit(sorted);
    return;
  }
  // Pivot: vertex of P u X with most neighbours in P.
  std::size_t pivot = g.size(), best = 0;
  for (const auto* set : {&p, &x})
    for (auto u : set->members()) {
      auto c = (p & g.neighbours(u)).count();
      if (pivot == g.size() || c > best) {
        pivot = u;
        best = c;
      }
    }
  VertexSet branch = p;
  branch -= g.neighbours(pivot);
  for (auto v : branch.members()) {
    r.push_back(v);
    bron_kerbosch(g, r, p & g.neighbours(v), x & g.neighbours(v), visit);
    r.pop_back();
    p.reset(v);
    x.set(v);
  }
}

} // namespace

CliqueResult max_clique(const CompatGraph& g) {
  if (g.size() == 0)
    throw std::invalid_argument("max_clique on an empty graph");
  VertexSet all(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    all.set(i);
  return CliqueSearch(g).run(std::move(all), {});
}

CliqueResult max_clique_containing(const CompatGraph& g, std::size_t v) {
  if (v >= g.size())
    throw std::out_of_range("vertex index out of range");
  return CliqueSearch(g).run(g.neighbours(v), {v});
}

void for_each_maximal_clique(const CompatGraph& g,
                             const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (g.size() == 0)
    return;
  VertexSet p(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    p.set(i);
  std::vector<std::size_t> r;
  bron_kerbosch(g, r, std::move(p), VertexSet(g.size()), visit);
}

void to_json(nlohmann::json& j, const CompatGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (auto k : g.neighbours(i).members())
      if (k > i)
        edges.push_back({i, k});
  j = {{"n", g.n()}, {"window", nullptr}, {"vertices", g.vertices()}, {"edges", edges}};
  if (g.window())
    j["window"] = *g.window();
}

std::string to_dot(const CompatGraph& g) {
  std::ostringstream os;
  os << "graph compat {\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    os << "  v" << i << " [label=\"" << g.vertex(i) << "\"];\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    for (auto k : g.neighbours(i).members())
      if (k > i)
        os << "  v" << i << " -- v" << k << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace blowup
