#include "twogen/stallings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace twogen {

namespace {

using Key = std::pair<Generator, int>;

class Partition {
 public:
  explicit Partition(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // Returns (kept, absorbed).
  std::pair<std::size_t, std::size_t> unite(std::size_t a, std::size_t b) {
    if (size_[a] < size_[b]) {
      std::swap(a, b);
    }
    parent_[b] = a;
    size_[a] += size_[b];
    return {a, b};
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

SubgroupGraph::SubgroupGraph(std::size_t vertices, std::vector<Edge> edges,
                             bool folded)
    : vertices_(vertices), edges_(std::move(edges)), folded_(folded) {
  if (vertices_ == 0) {
    throw std::invalid_argument("a subgroup graph has at least a basepoint");
  }
  for (auto const& e : edges_) {
    if (e.from >= vertices_ || e.to >= vertices_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
}

std::optional<std::size_t> SubgroupGraph::step(std::size_t v,
                                               Letter const& l) const {
  for (auto const& e : edges_) {
    if (!(e.label == l.gen)) {
      continue;
    }
    if (l.sign > 0 && e.from == v) {
      return e.to;
    }
    if (l.sign < 0 && e.to == v) {
      return e.from;
    }
  }
  return std::nullopt;
}

SubgroupGraph build_graph(std::vector<Word> const& generators,
                          std::vector<Generator> const& alphabet) {
  SubgroupGraph g;
  std::set<Generator> allowed(alphabet.begin(), alphabet.end());
  for (std::size_t k = 0; k < generators.size(); ++k) {
    auto const& w = generators[k];
    if (w.empty()) {
      g.notes_.push_back("generator " + std::to_string(k) +
                         " is the empty word; dropped");
      continue;
    }
    std::size_t prev = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto const& l = w[i];
      if (!allowed.empty() && !allowed.contains(l.gen)) {
        throw std::invalid_argument("letter " + to_string(l.gen) +
                                    " is outside the alphabet");
      }
      std::size_t next = i + 1 == w.size() ? 0 : g.vertices_++;
      if (l.sign > 0) {
        g.edges_.push_back({prev, next, l.gen});
      } else {
        g.edges_.push_back({next, prev, l.gen});
      }
      prev = next;
    }
  }
  return g;
}

SubgroupGraph fold(SubgroupGraph const& g,
                   std::optional<std::uint64_t> shuffle_seed) {
  std::size_t n = g.vertex_count();
  Partition part(n);
  std::vector<std::map<Key, std::size_t>> adj(n);
  std::deque<std::pair<std::size_t, std::size_t>> pending;

  auto insert = [&](std::size_t u, Key const& key, std::size_t v) {
    u = part.find(u);
    auto [it, fresh] = adj[u].emplace(key, v);
    if (!fresh) {
      pending.emplace_back(it->second, v);
    }
  };

  std::vector<SubgroupGraph::Edge> edges = g.edges();
  std::mt19937_64 rng(shuffle_seed.value_or(0));
  if (shuffle_seed) {
    std::shuffle(edges.begin(), edges.end(), rng);
  }
  for (auto const& e : edges) {
    insert(e.from, {e.label, +1}, e.to);
    insert(e.to, {e.label, -1}, e.from);
  }

  while (!pending.empty()) {
    std::pair<std::size_t, std::size_t> ev;
    if (shuffle_seed) {
      std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
      auto it = pending.begin() + static_cast<std::ptrdiff_t>(pick(rng));
      ev = *it;
      pending.erase(it);
    } else {
      ev = pending.front();
      pending.pop_front();
    }
    std::size_t a = part.find(ev.first);
    std::size_t b = part.find(ev.second);
    if (a == b) {
      continue;
    }
    auto [kept, absorbed] = part.unite(a, b);
    auto moved = std::move(adj[absorbed]);
    adj[absorbed].clear();
    for (auto const& [key, target] : moved) {
      insert(kept, key, target);
    }
  }

  std::vector<std::size_t> label(n, n);
  std::size_t next = 0;
  label[part.find(0)] = next++;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = part.find(v);
    if (label[r] == n) {
      label[r] = next++;
    }
  }
  std::vector<SubgroupGraph::Edge> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (part.find(v) != v) {
      continue;
    }
    for (auto const& [key, target] : adj[v]) {
      if (key.second > 0) {
        out.push_back({label[v], label[part.find(target)], key.first});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return SubgroupGraph(next, std::move(out), true);
}

long rank(SubgroupGraph const& g) {
  if (!g.folded()) {
    throw UnfoldedGraph();
  }
  return static_cast<long>(g.edges().size()) -
         static_cast<long>(g.vertex_count()) + 1;
}

bool member(SubgroupGraph const& g, Word const& w) {
  if (!g.folded()) {
    throw UnfoldedGraph();
  }
  std::map<std::tuple<std::size_t, Generator, int>, std::size_t> index;
  for (auto const& e : g.edges()) {
    index[{e.from, e.label, +1}] = e.to;
    index[{e.to, e.label, -1}] = e.from;
  }
  std::size_t v = g.basepoint();
  for (auto const& l : w.letters()) {
    auto it = index.find({v, l.gen, l.sign});
    if (it == index.end()) {
      return false;
    }
    v = it->second;
  }
  return v == g.basepoint();
}

bool is_free_basis(std::vector<Word> const& words) {
  for (auto const& w : words) {
    if (w.empty()) {
      return false;
    }
  }
  return rank(fold(build_graph(words))) == static_cast<long>(words.size());
}

SubgroupGraph canonical_form(SubgroupGraph const& g) {
  std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<Key, std::size_t>>> adj(n);
  for (auto const& e : g.edges()) {
    adj[e.from].push_back({{e.label, +1}, e.to});
    adj[e.to].push_back({{e.label, -1}, e.from});
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
  }
  std::vector<std::size_t> label(n, n);
  std::deque<std::size_t> queue{g.basepoint()};
  std::size_t next = 0;
  label[g.basepoint()] = next++;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (auto const& [key, t] : adj[v]) {
      if (label[t] == n) {
        label[t] = next++;
        queue.push_back(t);
      }
    }
  }
  for (auto& l : label) {
    if (l == n) {
      l = next++;
    }
  }
  std::vector<SubgroupGraph::Edge> edges;
  for (auto const& e : g.edges()) {
    edges.push_back({label[e.from], label[e.to], e.label});
  }
  std::sort(edges.begin(), edges.end());
  return SubgroupGraph(n, std::move(edges), g.folded());
}

}  // namespace twogen
