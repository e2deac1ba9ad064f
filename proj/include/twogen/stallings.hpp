#ifndef TWOGEN_STALLINGS_HPP_
#define TWOGEN_STALLINGS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twogen/word.hpp"

namespace twogen {

// Basepointed graph with directed edges labelled by generators.  An edge
// u --g--> v is read forwards by the letter g and backwards by g^-1.
class SubgroupGraph {
 public:
  struct Edge {
    std::size_t from;
    std::size_t to;
    Generator label;

    friend auto operator<=>(Edge const&, Edge const&) = default;
    friend bool operator==(Edge const&, Edge const&) = default;
  };

  SubgroupGraph() = default;
  SubgroupGraph(std::size_t vertices, std::vector<Edge> edges, bool folded);

  std::size_t basepoint() const { return 0; }
  std::size_t vertex_count() const { return vertices_; }
  std::vector<Edge> const& edges() const { return edges_; }
  bool folded() const { return folded_; }
  // Notes produced while building (dropped empty generators and so on).
  std::vector<std::string> const& notes() const { return notes_; }

  // Target of the edge read by `l` from vertex v, if exactly determined.
  // Only meaningful on folded graphs.
  std::optional<std::size_t> step(std::size_t v, Letter const& l) const;

  // Labelled-graph equality; notes are ignored.
  friend bool operator==(SubgroupGraph const& a, SubgroupGraph const& b) {
    return a.vertices_ == b.vertices_ && a.folded_ == b.folded_ &&
           a.edges_ == b.edges_;
  }

 private:
  friend SubgroupGraph build_graph(std::vector<Word> const&,
                                   std::vector<Generator> const&);

  std::size_t vertices_ = 1;
  std::vector<Edge> edges_;
  bool folded_ = false;
  std::vector<std::string> notes_;
};

// Wedge of one loop per generator word at the basepoint.  Empty words are
// dropped with a note; letters outside `alphabet` throw
// std::invalid_argument.  An empty alphabet accepts every generator.
SubgroupGraph build_graph(std::vector<Word> const& generators,
                          std::vector<Generator> const& alphabet = {});

// Stallings folding via a queue of vertex identifications over a union-find
// partition.  With a seed the edge order and queue order are shuffled; the
// result is the same labelled graph up to isomorphism either way.
SubgroupGraph fold(SubgroupGraph const& g,
                   std::optional<std::uint64_t> shuffle_seed = std::nullopt);

class UnfoldedGraph : public std::logic_error {
 public:
  UnfoldedGraph() : std::logic_error("operation needs a folded graph") {}
};

// First Betti number |E| - |V| + 1.  Throws UnfoldedGraph.
long rank(SubgroupGraph const& g);

// Whether w reads a closed path at the basepoint.  Throws UnfoldedGraph.
bool member(SubgroupGraph const& g, Word const& w);

// True iff the words freely generate a free group of rank words.size().
bool is_free_basis(std::vector<Word> const& words);

// Vertices renumbered by breadth-first search from the basepoint, taking
// outgoing then incoming edges in label order; edges sorted.  Two folded
// graphs are isomorphic as basepointed labelled graphs iff their canonical
// forms are equal.
SubgroupGraph canonical_form(SubgroupGraph const& g);

}  // namespace twogen

#endif  // TWOGEN_STALLINGS_HPP_
