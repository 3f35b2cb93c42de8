#pragma once

#include <string>
#include <vector>

#include "turaev/diagram.hpp"
#include "turaev/polynomial.hpp"

namespace turaev {

struct SignedEdge {
  int u = 0, v = 0;   // endpoints
  int sign = 1;       // +1 or -1
  int crossing = -1;  // diagram crossing this edge came from, if any
};

// Multigraph with signed, ordered edges.  The edge order is part of the
// structure: spanning-tree activities depend on it.
class SignedGraph {
 public:
  SignedGraph(int vertices, std::vector<SignedEdge> edges);

  int vertices() const { return vertices_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<SignedEdge>& edges() const { return edges_; }
  const SignedEdge& edge(int i) const { return edges_[i]; }
  int positive_edges() const;
  int negative_edges() const;
  bool connected() const;

  // Every spanning tree as a sorted list of edge indices, found by
  // contraction-deletion on the lowest-indexed non-loop edge.
  std::vector<std::vector<int>> spanning_trees() const;

  // Tutte polynomial in variables {"x", "y"} by deletion-contraction.
  MultiPoly tutte() const;

 private:
  int vertices_;
  std::vector<SignedEdge> edges_;
};

// Activity letters for an edge relative to a spanning tree, written L/D for
// tree edges (live/dead), l/d for non-tree edges, with a trailing apostrophe
// for negative edges.  A tree edge is live when it has the lowest index in
// its cut; a non-tree edge is live when it has the lowest index in its cycle.
struct TreeRecord {
  std::vector<int> edges;  // sorted tree edge indices
  std::string word;        // one letter per graph edge, in edge order
  Laurent weight;          // contribution to the bracket
  int u = 0;               // #L - #l - #L' + #l'
  int v = 0;               // #L + #D, the positive tree edges
};

// All spanning trees of g with their activity words and weights.  The weight
// of a tree is the product over edges of
//   L: -A^-3   D: A     l: -A^3    d: A^-1
//   L': -A^3   D': A^-1 l': -A^-3  d': A
std::vector<TreeRecord> tree_expansion(const SignedGraph& g);

// The (u, v) gradings of an activity word: u = #L - #l - #L' + #l' and
// v = #L + #D counts the positive tree edges.  Throws on malformed words.
std::pair<int, int> word_gradings(const std::string& word);

// The signed monomial a word contributes to the bracket: the product of its
// letter weights (see tree_expansion).  Throws on malformed words.
Laurent word_weight(const std::string& word);

// Kauffman bracket as the sum of tree weights over the canonical Tait graph.
// Connected diagrams only; the Tait construction rejects the rest.
Laurent thistlethwaite_bracket(const Diagram& d);

// Checkerboard graph on one shading class of a connected diagram: one vertex
// per shaded face, one edge per crossing joining the shaded opposite corners.
// The edge is positive exactly when the shaded corners are the pair merged by
// the A-smoothing; with this sign rule the spanning-tree expansion of either
// shading sums to the Kauffman bracket.  shade_black picks the class not
// containing the outer face.
SignedGraph tait_graph(const Diagram& d, bool shade_black);

// The shading with more positive edges; ties go to the black class, so the
// unbounded region ends up unshaded.
SignedGraph canonical_tait(const Diagram& d);

}  // namespace turaev
