#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "turaev/diagram.hpp"
#include "turaev/polynomial.hpp"

namespace turaev {

// A permutation of {1..m} stored by images.  Cycle notation renders as
// "(1 2 3 4)(5 6)" with fixed points omitted; the identity renders as "()".
class Perm {
 public:
  explicit Perm(int m);  // identity on {1..m}
  static Perm from_cycles(int m, const std::vector<std::vector<int>>& cycles);
  static Perm parse(int m, const std::string& text);

  int size() const { return static_cast<int>(img_.size()) - 1; }
  int operator()(int i) const;
  bool is_identity() const;
  bool is_involution_without_fixed_points() const;
  Perm inverse() const;
  Perm after(const Perm& other) const;  // x -> (*this)(other(x))
  // Cycles listed by smallest element; singletons included only on request.
  std::vector<std::vector<int>> cycles(bool with_fixed_points = false) const;
  std::string str() const;
  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }

 private:
  std::vector<int> img_;  // img_[0] unused
};

// An orientable ribbon graph: each vertex carries a cyclic order (rotation)
// of half-edge marks drawn from {1..2n}, and a fixed-point-free involution
// pairs the marks into edges.  With sigma0 the rotation permutation and
// sigma1 the pairing, the faces are the orbits of sigma2 = sigma1 ∘ sigma0⁻¹,
// and the genus comes from the Euler formula 2 - 2g = v - e + f per
// component.  Vertices with no incident half-edge are tracked by count, and
// edges may optionally carry signs.
class RibbonGraph {
 public:
  RibbonGraph(std::vector<std::vector<int>> rotations, const Perm& pairing,
              int isolated_vertices = 0, std::vector<int> edge_signs = {});

  // Vertices are the cycles of sigma0 (fixed points become degree-one
  // vertices).  The three-permutation form also checks sigma0∘sigma1∘sigma2
  // to be the identity, composing right to left.
  static RibbonGraph from_permutations(const Perm& sigma0, const Perm& sigma1);
  static RibbonGraph from_permutations(const Perm& sigma0, const Perm& sigma1,
                                       const Perm& sigma2);

  int marks() const { return marks_; }
  const std::vector<std::vector<int>>& rotations() const { return rot_; }
  int isolated_vertices() const { return isolated_; }
  // Edges as mark pairs (lo, hi), ordered by lo; this is also the edge order
  // used for chord diagrams and activities.
  const std::vector<std::pair<int, int>>& edge_pairs() const { return pairs_; }
  bool has_edge_signs() const { return !signs_.empty(); }
  int edge_sign(int e) const;
  int edge_of_mark(int mark) const;
  int vertex_of_mark(int mark) const;

  Perm sigma0() const;
  Perm sigma1() const;
  Perm sigma2() const;  // sigma1 ∘ sigma0⁻¹

  int vertices() const { return static_cast<int>(rot_.size()) + isolated_; }
  int edges() const { return marks_ / 2; }
  int faces() const { return faces_; }
  int components() const { return components_; }
  int genus() const { return genus_; }
  int nullity() const { return edges() - vertices() + components(); }
  int rank() const { return vertices() - components(); }
  bool has_loop() const;

  // Counts for the spanning subgraph keeping exactly the edges in the mask:
  // surviving marks keep their places in the rotations and the faces are the
  // orbits of the pairing composed with the restricted rotation inverse.
  struct SubgraphCounts {
    int vertices, edges, faces, components, genus, nullity;
  };
  SubgraphCounts subgraph_counts(std::uint32_t edge_mask) const;

  // Equality of the underlying combinatorial map, ignoring edge signs.
  bool same_map(const RibbonGraph& o) const;

  Json to_json() const;
  static RibbonGraph from_json(const Json& j);

 private:
  SubgraphCounts counts_with(const std::vector<char>& keep) const;

  int marks_ = 0;
  std::vector<std::vector<int>> rot_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> signs_;
  std::vector<int> edge_of_mark_, vertex_of_mark_;
  int isolated_ = 0;
  int faces_ = 0, components_ = 0, genus_ = 0;
};

// Ribbon graph of a Kauffman state: one vertex per state circle, one edge per
// crossing (marks 2i+1, 2i+2 for crossing i), rotations read along the state
// circles in the positive direction (nesting-depth parity, outermost circles
// counterclockwise).  Crossing-free loops become isolated vertices.  Edge
// signs record the smoothing: +1 for a B-smoothed crossing, -1 for A-smoothed.
RibbonGraph state_ribbon_graph(const Diagram& d, StateMask s);
// The all-A instance, unsigned: the ribbon graph whose genus is the Turaev
// genus of the diagram and whose face count is the B-state circle count.
RibbonGraph all_A_ribbon_graph(const Diagram& d);

// Three-variable Bollobás–Riordan polynomial (orientable form),
//   C(G; X, Y, Z) = sum over spanning subgraphs H of
//                   (X-1)^{k(H)-k(G)} Y^{n(H)} Z^{g(H)},
// computed by direct expansion over all 2^e edge subsets.
MultiPoly brt_polynomial(const RibbonGraph& g, int max_edges = 20);

// Kauffman bracket from the all-A ribbon graph: with d = -A^2 - A^-2,
//   <D> = d^{k(G)-1} A^{n(G)-r(G)} C(G; -A^4, A^-2 d, d^-2).
// The Z-exponents are cleared by one exact division, which doubles as a
// consistency check on the subgraph genera.
Laurent bracket_via_ribbon(const Diagram& d, int max_edges = 20);

// A quasi-tree: a spanning subgraph with exactly one boundary face.  In a
// planar ribbon graph these are exactly the spanning trees.
struct QuasiTree {
  std::uint32_t mask;       // edge subset
  std::vector<int> edges;   // the same subset, as sorted edge indices
  int genus;
};
std::vector<QuasiTree> quasi_trees(const RibbonGraph& g, int max_edges = 20);

// Census polynomial sum_j a_j t^j with a_j the number of quasi-trees of
// genus j.  Independently recomputed from the specialization
// C(G; 1, Y, t Y^-2), which must be a polynomial whose Y = 0 part matches
// the direct enumeration; a mismatch throws.
MultiPoly quasi_tree_polynomial(const RibbonGraph& g, int max_edges = 20);

// Ordered chord diagram of a quasi-tree Q: the marks {1..2n} in the circular
// order given by following sigma0 at marks of edges outside Q and sigma2⁻¹ at
// marks of edges in Q; this walk closes into a single cycle exactly when Q
// has one face.  Chords pair the marks of each edge, ordered by edge index.
struct ChordDiagram {
  std::vector<int> circle;                 // marks in circular order
  std::vector<std::pair<int, int>> chords; // by edge index
  std::vector<char> in_quasi_tree;         // per chord

  int size() const { return static_cast<int>(chords.size()); }
  bool cross(int e, int f) const;  // do chords e and f interleave?
  // A chord is live when it crosses no lower-indexed chord.
  std::vector<char> live() const;
  // u-grading: live chords count +1 outside the quasi-tree, -1 inside.
  int u_grading() const;
  // Genus of the quasi-tree, recovered as half the rank over GF(2) of the
  // intersection matrix of the chords inside it.
  int genus_via_rank() const;
  std::string str() const;
};
ChordDiagram chord_diagram(const RibbonGraph& g, std::uint32_t quasi_tree_mask);

}  // namespace turaev
