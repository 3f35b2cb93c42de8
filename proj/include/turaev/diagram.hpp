#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace turaev {

// A crossing X[a,b,c,d]: the four arc labels in counterclockwise order
// starting at the incoming under-strand.  Slot 0 is where the under-strand
// enters, slot 2 where it leaves; slots 1 and 3 carry the over-strand.
struct Crossing {
  std::array<int, 4> arc;
};

enum class Smoothing : std::uint8_t { A, B };

// Kauffman state as a bitmask over crossings: bit x set means crossing x is
// B-smoothed, clear means A-smoothed.  The A-smoothing joins slots (0,1) and
// (2,3); the B-smoothing joins slots (0,3) and (1,2).
using StateMask = std::uint32_t;

// A link diagram read from a PD code.  Parsing derives strand orientations,
// crossing signs, the faces of the underlying 4-valent plane graph and their
// checkerboard coloring, and rejects codes that are not realizable in the
// plane.  Ports are numbered 4*crossing + slot.
class Diagram {
 public:
  // Accepts "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]" with optional whitespace and
  // '#'-to-end-of-line comments.  The empty code is the crossingless unknot.
  // Throws std::invalid_argument on malformed or unrealizable input.
  static Diagram parse(const std::string& pd_code);

  // free_loops counts crossing-free round circles alongside the crossings;
  // they arise from smoothing and cannot be written in a PD code.
  static Diagram from_crossings(std::vector<Crossing> crossings, int free_loops = 0);

  int crossings() const { return static_cast<int>(cross_.size()); }
  int free_loops() const { return free_loops_; }
  const std::vector<Crossing>& data() const { return cross_; }
  std::string pd() const;

  int arc_at(int x, int slot) const { return cross_[x].arc[slot]; }
  int ports() const { return 4 * crossings(); }
  int port_arc(int p) const { return cross_[p / 4].arc[p % 4]; }
  int alpha(int p) const { return alpha_[p]; }  // other end of the arc at p

  // Orientation data.  A port is a head when the strand runs along its arc
  // into the crossing there.  over_runs_db reports whether the over-strand
  // enters at slot 3 and leaves at slot 1, which is exactly the positive-
  // crossing case.
  bool port_is_head(int p) const { return head_[p]; }
  bool over_runs_db(int x) const { return over_db_[x]; }
  int sign(int x) const { return over_db_[x] ? 1 : -1; }
  int writhe() const;

  int components() const { return components_; }        // link components
  int diagram_components() const { return diag_comps_; }  // projection pieces
  bool is_split() const { return diag_comps_ > 1; }
  bool alternating() const;

  Diagram mirror() const;    // X[a,b,c,d] -> X[a,d,c,b]
  Diagram reversed() const;  // X[a,b,c,d] -> X[c,d,a,b]
  Diagram reordered(const std::vector<int>& perm) const;  // crossing i <- perm[i]

  // Faces of the 4-valent projection, traced to the LEFT of each dart.  The
  // face id of a port is the face lying on the left of the strand as it
  // arrives at that port; corner k of a crossing (the region between slots k
  // and k+1) belongs to the face of arrival port k+1.
  int faces() const { return n_faces_; }
  int port_face(int p) const { return face_of_port_[p]; }
  int corner_face(int x, int corner) const { return face_of_port_[4 * x + (corner + 1) % 4]; }

  // Checkerboard coloring: raw 2-coloring of faces; black means "not in the
  // outer face's class".  The default outer face lies to the left of the
  // lowest-numbered arc's dart and can be overridden.
  int face_color(int f) const { return face_color_[f]; }
  int outer_face() const { return outer_face_; }
  void set_outer_face(int f);
  bool face_black(int f) const { return face_color_[f] != face_color_[outer_face_]; }

  // Kauffman states.  circle_count works for split diagrams too;
  // oriented_circles requires a connected diagram and returns each state
  // circle as its cyclic list of arrival ports, directed so that a black
  // region lies on the left throughout.
  long state_count() const { return 1L << crossings(); }
  int circle_count(StateMask s) const;
  std::vector<std::vector<int>> oriented_circles(StateMask s) const;

  // Genus of the closed surface built from a state and its complement;
  // turaev_genus is the all-A instance.  Connected diagrams only.
  int state_surface_genus(StateMask s) const;
  int turaev_genus() const;

  // Replace crossing x by one of its smoothings.  Arcs spliced together keep
  // the smaller label; a channel whose two ends are the same arc closes it
  // into a crossing-free loop, tracked in free_loops().
  Diagram smoothed(int x, Smoothing sm) const;

  // Crossing visit order along the strand of a one-component diagram (each
  // crossing appears twice).  Used for recognizing diagrams that reduce to
  // the round unknot by removing twists.
  std::vector<int> gauss_crossing_sequence() const;
  bool r1_reducible_to_unknot() const;

  // The connected pieces of a split diagram, as separate diagrams.
  std::vector<Diagram> split_pieces() const;

 private:
  void build();  // validates and fills all derived data

  std::vector<Crossing> cross_;
  std::vector<int> alpha_;
  std::vector<char> head_;
  std::vector<char> over_db_;
  std::vector<int> face_of_port_;
  std::vector<int> face_color_;
  std::vector<int> comp_of_crossing_;
  int free_loops_ = 0;
  int n_faces_ = 0;
  int components_ = 0;
  int diag_comps_ = 0;
  int outer_face_ = 0;
};

}  // namespace turaev
