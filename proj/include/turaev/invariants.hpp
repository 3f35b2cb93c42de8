#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turaev/diagram.hpp"
#include "turaev/polynomial.hpp"
#include "turaev/tait.hpp"

namespace turaev {

// Kauffman bracket by direct state enumeration,
//   <D> = sum over states s of A^{a(s)-b(s)} (-A^2 - A^-2)^{|s|-1},
// where a and b count A- and B-smoothed crossings.  Split diagrams are fine:
// the extra-circle axiom <O D> = delta <D> emerges from the circle count.
// Throws std::domain_error past the crossing limit.
Laurent kauffman_bracket_statesum(const Diagram& d, int limit = 20);

enum class BracketMethod { statesum, tree, ribbon };

// Bracket by the chosen method.  The tree and ribbon methods work piecewise
// on split diagrams: <D> = delta^{k-1} * product of the k pieces' brackets.
Laurent kauffman_bracket(const Diagram& d, BracketMethod method, int limit = 20);

// Jones polynomial V = (-A)^{-3w(D)} <D>.  Whenever every A-exponent is
// divisible by 4 (always for knots) the value is re-expressed in t = A^-4;
// links with residue-2 exponents keep the A-form, flagged by t_form = false.
struct JonesPolynomial {
  Laurent value;  // variable "t" when t_form, else "A"
  bool t_form = false;
};

JonesPolynomial jones_polynomial(const Diagram& d, int limit = 20);

// |V(-1)|.  Requires the t-form, so in practice knots (and odd-component
// links); throws std::domain_error when only the A-form exists.
Int determinant(const Diagram& d, int limit = 20);

// Single-toggle adequacy: A-adequate when every state with exactly one
// B-smoothing has fewer circles than the all-A state, and dually.
struct Adequacy {
  bool a_adequate = false;
  bool b_adequate = false;
  bool both() const { return a_adequate && b_adequate; }
};

Adequacy is_adequate(const Diagram& d);

// Span and genus data for a connected diagram.  The bracket span obeys
// span <D> <= 2(c + |s_A| + |s_B| - 2) and the Jones span (in t units)
// obeys span V <= c - g_T; an adequate diagram achieves both bounds, which
// certifies g_T(L) = c - span V.  Equality without adequacy is possible.
struct GenusSpanReport {
  int crossings = 0;
  int s_a = 0, s_b = 0;
  int turaev_genus = 0;
  bool a_adequate = false, b_adequate = false;
  long bracket_span = 0, bracket_span_cap = 0;
  long jones_span = 0, jones_span_cap = 0;
  bool bracket_span_within = false, bracket_span_tight = false;
  bool jones_span_within = false, jones_span_tight = false;
  bool genus_certified = false;  // adequate, so g_T(L) = c - span V exactly

  Json to_json() const;
};

GenusSpanReport genus_and_span_report(const Diagram& d, int limit = 20);

// The twisted unknot U(T) of a spanning tree: dead-letter crossings are
// smoothed (D -> A, d -> B, and the barred letters the other way), live ones
// kept.  U(T) must be a one-component diagram reducible to the round unknot
// by removing twists, and its data must reproduce the tree weight as
// mu(T) = A^{sigma(U)} (-A)^{3 w(U)}.
struct TwistedUnknotCheck {
  int tree_index = -1;
  Diagram partial;                  // U(T)
  std::vector<int> live_kept;       // crossings kept, ascending
  int sigma = 0;                    // #A - #B over the smoothed crossings
  int writhe = 0;                   // w(U)
  std::vector<int> kink_removals;   // crossing ids in peeling order
  bool single_component = false;
  bool reduces = false;
  bool weight_matches = false;

  bool passed() const { return single_component && reduces && weight_matches; }
};

TwistedUnknotCheck twisted_unknot_check(const Diagram& d, const TreeRecord& tree,
                                        int tree_index = -1);

// Binary skein resolution tree: crossings are considered from the highest
// index down; a crossing whose Tait edge is a loop or a bridge at its turn is
// kept (it will be live in every leaf), all others branch into their A and B
// smoothings (A first).  A branch ends as soon as only forced crossings
// remain, i.e. exactly at the twisted unknots U(T), so the leaves biject with
// the spanning trees of the Tait graph and their weights sum to the bracket.
struct ResolutionLeaf {
  std::vector<int> kept;  // surviving crossings of D, ascending
  int sigma = 0;
  int writhe = 0;
  Laurent weight;  // A^sigma (-A)^{3w}
};

struct ResolutionTree {
  long nodes = 0;  // binary tree nodes, 2 * leaves - 1
  std::vector<ResolutionLeaf> leaves;
  Laurent leaf_sum;
};

ResolutionTree resolution_tree(const Diagram& d, int limit = 20);

// Upper bound for the Turaev genus of the r-cabled link:
// (r + 1) g + r^2 c - r.  Requires r >= 1 and g, c >= 0.
long parallel_genus_upper_bound(long genus, long crossings, long cables);

// One named identity outcome inside an InvariantReport.
struct IdentityCheck {
  std::string check;
  bool pass = false;
};

struct VerifyOptions {
  int limit = 20;
  // Corrupt the state-sum exponent convention (a and b swapped) so the three
  // bracket methods disagree; exercises failure detection.
  bool negative_control = false;
  unsigned seed = 2026;  // for the random edge-order invariance checks
};

// Every cross-check this library knows how to run against one diagram.
// Failures are ledger entries, never exceptions.
struct InvariantReport {
  std::string name;  // optional caller-supplied label
  std::string pd;
  int crossings = 0;
  int components = 0;
  int writhe = 0;
  bool split = false;
  Laurent bracket_statesum, bracket_trees, bracket_ribbon;
  JonesPolynomial jones;
  std::optional<Int> determinant;
  int s_a = 0, s_b = 0;
  int turaev_genus = -1;  // -1 when split
  bool a_adequate = false, b_adequate = false;
  int v_max = 0, v_min = 0;                    // tree grading spread
  int qt_genus_max = 0, qt_genus_min = 0;      // quasi-tree genus spread
  long bracket_span = 0, bracket_span_cap = 0;
  long jones_span = 0, jones_span_cap = 0;
  std::vector<IdentityCheck> identities;

  bool all_passed() const;
  Json to_json() const;
};

InvariantReport verify_all(const Diagram& d, const VerifyOptions& opts = {});

}  // namespace turaev
