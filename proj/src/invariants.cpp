#include "turaev/invariants.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "turaev/ribbon.hpp"

namespace turaev {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

Laurent delta_poly() {
  return Laurent::monomial(-1, 2) + Laurent::monomial(-1, -2);
}

void check_state_limit(const Diagram& d, int limit) {
  if (d.crossings() > limit || d.crossings() > 31)
    throw std::domain_error("state enumeration limit exceeded");
}

// corrupt swaps the a/b exponent roles, the deliberate wrong-convention
// fixture used by the negative-control path.
Laurent statesum_impl(const Diagram& d, int limit, bool corrupt) {
  check_state_limit(d, limit);
  const int c = d.crossings();
  const Laurent delta = delta_poly();
  std::vector<Laurent> delta_pow{Laurent::constant(1, "A")};
  Laurent sum("A");
  for (StateMask s = 0; s < static_cast<StateMask>(d.state_count()); ++s) {
    int exp = c - 2 * std::popcount(s);
    if (corrupt) exp = -exp;
    int loops = d.circle_count(s) - 1;
    while (static_cast<int>(delta_pow.size()) <= loops)
      delta_pow.push_back(delta_pow.back() * delta);
    sum += delta_pow[loops].shifted(exp);
  }
  return sum;
}

Laurent bracket_piecewise(const Diagram& d, BracketMethod method, int limit) {
  auto one = [&](const Diagram& piece) {
    return method == BracketMethod::tree ? thistlethwaite_bracket(piece)
                                         : bracket_via_ribbon(piece, limit);
  };
  if (!d.is_split()) return one(d);
  Laurent prod = Laurent::constant(1, "A");
  for (const Diagram& piece : d.split_pieces()) prod *= one(piece);
  return prod * delta_poly().pow(d.diagram_components() - 1);
}

JonesPolynomial jones_from_bracket(const Diagram& d, const Laurent& bracket) {
  int w = d.writhe();
  Laurent in_a = bracket.shifted(-3 * w).scaled((w & 1) ? -1 : 1);
  bool divisible = true;
  for (const auto& term : in_a.terms())
    if (term.first % 4 != 0) divisible = false;
  if (!divisible) {
    if (d.components() == 1)
      throw std::logic_error("knot bracket exponents not divisible by 4 after writhe correction");
    return {in_a, false};
  }
  Laurent in_t("t");
  for (const auto& [e, coef] : in_a.terms())
    in_t += Laurent::monomial(coef, -e / 4, "t");
  return {in_t, true};
}

// Dead letters resolve their crossings; live ones keep them.  Returns the
// partial resolution, sigma = #A - #B smoothed, and the kept crossings.
struct Partial {
  Diagram u;
  int sigma = 0;
  std::vector<int> kept;
};

Partial partial_resolution(const Diagram& d, const SignedGraph& g,
                           const TreeRecord& rec) {
  std::vector<std::pair<char, bool>> letters;  // base, barred
  for (std::size_t i = 0; i < rec.word.size(); ++i) {
    bool barred = i + 1 < rec.word.size() && rec.word[i + 1] == '\'';
    letters.push_back({rec.word[i], barred});
    if (barred) ++i;
  }
  if (static_cast<int>(letters.size()) != g.edge_count())
    throw std::invalid_argument("activity word does not match the graph");

  Partial out{d, 0, {}};
  // Descending edge order keeps lower crossing indices stable under smoothing.
  for (int i = static_cast<int>(letters.size()) - 1; i >= 0; --i) {
    auto [base, barred] = letters[i];
    int x = g.edge(i).crossing;
    if (base == 'L' || base == 'l') {
      out.kept.push_back(x);
      continue;
    }
    Smoothing sm = (base == 'D') == !barred ? Smoothing::A : Smoothing::B;
    out.sigma += sm == Smoothing::A ? 1 : -1;
    out.u = out.u.smoothed(x, sm);
  }
  std::sort(out.kept.begin(), out.kept.end());
  return out;
}

Laurent sigma_writhe_weight(int sigma, int w) {
  return Laurent::monomial((w & 1) ? -1 : 1, sigma + 3 * w);
}

// A crossing is forced (live in every leaf below) when its Tait edge is a
// loop or a bridge.
bool forced_edge(const SignedGraph& g, int i) {
  const SignedEdge& e = g.edge(i);
  if (e.u == e.v) return true;
  Dsu dsu(g.vertices());
  for (int j = 0; j < g.edge_count(); ++j)
    if (j != i) dsu.unite(g.edge(j).u, g.edge(j).v);
  return dsu.find(e.u) != dsu.find(e.v);
}

void expand_resolution(const Diagram& cur, const std::vector<int>& orig, int x,
                       int sigma, ResolutionTree& out) {
  ++out.nodes;
  int branch = -1;
  {
    SignedGraph g = canonical_tait(cur);
    while (x >= 0) {
      int at = -1;
      for (int i = 0; i < static_cast<int>(orig.size()); ++i)
        if (orig[i] == x) at = i;
      if (at < 0) throw std::logic_error("resolution lost a crossing");
      if (!forced_edge(g, at)) {
        branch = at;
        break;
      }
      --x;
    }
  }
  if (branch < 0) {
    if (cur.components() != 1 || !cur.r1_reducible_to_unknot())
      throw std::logic_error("resolution leaf is not a twisted unknot");
    ResolutionLeaf leaf;
    leaf.kept = orig;
    std::sort(leaf.kept.begin(), leaf.kept.end());
    leaf.sigma = sigma;
    leaf.writhe = cur.writhe();
    leaf.weight = sigma_writhe_weight(sigma, leaf.writhe);
    out.leaf_sum += leaf.weight;
    out.leaves.push_back(std::move(leaf));
    return;
  }
  std::vector<int> rest = orig;
  rest.erase(rest.begin() + branch);
  expand_resolution(cur.smoothed(branch, Smoothing::A), rest, x - 1, sigma + 1, out);
  expand_resolution(cur.smoothed(branch, Smoothing::B), rest, x - 1, sigma - 1, out);
}

}  // namespace

Laurent kauffman_bracket_statesum(const Diagram& d, int limit) {
  return statesum_impl(d, limit, false);
}

Laurent kauffman_bracket(const Diagram& d, BracketMethod method, int limit) {
  if (method == BracketMethod::statesum) return statesum_impl(d, limit, false);
  return bracket_piecewise(d, method, limit);
}

JonesPolynomial jones_polynomial(const Diagram& d, int limit) {
  return jones_from_bracket(d, kauffman_bracket(d, BracketMethod::tree, limit));
}

Int determinant(const Diagram& d, int limit) {
  JonesPolynomial v = jones_polynomial(d, limit);
  if (!v.t_form)
    throw std::domain_error("determinant needs the t-form Jones polynomial");
  Int at = v.value.eval_unit(-1);
  return at < 0 ? Int(-at) : at;
}

Adequacy is_adequate(const Diagram& d) {
  const int c = d.crossings();
  Adequacy out{true, true};
  if (c == 0) return out;
  const StateMask full = (c == 32) ? ~StateMask(0) : ((StateMask(1) << c) - 1);
  int ca = d.circle_count(0), cb = d.circle_count(full);
  for (int x = 0; x < c; ++x) {
    if (d.circle_count(StateMask(1) << x) != ca - 1) out.a_adequate = false;
    if (d.circle_count(full ^ (StateMask(1) << x)) != cb - 1) out.b_adequate = false;
  }
  return out;
}

GenusSpanReport genus_and_span_report(const Diagram& d, int limit) {
  if (d.is_split())
    throw std::domain_error("genus and span report needs a connected diagram");
  GenusSpanReport r;
  r.crossings = d.crossings();
  const StateMask full =
      d.crossings() ? ((StateMask(1) << d.crossings()) - 1) : 0;
  r.s_a = d.circle_count(0);
  r.s_b = d.circle_count(full);
  r.turaev_genus = d.turaev_genus();
  Adequacy ad = is_adequate(d);
  r.a_adequate = ad.a_adequate;
  r.b_adequate = ad.b_adequate;

  Laurent bracket = kauffman_bracket(d, BracketMethod::tree, limit);
  r.bracket_span = bracket.span();
  r.bracket_span_cap = 2L * (r.crossings + r.s_a + r.s_b - 2);
  JonesPolynomial v = jones_from_bracket(d, bracket);
  r.jones_span = v.t_form ? v.value.span() : v.value.span() / 4;
  r.jones_span_cap = r.crossings - r.turaev_genus;

  r.bracket_span_within = r.bracket_span <= r.bracket_span_cap;
  r.bracket_span_tight = r.bracket_span == r.bracket_span_cap;
  r.jones_span_within = r.jones_span <= r.jones_span_cap;
  r.jones_span_tight = r.jones_span == r.jones_span_cap;
  r.genus_certified = ad.both();
  return r;
}

Json GenusSpanReport::to_json() const {
  Json j;
  j["crossings"] = crossings;
  j["state_circles"] = {{"A", s_a}, {"B", s_b}};
  j["turaev_genus"] = turaev_genus;
  j["adequate"] = {{"A", a_adequate}, {"B", b_adequate}};
  j["span"] = {{"bracket", bracket_span},
               {"bracket_cap", bracket_span_cap},
               {"jones", jones_span},
               {"jones_cap", jones_span_cap}};
  j["bounds"] = {{"bracket_within", bracket_span_within},
                 {"bracket_tight", bracket_span_tight},
                 {"jones_within", jones_span_within},
                 {"jones_tight", jones_span_tight}};
  j["genus_certified"] = genus_certified;
  return j;
}

TwistedUnknotCheck twisted_unknot_check(const Diagram& d, const TreeRecord& tree,
                                        int tree_index) {
  SignedGraph g = canonical_tait(d);
  Partial part = partial_resolution(d, g, tree);

  TwistedUnknotCheck out;
  out.tree_index = tree_index;
  out.partial = part.u;
  out.live_kept = part.kept;
  out.sigma = part.sigma;
  out.writhe = part.u.writhe();
  out.single_component = part.u.components() == 1;
  out.weight_matches =
      sigma_writhe_weight(out.sigma, out.writhe) == tree.weight;

  if (out.single_component) {
    Diagram cur = part.u;
    std::vector<int> ids = part.kept;
    out.reduces = true;
    while (cur.crossings() > 0) {
      std::vector<int> seq = cur.gauss_crossing_sequence();
      int kink = -1;
      const int n = static_cast<int>(seq.size());
      for (int i = 0; i < n && kink < 0; ++i)
        if (seq[i] == seq[(i + 1) % n]) kink = seq[i];
      if (kink < 0) {
        out.reduces = false;
        break;
      }
      // One smoothing undoes the twist, the other splits a circle off; keep
      // the one-component result.
      Diagram a = cur.smoothed(kink, Smoothing::A);
      Diagram next = a.components() == 1 ? a : cur.smoothed(kink, Smoothing::B);
      if (next.components() != 1) {
        out.reduces = false;
        break;
      }
      out.kink_removals.push_back(ids[kink]);
      ids.erase(ids.begin() + kink);
      cur = next;
    }
  }
  return out;
}

ResolutionTree resolution_tree(const Diagram& d, int limit) {
  if (d.crossings() > limit)
    throw std::domain_error("resolution tree limit exceeded");
  ResolutionTree out;
  out.leaf_sum = Laurent("A");
  std::vector<int> orig(d.crossings());
  std::iota(orig.begin(), orig.end(), 0);
  expand_resolution(d, orig, d.crossings() - 1, 0, out);
  return out;
}

long parallel_genus_upper_bound(long genus, long crossings, long cables) {
  if (cables < 1) throw std::invalid_argument("cable count must be at least 1");
  if (genus < 0 || crossings < 0)
    throw std::invalid_argument("genus and crossing count must be nonnegative");
  return (cables + 1) * genus + cables * cables * crossings - cables;
}

bool InvariantReport::all_passed() const {
  for (const auto& id : identities)
    if (!id.pass) return false;
  return true;
}

Json InvariantReport::to_json() const {
  Json j;
  j["name"] = name;
  j["pd"] = pd;
  j["crossings"] = crossings;
  j["components"] = components;
  j["writhe"] = writhe;
  j["split"] = split;
  j["bracket"] = {{"statesum", bracket_statesum.to_json()},
                  {"trees", bracket_trees.to_json()},
                  {"ribbon", bracket_ribbon.to_json()}};
  j["jones"] = {{"variable", jones.t_form ? "t" : "A"},
                {"poly", jones.value.to_json()}};
  j["determinant"] = determinant ? Json(determinant->str()) : Json(nullptr);
  j["state_circles"] = {{"A", s_a}, {"B", s_b}};
  j["turaev_genus"] = split ? Json(nullptr) : Json(turaev_genus);
  j["adequate"] = {{"A", a_adequate}, {"B", b_adequate}};
  if (split) {
    j["gradings"] = nullptr;
    j["span"] = nullptr;
  } else {
    j["gradings"] = {{"v_max", v_max},
                     {"v_min", v_min},
                     {"quasi_tree_genus_max", qt_genus_max},
                     {"quasi_tree_genus_min", qt_genus_min}};
    j["span"] = {{"bracket", bracket_span},
                 {"bracket_cap", bracket_span_cap},
                 {"jones", jones_span},
                 {"jones_cap", jones_span_cap}};
  }
  Json ids = Json::array();
  for (const auto& id : identities)
    ids.push_back(Json{{"check", id.check}, {"pass", id.pass}});
  j["identities"] = ids;
  j["pass"] = all_passed();
  return j;
}

InvariantReport verify_all(const Diagram& d, const VerifyOptions& opts) {
  check_state_limit(d, opts.limit);
  InvariantReport r;
  r.pd = d.pd();
  r.crossings = d.crossings();
  r.components = d.components();
  r.writhe = d.writhe();
  r.split = d.is_split();
  auto check = [&r](const std::string& name, bool pass) {
    r.identities.push_back({name, pass});
  };

  // The three bracket methods are pure, so they can run concurrently; the
  // merge below is deterministic.
  auto fut_state = std::async(std::launch::async, [&] {
    return statesum_impl(d, opts.limit, opts.negative_control);
  });
  auto fut_tree = std::async(std::launch::async, [&] {
    return bracket_piecewise(d, BracketMethod::tree, opts.limit);
  });
  auto fut_ribbon = std::async(std::launch::async, [&] {
    return bracket_piecewise(d, BracketMethod::ribbon, opts.limit);
  });
  r.bracket_statesum = fut_state.get();
  r.bracket_trees = fut_tree.get();
  r.bracket_ribbon = fut_ribbon.get();
  check("bracket-methods-agree", r.bracket_statesum == r.bracket_trees &&
                                     r.bracket_trees == r.bracket_ribbon);

  r.jones = jones_from_bracket(d, r.bracket_trees);
  if (r.components == 1) {
    Int at = r.jones.value.eval_unit(-1);
    r.determinant = at < 0 ? Int(-at) : at;
  }

  const StateMask full =
      r.crossings ? ((StateMask(1) << r.crossings) - 1) : 0;
  r.s_a = d.circle_count(0);
  r.s_b = d.circle_count(full);
  Adequacy ad = is_adequate(d);
  r.a_adequate = ad.a_adequate;
  r.b_adequate = ad.b_adequate;

  if (r.split) {
    // Only the axiom-level identity applies; everything genus-flavored needs
    // a connected diagram.
    Laurent pieces = Laurent::constant(1, "A");
    for (const Diagram& piece : d.split_pieces())
      pieces *= statesum_impl(piece, opts.limit, false);
    Laurent factored =
        pieces * delta_poly().pow(d.diagram_components() - 1);
    check("delta-axiom-split", r.bracket_statesum == factored);
    return r;
  }

  r.turaev_genus = d.turaev_genus();

  // Dual-state lemma; for small diagrams over every single state.
  {
    bool ok = r.s_a + r.s_b == r.crossings + 2 - 2 * r.turaev_genus;
    if (r.crossings <= 8) {
      for (StateMask s = 0; ok && s < static_cast<StateMask>(d.state_count()); ++s) {
        int tw = r.crossings + 2 - d.circle_count(s) - d.circle_count(full ^ s);
        ok = tw >= 0 && tw % 2 == 0 && tw / 2 == d.state_surface_genus(s) &&
             state_ribbon_graph(d, s).genus() == tw / 2;
      }
    }
    check("dual-state-lemma", ok);
  }

  RibbonGraph ga = all_A_ribbon_graph(d);
  RibbonGraph gb = state_ribbon_graph(d, full);
  check("ribbon-duality",
        ga.vertices() == r.s_a && ga.faces() == r.s_b &&
            ga.edges() == r.crossings && ga.genus() == r.turaev_genus &&
            gb.vertices() == r.s_b && gb.faces() == r.s_a &&
            gb.genus() == r.turaev_genus);

  SignedGraph tait = canonical_tait(d);
  std::vector<TreeRecord> records = tree_expansion(tait);
  std::vector<QuasiTree> qts = quasi_trees(ga, opts.limit);

  r.v_max = r.v_min = records.empty() ? 0 : records.front().v;
  for (const auto& rec : records) {
    r.v_max = std::max(r.v_max, rec.v);
    r.v_min = std::min(r.v_min, rec.v);
  }
  r.qt_genus_max = r.qt_genus_min = qts.empty() ? 0 : qts.front().genus;
  for (const auto& qt : qts) {
    r.qt_genus_max = std::max(r.qt_genus_max, qt.genus);
    r.qt_genus_min = std::min(r.qt_genus_min, qt.genus);
  }

  // Tree <-> quasi-tree correspondence at the counting level: trees with
  // e+(T) = v pair with quasi-trees of genus j along v + j = constant.
  {
    int twice = tait.vertices() + tait.positive_edges() - ga.vertices();
    bool ok = twice % 2 == 0 && records.size() == qts.size();
    if (ok) {
      int level = twice / 2;
      std::map<int, long> by_v, by_j;
      for (const auto& rec : records) ++by_v[rec.v];
      for (const auto& qt : qts) ++by_j[level - qt.genus];
      ok = by_v == by_j;
    }
    check("tree-quasi-tree-counts", ok);
  }

  // Chord diagrams: rank genus, and the live/u statistics shared with trees.
  {
    bool ok = true;
    std::multiset<int> tree_live, qt_live, tree_u, qt_u;
    for (const auto& rec : records) {
      auto [u, v] = word_gradings(rec.word);
      ok = ok && u == rec.u && v == rec.v;
      tree_u.insert(rec.u);
      int live = 0;
      for (char ch : rec.word)
        if (ch == 'L' || ch == 'l') ++live;
      tree_live.insert(live);
    }
    for (const auto& qt : qts) {
      ChordDiagram cd = chord_diagram(ga, qt.mask);
      ok = ok && cd.genus_via_rank() == qt.genus;
      qt_u.insert(cd.u_grading());
      auto lv = cd.live();
      qt_live.insert(static_cast<int>(std::count(lv.begin(), lv.end(), 1)));
    }
    check("chord-genus-rank", ok && tree_live == qt_live && tree_u == qt_u);
  }

  check("grading-spread-genus", r.v_max - r.v_min == r.turaev_genus &&
                                    r.qt_genus_max - r.qt_genus_min ==
                                        r.turaev_genus);

  check("adequacy-cross-check", ad.a_adequate == !ga.has_loop() &&
                                    ad.b_adequate == !gb.has_loop());

  {
    GenusSpanReport span = genus_and_span_report(d, opts.limit);
    r.bracket_span = span.bracket_span;
    r.bracket_span_cap = span.bracket_span_cap;
    r.jones_span = span.jones_span;
    r.jones_span_cap = span.jones_span_cap;
    check("bracket-span-bound",
          span.bracket_span_within && (!ad.both() || span.bracket_span_tight));
    check("jones-span-bound",
          span.jones_span_within && (!ad.both() || span.jones_span_tight));
  }

  {
    bool ok = true;
    std::multiset<std::tuple<std::vector<int>, int, int>> tree_data;
    for (int i = 0; i < static_cast<int>(records.size()); ++i) {
      TwistedUnknotCheck tc = twisted_unknot_check(d, records[i], i);
      ok = ok && tc.passed() &&
           tc.reduces == tc.partial.r1_reducible_to_unknot();
      tree_data.insert({tc.live_kept, tc.sigma, tc.writhe});
    }
    check("twisted-unknots", ok);

    ResolutionTree rt = resolution_tree(d, opts.limit);
    std::multiset<std::tuple<std::vector<int>, int, int>> leaf_data;
    for (const auto& leaf : rt.leaves)
      leaf_data.insert({leaf.kept, leaf.sigma, leaf.writhe});
    check("resolution-tree", rt.leaves.size() == records.size() &&
                                 leaf_data == tree_data &&
                                 rt.leaf_sum == r.bracket_statesum);
  }

  // Tree weights depend on the edge order; their sum must not.
  {
    std::mt19937 rng(opts.seed);
    bool ok = true;
    for (int round = 0; round < 3; ++round) {
      std::vector<SignedEdge> shuffled = tait.edges();
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      Laurent sum("A");
      for (const auto& rec :
           tree_expansion(SignedGraph(tait.vertices(), shuffled)))
        sum += rec.weight;
      ok = ok && sum == r.bracket_trees;
    }
    check("edge-order-invariance", ok);
  }

  if (r.components == 1 && d.alternating() && r.crossings > 0)
    check("tree-count-determinant",
          r.determinant && Int(records.size()) == *r.determinant);

  return r;
}

}  // namespace turaev
