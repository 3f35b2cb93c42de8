#include "turaev/ribbon.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

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

bool chords_interleave(const std::vector<int>& pos, std::pair<int, int> a,
                       std::pair<int, int> b) {
  int lo = pos[a.first], hi = pos[a.second];
  if (lo > hi) std::swap(lo, hi);
  bool first_inside = pos[b.first] > lo && pos[b.first] < hi;
  bool second_inside = pos[b.second] > lo && pos[b.second] < hi;
  return first_inside != second_inside;
}

std::vector<int> positions_on_circle(const std::vector<int>& circle) {
  int top = 0;
  for (int mk : circle) top = std::max(top, mk);
  std::vector<int> pos(top + 1, -1);
  for (std::size_t i = 0; i < circle.size(); ++i) pos[circle[i]] = static_cast<int>(i);
  return pos;
}

}  // namespace

Perm::Perm(int m) {
  if (m < 0) throw std::invalid_argument("permutation domain size cannot be negative");
  img_.resize(m + 1);
  std::iota(img_.begin(), img_.end(), 0);
}

int Perm::operator()(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("permutation applied outside its domain");
  return img_[i];
}

Perm Perm::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
  Perm p(m);
  std::vector<char> used(m + 1, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      int a = cyc[j];
      if (a < 1 || a > m) throw std::invalid_argument("cycle entry outside the domain");
      if (used[a]) throw std::invalid_argument("entry repeated across cycles");
      used[a] = 1;
      p.img_[a] = cyc[(j + 1) % cyc.size()];
    }
  }
  return p;
}

Perm Perm::parse(int m, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("permutation cycles must be parenthesized");
    ++i;
    std::vector<int> cyc;
    skip();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("unexpected character inside a cycle");
      int val = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        val = val * 10 + (text[i++] - '0');
      cyc.push_back(val);
      skip();
    }
    if (i == text.size()) throw std::invalid_argument("unclosed cycle in permutation");
    ++i;
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip();
  }
  return from_cycles(m, cycles);
}

bool Perm::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Perm::is_involution_without_fixed_points() const {
  for (int i = 1; i <= size(); ++i)
    if (img_[i] == i || img_[img_[i]] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r(size());
  for (int i = 1; i <= size(); ++i) r.img_[img_[i]] = i;
  return r;
}

Perm Perm::after(const Perm& other) const {
  if (size() != other.size()) throw std::invalid_argument("composing permutations of different domains");
  Perm r(size());
  for (int i = 1; i <= size(); ++i) r.img_[i] = img_[other.img_[i]];
  return r;
}

std::vector<std::vector<int>> Perm::cycles(bool with_fixed_points) const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(size() + 1, 0);
  for (int i = 1; i <= size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      seen[j] = 1;
      cyc.push_back(j);
      j = img_[j];
    } while (j != i);
    if (cyc.size() > 1 || with_fixed_points) out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::str() const {
  auto cs = cycles(false);
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cs) {
    os << '(';
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      if (j) os << ' ';
      os << cyc[j];
    }
    os << ')';
  }
  return os.str();
}

RibbonGraph::RibbonGraph(std::vector<std::vector<int>> rotations, const Perm& pairing,
                         int isolated_vertices, std::vector<int> edge_signs)
    : rot_(std::move(rotations)), signs_(std::move(edge_signs)), isolated_(isolated_vertices) {
  marks_ = pairing.size();
  if (marks_ % 2 != 0)
    throw std::invalid_argument("a ribbon graph has an even number of half-edge marks");
  if (isolated_ < 0) throw std::invalid_argument("negative isolated-vertex count");
  if (marks_ > 0 && !pairing.is_involution_without_fixed_points())
    throw std::invalid_argument("the edge pairing must be a fixed-point-free involution");

  // Canonical form: every rotation starts at its smallest mark and the
  // rotations are listed by that mark, so equal maps compare equal.
  for (auto& r : rot_) {
    if (r.empty())
      throw std::invalid_argument("empty rotation; count the vertex as isolated instead");
    auto mn = std::min_element(r.begin(), r.end());
    std::rotate(r.begin(), mn, r.end());
  }
  std::sort(rot_.begin(), rot_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  vertex_of_mark_.assign(marks_ + 1, -1);
  for (std::size_t vtx = 0; vtx < rot_.size(); ++vtx) {
    for (int mk : rot_[vtx]) {
      if (mk < 1 || mk > marks_)
        throw std::invalid_argument("half-edge mark outside the domain of the pairing");
      if (vertex_of_mark_[mk] != -1)
        throw std::invalid_argument("half-edge mark appears in two rotation slots");
      vertex_of_mark_[mk] = static_cast<int>(vtx);
    }
  }
  for (int mk = 1; mk <= marks_; ++mk)
    if (vertex_of_mark_[mk] == -1)
      throw std::invalid_argument("half-edge mark missing from the rotations");

  for (int mk = 1; mk <= marks_; ++mk) {
    int other = pairing(mk);
    if (mk < other) pairs_.emplace_back(mk, other);
  }
  edge_of_mark_.assign(marks_ + 1, -1);
  for (std::size_t e = 0; e < pairs_.size(); ++e) {
    edge_of_mark_[pairs_[e].first] = static_cast<int>(e);
    edge_of_mark_[pairs_[e].second] = static_cast<int>(e);
  }
  if (!signs_.empty()) {
    if (signs_.size() != pairs_.size())
      throw std::invalid_argument("edge signs must come one per edge");
    for (int s : signs_)
      if (s != 1 && s != -1) throw std::invalid_argument("edge signs are +1 or -1");
  }

  SubgraphCounts full = counts_with(std::vector<char>(pairs_.size(), 1));
  faces_ = full.faces;
  components_ = full.components;
  genus_ = full.genus;
}

RibbonGraph RibbonGraph::from_permutations(const Perm& sigma0, const Perm& sigma1) {
  if (sigma0.size() != sigma1.size())
    throw std::invalid_argument("sigma0 and sigma1 act on different domains");
  return RibbonGraph(sigma0.cycles(true), sigma1);
}

RibbonGraph RibbonGraph::from_permutations(const Perm& sigma0, const Perm& sigma1,
                                           const Perm& sigma2) {
  if (sigma0.size() != sigma2.size())
    throw std::invalid_argument("sigma2 acts on a different domain");
  if (!sigma0.after(sigma1).after(sigma2).is_identity())
    throw std::invalid_argument("sigma0 ∘ sigma1 ∘ sigma2 is not the identity");
  return from_permutations(sigma0, sigma1);
}

int RibbonGraph::edge_sign(int e) const {
  if (signs_.empty()) throw std::logic_error("this ribbon graph carries no edge signs");
  if (e < 0 || e >= edges()) throw std::out_of_range("no such edge");
  return signs_[e];
}

int RibbonGraph::edge_of_mark(int mark) const {
  if (mark < 1 || mark > marks_) throw std::out_of_range("no such half-edge mark");
  return edge_of_mark_[mark];
}

int RibbonGraph::vertex_of_mark(int mark) const {
  if (mark < 1 || mark > marks_) throw std::out_of_range("no such half-edge mark");
  return vertex_of_mark_[mark];
}

Perm RibbonGraph::sigma0() const { return Perm::from_cycles(marks_, rot_); }

Perm RibbonGraph::sigma1() const {
  std::vector<std::vector<int>> cyc;
  cyc.reserve(pairs_.size());
  for (const auto& [lo, hi] : pairs_) cyc.push_back({lo, hi});
  return Perm::from_cycles(marks_, cyc);
}

Perm RibbonGraph::sigma2() const { return sigma1().after(sigma0().inverse()); }

bool RibbonGraph::has_loop() const {
  for (const auto& [lo, hi] : pairs_)
    if (vertex_of_mark_[lo] == vertex_of_mark_[hi]) return true;
  return false;
}

RibbonGraph::SubgraphCounts RibbonGraph::counts_with(const std::vector<char>& keep) const {
  int v = vertices();
  int e_kept = 0;
  Dsu dsu(static_cast<int>(rot_.size()));
  for (std::size_t e = 0; e < pairs_.size(); ++e) {
    if (!keep[e]) continue;
    ++e_kept;
    dsu.unite(vertex_of_mark_[pairs_[e].first], vertex_of_mark_[pairs_[e].second]);
  }
  int k = isolated_;
  for (std::size_t vtx = 0; vtx < rot_.size(); ++vtx)
    if (dsu.find(static_cast<int>(vtx)) == static_cast<int>(vtx)) ++k;

  // Faces: orbits of x -> pairing(predecessor of x among surviving marks).
  std::vector<int> prev(marks_ + 1, 0);
  std::vector<char> alive(marks_ + 1, 0);
  int bare_vertices = isolated_;
  for (const auto& r : rot_) {
    std::vector<int> kept;
    for (int mk : r)
      if (keep[edge_of_mark_[mk]]) kept.push_back(mk);
    if (kept.empty()) {
      ++bare_vertices;
      continue;
    }
    for (std::size_t j = 0; j < kept.size(); ++j) {
      prev[kept[(j + 1) % kept.size()]] = kept[j];
      alive[kept[j]] = 1;
    }
  }
  auto other_end = [&](int mk) {
    const auto& pr = pairs_[edge_of_mark_[mk]];
    return pr.first == mk ? pr.second : pr.first;
  };
  int f = bare_vertices;
  std::vector<char> seen(marks_ + 1, 0);
  for (int mk = 1; mk <= marks_; ++mk) {
    if (!alive[mk] || seen[mk]) continue;
    ++f;
    int cur = mk;
    do {
      seen[cur] = 1;
      cur = other_end(prev[cur]);
    } while (cur != mk);
  }

  int two_genus = 2 * k - v + e_kept - f;
  if (two_genus < 0 || two_genus % 2 != 0)
    throw std::logic_error("ribbon subgraph violates the Euler formula");
  return SubgraphCounts{v, e_kept, f, k, two_genus / 2, e_kept - v + k};
}

RibbonGraph::SubgraphCounts RibbonGraph::subgraph_counts(std::uint32_t edge_mask) const {
  if (edges() > 31) throw std::domain_error("edge masks address at most 31 edges");
  if (edges() < 32 && (edge_mask >> edges()) != 0)
    throw std::invalid_argument("edge mask addresses edges that do not exist");
  std::vector<char> keep(pairs_.size(), 0);
  for (int e = 0; e < edges(); ++e) keep[e] = (edge_mask >> e) & 1;
  return counts_with(keep);
}

bool RibbonGraph::same_map(const RibbonGraph& o) const {
  return rot_ == o.rot_ && pairs_ == o.pairs_ && isolated_ == o.isolated_;
}

Json RibbonGraph::to_json() const {
  Json j;
  j["sigma0"] = Json::array();
  for (const auto& r : rot_) j["sigma0"].push_back(r);
  j["sigma1"] = Json::array();
  for (const auto& [lo, hi] : pairs_) j["sigma1"].push_back(Json::array({lo, hi}));
  j["sigma2"] = Json::array();
  for (const auto& cyc : sigma2().cycles(true)) j["sigma2"].push_back(cyc);
  if (isolated_ > 0) j["isolated_vertices"] = isolated_;
  if (!signs_.empty()) j["edge_signs"] = signs_;
  return j;
}

RibbonGraph RibbonGraph::from_json(const Json& j) {
  std::vector<std::vector<int>> rotations;
  int marks = 0;
  for (const auto& r : j.at("sigma0")) {
    rotations.push_back(r.get<std::vector<int>>());
    marks += static_cast<int>(rotations.back().size());
  }
  std::vector<std::vector<int>> pairing_cycles;
  for (const auto& p : j.at("sigma1")) {
    auto cyc = p.get<std::vector<int>>();
    if (cyc.size() != 2) throw std::invalid_argument("sigma1 entries must be pairs");
    pairing_cycles.push_back(std::move(cyc));
  }
  RibbonGraph g(std::move(rotations), Perm::from_cycles(marks, pairing_cycles),
                j.value("isolated_vertices", 0),
                j.value("edge_signs", std::vector<int>{}));
  if (j.contains("sigma2")) {
    std::vector<std::vector<int>> face_cycles;
    for (const auto& c : j.at("sigma2")) face_cycles.push_back(c.get<std::vector<int>>());
    if (Perm::from_cycles(marks, face_cycles) != g.sigma2())
      throw std::invalid_argument("sigma2 does not match sigma1 ∘ sigma0⁻¹");
  }
  return g;
}

static RibbonGraph build_state_graph(const Diagram& d, StateMask s, bool with_signs) {
  int n = d.crossings();
  if (n > 31) throw std::domain_error("state masks address at most 31 crossings");
  if ((n == 0 && s != 0) || (n > 0 && (s >> n) != 0))
    throw std::invalid_argument("state mask addresses crossings that do not exist");

  auto circles = d.oriented_circles(s);
  std::vector<std::vector<int>> rot;
  int isolated = 0;
  for (const auto& circle : circles) {
    if (circle.empty()) {
      ++isolated;
      continue;
    }
    std::vector<int> marks;
    marks.reserve(circle.size());
    for (int q : circle) {
      int x = q >> 2, slot = q & 3;
      int partner = ((s >> x) & 1) ? (slot ^ 3) : (slot ^ 1);
      bool first_channel = slot == 0 || partner == 0;
      marks.push_back(2 * x + (first_channel ? 1 : 2));
    }
    rot.push_back(std::move(marks));
  }

  std::vector<std::vector<int>> pairing_cycles;
  pairing_cycles.reserve(n);
  for (int i = 0; i < n; ++i) pairing_cycles.push_back({2 * i + 1, 2 * i + 2});
  std::vector<int> signs;
  if (with_signs) {
    signs.resize(n);
    for (int i = 0; i < n; ++i) signs[i] = ((s >> i) & 1) ? 1 : -1;
  }
  return RibbonGraph(std::move(rot), Perm::from_cycles(2 * n, pairing_cycles), isolated,
                     std::move(signs));
}

RibbonGraph state_ribbon_graph(const Diagram& d, StateMask s) {
  return build_state_graph(d, s, true);
}

RibbonGraph all_A_ribbon_graph(const Diagram& d) { return build_state_graph(d, 0, false); }

MultiPoly brt_polynomial(const RibbonGraph& g, int max_edges) {
  static const std::vector<std::string> kVars = {"X", "Y", "Z"};
  int e = g.edges();
  if (e > max_edges || e > 31)
    throw std::domain_error("subgraph expansion limited to " + std::to_string(max_edges) +
                            " edges");
  MultiPoly x_minus_1 =
      MultiPoly::monomial(1, {1, 0, 0}, kVars) - MultiPoly::constant(1, kVars);
  std::vector<MultiPoly> powers = {MultiPoly::constant(1, kVars)};
  MultiPoly total(kVars);
  long summands = 0;
  int k_full = g.components();
  for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
    auto c = g.subgraph_counts(mask);
    int dk = c.components - k_full;
    while (static_cast<int>(powers.size()) <= dk) powers.push_back(powers.back() * x_minus_1);
    total += powers[dk] * MultiPoly::monomial(1, {0, c.nullity, c.genus}, kVars);
    ++summands;
  }
  if (summands != (1L << e))
    throw std::logic_error("subgraph expansion did not visit every edge subset");
  return total;
}

Laurent bracket_via_ribbon(const Diagram& d, int max_edges) {
  if (d.is_split())
    throw std::domain_error("bracket of a split diagram factors over its pieces");
  RibbonGraph g = all_A_ribbon_graph(d);
  if (g.components() != 1) throw std::logic_error("connected diagram gave a split state graph");
  MultiPoly c = brt_polynomial(g, max_edges);

  Laurent delta = Laurent::monomial(-1, 2) + Laurent::monomial(-1, -2);
  std::map<std::string, Laurent> at{{"X", Laurent::monomial(-1, 4)},
                                    {"Y", Laurent::monomial(1, -2) * delta},
                                    {"Z", Laurent::constant(1)}};
  auto by_genus = c.group_by("Z");
  long top = by_genus.rbegin()->first;
  Laurent sum;
  for (const auto& [gz, part] : by_genus)
    sum += part.eval(at) * delta.pow(static_cast<unsigned long>(2 * (top - gz)));
  Laurent core = divide_exact(sum, delta.pow(static_cast<unsigned long>(2 * top)));
  return core.shifted(g.nullity() - g.rank());
}

std::vector<QuasiTree> quasi_trees(const RibbonGraph& g, int max_edges) {
  if (g.components() != 1)
    throw std::domain_error("quasi-trees are defined for connected ribbon graphs");
  int e = g.edges();
  if (e > max_edges || e > 31)
    throw std::domain_error("subgraph expansion limited to " + std::to_string(max_edges) +
                            " edges");
  std::vector<QuasiTree> out;
  for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
    auto c = g.subgraph_counts(mask);
    if (c.faces != 1) continue;
    QuasiTree q{mask, {}, c.genus};
    for (int i = 0; i < e; ++i)
      if ((mask >> i) & 1) q.edges.push_back(i);
    out.push_back(std::move(q));
  }
  return out;
}

MultiPoly quasi_tree_polynomial(const RibbonGraph& g, int max_edges) {
  MultiPoly census({"t"});
  for (const auto& q : quasi_trees(g, max_edges))
    census += MultiPoly::monomial(1, {q.genus}, {"t"});

  // Independent route: specialize C(X, Y, Z) at X = 1, Z = t Y^-2 and keep
  // the Y-free part; genus or nullity errors surface as a mismatch here.
  MultiPoly c = brt_polynomial(g, max_edges);
  MultiPoly specialized({"t", "Y"});
  for (const auto& [exps, coef] : c.terms())
    specialized += MultiPoly::monomial(coef, {exps[2], exps[1] - 2 * exps[2]}, {"t", "Y"});
  if (!specialized.polynomial_in_all_vars())
    throw std::logic_error("quasi-tree specialization left a negative exponent");
  MultiPoly lifted_census({"t", "Y"});
  for (const auto& [exps, coef] : census.terms())
    lifted_census += MultiPoly::monomial(coef, {exps[0], 0}, {"t", "Y"});
  auto by_y = specialized.group_by("Y");
  MultiPoly y_free =
      by_y.count(0) ? by_y.at(0) : MultiPoly(std::vector<std::string>{"t", "Y"});
  if (y_free != lifted_census)
    throw std::logic_error("quasi-tree census disagrees with the subgraph expansion");
  return census;
}

ChordDiagram chord_diagram(const RibbonGraph& g, std::uint32_t quasi_tree_mask) {
  if (g.subgraph_counts(quasi_tree_mask).faces != 1)
    throw std::domain_error("chord diagrams are attached to quasi-trees only");
  int m = g.marks();
  ChordDiagram cd;
  cd.chords = g.edge_pairs();
  cd.in_quasi_tree.resize(cd.chords.size());
  for (std::size_t e = 0; e < cd.chords.size(); ++e)
    cd.in_quasi_tree[e] = (quasi_tree_mask >> e) & 1;
  if (m == 0) return cd;

  Perm s0 = g.sigma0();
  Perm s2inv = g.sigma2().inverse();
  std::vector<char> seen(m + 1, 0);
  int cur = 1;
  do {
    if (seen[cur]) throw std::logic_error("mark walk of a quasi-tree repeated a mark");
    seen[cur] = 1;
    cd.circle.push_back(cur);
    cur = cd.in_quasi_tree[g.edge_of_mark(cur)] ? s2inv(cur) : s0(cur);
  } while (cur != 1);
  if (static_cast<int>(cd.circle.size()) != m)
    throw std::logic_error("mark walk of a quasi-tree closed early");
  return cd;
}

bool ChordDiagram::cross(int e, int f) const {
  if (e < 0 || e >= size() || f < 0 || f >= size()) throw std::out_of_range("no such chord");
  if (e == f) return false;
  auto pos = positions_on_circle(circle);
  return chords_interleave(pos, chords[e], chords[f]);
}

std::vector<char> ChordDiagram::live() const {
  auto pos = positions_on_circle(circle);
  std::vector<char> lv(size(), 1);
  for (int e = 0; e < size(); ++e)
    for (int f = 0; f < e && lv[e]; ++f)
      if (chords_interleave(pos, chords[e], chords[f])) lv[e] = 0;
  return lv;
}

int ChordDiagram::u_grading() const {
  auto lv = live();
  int u = 0;
  for (int e = 0; e < size(); ++e)
    if (lv[e]) u += in_quasi_tree[e] ? -1 : 1;
  return u;
}

int ChordDiagram::genus_via_rank() const {
  std::vector<int> inside;
  for (int e = 0; e < size(); ++e)
    if (in_quasi_tree[e]) inside.push_back(e);
  auto pos = positions_on_circle(circle);
  std::vector<std::uint64_t> rows(inside.size(), 0);
  for (std::size_t i = 0; i < inside.size(); ++i)
    for (std::size_t j = i + 1; j < inside.size(); ++j)
      if (chords_interleave(pos, chords[inside[i]], chords[inside[j]])) {
        rows[i] |= std::uint64_t(1) << j;
        rows[j] |= std::uint64_t(1) << i;
      }
  int rank = 0;
  for (std::size_t col = 0; col < inside.size(); ++col) {
    int pivot = -1;
    for (std::size_t r = rank; r < inside.size(); ++r)
      if ((rows[r] >> col) & 1) {
        pivot = static_cast<int>(r);
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < inside.size(); ++r)
      if (static_cast<int>(r) != rank && ((rows[r] >> col) & 1)) rows[r] ^= rows[rank];
    ++rank;
  }
  if (rank % 2 != 0) throw std::logic_error("chord intersection matrix has odd rank");
  return rank / 2;
}

std::string ChordDiagram::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < circle.size(); ++i) {
    if (i) os << ' ';
    os << circle[i];
  }
  os << ')';
  return os.str();
}

}  // namespace turaev
