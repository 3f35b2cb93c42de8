#include "turaev/tait.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace turaev {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

bool connected_with(int vertices, const std::vector<SignedEdge>& edges,
                    const std::vector<int>& keep) {
  if (vertices <= 1) return true;
  Dsu dsu(vertices);
  for (int i : keep) dsu.unite(edges[i].u, edges[i].v);
  int root = dsu.find(0);
  for (int v = 1; v < vertices; ++v)
    if (dsu.find(v) != root) return false;
  return true;
}

Laurent letter_weight(char base, bool barred) {
  // positive edges: L -A^-3, D A, l -A^3, d A^-1; bars swap A <-> A^-1
  int exp = 0, sgn = 1;
  switch (base) {
    case 'L': exp = -3; sgn = -1; break;
    case 'D': exp = 1; break;
    case 'l': exp = 3; sgn = -1; break;
    case 'd': exp = -1; break;
  }
  if (barred) exp = -exp;
  return Laurent::monomial(sgn, exp);
}

}  // namespace

SignedGraph::SignedGraph(int vertices, std::vector<SignedEdge> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
  if (vertices_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= vertices_ || e.v < 0 || e.v >= vertices_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("edge sign must be +-1");
  }
}

int SignedGraph::positive_edges() const {
  int n = 0;
  for (const auto& e : edges_) n += e.sign > 0;
  return n;
}

int SignedGraph::negative_edges() const { return edge_count() - positive_edges(); }

bool SignedGraph::connected() const {
  std::vector<int> all(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) all[i] = static_cast<int>(i);
  return connected_with(vertices_, edges_, all);
}

namespace {

// Contraction-deletion on the lowest-indexed non-loop edge: every spanning
// tree either contains it (contract) or not (delete; only possible when the
// rest stays connected).
void enumerate_trees(const std::vector<SignedEdge>& edges, std::vector<int> vmap,
                     int merged, std::size_t from, std::vector<int>& chosen,
                     std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(vmap.size());
  if (merged == n - 1) {
    out.push_back(chosen);
    return;
  }
  // find the first non-loop edge
  std::size_t i = from;
  while (i < edges.size() && vmap[edges[i].u] == vmap[edges[i].v]) ++i;
  if (i == edges.size()) return;

  // contract edge i
  {
    std::vector<int> nv = vmap;
    int a = nv[edges[i].u], b = nv[edges[i].v];
    for (int& c : nv)
      if (c == b) c = a;
    chosen.push_back(static_cast<int>(i));
    enumerate_trees(edges, std::move(nv), merged + 1, i + 1, chosen, out);
    chosen.pop_back();
  }
  // delete edge i, if the remaining edges still connect everything
  {
    Dsu dsu(n);
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      dsu.unite(vmap[edges[j].u], vmap[edges[j].v]);
    int root = dsu.find(vmap[0]);
    bool still_connected = true;
    for (int v = 0; v < n && still_connected; ++v)
      still_connected = dsu.find(vmap[v]) == root;
    if (still_connected) enumerate_trees(edges, vmap, merged, i + 1, chosen, out);
  }
}

}  // namespace

std::vector<std::vector<int>> SignedGraph::spanning_trees() const {
  if (!connected()) return {};
  std::vector<int> vmap(vertices_);
  for (int v = 0; v < vertices_; ++v) vmap[v] = v;
  std::vector<int> chosen;
  std::vector<std::vector<int>> out;
  enumerate_trees(edges_, std::move(vmap), 0, 0, chosen, out);
  return out;
}

namespace {

MultiPoly tutte_rec(std::vector<int> vmap, const std::vector<SignedEdge>& edges,
                    std::vector<int> idx) {
  static const std::vector<std::string> xy = {"x", "y"};
  MultiPoly result = MultiPoly::constant(1, xy);
  // peel loops and bridges greedily, then branch on the first remaining edge
  while (!idx.empty()) {
    int i = idx.front();
    if (vmap[edges[i].u] == vmap[edges[i].v]) {  // loop
      result *= MultiPoly::monomial(1, {0, 1}, xy);
      idx.erase(idx.begin());
      continue;
    }
    // bridge test: does deleting i disconnect the classes it joins?
    {
      Dsu dsu(static_cast<int>(vmap.size()));
      for (int j : idx)
        if (j != i) dsu.unite(vmap[edges[j].u], vmap[edges[j].v]);
      if (dsu.find(vmap[edges[i].u]) != dsu.find(vmap[edges[i].v])) {
        result *= MultiPoly::monomial(1, {1, 0}, xy);
        int a = vmap[edges[i].u], b = vmap[edges[i].v];
        for (int& c : vmap)
          if (c == b) c = a;
        idx.erase(idx.begin());
        continue;
      }
    }
    // branch: delete i / contract i
    std::vector<int> rest(idx.begin() + 1, idx.end());
    MultiPoly del = tutte_rec(vmap, edges, rest);
    std::vector<int> nv = vmap;
    int a = nv[edges[i].u], b = nv[edges[i].v];
    for (int& c : nv)
      if (c == b) c = a;
    MultiPoly con = tutte_rec(std::move(nv), edges, std::move(rest));
    return result * (del + con);
  }
  return result;
}

}  // namespace

MultiPoly SignedGraph::tutte() const {
  if (!connected())
    throw std::domain_error("Tutte polynomial computed for connected graphs only");
  std::vector<int> vmap(vertices_), idx(edges_.size());
  for (int v = 0; v < vertices_; ++v) vmap[v] = v;
  for (std::size_t i = 0; i < edges_.size(); ++i) idx[i] = static_cast<int>(i);
  return tutte_rec(std::move(vmap), edges_, std::move(idx));
}

std::vector<TreeRecord> tree_expansion(const SignedGraph& g) {
  std::vector<TreeRecord> out;
  const auto& edges = g.edges();
  const int m = g.edge_count();

  for (const auto& tree : g.spanning_trees()) {
    std::vector<char> in_tree(m, 0);
    for (int i : tree) in_tree[i] = 1;

    TreeRecord rec;
    rec.edges = tree;
    rec.weight = Laurent::constant(1);

    for (int i = 0; i < m; ++i) {
      bool live;
      if (in_tree[i]) {
        // components of T - i; any lower edge bridging them kills liveness
        Dsu dsu(g.vertices());
        for (int j : tree)
          if (j != i) dsu.unite(edges[j].u, edges[j].v);
        int cu = dsu.find(edges[i].u), cv = dsu.find(edges[i].v);
        live = true;
        for (int f = 0; f < i && live; ++f) {
          int a = dsu.find(edges[f].u), b = dsu.find(edges[f].v);
          if ((a == cu && b == cv) || (a == cv && b == cu)) live = false;
        }
      } else {
        // path in T between the endpoints of i; a lower tree edge on it kills
        live = true;
        for (int f = 0; f < i && live; ++f) {
          if (!in_tree[f]) continue;
          // f lies on the cycle of i iff removing f from T separates i's ends
          Dsu d2(g.vertices());
          for (int j : tree)
            if (j != f) d2.unite(edges[j].u, edges[j].v);
          if (d2.find(edges[i].u) != d2.find(edges[i].v)) live = false;
        }
      }
      bool positive = edges[i].sign > 0;
      char base = in_tree[i] ? (live ? 'L' : 'D') : (live ? 'l' : 'd');
      rec.word.push_back(base);
      if (!positive) rec.word.push_back('\'');
      rec.weight *= letter_weight(base, !positive);
      int dir = positive ? 1 : -1;
      if (base == 'L') rec.u += dir;
      if (base == 'l') rec.u -= dir;
      if (in_tree[i] && positive) rec.v += 1;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

SignedGraph tait_graph(const Diagram& d, bool shade_black) {
  if (d.components() == 0) throw std::domain_error("empty diagram has no checkerboard graph");
  if (d.is_split()) throw std::domain_error("checkerboard graph of a split diagram");
  if (d.crossings() == 0) return SignedGraph(1, {});

  std::map<int, int> vertex_of_face;
  for (int f = 0; f < d.faces(); ++f)
    if (d.face_black(f) == shade_black)
      vertex_of_face.emplace(f, static_cast<int>(vertex_of_face.size()));

  std::vector<SignedEdge> edges;
  for (int x = 0; x < d.crossings(); ++x) {
    bool corner0_shaded = d.face_black(d.corner_face(x, 0)) == shade_black;
    SignedEdge e;
    if (corner0_shaded) {
      // corners 0 and 2 are shaded: the pair the B-smoothing merges
      e.u = vertex_of_face.at(d.corner_face(x, 0));
      e.v = vertex_of_face.at(d.corner_face(x, 2));
      e.sign = -1;
    } else {
      // corners 1 and 3 are shaded: the pair the A-smoothing merges
      e.u = vertex_of_face.at(d.corner_face(x, 1));
      e.v = vertex_of_face.at(d.corner_face(x, 3));
      e.sign = 1;
    }
    e.crossing = x;
    edges.push_back(e);
  }
  return SignedGraph(static_cast<int>(vertex_of_face.size()), std::move(edges));
}

SignedGraph canonical_tait(const Diagram& d) {
  SignedGraph black = tait_graph(d, true);
  SignedGraph white = tait_graph(d, false);
  return white.positive_edges() > black.positive_edges() ? white : black;
}

std::pair<int, int> word_gradings(const std::string& word) {
  int u = 0, v = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (c != 'L' && c != 'D' && c != 'l' && c != 'd')
      throw std::invalid_argument("unknown activity letter in word");
    bool barred = false;
    if (i + 1 < word.size() && word[i + 1] == '\'') {
      barred = true;
      ++i;
    }
    if (c == 'L') u += barred ? -1 : 1;
    if (c == 'l') u -= barred ? -1 : 1;
    if ((c == 'L' || c == 'D') && !barred) ++v;
  }
  return {u, v};
}

Laurent word_weight(const std::string& word) {
  Laurent w = Laurent::monomial(1, 0);
  for (std::size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (c != 'L' && c != 'D' && c != 'l' && c != 'd')
      throw std::invalid_argument("unknown activity letter in word");
    bool barred = false;
    if (i + 1 < word.size() && word[i + 1] == '\'') {
      barred = true;
      ++i;
    }
    w *= letter_weight(c, barred);
  }
  return w;
}

Laurent thistlethwaite_bracket(const Diagram& d) {
  Laurent sum("A");
  for (const auto& rec : tree_expansion(canonical_tait(d))) sum += rec.weight;
  return sum;
}

}  // namespace turaev
