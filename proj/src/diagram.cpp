#include "turaev/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace turaev {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw std::invalid_argument("PD code: " + msg);
}

int smoothing_partner(Smoothing sm, int slot) {
  return sm == Smoothing::A ? (slot ^ 1) : (3 - slot);
}

// The two arcs spliced together by each smoothing channel, as slot pairs.
std::array<std::array<int, 2>, 2> smoothing_channels(Smoothing sm) {
  if (sm == Smoothing::A) return {{{0, 1}, {2, 3}}};
  return {{{0, 3}, {1, 2}}};
}

// Smoothing can reverse part of a strand, leaving some crossing with its
// under-strand entering at slot 2.  Walk the strands (entry port p leaves at
// the diagonal p^2) and rotate any such quadruple by two, which re-bases the
// same unoriented crossing on the actual under entry.
std::vector<Crossing> normalize_under_entries(std::vector<Crossing> cs) {
  const int np = static_cast<int>(4 * cs.size());
  if (np == 0) return cs;
  std::map<int, std::vector<int>> occ;
  for (int p = 0; p < np; ++p) occ[cs[p / 4].arc[p % 4]].push_back(p);
  std::vector<int> alpha(np, -1);
  for (const auto& [label, ps] : occ) {
    if (ps.size() != 2) return cs;  // invalid; let the strict build report it
    alpha[ps[0]] = ps[1];
    alpha[ps[1]] = ps[0];
  }
  std::vector<char> seen(np, 0), rotate(cs.size(), 0);
  for (int p0 = 0; p0 < np; ++p0) {
    if (seen[p0]) continue;
    int q = p0;
    do {
      seen[q] = 1;
      if ((q & 3) == 2) rotate[q >> 2] = 1;
      int exit = (q & ~3) | ((q & 3) ^ 2);
      seen[exit] = 1;
      q = alpha[exit];
    } while (q != p0);
  }
  for (std::size_t x = 0; x < cs.size(); ++x)
    if (rotate[x]) {
      std::swap(cs[x].arc[0], cs[x].arc[2]);
      std::swap(cs[x].arc[1], cs[x].arc[3]);
    }
  return cs;
}

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
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

Diagram Diagram::parse(const std::string& pd_code) {
  // strip comments
  std::string s;
  bool in_comment = false;
  for (char ch : pd_code) {
    if (ch == '#') in_comment = true;
    if (ch == '\n') in_comment = false;
    if (!in_comment) s.push_back(ch);
  }

  std::vector<Crossing> cs;
  std::size_t i = 0;
  auto skip_sep = [&] {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ';')) ++i;
  };
  auto expect = [&](char ch) {
    if (i >= s.size() || s[i] != ch) bad(std::string("expected '") + ch + "'");
    ++i;
  };
  auto read_int = [&]() -> int {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) bad("expected an arc number");
    long v = std::stol(s.substr(start, i - start));
    if (v < 1 || v > 1'000'000) bad("arc number out of range");
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return static_cast<int>(v);
  };

  skip_sep();
  while (i < s.size()) {
    expect('X');
    expect('[');
    Crossing x{};
    x.arc[0] = read_int();
    expect(',');
    x.arc[1] = read_int();
    expect(',');
    x.arc[2] = read_int();
    expect(',');
    x.arc[3] = read_int();
    expect(']');
    cs.push_back(x);
    skip_sep();
  }

  if (cs.empty()) return from_crossings({}, 1);  // the round unknot
  return from_crossings(std::move(cs), 0);
}

Diagram Diagram::from_crossings(std::vector<Crossing> crossings, int free_loops) {
  if (free_loops < 0) bad("negative free loop count");
  Diagram d;
  d.cross_ = std::move(crossings);
  d.free_loops_ = free_loops;
  d.build();
  return d;
}

void Diagram::build() {
  const int c = crossings();
  const int np = 4 * c;

  // Pair up the two occurrences of each arc label.
  std::map<int, std::vector<int>> occ;
  for (int p = 0; p < np; ++p) {
    int label = port_arc(p);
    if (label < 1) bad("arc numbers must be positive");
    occ[label].push_back(p);
  }
  for (const auto& [label, ps] : occ)
    if (ps.size() != 2)
      bad("arc " + std::to_string(label) + " appears " + std::to_string(ps.size()) +
          " times (must be exactly 2)");
  alpha_.assign(np, -1);
  for (const auto& [label, ps] : occ) {
    alpha_[ps[0]] = ps[1];
    alpha_[ps[1]] = ps[0];
  }

  // Derive strand orientations.  Under-strand ports are fixed (enter at slot
  // 0, leave at slot 2); each crossing has one unknown, the direction of its
  // over-strand, and every arc forces its two end roles to differ.
  std::vector<int> odb(c, -1);
  auto role = [&](int p) -> int {  // 1 = strand enters the crossing here
    int s = p & 3, x = p >> 2;
    if (s == 0) return 1;
    if (s == 2) return 0;
    if (odb[x] < 0) return -1;
    return (s == 3) == (odb[x] == 1) ? 1 : 0;
  };
  auto force_role = [&](int p, int r) {
    int s = p & 3, x = p >> 2;
    int v = (s == 3) ? r : 1 - r;
    if (odb[x] >= 0 && odb[x] != v) bad("inconsistent strand orientations");
    odb[x] = v;
  };
  while (true) {
    bool progress = false;
    for (int p = 0; p < np; ++p) {
      int q = alpha_[p];
      int rp = role(p), rq = role(q);
      if (rp >= 0 && rq >= 0) {
        if (rp == rq) bad("inconsistent strand orientations");
      } else if (rp >= 0) {
        force_role(q, 1 - rp);
        progress = true;
      } else if (rq >= 0) {
        force_role(p, 1 - rq);
        progress = true;
      }
    }
    if (progress) continue;
    // components that are never under-strands get a deterministic default
    auto it = std::find(odb.begin(), odb.end(), -1);
    if (it == odb.end()) break;
    *it = 1;
  }
  over_db_.assign(c, 0);
  for (int x = 0; x < c; ++x) over_db_[x] = static_cast<char>(odb[x]);
  head_.assign(np, 0);
  for (int p = 0; p < np; ++p) head_[p] = static_cast<char>(role(p));

  // Link components: walk head port -> opposite-slot exit -> next head port.
  auto strand_next = [&](int p) {
    int s = p & 3, x = p >> 2;
    int out = s == 0 ? 2 : (s == 2 ? 0 : (s ^ 2));
    return alpha_[4 * x + out];
  };
  // (slot 0 enters, continues out of slot 2; over-strand flips between 1 and 3)
  components_ = free_loops_;
  {
    std::vector<char> seen(np, 0);
    for (int p = 0; p < np; ++p) {
      if (!head_[p] || seen[p]) continue;
      ++components_;
      int q = p;
      do {
        seen[q] = 1;
        q = strand_next(q);
      } while (q != p);
    }
  }

  // Projection components (crossings joined by arcs).
  comp_of_crossing_.assign(c, 0);
  {
    Dsu dsu(std::max(c, 1));
    for (int p = 0; p < np; ++p) dsu.unite(p >> 2, alpha_[p] >> 2);
    std::map<int, int> ids;
    for (int x = 0; x < c; ++x) {
      int r = dsu.find(x);
      auto [it, fresh] = ids.emplace(r, static_cast<int>(ids.size()));
      comp_of_crossing_[x] = it->second;
    }
    diag_comps_ = static_cast<int>(ids.size()) + free_loops_;
    if (c == 0) diag_comps_ = free_loops_;
  }

  // Faces, traced to the left of each dart: arriving at slot s, the face
  // continues along the arc leaving from slot s-1.
  face_of_port_.assign(np, -1);
  n_faces_ = 0;
  for (int p = 0; p < np; ++p) {
    if (face_of_port_[p] >= 0) continue;
    int f = n_faces_++;
    int q = p;
    do {
      face_of_port_[q] = f;
      q = alpha_[(q & ~3) | ((q + 3) & 3)];
    } while (q != p);
  }

  // Realizability: each projection piece must satisfy V - E + F = 2.
  if (c > 0) {
    int ncomp = diag_comps_ - free_loops_;
    std::vector<int> verts(ncomp, 0), face_seen_comp(n_faces_, -1);
    std::vector<int> fcount(ncomp, 0);
    for (int x = 0; x < c; ++x) ++verts[comp_of_crossing_[x]];
    for (int p = 0; p < np; ++p) {
      int comp = comp_of_crossing_[p >> 2];
      int f = face_of_port_[p];
      if (face_seen_comp[f] != comp) {
        face_seen_comp[f] = comp;
        ++fcount[comp];
      }
    }
    for (int i = 0; i < ncomp; ++i)
      if (verts[i] - 2 * verts[i] + fcount[i] != 2) bad("diagram is not realizable in the plane");
  }

  // Checkerboard coloring: the two faces along any arc get opposite colors.
  face_color_.assign(n_faces_, -1);
  for (int start = 0; start < np; ++start) {
    int f0 = face_of_port_[start];
    if (face_color_[f0] >= 0) continue;
    face_color_[f0] = 0;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      // visit all ports of p's face, flipping color across each arc
      int q = p;
      do {
        int f = face_of_port_[q];
        int g = face_of_port_[alpha_[q]];
        if (face_color_[g] < 0) {
          face_color_[g] = 1 - face_color_[f];
          stack.push_back(alpha_[q]);
        } else if (face_color_[g] == face_color_[f]) {
          bad("projection is not checkerboard colorable");
        }
        q = alpha_[(q & ~3) | ((q + 3) & 3)];
      } while (q != p);
    }
  }

  // Default outer face: to the left of the lowest-numbered arc's dart.
  outer_face_ = 0;
  if (c > 0) {
    int p0 = occ.begin()->second[0];
    int head_port = head_[p0] ? p0 : alpha_[p0];
    outer_face_ = face_of_port_[head_port];
  }
}

std::string Diagram::pd() const {
  if (free_loops_ > 0 && crossings() > 0)
    throw std::logic_error("PD codes cannot express crossing-free loops");
  std::ostringstream out;
  for (int x = 0; x < crossings(); ++x) {
    if (x) out << ";";
    out << "X[" << cross_[x].arc[0] << "," << cross_[x].arc[1] << "," << cross_[x].arc[2]
        << "," << cross_[x].arc[3] << "]";
  }
  return out.str();
}

int Diagram::writhe() const {
  int w = 0;
  for (int x = 0; x < crossings(); ++x) w += sign(x);
  return w;
}

bool Diagram::alternating() const {
  // between consecutive crossings the strand must switch level
  for (int p = 0; p < ports(); ++p) {
    bool over_here = (p & 1) != 0;
    bool over_there = (alpha_[p] & 1) != 0;
    if (over_here == over_there) return false;
  }
  return true;
}

Diagram Diagram::mirror() const {
  std::vector<Crossing> cs(cross_);
  for (auto& x : cs) std::swap(x.arc[1], x.arc[3]);
  return from_crossings(std::move(cs), free_loops_);
}

Diagram Diagram::reversed() const {
  std::vector<Crossing> cs(cross_);
  for (auto& x : cs) {
    std::swap(x.arc[0], x.arc[2]);
    std::swap(x.arc[1], x.arc[3]);
  }
  return from_crossings(std::move(cs), free_loops_);
}

Diagram Diagram::reordered(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != crossings()) bad("reorder: wrong permutation size");
  std::vector<char> hit(perm.size(), 0);
  std::vector<Crossing> cs;
  cs.reserve(perm.size());
  for (int j : perm) {
    if (j < 0 || j >= crossings() || hit[j]) bad("reorder: not a permutation");
    hit[j] = 1;
    cs.push_back(cross_[j]);
  }
  return from_crossings(std::move(cs), free_loops_);
}

void Diagram::set_outer_face(int f) {
  if (f < 0 || f >= n_faces_) throw std::invalid_argument("no such face");
  outer_face_ = f;
}

int Diagram::circle_count(StateMask s) const {
  int orbits = 0;
  std::vector<char> seen(ports(), 0);
  for (int p = 0; p < ports(); ++p) {
    if (seen[p]) continue;
    ++orbits;
    int q = p;
    do {
      seen[q] = 1;
      int x = q >> 2;
      Smoothing sm = (s >> x) & 1 ? Smoothing::B : Smoothing::A;
      q = alpha_[4 * x + smoothing_partner(sm, q & 3)];
    } while (q != p);
  }
  return orbits / 2 + free_loops_;
}

std::vector<std::vector<int>> Diagram::oriented_circles(StateMask s) const {
  if (is_split()) throw std::domain_error("state circles of a split diagram have no canonical orientation");
  std::vector<std::vector<int>> out(free_loops_);  // loops: circles with no ports
  std::vector<char> seen(ports(), 0);
  for (int p = 0; p < ports(); ++p) {
    if (seen[p]) continue;
    std::vector<int> orbit;
    int q = p;
    bool black = face_black(face_of_port_[p]);
    do {
      seen[q] = 1;
      if (face_black(face_of_port_[q]) != black)
        throw std::logic_error("state circle does not keep one color on its left");
      orbit.push_back(q);
      int x = q >> 2;
      Smoothing sm = (s >> x) & 1 ? Smoothing::B : Smoothing::A;
      q = alpha_[4 * x + smoothing_partner(sm, q & 3)];
    } while (q != p);
    if (black) out.push_back(std::move(orbit));
  }
  if (static_cast<int>(out.size()) != circle_count(s))
    throw std::logic_error("state circle orientation classes do not pair up");
  return out;
}

int Diagram::state_surface_genus(StateMask s) const {
  if (is_split()) throw std::domain_error("state surface of a split diagram is not defined here");
  StateMask all = crossings() >= 32 ? ~StateMask(0) : (StateMask(1) << crossings()) - 1;
  int two_g = crossings() + 2 - circle_count(s) - circle_count(~s & all);
  if (two_g < 0 || two_g % 2 != 0)
    throw std::logic_error("state surface Euler characteristic is not even");
  return two_g / 2;
}

int Diagram::turaev_genus() const { return state_surface_genus(0); }

Diagram Diagram::smoothed(int x, Smoothing sm) const {
  if (x < 0 || x >= crossings()) throw std::invalid_argument("no such crossing");
  int loops = free_loops_;
  std::map<int, int> rename;
  auto canon = [&](int label) {
    while (true) {
      auto it = rename.find(label);
      if (it == rename.end()) return label;
      label = it->second;
    }
  };
  for (const auto& ch : smoothing_channels(sm)) {
    int u = canon(cross_[x].arc[ch[0]]);
    int v = canon(cross_[x].arc[ch[1]]);
    if (u == v)
      ++loops;
    else
      rename[std::max(u, v)] = std::min(u, v);
  }
  std::vector<Crossing> cs;
  cs.reserve(cross_.size() - 1);
  for (int y = 0; y < crossings(); ++y) {
    if (y == x) continue;
    Crossing nc = cross_[y];
    for (int s2 = 0; s2 < 4; ++s2) nc.arc[s2] = canon(nc.arc[s2]);
    cs.push_back(nc);
  }
  return from_crossings(normalize_under_entries(std::move(cs)), loops);
}

std::vector<int> Diagram::gauss_crossing_sequence() const {
  if (components() != 1) throw std::domain_error("Gauss sequence needs a one-component diagram");
  std::vector<int> seq;
  if (crossings() == 0) return seq;
  int start = -1;
  for (int p = 0; p < ports() && start < 0; ++p)
    if (head_[p]) start = p;
  int q = start;
  do {
    seq.push_back(q >> 2);
    int s = q & 3, x = q >> 2;
    int out = s == 0 ? 2 : (s == 2 ? 0 : (s ^ 2));
    q = alpha_[4 * x + out];
  } while (q != start);
  return seq;
}

bool Diagram::r1_reducible_to_unknot() const {
  if (components() != 1) return false;
  std::vector<int> seq = gauss_crossing_sequence();
  // repeatedly delete adjacent equal pairs, cyclically
  bool progress = true;
  while (progress && !seq.empty()) {
    progress = false;
    int n = static_cast<int>(seq.size());
    for (int i = 0; i < n; ++i) {
      if (seq[i] == seq[(i + 1) % n]) {
        int j = (i + 1) % n;
        seq.erase(seq.begin() + std::max(i, j));
        seq.erase(seq.begin() + std::min(i, j));
        progress = true;
        break;
      }
    }
  }
  return seq.empty();
}

std::vector<Diagram> Diagram::split_pieces() const {
  int ncomp = diag_comps_ - free_loops_;
  std::vector<std::vector<Crossing>> parts(ncomp);
  for (int x = 0; x < crossings(); ++x) parts[comp_of_crossing_[x]].push_back(cross_[x]);
  std::vector<Diagram> out;
  for (auto& cs : parts) out.push_back(from_crossings(std::move(cs), 0));
  for (int i = 0; i < free_loops_; ++i) out.push_back(from_crossings({}, 1));
  return out;
}

}  // namespace turaev
