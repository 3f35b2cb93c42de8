#include "support/pd_builders.hpp"

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace turaev::test {

namespace {

// Renumber arc labels by first appearance, scanning crossings in order and
// slots 0..3, so builder output is deterministic.
std::string render(const std::vector<std::array<int, 4>>& crossings) {
  std::map<int, int> relabel;
  std::ostringstream out;
  for (std::size_t x = 0; x < crossings.size(); ++x) {
    if (x) out << ";";
    out << "X[";
    for (int s = 0; s < 4; ++s) {
      auto [it, fresh] =
          relabel.emplace(crossings[x][s], static_cast<int>(relabel.size()) + 1);
      out << it->second << (s == 3 ? "]" : ",");
    }
  }
  return out.str();
}

struct LabelDsu {
  std::map<int, int> parent;
  int find(int a) {
    auto it = parent.find(a);
    if (it == parent.end() || it->second == a) {
      parent[a] = a;
      return a;
    }
    return it->second = find(it->second);
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::string braid_closure_pd(int strands, const std::vector<int>& word) {
  if (strands < 2) throw std::invalid_argument("braid: need at least 2 strands");
  std::vector<char> touched(strands, 0);

  // cur[j): arc currently occupying strand position j; arcs are created as
  // crossings are stacked, then the closure identifies top with bottom.
  std::vector<int> cur(strands), init(strands);
  for (int j = 0; j < strands; ++j) cur[j] = init[j] = j + 1;
  int next_arc = strands;

  std::vector<std::array<int, 4>> cs;
  for (int letter : word) {
    int i = letter > 0 ? letter : -letter;
    if (i < 1 || i >= strands) throw std::invalid_argument("braid: letter out of range");
    touched[i - 1] = touched[i] = 1;
    int left = cur[i - 1], right = cur[i];
    int left_out = ++next_arc;   // continuation of the left strand (exits right)
    int right_out = ++next_arc;  // continuation of the right strand (exits left)
    if (letter > 0) {
      // positive: right strand goes under, CCW from its entry port
      cs.push_back({right, left_out, right_out, left});
    } else {
      // negative: left strand goes under
      cs.push_back({left, right, left_out, right_out});
    }
    cur[i - 1] = right_out;
    cur[i] = left_out;
  }
  for (int j = 0; j < strands; ++j)
    if (!touched[j]) throw std::invalid_argument("braid: strand not used by any letter");

  // closure: identify the top of each strand with its bottom
  LabelDsu dsu;
  for (int j = 0; j < strands; ++j) dsu.unite(cur[j], init[j]);
  for (auto& x : cs)
    for (int s = 0; s < 4; ++s) x[s] = dsu.find(x[s]);
  return render(cs);
}

std::string pretzel_pd(const std::vector<int>& twists) {
  const int k = static_cast<int>(twists.size());
  if (k < 2) throw std::invalid_argument("pretzel: need at least 2 twist regions");
  for (int p : twists)
    if (p == 0) throw std::invalid_argument("pretzel: zero twist region");

  // Physical ports per crossing, in counterclockwise order: NE, NW, SW, SE.
  // Crossings are stacked top to bottom inside each region; strands run along
  // the diagonals, so a strand arriving at port q leaves at port q^2.
  constexpr int NE = 0, NW = 1, SW = 2, SE = 3;
  int total = 0;
  std::vector<int> base(k);
  for (int i = 0; i < k; ++i) {
    base[i] = total;
    total += std::abs(twists[i]);
  }

  // arcs between physical ports
  std::vector<int> mate(4 * total, -1);
  auto join = [&](int x, int px, int y, int py) {
    mate[4 * x + px] = 4 * y + py;
    mate[4 * y + py] = 4 * x + px;
  };
  for (int i = 0; i < k; ++i) {
    int n = std::abs(twists[i]);
    for (int j = 0; j + 1 < n; ++j) {
      join(base[i] + j, SW, base[i] + j + 1, NW);
      join(base[i] + j, SE, base[i] + j + 1, NE);
    }
    int ni = (i + 1) % k;
    int top_i = base[i], bot_i = base[i] + n - 1;
    int top_n = base[ni], bot_n = base[ni] + std::abs(twists[ni]) - 1;
    join(top_i, NE, top_n, NW);  // top arc to the next region
    join(bot_i, SE, bot_n, SW);  // bottom arc to the next region
  }

  // trace the strands to find the direction through every port
  std::vector<int> incoming(4 * total, -1);  // 1 if the strand enters here
  for (int p0 = 0; p0 < 4 * total; ++p0) {
    if (incoming[p0] >= 0) continue;
    int q = p0;  // declare q an entry port and walk forward
    do {
      incoming[q] = 1;
      int exit = (q & ~3) | ((q & 3) ^ 2);
      incoming[exit] = 0;
      q = mate[exit];
    } while (q != p0);
  }

  // emit PD: slot 0 is the under-strand's entry port
  std::vector<std::array<int, 4>> cs(total);
  std::vector<int> arc_of_port(4 * total, -1);
  int next_arc = 0;
  for (int p = 0; p < 4 * total; ++p)
    if (arc_of_port[p] < 0) arc_of_port[p] = arc_of_port[mate[p]] = ++next_arc;
  for (int i = 0; i < k; ++i) {
    bool over_nw_se = twists[i] > 0;
    for (int j = 0; j < std::abs(twists[i]); ++j) {
      int x = base[i] + j;
      int under_entry;
      if (over_nw_se)
        under_entry = incoming[4 * x + NE] ? NE : SW;
      else
        under_entry = incoming[4 * x + NW] ? NW : SE;
      for (int t = 0; t < 4; ++t)
        cs[x][t] = arc_of_port[4 * x + ((under_entry + t) & 3)];
    }
  }
  return render(cs);
}

}  // namespace turaev::test
