#include "support/oracles.hpp"

#include <map>
#include <stdexcept>

namespace turaev::test {

namespace {

struct LabelDsu {
  std::map<int, int> parent;
  int find(int a) {
    auto it = parent.find(a);
    if (it == parent.end()) {
      parent[a] = a;
      return a;
    }
    if (it->second == a) return a;
    return it->second = find(it->second);
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int circle_count_dsu(const Diagram& d, StateMask s) {
  LabelDsu dsu;
  for (int x = 0; x < d.crossings(); ++x)
    for (int slot = 0; slot < 4; ++slot) dsu.find(d.arc_at(x, slot));
  for (int x = 0; x < d.crossings(); ++x) {
    bool b = (s >> x) & 1;
    if (b) {
      dsu.unite(d.arc_at(x, 0), d.arc_at(x, 3));
      dsu.unite(d.arc_at(x, 1), d.arc_at(x, 2));
    } else {
      dsu.unite(d.arc_at(x, 0), d.arc_at(x, 1));
      dsu.unite(d.arc_at(x, 2), d.arc_at(x, 3));
    }
  }
  int classes = 0;
  for (const auto& [label, p] : dsu.parent)
    if (dsu.find(label) == label) ++classes;
  return classes + d.free_loops();
}

Int determinant(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        if (num % prev != 0) throw std::logic_error("Bareiss: inexact division");
        m[i][j] = num / prev;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Int matrix_tree_count(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 0) throw std::invalid_argument("matrix_tree_count: need a vertex");
  if (n == 1) return 1;
  std::vector<std::vector<Int>> lap(n, std::vector<Int>(n, 0));
  for (auto [u, v] : edges) {
    if (u == v) continue;
    lap[u][u] += 1;
    lap[v][v] += 1;
    lap[u][v] -= 1;
    lap[v][u] -= 1;
  }
  std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) minor[i][j] = lap[i][j];
  return determinant(std::move(minor));
}

}  // namespace turaev::test
