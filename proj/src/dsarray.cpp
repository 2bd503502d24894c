#include "simultile/dsarray.hpp"

#include <numeric>

#include "simultile/errors.hpp"

namespace simultile {

int DSArray::support_size() const {
  int c = 0;
  for (const auto& e : entries)
    if (!e.is_zero()) ++c;
  return c;
}

bool DSArray::nonnegative() const {
  for (const auto& e : entries)
    if (e.im != 0 || e.re < 0) return false;
  return true;
}

DSArray nw_minimal(int n, int m) {
  if (n < 1 || m < 1) throw Error("nw_minimal requires positive dimensions");
  DSArray M(n, m);
  std::vector<Rational> row(n, Rational(m)), col(m, Rational(n));
  int i = 0, j = 0;
  while (i < n && j < m) {
    Rational alloc = std::min(row[i], col[j]);
    M.at(i, j) = ComplexRational(alloc);
    row[i] -= alloc;
    col[j] -= alloc;
    // On a tie both lines are exhausted at once; advancing both keeps the
    // next allocation positive, so each visited cell carries a nonzero entry.
    if (row[i] == 0 && col[j] == 0) {
      ++i;
      ++j;
    } else if (row[i] == 0) {
      ++i;
    } else {
      ++j;
    }
  }
  return M;
}

bool verify_marginals(const DSArray& M) {
  for (int i = 0; i < M.n; ++i) {
    ComplexRational sum;
    for (int j = 0; j < M.m; ++j) sum += M.at(i, j);
    if (!(sum == ComplexRational(M.m))) return false;
  }
  for (int j = 0; j < M.m; ++j) {
    ComplexRational sum;
    for (int i = 0; i < M.n; ++i) sum += M.at(i, j);
    if (!(sum == ComplexRational(M.n))) return false;
  }
  return true;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int k) : parent(k) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Component criterion over explicit cell lists (row vertex i, column
// vertex n + j).
bool cells_feasible(int n, int m, const std::vector<std::pair<int, int>>& cells) {
  std::vector<char> row_seen(n, 0), col_seen(m, 0);
  Dsu dsu(n + m);
  for (auto [i, j] : cells) {
    row_seen[i] = 1;
    col_seen[j] = 1;
    dsu.unite(i, n + j);
  }
  for (int i = 0; i < n; ++i)
    if (!row_seen[i]) return false;
  for (int j = 0; j < m; ++j)
    if (!col_seen[j]) return false;
  std::vector<long> rows_in(n + m, 0), cols_in(n + m, 0);
  for (int i = 0; i < n; ++i) ++rows_in[dsu.find(i)];
  for (int j = 0; j < m; ++j) ++cols_in[dsu.find(n + j)];
  for (int v = 0; v < n + m; ++v) {
    long a = rows_in[v], b = cols_in[v];
    if (a == 0 && b == 0) continue;
    if (a * static_cast<long>(m) != b * static_cast<long>(n)) return false;
  }
  return true;
}

// Depth-first enumeration of k-cell patterns, pruned by the number of
// still-uncovered rows and columns.
bool exists_feasible_of_size(int n, int m, int k) {
  std::vector<std::pair<int, int>> chosen;
  chosen.reserve(k);
  std::vector<int> row_cov(n, 0), col_cov(m, 0);
  int rows_uncov = n, cols_uncov = m;

  auto rec = [&](auto&& self, int start) -> bool {
    int remaining = k - static_cast<int>(chosen.size());
    if (remaining == 0)
      return rows_uncov == 0 && cols_uncov == 0 && cells_feasible(n, m, chosen);
    if (remaining < rows_uncov || remaining < cols_uncov) return false;
    for (int cell = start; cell <= n * m - remaining; ++cell) {
      int i = cell / m, j = cell % m;
      chosen.emplace_back(i, j);
      if (row_cov[i]++ == 0) --rows_uncov;
      if (col_cov[j]++ == 0) --cols_uncov;
      bool found = self(self, cell + 1);
      if (--row_cov[i] == 0) ++rows_uncov;
      if (--col_cov[j] == 0) ++cols_uncov;
      chosen.pop_back();
      if (found) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

bool pattern_feasible(const SupportPattern& P) {
  std::vector<std::pair<int, int>> cells(P.cells.begin(), P.cells.end());
  for (auto [i, j] : cells)
    if (i < 0 || i >= P.n || j < 0 || j >= P.m)
      throw Error("support pattern cell out of bounds");
  return cells_feasible(P.n, P.m, cells);
}

int min_support_exhaustive(int n, int m, int cap) {
  if (n * m > cap) throw InstanceTooLarge("min_support_exhaustive: n*m exceeds cap");
  for (int k = std::max(n, m); k <= n * m; ++k)
    if (exists_feasible_of_size(n, m, k)) return k;
  throw Error("no feasible pattern found");  // unreachable: the full pattern works
}

int min_support_formula(int n, int m) { return n + m - std::gcd(n, m); }

}  // namespace simultile
