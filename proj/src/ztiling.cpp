#include "simultile/ztiling.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace simultile {

ZFunction::ZFunction(std::map<long, ComplexField> values) : values_(std::move(values)) {
  for (auto it = values_.begin(); it != values_.end();)
    it = it->second.is_zero() ? values_.erase(it) : std::next(it);
}

ComplexField ZFunction::at(long t) const {
  auto it = values_.find(t);
  return it == values_.end() ? ComplexField() : it->second;
}

void ZFunction::set(long t, const ComplexField& v) {
  if (v.is_zero())
    values_.erase(t);
  else
    values_[t] = v;
}

ZFunction z_convolution_tiler(int n, int m) {
  if (n < 1 || m < 1) throw Error("z_convolution_tiler requires positive moduli");
  int d = std::gcd(n, m);
  int n1 = n / d, m1 = m / d;
  // Kernel chi_{n1} * chi_{m1} on {0, ..., n1 + m1 - 2}.
  std::vector<long> kernel(n1 + m1 - 1, 0);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < m1; ++b) ++kernel[a + b];
  std::map<long, ComplexField> values;
  for (int t = 0; t < static_cast<int>(kernel.size()); ++t)
    for (int j = 0; j < d; ++j)
      values[j + static_cast<long>(d) * t] = ComplexField(FieldNum(Rational(kernel[t] * d)));
  return ZFunction(std::move(values));
}

ZTilingResult verify_ztiling(const ZFunction& g, int n, int m) {
  if (n < 1 || m < 1) throw Error("verify_ztiling requires positive moduli");
  auto residue_sums = [&](int mod) {
    std::vector<ComplexField> sums(mod);
    for (const auto& [t, v] : g.values()) {
      long r = ((t % mod) + mod) % mod;
      sums[r] += v;
    }
    return sums;
  };
  ZTilingResult res;
  auto sums_n = residue_sums(n);
  for (int r = 1; r < n; ++r) {
    if (!(sums_n[r] == sums_n[0])) {
      res.witness_t = r;
      res.witness_modulus = n;
      return res;
    }
  }
  auto sums_m = residue_sums(m);
  for (int r = 1; r < m; ++r) {
    if (!(sums_m[r] == sums_m[0])) {
      res.witness_t = r;
      res.witness_modulus = m;
      return res;
    }
  }
  res.ok = true;
  res.p = sums_n[0];
  res.q = sums_m[0];
  return res;
}

std::vector<ComplexField> fold_mod(const ZFunction& g, int N) {
  if (N < 1) throw Error("fold_mod requires a positive period");
  std::vector<ComplexField> h(N);
  for (const auto& [t, v] : g.values()) h[((t % N) + N) % N] += v;
  return h;
}

DSArray crt_lift(const std::vector<ComplexField>& h, int n, int m) {
  if (std::gcd(n, m) != 1) throw NotCoprime();
  if (static_cast<int>(h.size()) != n * m)
    throw Error("crt_lift expects a vector of length n*m");
  DSArray M(n, m);
  for (int t = 0; t < n * m; ++t) {
    const ComplexField& v = h[t];
    if (!v.re.is_rational() || !v.im.is_rational())
      throw Error("crt_lift expects rational entries");
    M.at(t % n, t % m) = ComplexRational(v.re.rat_part(), v.im.rat_part());
  }
  return M;
}

namespace {

struct ClassDsu {
  std::vector<int> parent;
  explicit ClassDsu(int k) : parent(k) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Feasibility of a one-period support pattern: build the bipartite graph
// on residue classes mod n and mod m, one edge per support element, and
// apply the per-component consistency criterion a*m = b*n.
bool zpattern_feasible(int n, int m, const std::vector<int>& support) {
  std::vector<char> ncov(n, 0), mcov(m, 0);
  ClassDsu dsu(n + m);
  for (int t : support) {
    ncov[t % n] = 1;
    mcov[t % m] = 1;
    dsu.unite(t % n, n + t % m);
  }
  for (int r = 0; r < n; ++r)
    if (!ncov[r]) return false;
  for (int r = 0; r < m; ++r)
    if (!mcov[r]) return false;
  std::vector<long> a_cnt(n + m, 0), b_cnt(n + m, 0);
  for (int r = 0; r < n; ++r) ++a_cnt[dsu.find(r)];
  for (int r = 0; r < m; ++r) ++b_cnt[dsu.find(n + r)];
  for (int v = 0; v < n + m; ++v) {
    if (a_cnt[v] == 0 && b_cnt[v] == 0) continue;
    if (a_cnt[v] * m != b_cnt[v] * n) return false;
  }
  return true;
}

bool exists_zpattern_of_size(int n, int m, int N, int k) {
  std::vector<int> chosen;
  chosen.reserve(k);
  std::vector<int> ncov(n, 0), mcov(m, 0);
  int n_uncov = n, m_uncov = m;
  auto rec = [&](auto&& self, int start) -> bool {
    int remaining = k - static_cast<int>(chosen.size());
    if (remaining == 0)
      return n_uncov == 0 && m_uncov == 0 && zpattern_feasible(n, m, chosen);
    if (remaining < n_uncov || remaining < m_uncov) return false;
    for (int t = start; t <= N - remaining; ++t) {
      chosen.push_back(t);
      if (ncov[t % n]++ == 0) --n_uncov;
      if (mcov[t % m]++ == 0) --m_uncov;
      bool found = self(self, t + 1);
      if (--ncov[t % n] == 0) ++n_uncov;
      if (--mcov[t % m] == 0) ++m_uncov;
      chosen.pop_back();
      if (found) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

int z_min_support_search(int n, int m, int cap) {
  if (n < 1 || m < 1) throw Error("z_min_support_search requires positive moduli");
  long N = std::lcm(static_cast<long>(n), static_cast<long>(m));
  if (N > cap) throw InstanceTooLarge("z_min_support_search: lcm(n,m) exceeds cap");
  // Folding any tiling mod lcm(n, m) preserves both tiling conditions and
  // never grows the support, so the one-period minimum is the true minimum.
  for (int k = std::max(n, m); k <= N; ++k)
    if (exists_zpattern_of_size(n, m, static_cast<int>(N), k)) return k;
  throw Error("no tiling pattern found");  // unreachable: the full period works
}

ZFunction restrict_fx(const PiecewiseFn& f, const FieldNum& x) {
  std::ostringstream bad;
  bool any_bad = false;
  for (const auto& p : f.pieces()) {
    for (const FieldNum* endpoint : {&p.interval.lo, &p.interval.hi}) {
      FieldNum diff = *endpoint - x;
      if ((diff - FieldNum(Rational(diff.floor()))).is_zero()) {
        if (any_bad) bad << ", ";
        bad << diff.floor();
        any_bad = true;
      }
    }
  }
  if (any_bad)
    throw BoundaryPoint("x + t hits a piece boundary for t in {" + bad.str() + "}");

  std::map<long, ComplexField> values;
  for (const auto& p : f.pieces()) {
    Integer t_lo = -((x - p.interval.lo).floor());  // ceil(lo - x)
    Integer t_hi = (p.interval.hi - x).floor();
    for (Integer t = t_lo; t <= t_hi; ++t) {
      FieldNum pt = x + FieldNum(Rational(t));
      if (!p.interval.contains(pt)) continue;
      ComplexField v = p.value_at(pt);
      if (!v.is_zero()) values[t.get_si()] = v;
    }
  }
  return ZFunction(std::move(values));
}

FieldNum support_integral(const PiecewiseFn& f) {
  ElementarySet supp = f.support();
  std::vector<FieldNum> cuts{FieldNum(0), FieldNum(1)};
  for (const auto& part : supp.parts()) {
    cuts.push_back(reduce_mod(part.lo, FieldNum(1)).residue);
    cuts.push_back(reduce_mod(part.hi, FieldNum(1)).residue);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  FieldNum total(0);
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const FieldNum& lo = cuts[i];
    const FieldNum& hi = cuts[i + 1];
    if (hi > FieldNum(1)) break;
    // |supp f_x| is constant on the open cell; sample its midpoint.
    FieldNum mid = (lo + hi) / FieldNum(2);
    long count = fiber_count(supp, FieldNum(1), mid);
    total += (hi - lo) * FieldNum(Rational(count));
  }
  return total;
}

}  // namespace simultile
