#include "paclab/oracle/lp.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "paclab/core/error.hpp"

namespace paclab::oracle {

namespace {

constexpr double kEps = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense tableau simplex over the standard form max c.x, ax <= b, x >= 0.
struct Simplex {
  int m, n;
  std::vector<int> nonbasic, basic;
  std::vector<std::vector<double>> d;
  long pivots = 0, pivot_cap = 0;

  Simplex(const std::vector<std::vector<double>>& a,
          const std::vector<double>& b, const std::vector<double>& c)
      : m(static_cast<int>(b.size())),
        n(static_cast<int>(c.size())),
        nonbasic(n + 1),
        basic(m),
        d(m + 2, std::vector<double>(n + 2)) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = a[i][j];
      basic[i] = n + i;
      d[i][n] = -1;
      d[i][n + 1] = b[i];
    }
    for (int j = 0; j < n; ++j) {
      nonbasic[j] = j;
      d[m][j] = -c[j];
    }
    nonbasic[n] = -1;
    d[m + 1][n] = 1;
    pivot_cap = 2000L * (m + n + 10);
  }

  void pivot(int r, int s) {
    if (++pivots > pivot_cap) {
      throw Error("solver-failure: simplex pivot cap exceeded");
    }
    double inv = 1 / d[r][s];
    for (int i = 0; i < m + 2; ++i) {
      if (i == r || std::abs(d[i][s]) <= kEps) continue;
      double factor = d[i][s] * inv;
      for (int j = 0; j < n + 2; ++j) d[i][j] -= d[r][j] * factor;
      d[i][s] = d[r][s] * factor;
    }
    for (int j = 0; j < n + 2; ++j) {
      if (j != s) d[r][j] *= inv;
    }
    for (int i = 0; i < m + 2; ++i) {
      if (i != r) d[i][s] *= -inv;
    }
    d[r][s] = inv;
    std::swap(basic[r], nonbasic[s]);
  }

  bool iterate(int phase) {
    int x = m + phase - 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n; ++j) {
        if (nonbasic[j] == -phase) continue;
        if (s == -1 || std::pair(d[x][j], nonbasic[j]) <
                           std::pair(d[x][s], nonbasic[s])) {
          s = j;
        }
      }
      if (d[x][s] >= -kEps) return true;
      int r = -1;
      for (int i = 0; i < m; ++i) {
        if (d[i][s] <= kEps) continue;
        if (r == -1 || std::pair(d[i][n + 1] / d[i][s], basic[i]) <
                           std::pair(d[r][n + 1] / d[r][s], basic[r])) {
          r = i;
        }
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  double solve(std::vector<double>& x) {
    int r = 0;
    for (int i = 1; i < m; ++i) {
      if (d[i][n + 1] < d[r][n + 1]) r = i;
    }
    if (d[r][n + 1] < -kEps) {
      pivot(r, n);
      if (!iterate(2) || d[m + 1][n + 1] < -kEps) return -kInf;
      for (int i = 0; i < m; ++i) {
        if (basic[i] != -1) continue;
        int s = 0;
        for (int j = 1; j <= n; ++j) {
          if (std::pair(d[i][j], nonbasic[j]) <
              std::pair(d[i][s], nonbasic[s])) {
            s = j;
          }
        }
        pivot(i, s);
      }
    }
    bool ok = iterate(1);
    x.assign(n, 0);
    for (int i = 0; i < m; ++i) {
      if (basic[i] < n) x[basic[i]] = d[i][n + 1];
    }
    return ok ? d[m][n + 1] : kInf;
  }
};

}  // namespace

LpResult solve_lp(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double> c) {
  for (const auto& row : a) {
    if (row.size() != c.size()) {
      throw Error("invalid-parameters: ragged constraint matrix");
    }
  }
  if (a.size() != b.size()) {
    throw Error("invalid-parameters: constraint row count mismatch");
  }
  LpResult res;
  if (b.empty()) {
    // No constraints: optimum is 0 iff no profitable direction exists.
    bool flat = true;
    for (double cj : c) flat = flat && cj <= kEps;
    res.status = flat ? LpStatus::optimal : LpStatus::unbounded;
    res.x.assign(c.size(), 0);
    return res;
  }
  Simplex sx(a, b, c);
  double value = sx.solve(res.x);
  if (value == -kInf) {
    res.status = LpStatus::infeasible;
  } else if (value == kInf) {
    res.status = LpStatus::unbounded;
  } else {
    res.status = LpStatus::optimal;
    res.value = value;
  }
  return res;
}

}  // namespace paclab::oracle
