#include "rgspec/eigensym.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rgspec/errors.hpp"
#include "rgspec/parallel.hpp"

namespace rgspec {

namespace {

constexpr int kMaxQlIterations = 50;
constexpr int kMaxJacobiSweeps = 64;

double hypot2(double a, double b) { return std::hypot(a, b); }

// Householder reduction of a symmetric matrix to tridiagonal form with
// accumulation of the orthogonal transform in z (EISPACK tred2 lineage).
void tridiagonalize(std::vector<double>& z, int n, std::vector<double>& d, std::vector<double>& e) {
  auto at = [&](int i, int j) -> double& { return z[static_cast<std::size_t>(i) * n + j]; };
  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    double scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          at(j, i) = at(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          g = e[j] - hh * f;
          e[j] = g;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    const int l = i - 1;
    if (d[i] != 0.0) {
      for (int j = 0; j <= l; ++j) {
        double g = 0.0;
        for (int k = 0; k <= l; ++k) g += at(i, k) * at(k, j);
        for (int k = 0; k <= l; ++k) at(k, j) -= g * at(k, i);
      }
    }
    d[i] = at(i, i);
    at(i, i) = 1.0;
    for (int j = 0; j <= l; ++j) {
      at(j, i) = 0.0;
      at(i, j) = 0.0;
    }
  }
}

// Implicit-shift QL on a tridiagonal matrix, rotations applied to z
// (EISPACK tql2 lineage).
int ql_implicit(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z, int n) {
  auto at = [&](int i, int j) -> double& { return z[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  int max_iter_used = 0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) + dd == dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxQlIterations)
          throw NumericError("eig_sym_ql: no convergence after " +
                             std::to_string(kMaxQlIterations) + " iterations");
        max_iter_used = std::max(max_iter_used, iter);
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = hypot2(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = hypot2(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = at(k, i + 1);
            at(k, i + 1) = s * at(k, i) + c * f;
            at(k, i) = c * at(k, i) - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  return max_iter_used;
}

void sort_ascending(EigenSym& res) {
  const int n = res.n;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return res.values[a] < res.values[b]; });
  std::vector<double> values(n);
  std::vector<double> vectors(res.vectors.size());
  for (int k = 0; k < n; ++k) {
    values[k] = res.values[order[k]];
    for (int i = 0; i < n; ++i)
      vectors[static_cast<std::size_t>(i) * n + k] =
          res.vectors[static_cast<std::size_t>(i) * n + order[k]];
  }
  res.values = std::move(values);
  res.vectors = std::move(vectors);
}

double off_diagonal_sq(const std::vector<double>& a, int n) {
  double off = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double x = a[static_cast<std::size_t>(i) * n + j];
      off += x * x;
    }
  return off;
}

}  // namespace

EigenSym eig_sym_ql(std::vector<double> a, int n) {
  EigenSym res;
  res.n = n;
  if (n == 0) return res;
  std::vector<double> d(n), e(n, 0.0);
  if (n == 1) {
    res.values = {a[0]};
    res.vectors = {1.0};
    return res;
  }
  tridiagonalize(a, n, d, e);
  res.sweeps = ql_implicit(d, e, a, n);
  res.values = std::move(d);
  res.vectors = std::move(a);
  sort_ascending(res);
  return res;
}

EigenSym eig_sym_jacobi(std::vector<double> a, int n) {
  EigenSym res;
  res.n = n;
  if (n == 0) return res;
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
  if (n == 1) {
    res.values = {a[0]};
    res.vectors = std::move(v);
    return res;
  }

  double fro = 0.0;
  for (double x : a) fro += x * x;
  fro = std::sqrt(fro);
  const double off_target = 1e-13 * std::max(1.0, fro);

  // Round-robin tournament schedule: the round's pairs are pairwise disjoint,
  // so the rotation angles can be computed from one snapshot and the column
  // and row phases each touch disjoint data. Output is bit-identical for any
  // thread count.
  const int slots = (n % 2 == 0) ? n : n + 1;
  std::vector<int> ring(slots);
  std::iota(ring.begin(), ring.end(), 0);

  struct Rotation {
    int p, q;
    double c, s;
  };
  std::vector<Rotation> rots;
  rots.reserve(slots / 2);

  int sweep = 0;
  for (; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_sq(a, n) <= off_target * off_target) break;
    for (int round = 0; round < slots - 1; ++round) {
      rots.clear();
      for (int i = 0; i < slots / 2; ++i) {
        int p = ring[i];
        int q = ring[slots - 1 - i];
        if (p >= n || q >= n) continue;  // dummy slot when n is odd
        if (p > q) std::swap(p, q);
        const double apq = a[static_cast<std::size_t>(p) * n + q];
        if (apq == 0.0) continue;
        const double app = a[static_cast<std::size_t>(p) * n + p];
        const double aqq = a[static_cast<std::size_t>(q) * n + q];
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(tau * tau + 1.0))
                                      : 1.0 / (tau - std::sqrt(tau * tau + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        rots.push_back({p, q, c, t * c});
      }
      const auto nrot = static_cast<std::int64_t>(rots.size());
      // column phase: A <- A J and V <- V J
      parallel_for(nrot, [&](std::int64_t r) {
        const auto [p, q, c, s] = rots[r];
        for (int i = 0; i < n; ++i) {
          const std::size_t ip = static_cast<std::size_t>(i) * n + p;
          const std::size_t iq = static_cast<std::size_t>(i) * n + q;
          const double xp = a[ip], xq = a[iq];
          a[ip] = c * xp - s * xq;
          a[iq] = s * xp + c * xq;
          const double vp = v[ip], vq = v[iq];
          v[ip] = c * vp - s * vq;
          v[iq] = s * vp + c * vq;
        }
      });
      // row phase: A <- J^T A
      parallel_for(nrot, [&](std::int64_t r) {
        const auto [p, q, c, s] = rots[r];
        double* rowp = a.data() + static_cast<std::size_t>(p) * n;
        double* rowq = a.data() + static_cast<std::size_t>(q) * n;
        for (int j = 0; j < n; ++j) {
          const double xp = rowp[j], xq = rowq[j];
          rowp[j] = c * xp - s * xq;
          rowq[j] = s * xp + c * xq;
        }
      });
      // rotate the ring, keeping slot 0 fixed
      std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
    }
  }
  if (sweep == kMaxJacobiSweeps)
    throw NumericError("eig_sym_jacobi: no convergence after " +
                       std::to_string(kMaxJacobiSweeps) + " sweeps");

  res.sweeps = sweep;
  res.values.resize(n);
  for (int i = 0; i < n; ++i) res.values[i] = a[static_cast<std::size_t>(i) * n + i];
  res.vectors = std::move(v);
  sort_ascending(res);
  return res;
}

EigenSym eig_sym(std::vector<double> a, int n, EigenMethod method) {
  switch (method) {
    case EigenMethod::kQl:
      return eig_sym_ql(std::move(a), n);
    case EigenMethod::kJacobi:
      return eig_sym_jacobi(std::move(a), n);
    case EigenMethod::kAuto:
    default:
      return n < kJacobiCutover ? eig_sym_ql(std::move(a), n) : eig_sym_jacobi(std::move(a), n);
  }
}

}  // namespace rgspec
