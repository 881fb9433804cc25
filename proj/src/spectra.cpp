#include "rgspec/spectra.hpp"

#include <cmath>
#include <string>

#include "rgspec/errors.hpp"

namespace rgspec {

std::vector<double> dense_adjacency(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) a[static_cast<std::size_t>(u) * n + v] = 1.0;
  return a;
}

namespace {

void check_dense_cap(const Graph& g, int cap) {
  if (g.vertex_count() > cap)
    throw RefusalError("dense eigensolve: " + std::to_string(g.vertex_count()) +
                       " vertices exceeds cap " + std::to_string(cap));
}

}  // namespace

EigenSym spectral_decomposition(const Graph& g, double tol, int cap, EigenMethod method) {
  if (tol <= 0.0) throw ConstructionError("spectral_decomposition: tol > 0 required");
  check_dense_cap(g, cap);
  return eig_sym(dense_adjacency(g), g.vertex_count(), method);
}

std::vector<double> eigenvalues_symmetric(const Graph& g, double tol, int cap,
                                          EigenMethod method) {
  return spectral_decomposition(g, tol, cap, method).values;
}

ESD esd(const Graph& g, double tol, int cap, EigenMethod method) {
  const auto values = eigenvalues_symmetric(g, tol, cap, method);
  const double w = 1.0 / static_cast<double>(values.size());
  std::vector<WeightedPoint> pts;
  pts.reserve(values.size());
  for (double v : values) pts.push_back({v, w});
  return ESD::from_points(std::move(pts));
}

ESD rooted_spectral_measure(const Graph& g, int root, double tol, double cluster_tol, int cap,
                            EigenMethod method) {
  if (root < 0 || root >= g.vertex_count())
    throw ConstructionError("rooted_spectral_measure: root out of range");
  const EigenSym dec = spectral_decomposition(g, tol, cap, method);
  const int n = dec.n;
  std::vector<WeightedPoint> pts;
  int k = 0;
  // Weight per eigenvalue cluster, not per basis vector: within a cluster the
  // eigenbasis is arbitrary but the projection norm is not.
  while (k < n) {
    double centroid = dec.values[k];
    double weight = dec.vector_entry(root, k) * dec.vector_entry(root, k);
    int count = 1;
    while (k + count < n && std::abs(dec.values[k + count] - centroid) <= cluster_tol) {
      const double x = dec.vector_entry(root, k + count);
      centroid = (centroid * count + dec.values[k + count]) / (count + 1);
      weight += x * x;
      ++count;
    }
    pts.push_back({centroid, weight});
    k += count;
  }
  return ESD::from_points(std::move(pts));
}

double rooted_moment(const EigenSym& dec, int root, int k) {
  double m = 0.0;
  for (int i = 0; i < dec.n; ++i) {
    const double w = dec.vector_entry(root, i) * dec.vector_entry(root, i);
    m += w * std::pow(dec.values[i], k);
  }
  return m;
}

BigInt closed_walk_count(const Graph& g, int root, int k) {
  if (root < 0 || root >= g.vertex_count())
    throw ConstructionError("closed_walk_count: root out of range");
  if (k < 0) throw ConstructionError("closed_walk_count: k >= 0 required");
  if (k > kMaxWalkLength)
    throw RefusalError("closed_walk_count: k = " + std::to_string(k) +
                       " exceeds the walk-length cap " + std::to_string(kMaxWalkLength) +
                       "; lower k");
  const int n = g.vertex_count();
  std::vector<BigInt> cur(n, 0), next(n, 0);
  cur[root] = 1;
  for (int step = 0; step < k; ++step) {
    for (int v = 0; v < n; ++v) next[v] = 0;
    for (int v = 0; v < n; ++v) {
      if (cur[v] == 0) continue;
      for (int w : g.neighbors(v)) next[w] += cur[v];
    }
    cur.swap(next);
  }
  return cur[root];
}

}  // namespace rgspec
