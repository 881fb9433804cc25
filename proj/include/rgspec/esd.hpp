#pragma once

#include <vector>

namespace rgspec {

struct WeightedPoint {
  double value = 0.0;
  double weight = 0.0;
};

// A probability measure given by finitely many weighted atoms, values sorted
// ascending, weights summing to 1 (within 1e-12 after normalization). Exactly
// equal values are merged on construction.
class ESD {
 public:
  ESD() = default;
  static ESD from_points(std::vector<WeightedPoint> pts);

  const std::vector<WeightedPoint>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  double moment(int k) const;

  // CDF value at t (right-continuous).
  double cdf(double t) const;

 private:
  std::vector<WeightedPoint> pts_;
};

struct AtomCluster {
  double center = 0.0;
  double mass = 0.0;
  int multiplicity = 0;
};

struct AtomSummary {
  std::vector<AtomCluster> clusters;
  double tol = 0.0;
};

inline constexpr double kDefaultClusterTol = 1e-7;

// Greedy left-to-right clustering: a value joins the current cluster while it
// lies within tol of the running (weighted) centroid.
AtomSummary atom_cluster(const ESD& e, double tol = kDefaultClusterTol);

// Exact sup_t |F(t) - G(t)| over the merged jump points.
double ks_distance(const ESD& a, const ESD& b);

// Levy distance by bisection to 1e-9.
double levy_distance(const ESD& a, const ESD& b);

// Uniform mixture of measures; errors on an empty list.
ESD average_esds(const std::vector<ESD>& list);

}  // namespace rgspec
