#include "rgspec/esd.hpp"

#include <algorithm>
#include <cmath>

#include "rgspec/errors.hpp"

namespace rgspec {

ESD ESD::from_points(std::vector<WeightedPoint> pts) {
  if (pts.empty()) throw ConstructionError("esd: empty point list");
  double total = 0.0;
  for (const auto& p : pts) {
    if (p.weight < 0.0) throw ConstructionError("esd: negative weight");
    if (!std::isfinite(p.value) || !std::isfinite(p.weight))
      throw ConstructionError("esd: non-finite entry");
    total += p.weight;
  }
  if (std::abs(total - 1.0) > 1e-6)
    throw ConstructionError("esd: weights sum to " + std::to_string(total));
  std::sort(pts.begin(), pts.end(),
            [](const WeightedPoint& a, const WeightedPoint& b) { return a.value < b.value; });
  ESD e;
  for (const auto& p : pts) {
    if (!e.pts_.empty() && e.pts_.back().value == p.value)
      e.pts_.back().weight += p.weight / total;
    else
      e.pts_.push_back({p.value, p.weight / total});
  }
  return e;
}

double ESD::moment(int k) const {
  double m = 0.0;
  for (const auto& p : pts_) m += p.weight * std::pow(p.value, k);
  return m;
}

double ESD::cdf(double t) const {
  double f = 0.0;
  for (const auto& p : pts_) {
    if (p.value > t) break;
    f += p.weight;
  }
  return f;
}

AtomSummary atom_cluster(const ESD& e, double tol) {
  if (tol <= 0.0) throw ConstructionError("atom_cluster: tol > 0 required");
  AtomSummary out;
  out.tol = tol;
  double centroid = 0.0, mass = 0.0;
  int count = 0;
  for (const auto& p : e.points()) {
    if (count > 0 && std::abs(p.value - centroid) <= tol) {
      const double w = mass + p.weight;
      centroid = (w > 0.0) ? (centroid * mass + p.value * p.weight) / w
                           : (centroid * count + p.value) / (count + 1);
      mass = w;
      ++count;
    } else {
      if (count > 0) out.clusters.push_back({centroid, mass, count});
      centroid = p.value;
      mass = p.weight;
      count = 1;
    }
  }
  if (count > 0) out.clusters.push_back({centroid, mass, count});
  return out;
}

double ks_distance(const ESD& a, const ESD& b) {
  const auto& pa = a.points();
  const auto& pb = b.points();
  double fa = 0.0, fb = 0.0, best = 0.0;
  std::size_t i = 0, j = 0;
  while (i < pa.size() || j < pb.size()) {
    double t;
    if (j >= pb.size() || (i < pa.size() && pa[i].value <= pb[j].value))
      t = pa[i].value;
    else
      t = pb[j].value;
    while (i < pa.size() && pa[i].value == t) fa += pa[i++].weight;
    while (j < pb.size() && pb[j].value == t) fb += pb[j++].weight;
    best = std::max(best, std::abs(fa - fb));
  }
  return best;
}

namespace {

// sup_t [F(t) - G(t + eps)]; for step CDFs the sup over t is attained at a
// jump point of F.
double sup_shift_gap(const ESD& f, const ESD& g, double eps) {
  double worst = -1.0;
  double ff = 0.0;
  for (const auto& p : f.points()) {
    ff += p.weight;
    worst = std::max(worst, ff - g.cdf(p.value + eps));
  }
  return worst;
}

bool levy_feasible(const ESD& a, const ESD& b, double eps) {
  return sup_shift_gap(a, b, eps) <= eps && sup_shift_gap(b, a, eps) <= eps;
}

}  // namespace

double levy_distance(const ESD& a, const ESD& b) {
  double lo = 0.0, hi = 1.0;
  if (levy_feasible(a, b, 0.0)) return 0.0;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (levy_feasible(a, b, mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

ESD average_esds(const std::vector<ESD>& list) {
  if (list.empty()) throw ConstructionError("average_esds: empty list");
  std::vector<WeightedPoint> pts;
  const double w = 1.0 / static_cast<double>(list.size());
  for (const auto& e : list)
    for (const auto& p : e.points()) pts.push_back({p.value, p.weight * w});
  return ESD::from_points(std::move(pts));
}

}  // namespace rgspec
