#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "rgspec/eigensym.hpp"
#include "rgspec/esd.hpp"
#include "rgspec/graph.hpp"

namespace rgspec {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kDenseCap = 4000;
inline constexpr double kDefaultEigenTol = 1e-9;
inline constexpr int kMaxWalkLength = 30;

std::vector<double> dense_adjacency(const Graph& g);

// All n eigenvalues, ascending, to absolute error <= tol. Refuses above the
// dense cap; throws NumericError if the iteration budget is exhausted.
std::vector<double> eigenvalues_symmetric(const Graph& g, double tol = kDefaultEigenTol,
                                          int cap = kDenseCap,
                                          EigenMethod method = EigenMethod::kAuto);

EigenSym spectral_decomposition(const Graph& g, double tol = kDefaultEigenTol,
                                int cap = kDenseCap, EigenMethod method = EigenMethod::kAuto);

// Empirical spectral distribution: uniform weight 1/n per eigenvalue.
ESD esd(const Graph& g, double tol = kDefaultEigenTol, int cap = kDenseCap,
        EigenMethod method = EigenMethod::kAuto);

// Spectral measure at the root: one atom per eigenvalue cluster, weighted by
// the squared projection of e_root onto the cluster's eigenspace.
ESD rooted_spectral_measure(const Graph& g, int root, double tol = kDefaultEigenTol,
                            double cluster_tol = kDefaultClusterTol, int cap = kDenseCap,
                            EigenMethod method = EigenMethod::kAuto);

// k-th moment of the rooted spectral measure, from the unclustered
// decomposition (used for walk-count identities).
double rooted_moment(const EigenSym& dec, int root, int k);

// Exact number of closed walks of length k at root (adjacency power by
// integer dynamic programming). Refuses k > kMaxWalkLength.
BigInt closed_walk_count(const Graph& g, int root, int k);

}  // namespace rgspec
