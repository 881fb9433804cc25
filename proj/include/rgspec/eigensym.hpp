#pragma once

#include <vector>

namespace rgspec {

// Full spectral decomposition of a dense symmetric matrix. values are
// ascending; vectors is row-major n x n with column k the unit eigenvector of
// values[k].
struct EigenSym {
  int n = 0;
  std::vector<double> values;
  std::vector<double> vectors;
  int sweeps = 0;  // Jacobi sweeps or max QL iterations used

  double vector_entry(int i, int k) const { return vectors[static_cast<std::size_t>(i) * n + k]; }
};

enum class EigenMethod {
  kAuto,    // QL below kJacobiCutover vertices, Jacobi at or above
  kQl,      // serial reference: Householder tridiagonalization + implicit-shift QL
  kJacobi,  // round-robin cyclic Jacobi; OpenMP-parallel, thread-count invariant
};

inline constexpr int kJacobiCutover = 512;

// a is row-major n x n and must be symmetric; it is consumed.
EigenSym eig_sym_ql(std::vector<double> a, int n);
EigenSym eig_sym_jacobi(std::vector<double> a, int n);
EigenSym eig_sym(std::vector<double> a, int n, EigenMethod method = EigenMethod::kAuto);

}  // namespace rgspec
