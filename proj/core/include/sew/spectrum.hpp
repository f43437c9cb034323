#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sew/manifold.hpp"

namespace sew {

/// Laplace-Beltrami spectrum of a model, as exact integers: eigenvalue
/// theta_k, eigenspace dimension d_k and cumulative dimension tau_N of the
/// span of eigenspaces 0..N.  theta_0 = 0 with d_0 = 1 (constants) and
/// theta is strictly increasing for the three instantiated models.
struct Spectrum {
  ManifoldModel model;
  std::vector<std::int64_t> eigenvalues;
  std::vector<std::int64_t> multiplicities;
  std::vector<std::int64_t> cumulative;

  int max_index() const { return static_cast<int>(eigenvalues.size()) - 1; }

  std::int64_t theta(int k) const;
  std::int64_t block_dim(int k) const;
  std::int64_t tau(int n) const;
};

/// Closed-form spectrum up to index n_max.
///   circle:     theta_k = k^2, d_k = 2 for k >= 1
///   sphere S^d: theta_k = k(k+d-1), classical harmonic dimensions
///   torus T^d:  distinct squared lattice norms |m|^2, multiplicity =
///               lattice point count, sorted ascending
Spectrum spectrum(const ManifoldModel& model, int n_max);

/// Weyl counting ratio n(a) * a^(-d/2), where n(a) counts eigenvalues
/// strictly below a with multiplicity.  Requires 0 < a <= theta_max.
double weyl_ratio(const Spectrum& spec, double a);

/// Consecutive quotients (theta_{N+1}/theta_N, tau_{N+1}/tau_N).
std::pair<double, double> ratio_check(const Spectrum& spec, int n);

}  // namespace sew
