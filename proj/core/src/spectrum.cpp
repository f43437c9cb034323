#include "sew/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>

#include "sew/error.hpp"

namespace sew {

namespace {

std::int64_t checked(__int128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max()) {
    throw ConfigError(std::string("spectrum value overflows int64: ") + what);
  }
  return static_cast<std::int64_t>(v);
}

// dim H_k on S^d: (2k+d-1) (k+d-2)! / (k! (d-1)!), with dim H_0 = 1.
std::int64_t sphere_harmonic_dim(int k, int d) {
  if (k == 0) return 1;
  // binomial(k+d-2, d-2) * (2k+d-1) / (k+d-1), kept integral by computing
  // binomial(k+d-2, k) first (product of d-2 terms) then the exact ratio.
  __int128 num = 2 * static_cast<__int128>(k) + d - 1;
  for (int i = 1; i <= d - 2; ++i) num *= (k + i);
  __int128 den = 1;
  for (int i = 1; i <= d - 2; ++i) den *= i;
  den *= (k + d - 1);
  // (2k+d-1) * prod_{i=1}^{d-2}(k+i) is divisible by (d-2)! * (k+d-1).
  return checked(num / den, "sphere eigenspace dimension");
}

Spectrum circle_spectrum(int n_max) {
  Spectrum s;
  s.model = ManifoldModel::circle();
  s.eigenvalues.reserve(n_max + 1);
  s.multiplicities.reserve(n_max + 1);
  for (std::int64_t k = 0; k <= n_max; ++k) {
    s.eigenvalues.push_back(k * k);
    s.multiplicities.push_back(k == 0 ? 1 : 2);
  }
  return s;
}

Spectrum sphere_spectrum(int d, int n_max) {
  Spectrum s;
  s.model = ManifoldModel::sphere(d);
  s.eigenvalues.reserve(n_max + 1);
  s.multiplicities.reserve(n_max + 1);
  for (std::int64_t k = 0; k <= n_max; ++k) {
    s.eigenvalues.push_back(checked(
        static_cast<__int128>(k) * (k + d - 1), "sphere eigenvalue"));
    s.multiplicities.push_back(sphere_harmonic_dim(static_cast<int>(k), d));
  }
  return s;
}

Spectrum torus_spectrum(int d, int n_max) {
  if (d > 4) throw ConfigError("torus spectra supported up to dimension 4");
  // Enumerate squared lattice norms |m|^2 <= radius and grow the scan
  // radius until n_max+1 distinct values are available.  Counting every
  // lattice point with |m|^2 <= radius makes the multiplicities exact for
  // all retained values.
  std::int64_t radius = 3 * static_cast<std::int64_t>(n_max) + 16;
  for (;;) {
    std::map<std::int64_t, std::int64_t> counts;
    const std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(radius))) + 1;
    std::vector<std::int64_t> m(d, -r);
    for (;;) {
      std::int64_t norm2 = 0;
      for (int i = 0; i < d; ++i) norm2 += m[i] * m[i];
      if (norm2 <= radius) ++counts[norm2];
      int axis = 0;
      while (axis < d && ++m[axis] > r) m[axis++] = -r;
      if (axis == d) break;
    }
    if (static_cast<int>(counts.size()) >= n_max + 1) {
      Spectrum s;
      s.model = ManifoldModel::torus(d);
      for (const auto& [value, count] : counts) {
        if (static_cast<int>(s.eigenvalues.size()) > n_max) break;
        s.eigenvalues.push_back(value);
        s.multiplicities.push_back(count);
      }
      return s;
    }
    radius *= 2;
  }
}

}  // namespace

std::int64_t Spectrum::theta(int k) const {
  if (k < 0 || k > max_index()) throw DomainError("eigenvalue index out of range");
  return eigenvalues[k];
}

std::int64_t Spectrum::block_dim(int k) const {
  if (k < 0 || k > max_index()) throw DomainError("eigenspace index out of range");
  return multiplicities[k];
}

std::int64_t Spectrum::tau(int n) const {
  if (n < 0 || n > max_index()) throw DomainError("cumulative index out of range");
  return cumulative[n];
}

Spectrum spectrum(const ManifoldModel& model, int n_max) {
  if (n_max < 0) throw ConfigError("n_max must be nonnegative");
  if (model.kind == ManifoldKind::circle && model.dim != 1) {
    throw ConfigError("circle forces dimension 1");
  }
  Spectrum s;
  switch (model.kind) {
    case ManifoldKind::circle: s = circle_spectrum(n_max); break;
    case ManifoldKind::sphere: s = sphere_spectrum(model.dim, n_max); break;
    case ManifoldKind::flat_torus: s = torus_spectrum(model.dim, n_max); break;
  }
  s.cumulative.resize(s.eigenvalues.size());
  std::int64_t running = 0;
  for (std::size_t i = 0; i < s.multiplicities.size(); ++i) {
    running = checked(static_cast<__int128>(running) + s.multiplicities[i],
                      "cumulative dimension");
    s.cumulative[i] = running;
  }
  return s;
}

double weyl_ratio(const Spectrum& spec, double a) {
  if (a <= 0) throw DomainError("weyl_ratio requires a > 0");
  if (spec.eigenvalues.empty() ||
      a > static_cast<double>(spec.eigenvalues.back())) {
    throw DomainError("a is beyond the computed spectrum");
  }
  // First index with theta >= a; everything before it lies strictly below.
  const auto it = std::lower_bound(
      spec.eigenvalues.begin(), spec.eigenvalues.end(), a,
      [](std::int64_t theta, double value) {
        return static_cast<double>(theta) < value;
      });
  const auto idx = static_cast<std::ptrdiff_t>(it - spec.eigenvalues.begin());
  const double count =
      idx == 0 ? 0.0 : static_cast<double>(spec.cumulative[idx - 1]);
  return count * std::pow(a, -0.5 * spec.model.dim);
}

std::pair<double, double> ratio_check(const Spectrum& spec, int n) {
  if (n < 1 || n + 1 > spec.max_index()) {
    throw DomainError("ratio_check index out of range");
  }
  return {static_cast<double>(spec.eigenvalues[n + 1]) /
              static_cast<double>(spec.eigenvalues[n]),
          static_cast<double>(spec.cumulative[n + 1]) /
              static_cast<double>(spec.cumulative[n])};
}

}  // namespace sew
