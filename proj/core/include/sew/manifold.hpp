#pragma once

#include <string>
#include <utility>

#include "sew/error.hpp"

namespace sew {

enum class ManifoldKind { circle, flat_torus, sphere };

/// One of the instantiated compact homogeneous manifolds, always carrying
/// its normalized (probability) volume element.
struct ManifoldModel {
  ManifoldKind kind = ManifoldKind::circle;
  int dim = 1;

  static ManifoldModel circle() { return {ManifoldKind::circle, 1}; }

  static ManifoldModel torus(int d) {
    if (d < 1) throw ConfigError("torus dimension must be >= 1");
    return {ManifoldKind::flat_torus, d};
  }

  static ManifoldModel sphere(int d) {
    if (d < 1) throw ConfigError("sphere dimension must be >= 1");
    return {ManifoldKind::sphere, d};
  }

  /// Number of coordinates used to address a point: angle on the circle,
  /// d torus coordinates in [0,1), (colatitude, azimuth) on S^2.
  int coord_dim() const {
    switch (kind) {
      case ManifoldKind::circle: return 1;
      case ManifoldKind::flat_torus: return dim;
      case ManifoldKind::sphere: return 2;
    }
    return 0;
  }

  bool operator==(const ManifoldModel&) const = default;
};

inline std::string to_string(const ManifoldModel& model) {
  switch (model.kind) {
    case ManifoldKind::circle: return "circle";
    case ManifoldKind::flat_torus: return "torus" + std::to_string(model.dim);
    case ManifoldKind::sphere: return "sphere" + std::to_string(model.dim);
  }
  return "?";
}

/// Parses "circle", "torus<d>", "sphere<d>" (e.g. "sphere2", "torus3").
inline ManifoldModel parse_manifold(const std::string& name) {
  if (name == "circle") return ManifoldModel::circle();
  for (const auto& [prefix, kind] :
       {std::pair{std::string("torus"), ManifoldKind::flat_torus},
        std::pair{std::string("sphere"), ManifoldKind::sphere}}) {
    if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size()) {
      const std::string digits = name.substr(prefix.size());
      if (digits.find_first_not_of("0123456789") == std::string::npos) {
        const int d = std::stoi(digits);
        return kind == ManifoldKind::flat_torus ? ManifoldModel::torus(d)
                                                : ManifoldModel::sphere(d);
      }
    }
  }
  throw ConfigError("unknown manifold '" + name +
                    "' (expected circle, torus<d> or sphere<d>)");
}

}  // namespace sew
