#pragma once

#include "quiverlab/quiver.hpp"

#include <cstddef>
#include <vector>

namespace quiverlab {

struct Reflected {
  DimVector dim;
  ParamPair params;
  bool operator==(const Reflected&) const = default;
};

/// Simple reflection at a loop-free vertex i, with (x, y) = x.C_Q y:
///   s_i v = v - (v, e_i) e_i,   (s_i lambda)_j = lambda_j - (e_i, e_j) lambda_i,
/// and likewise for theta. Throws ValidationError if i carries a loop or the
/// reflected dimension is negative.
Reflected reflect_at(const Quiver& q, const DimVector& v, const ParamPair& params, std::size_t i);

struct ReflectionAdmissibility {
  bool loop_free = false;
  /// lambda_i != 0 or theta_i != 0.
  bool lmn = false;
  /// (v, e_i) = +1 or -1.
  bool pm1 = false;
  std::int64_t pairing = 0;
};

ReflectionAdmissibility reflection_admissibility(const Quiver& q, const DimVector& v, const ParamPair& params,
                                                 std::size_t i);

struct ReflectionOrbit {
  /// Breadth-first discovery order; the input state comes first.
  std::vector<Reflected> states;
  bool truncated = false;
};

/// Closure under reflect_at over loop-free vertices, keeping only
/// nonnegative dimension vectors, stopped after max_size states.
ReflectionOrbit reflection_orbit(const Quiver& q, const DimVector& v, const ParamPair& params, std::size_t max_size);

}  // namespace quiverlab
