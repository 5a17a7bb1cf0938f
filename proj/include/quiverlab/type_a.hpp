#pragma once

#include "quiverlab/quiver.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace quiverlab {

enum class TypeAShape { Path, Cycle };

/// Type A quiver on vertices "1".."n" with arrows i -> i+1; the cycle adds
/// n -> 1. The cycle with n = 1 is the Jordan quiver (one loop).
class TypeAQuiver {
 public:
  TypeAQuiver(TypeAShape shape, std::size_t n);

  std::size_t n() const { return n_; }
  bool affine() const { return shape_ == TypeAShape::Cycle; }
  TypeAShape shape() const { return shape_; }
  const Quiver& quiver() const { return quiver_; }

 private:
  TypeAShape shape_;
  std::size_t n_;
  Quiver quiver_;
};

using VertexSet = std::vector<std::size_t>;

/// Nonempty vertex sets inducing a connected subgraph: intervals of the path,
/// arcs of the cycle plus the whole cycle. Ordered by size, then by first
/// vertex along the orientation; each set is sorted ascending.
std::vector<VertexSet> connected_subsets(const TypeAQuiver& q);

struct TypeAFlatness {
  bool flat = true;
  /// First connected I with e_I.(d - C_Q v) < -1.
  std::optional<VertexSet> violating;
  std::int64_t violating_value = 0;
};

/// Flatness of the framed moment map via e_I.(d - C_Q v) >= -1 over connected I.
/// Throws ValidationError if d = 0 or lengths disagree.
TypeAFlatness flat_type_a(const TypeAQuiver& q, const DimVector& v, const FramingVector& d);

struct TestVectorDecomposition {
  /// Copies of the imaginary root delta (always 0 for paths).
  std::int64_t m = 0;
  std::vector<VertexSet> subsets;
};

/// u = m delta + sum_alpha e_{I_alpha}, with every I_alpha connected, never
/// the full cycle, and (e_{I_alpha}, e_{I_beta})_Q >= 0. All delta copies are
/// extracted first, then support components are peeled repeatedly.
TestVectorDecomposition decompose_test_vector(const TypeAQuiver& q, const DimVector& u);

/// e_I as a vector.
DimVector indicator(std::size_t n, const VertexSet& subset);

struct WalgParams {
  /// r_1..r_n, sum N.
  std::vector<std::int64_t> r;
  /// d_1..d_{n-1}, sum_i i d_i = N.
  std::vector<std::int64_t> d;

  std::size_t n() const { return r.size(); }
  std::int64_t N() const;
  /// Checks nonnegativity, lengths (n >= 2) and both sum constraints.
  void validate() const;
};

/// v_i = sum_{j>i} r_j - sum_{j>i} (j - i) d_j on the A_{n-1} path, d_n read
/// as 0. Throws ValidationError when an entry is negative.
DimVector walg_dims(const WalgParams& p);

/// r_i - r_j >= -1 for all i < j (walg_dims must succeed).
bool walg_flat(const WalgParams& p);

struct IntervalIdentity {
  /// 1-based pair i < j.
  std::size_t i = 0, j = 0;
  /// e_{i,j}.(d - C_Q v)
  std::int64_t lhs = 0;
  /// r_i - r_j
  std::int64_t rhs = 0;
};

std::vector<IntervalIdentity> walg_identity_checks(const WalgParams& p);

}  // namespace quiverlab
