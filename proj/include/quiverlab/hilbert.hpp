#pragma once

#include "quiverlab/laurent.hpp"
#include "quiverlab/quiver.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace quiverlab {

/// Truncated power series in t with exact rational coefficients c_0..c_order.
struct TruncSeries {
  int order = 0;
  std::vector<Rational> coefficients;

  bool operator==(const TruncSeries&) const = default;
  /// True when every coefficient is an integer.
  bool integral() const;
  std::vector<std::string> to_strings() const;
};

struct HilbertOptions {
  /// Largest total torus rank sum_i v_i accepted.
  std::size_t max_rank = 5;
  /// Largest truncation order accepted.
  int max_order = 10;
  /// Cap on Laurent terms held across all t-orders at once.
  std::size_t max_terms = 20'000'000;
  /// Discard monomials that can no longer return to exponent zero.
  bool prune = true;
};

/// t-graded Euler characteristic of the Koszul complex C[T*R] (x) Lambda(g(v))
/// reduced by G(v) = prod GL(v_i) / C^*, every arrow coordinate of weight t,
/// computed as a Molien-Weyl constant term. Coefficients are integers.
/// Throws ValidationError (v = 0, order < 0), CapacityError (budgets) and
/// InternalError when the raw constant term is not divisible by prod v_i!.
TruncSeries koszul_euler_series(const Quiver& q, const DimVector& v, int order, const HilbertOptions& opts = {});

/// Molien-Weyl series of C[T*R(Q, v)]^{G(v)}: the same integrand without the
/// Koszul factors.
TruncSeries matter_series(const Quiver& q, const DimVector& v, int order, const HilbertOptions& opts = {});

/// Brute-force Hilbert series of (C[T*R] / (mu))^{torus} for v_i in {0, 1}:
/// weight-zero monomials minus the rank of the moment-map ideal in each degree,
/// by exact rational elimination. Throws ValidationError if some v_i > 1.
TruncSeries abelian_invariant_oracle(const Quiver& q, const DimVector& v, int order);

/// Molien series of Sym^n(C^2): sum over partitions lambda of n of
/// (1/z_lambda) prod_parts (1 - t^part)^{-2}.
TruncSeries symmetric_power_series(int n, int order);

}  // namespace quiverlab
