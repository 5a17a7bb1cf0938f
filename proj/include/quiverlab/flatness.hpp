#pragma once

#include "quiverlab/quiver.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace quiverlab {

inline constexpr std::size_t kDefaultStateBudget = 1'000'000;

struct FlatnessOptions {
  /// Largest admissible box size prod(v_i + 1).
  std::size_t budget = kDefaultStateBudget;
  /// Also enumerate every nontrivial decomposition attaining best_sum.
  bool all_witnesses = false;
  /// Cap on the number of maximizing decompositions collected.
  std::size_t max_listed = 10'000;
  /// Worker threads for the table fill; 0 picks from QUIVERLAB_THREADS.
  unsigned threads = 0;
};

struct FlatnessReport {
  bool flat = false;
  std::int64_t p_value = 0;
  /// Maximum of sum_t p(v^(t)) over all decompositions, the trivial one included.
  std::int64_t best_sum = 0;
  /// Parts (descending lexicographic) of a decomposition attaining best_sum
  /// when the moment map is not flat.
  std::optional<std::vector<DimVector>> witness;

  // Populated only with FlatnessOptions::all_witnesses.
  /// Nontrivial decompositions attaining best_sum whose every part u itself
  /// satisfies p(u) > sum p over every proper decomposition of u.
  std::vector<std::vector<DimVector>> stable_witnesses;
  /// Number of nontrivial decompositions attaining best_sum, no filter.
  std::size_t maximizing_count = 0;
  bool listing_truncated = false;
};

/// Decides flatness of the moment map for (Q, v) by maximizing the sum of
/// p over all multiset decompositions of v into nonzero vectors.
/// Throws ValidationError for v = 0 and CapacityError when the box exceeds
/// the budget.
FlatnessReport flatness_certificate(const Quiver& q, const DimVector& v, const FlatnessOptions& opts = {});

/// True iff p(v) > sum_t p(v^(t)) for every decomposition with r >= 2 whose
/// parts are all orthogonal to lambda and theta (vacuously true if none).
bool sigma_condition(const Quiver& q, const DimVector& v, const ParamPair& params,
                     std::size_t budget = kDefaultStateBudget);

struct GenericityResult {
  bool generic = true;
  /// First 0 < v' < v in colexicographic order (first coordinate fastest),
  /// not proportional to v, with lambda.v' = theta.v' = 0.
  std::optional<DimVector> offender;
};

GenericityResult is_generic(const DimVector& v, const ParamPair& params, std::size_t budget = kDefaultStateBudget);

/// gcd of the entries is 1.
bool is_indivisible(const DimVector& v);

/// 2 p(v); the dimension of the quiver scheme when the moment map is flat.
std::int64_t expected_dimension(const Quiver& q, const DimVector& v);

/// Number of worker threads requested through QUIVERLAB_THREADS (default 1).
unsigned configured_threads();

}  // namespace quiverlab
