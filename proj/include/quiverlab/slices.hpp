#pragma once

#include "quiverlab/quiver.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quiverlab {

/// Representation type tau = (k_1, v_1; ...; k_r, v_r).
struct RepTypePart {
  std::int64_t multiplicity = 1;
  DimVector dim;
  bool operator==(const RepTypePart&) const = default;
};

struct RepType {
  std::vector<RepTypePart> parts;

  /// sum_t k_t v_t
  DimVector total(std::size_t n) const;
  bool operator==(const RepType&) const = default;
};

/// Parses "1:(1,1);1:(0,1)". Whitespace is ignored. Throws ValidationError.
RepType parse_rep_type(std::string_view text, std::size_t n);

struct RepTypeViolation {
  enum class Kind { Length, Multiplicity, ZeroPart, Sum, LambdaPairing, ThetaPairing, Duplicate };
  Kind kind;
  /// Offending part, or -1 for whole-type constraints.
  int part = -1;
  std::string message;
};

/// Empty result means tau is a valid type for (v, lambda, theta).
/// With `strict`, repeated part vectors are also reported.
std::vector<RepTypeViolation> validate_rep_type(const Quiver& q, const DimVector& v, const ParamPair& params,
                                                const RepType& tau, bool strict = false);

struct SliceResult {
  /// r vertices labelled "1".."r"; loops p(v_t) at t; -v_t.C_Q v_u arrows t->u for t < u.
  Quiver slice_quiver;
  /// Entries k_t.
  DimVector slice_dim;
  /// provenance[t] = v_t.
  std::vector<DimVector> provenance;
};

/// Local-model quiver at a semisimple point of type tau. Throws
/// InadmissibleTypeError if some p(v_t) or -v_t.C_Q v_u is negative.
SliceResult slice_quiver(const Quiver& q, const RepType& tau);

/// (p_hat(sum k_t e_t), p(sum k_t v_t)); the two agree for every admissible type.
std::pair<std::int64_t, std::int64_t> p_identity_sides(const Quiver& q, const RepType& tau);

}  // namespace quiverlab
