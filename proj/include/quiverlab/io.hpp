#pragma once

#include "quiverlab/quiver.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace quiverlab {

using Json = nlohmann::ordered_json;

/// Contents of a quiver input file:
///   {"vertices": [...], "arrows": [[tail, head], ...], "dim": {label: n},
///    "framing": {label: n}, "lambda": {label: "p/q"}, "theta": {...}}
/// framing, lambda and theta are optional and default to zero; labels missing
/// from dim default to zero.
struct QuiverInput {
  Quiver quiver;
  DimVector dim;
  FramingVector framing;
  ParamPair params;

  bool has_framing() const { return !framing.is_zero(); }
};

/// Parses and validates the schema (labels, arrows, nonnegative integers,
/// well-formed rationals). Annihilation constraints are not checked here.
/// Throws ValidationError.
QuiverInput parse_input(const Json& doc);
QuiverInput parse_input_file(const std::string& path);

/// The data an operation works on: the framed quiver Q^d when a nonzero
/// framing is present, otherwise Q itself with lambda.v = theta.v = 0 enforced.
struct Problem {
  Quiver quiver;
  DimVector dim;
  ParamPair params;
  bool framed = false;
};

Problem resolve(const QuiverInput& in);

/// Serializes (Q, v, lambda, theta) in the input schema (no framing key), so
/// the result can be read back as an unframed input.
Json to_input_json(const Quiver& q, const DimVector& v, const ParamPair& params);

Json to_json(const DimVector& v);
Json to_json(const std::vector<Rational>& x);
Json labels_of(const Quiver& q, const std::vector<std::size_t>& vertices);

}  // namespace quiverlab
