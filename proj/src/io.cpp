#include "quiverlab/io.hpp"

#include "quiverlab/errors.hpp"

#include <fstream>
#include <limits>

namespace quiverlab {

namespace {

std::string label_of(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ValidationError(where + ": vertex labels must be strings");
}

std::int64_t nonnegative_integer(const Json& j, const std::string& where) {
  std::int64_t x = 0;
  if (j.is_number_integer()) {
    x = j.get<std::int64_t>();
  } else if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (boost::multiprecision::denominator(r) != 1) throw ValidationError(where + ": expected an integer");
    const auto& num = boost::multiprecision::numerator(r);
    if (num > std::numeric_limits<std::int32_t>::max()) throw ValidationError(where + ": value too large");
    x = num.convert_to<std::int64_t>();
  } else {
    throw ValidationError(where + ": expected an integer");
  }
  if (x < 0) throw ValidationError(where + ": expected a nonnegative integer");
  return x;
}

Rational rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  throw ValidationError(where + ": rationals must be \"p/q\" strings or integers");
}

std::size_t lookup(const Quiver& q, const std::string& label, const std::string& where) {
  auto i = q.index_of(label);
  if (!i) throw ValidationError(where + ": unknown vertex \"" + label + "\"");
  return *i;
}

template <class F>
void for_each_vertex_entry(const Json& doc, const char* key, const Quiver& q, F&& f) {
  if (!doc.contains(key) || doc[key].is_null()) return;
  const Json& obj = doc[key];
  if (!obj.is_object()) throw ValidationError(std::string(key) + " must be an object keyed by vertex label");
  for (const auto& [label, value] : obj.items()) {
    const std::string where = std::string(key) + "[" + label + "]";
    f(lookup(q, label, where), value, where);
  }
}

}  // namespace

QuiverInput parse_input(const Json& doc) {
  if (!doc.is_object()) throw ValidationError("input must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ValidationError("vertices: required array of labels");

  std::vector<std::string> labels;
  for (const auto& l : doc["vertices"]) labels.push_back(label_of(l, "vertices"));

  std::vector<std::pair<std::string, std::string>> arrows;
  if (doc.contains("arrows")) {
    if (!doc["arrows"].is_array()) throw ValidationError("arrows: expected an array of [tail, head] pairs");
    for (const auto& a : doc["arrows"]) {
      if (!a.is_array() || a.size() != 2) throw ValidationError("arrows: each arrow must be a [tail, head] pair");
      arrows.emplace_back(label_of(a[0], "arrows"), label_of(a[1], "arrows"));
    }
  }

  QuiverInput in;
  in.quiver = Quiver::build(std::move(labels), arrows);
  const std::size_t n = in.quiver.size();
  in.dim = DimVector(n);
  in.framing = FramingVector(n);
  in.params = ParamPair::zero(n);

  if (!doc.contains("dim")) throw ValidationError("dim: required object");
  for_each_vertex_entry(doc, "dim", in.quiver,
                        [&](std::size_t i, const Json& x, const std::string& w) { in.dim[i] = nonnegative_integer(x, w); });
  for_each_vertex_entry(doc, "framing", in.quiver, [&](std::size_t i, const Json& x, const std::string& w) {
    in.framing[i] = nonnegative_integer(x, w);
  });
  for_each_vertex_entry(doc, "lambda", in.quiver,
                        [&](std::size_t i, const Json& x, const std::string& w) { in.params.lambda[i] = rational(x, w); });
  for_each_vertex_entry(doc, "theta", in.quiver,
                        [&](std::size_t i, const Json& x, const std::string& w) { in.params.theta[i] = rational(x, w); });
  return in;
}

QuiverInput parse_input_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open input file");
  Json doc;
  try {
    doc = Json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  return parse_input(doc);
}

Problem resolve(const QuiverInput& in) {
  if (in.has_framing()) {
    FramedData fd = frame(in.quiver, in.dim, in.framing, in.params);
    return {std::move(fd.quiver), std::move(fd.dim), std::move(fd.params), true};
  }
  validate_params(in.dim, in.params);
  return {in.quiver, in.dim, in.params, false};
}

Json to_json(const DimVector& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json to_json(const std::vector<Rational>& x) {
  Json a = Json::array();
  for (const auto& r : x) a.push_back(to_string(r));
  return a;
}

Json labels_of(const Quiver& q, const std::vector<std::size_t>& vertices) {
  Json a = Json::array();
  for (auto i : vertices) a.push_back(q.labels().at(i));
  return a;
}

Json to_input_json(const Quiver& q, const DimVector& v, const ParamPair& params) {
  Json doc;
  doc["vertices"] = q.labels();
  Json arrows = Json::array();
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      for (std::int64_t c = 0; c < q.arrows(i, j); ++c) arrows.push_back({q.labels()[i], q.labels()[j]});
  doc["arrows"] = std::move(arrows);
  Json dim = Json::object(), lambda = Json::object(), theta = Json::object();
  for (std::size_t i = 0; i < q.size(); ++i) {
    dim[q.labels()[i]] = v[i];
    lambda[q.labels()[i]] = to_string(params.lambda[i]);
    theta[q.labels()[i]] = to_string(params.theta[i]);
  }
  doc["dim"] = std::move(dim);
  doc["lambda"] = std::move(lambda);
  doc["theta"] = std::move(theta);
  return doc;
}

}  // namespace quiverlab
