#include "quiverlab/cli.hpp"

#include "quiverlab/errors.hpp"
#include "quiverlab/flatness.hpp"
#include "quiverlab/hilbert.hpp"
#include "quiverlab/reflections.hpp"
#include "quiverlab/slices.hpp"
#include "quiverlab/type_a.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <regex>
#include <sstream>

namespace quiverlab::cli {

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* flag) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Rational r = parse_rational(item);
    if (boost::multiprecision::denominator(r) != 1)
      throw ValidationError(std::string(flag) + ": expected integers");
    out.push_back(boost::multiprecision::numerator(r).convert_to<std::int64_t>());
  }
  if (out.empty()) throw ValidationError(std::string(flag) + ": empty list");
  return out;
}

Json parts_json(const std::vector<DimVector>& parts) {
  Json a = Json::array();
  for (const auto& p : parts) a.push_back(to_json(p));
  return a;
}

Json components_json(const Quiver& q, const DimVector& v) {
  Json a = Json::array();
  for (const auto& c : support_components(q, v)) a.push_back(labels_of(q, c));
  return a;
}

void connectivity_advisory(const Quiver& q, const DimVector& v, Json& report) {
  if (support_components(q, v).size() > 1)
    report["advisory"] =
        "support of the dimension vector is disconnected; a flat moment map forces connected support, "
        "consider treating each component separately";
}

std::size_t vertex_index(const Quiver& q, const std::string& label) {
  if (label.empty()) throw ValidationError("--vertex is required");
  auto i = q.index_of(label);
  if (!i) throw ValidationError("unknown vertex \"" + label + "\"");
  return *i;
}

Json state_json(const Reflected& s) {
  Json j;
  j["dim"] = to_json(s.dim);
  j["lambda"] = to_json(s.params.lambda);
  j["theta"] = to_json(s.params.theta);
  return j;
}

Json run_flat(const RunRequest& req) {
  const Problem pb = resolve(parse_input_file(req.input));
  FlatnessOptions opts;
  opts.budget = req.budget;
  opts.all_witnesses = req.all_witnesses;
  const FlatnessReport rep = flatness_certificate(pb.quiver, pb.dim, opts);
  Json out;
  out["flat"] = rep.flat;
  out["p"] = rep.p_value;
  out["best_sum"] = rep.best_sum;
  out["witness"] = rep.witness ? parts_json(*rep.witness) : Json::array();
  out["support_components"] = components_json(pb.quiver, pb.dim);
  out["expected_dimension"] = expected_dimension(pb.quiver, pb.dim);
  out["framed"] = pb.framed;
  if (req.all_witnesses) {
    Json all = Json::array();
    for (const auto& w : rep.stable_witnesses) all.push_back(parts_json(w));
    out["witnesses"] = std::move(all);
    out["maximizing_decompositions"] = rep.maximizing_count;
    out["listing_truncated"] = rep.listing_truncated;
  }
  connectivity_advisory(pb.quiver, pb.dim, out);
  return out;
}

Json run_sigma(const RunRequest& req) {
  const Problem pb = resolve(parse_input_file(req.input));
  Json out;
  out["sigma"] = sigma_condition(pb.quiver, pb.dim, pb.params, req.budget);
  out["p"] = p_fn(pb.quiver, pb.dim);
  out["framed"] = pb.framed;
  return out;
}

Json run_generic(const RunRequest& req) {
  const Problem pb = resolve(parse_input_file(req.input));
  const GenericityResult g = is_generic(pb.dim, pb.params, req.budget);
  Json out;
  out["generic"] = g.generic;
  out["offender"] = g.offender ? to_json(*g.offender) : Json(nullptr);
  out["indivisible"] = is_indivisible(pb.dim);
  out["framed"] = pb.framed;
  return out;
}

Json run_slice(const RunRequest& req) {
  const Problem pb = resolve(parse_input_file(req.input));
  if (req.type.empty()) throw ValidationError("--type is required");
  const RepType tau = parse_rep_type(req.type, pb.quiver.size());
  Json violations = Json::array();
  for (const auto& v : validate_rep_type(pb.quiver, pb.dim, pb.params, tau)) violations.push_back(v.message);
  const SliceResult s = slice_quiver(pb.quiver, tau);
  const auto [lhs, rhs] = p_identity_sides(pb.quiver, tau);

  Json sq;
  sq["vertices"] = s.slice_quiver.labels();
  Json adj = Json::array();
  for (std::size_t i = 0; i < s.slice_quiver.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < s.slice_quiver.size(); ++j) row.push_back(s.slice_quiver.arrows(i, j));
    adj.push_back(std::move(row));
  }
  sq["adjacency"] = std::move(adj);
  Json loops = Json::array();
  for (std::size_t i = 0; i < s.slice_quiver.size(); ++i) loops.push_back(s.slice_quiver.loops(i));
  sq["loops"] = std::move(loops);

  Json out;
  out["slice_quiver"] = std::move(sq);
  out["slice_dim"] = to_json(s.slice_dim);
  out["provenance"] = parts_json(s.provenance);
  out["violations"] = std::move(violations);
  out["identity_checks"] = Json::array({Json{{"identity", "p_slice(sum k_t e_t) = p(sum k_t v_t)"},
                                             {"lhs", lhs},
                                             {"rhs", rhs},
                                             {"holds", lhs == rhs}}});
  return out;
}

Json run_reflect(const RunRequest& req) {
  const Problem pb = resolve(parse_input_file(req.input));
  const std::size_t i = vertex_index(pb.quiver, req.vertex);
  const ReflectionAdmissibility a = reflection_admissibility(pb.quiver, pb.dim, pb.params, i);
  const Reflected r = reflect_at(pb.quiver, pb.dim, pb.params, i);
  Json out;
  out["vertex"] = req.vertex;
  out["admissibility"] = {{"loop_free", a.loop_free}, {"lmn", a.lmn}, {"pm1", a.pm1}, {"pairing", a.pairing}};
  out["dim"] = to_json(r.dim);
  out["lambda"] = to_json(r.params.lambda);
  out["theta"] = to_json(r.params.theta);
  const Rational lam = dot(r.params.lambda, r.dim), th = dot(r.params.theta, r.dim);
  out["identity_checks"] = Json::array(
      {Json{{"identity", "p(s_i v) = p(v)"}, {"lhs", p_fn(pb.quiver, r.dim)}, {"rhs", p_fn(pb.quiver, pb.dim)}},
       Json{{"identity", "(s_i lambda).(s_i v) = 0"}, {"lhs", to_string(lam)}, {"rhs", "0"}},
       Json{{"identity", "(s_i theta).(s_i v) = 0"}, {"lhs", to_string(th)}, {"rhs", "0"}}});
  return out;
}

Json run_orbit(const RunRequest& req) {
  const Problem pb = resolve(parse_input_file(req.input));
  const ReflectionOrbit orbit = reflection_orbit(pb.quiver, pb.dim, pb.params, req.max);
  Json states = Json::array();
  for (const auto& s : orbit.states) states.push_back(state_json(s));
  Json out;
  out["states"] = std::move(states);
  out["size"] = orbit.states.size();
  out["truncated"] = orbit.truncated;
  return out;
}

Json run_typea(const RunRequest& req) {
  const QuiverInput in = parse_input_file(req.input);
  TypeAShape shape;
  if (req.shape == "path") shape = TypeAShape::Path;
  else if (req.shape == "cycle") shape = TypeAShape::Cycle;
  else throw ValidationError("--shape must be path or cycle");
  if (req.n < 1) throw ValidationError("--n must be at least 1");
  const TypeAQuiver qa(shape, static_cast<std::size_t>(req.n));
  if (in.quiver.size() != qa.n())
    throw ValidationError("input has " + std::to_string(in.quiver.size()) + " vertices, --n is " + std::to_string(req.n));

  const TypeAFlatness res = flat_type_a(qa, in.dim, in.framing);
  Json out;
  out["flat"] = res.flat;
  out["violating_subset"] = res.violating ? labels_of(in.quiver, *res.violating) : Json(nullptr);
  if (res.violating) out["violating_value"] = res.violating_value;
  out["connected_subsets"] = connected_subsets(qa).size();
  if (in.quiver.adjacency() != qa.quiver().adjacency())
    out["advisory"] = "input arrows differ from the requested type A shape; the shape's arrows were used";

  Json checks = Json::array();
  const FramedData fd = frame(qa.quiver(), in.dim, in.framing, ParamPair::zero(qa.n()));
  try {
    FlatnessOptions opts;
    opts.budget = req.budget;
    const bool dp = flatness_certificate(fd.quiver, fd.dim, opts).flat;
    checks.push_back({{"identity", "criterion = decomposition flatness of the framed quiver"},
                      {"lhs", res.flat},
                      {"rhs", dp},
                      {"holds", res.flat == dp}});
  } catch (const CapacityError&) {
    checks.push_back({{"identity", "criterion = decomposition flatness of the framed quiver"}, {"skipped", "budget"}});
  }
  out["identity_checks"] = std::move(checks);
  return out;
}

Json run_walg(const RunRequest& req) {
  if (req.r.empty() || req.d.empty()) throw ValidationError("--r and --d are required");
  WalgParams p{parse_int_list(req.r, "--r"), parse_int_list(req.d, "--d")};
  const DimVector v = walg_dims(p);
  Json out;
  out["v"] = to_json(v);
  out["flat"] = walg_flat(p);
  Json checks = Json::array();
  for (const auto& c : walg_identity_checks(p))
    checks.push_back({{"pair", {c.i, c.j}}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  out["identity_checks"] = std::move(checks);
  return out;
}

Json run_hilbert(const RunRequest& req) {
  static const std::regex sympow_re(R"(sympow(?:\((\d+)\))?)");
  std::smatch m;
  Json out;
  TruncSeries series;
  if (std::regex_match(req.method, m, sympow_re)) {
    const int n = m[1].matched ? std::stoi(m[1].str()) : req.n;
    if (n < 1) throw ValidationError("sympow needs n, as sympow(n) or --n");
    series = symmetric_power_series(n, req.order);
  } else {
    const Problem pb = resolve(parse_input_file(req.input));
    connectivity_advisory(pb.quiver, pb.dim, out);
    if (req.method == "molien") series = koszul_euler_series(pb.quiver, pb.dim, req.order);
    else if (req.method == "matter") series = matter_series(pb.quiver, pb.dim, req.order);
    else if (req.method == "oracle") series = abelian_invariant_oracle(pb.quiver, pb.dim, req.order);
    else throw ValidationError("unknown method \"" + req.method + "\"");
  }
  out["coefficients"] = series.to_strings();
  out["method"] = req.method;
  out["order"] = req.order;
  return out;
}

Json run_frame(const RunRequest& req) {
  const QuiverInput in = parse_input_file(req.input);
  const FramedData fd = frame(in.quiver, in.dim, in.framing, in.params);
  return to_input_json(fd.quiver, fd.dim, fd.params);
}

Json error_json(const std::string& what, const std::string& path) {
  Json j;
  j["error"] = what;
  j["path"] = path;
  return j;
}

}  // namespace

Json execute(const RunRequest& req) {
  const auto& s = req.subcommand;
  if (s == "flat") return run_flat(req);
  if (s == "sigma") return run_sigma(req);
  if (s == "generic") return run_generic(req);
  if (s == "slice") return run_slice(req);
  if (s == "reflect") return run_reflect(req);
  if (s == "orbit") return run_orbit(req);
  if (s == "typea") return run_typea(req);
  if (s == "walg") return run_walg(req);
  if (s == "hilbert") return run_hilbert(req);
  if (s == "frame") return run_frame(req);
  throw ValidationError("unknown subcommand \"" + s + "\"");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunRequest req;
  CLI::App app{"Flatness, parameters and Hilbert series of quiver moment maps", "quiverlab"};
  app.require_subcommand(1);

  auto with_file = [&](CLI::App* sub) { sub->add_option("file", req.input, "Quiver input JSON")->required(); };
  auto with_budget = [&](CLI::App* sub) { sub->add_option("--budget", req.budget, "DP state cap"); };

  auto* flat = app.add_subcommand("flat", "Decide flatness of the moment map");
  with_file(flat);
  with_budget(flat);
  flat->add_flag("--all-witnesses", req.all_witnesses, "List maximizing decompositions with stable parts");

  auto* sigma = app.add_subcommand("sigma", "Strict inequality over (lambda, theta)-orthogonal decompositions");
  with_file(sigma);
  with_budget(sigma);

  auto* generic = app.add_subcommand("generic", "Genericity of (theta, lambda) and indivisibility of v");
  with_file(generic);
  with_budget(generic);

  auto* slice = app.add_subcommand("slice", "Slice quiver of a representation type");
  with_file(slice);
  slice->add_option("--type", req.type, "Representation type, e.g. \"1:(1,1);1:(0,1)\"")->required();

  auto* reflect = app.add_subcommand("reflect", "Reflect (v, lambda, theta) at a vertex");
  with_file(reflect);
  reflect->add_option("--vertex", req.vertex, "Vertex label")->required();

  auto* orbit = app.add_subcommand("orbit", "Bounded reflection orbit");
  with_file(orbit);
  orbit->add_option("--max", req.max, "Maximum number of states");

  auto* typea = app.add_subcommand("typea", "Type A flatness criterion");
  with_file(typea);
  typea->add_option("--shape", req.shape, "path or cycle");
  typea->add_option("--n", req.n, "Number of vertices")->required();
  with_budget(typea);

  auto* walg = app.add_subcommand("walg", "W-algebra parameter correspondence");
  walg->add_option("--r", req.r, "r_1,...,r_n")->required();
  walg->add_option("--d", req.d, "d_1,...,d_{n-1}")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Truncated Hilbert series");
  hilbert->add_option("file", req.input, "Quiver input JSON");
  hilbert->add_option("--order", req.order, "Truncation order");
  hilbert->add_option("--method", req.method, "molien | matter | oracle | sympow(n)");
  hilbert->add_option("--n", req.n, "n for sympow");

  auto* framecmd = app.add_subcommand("frame", "Write the framed quiver as an unframed input file");
  with_file(framecmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << error_json(e.what(), "").dump(2) << "\n";
    err << "quiverlab: " << e.what() << "\n";
    return kValidation;
  }
  req.subcommand = app.get_subcommands().front()->get_name();

  auto fail = [&](int code, const std::string& what) {
    out << error_json(what, req.input).dump(2) << "\n";
    err << "quiverlab " << req.subcommand << ": " << what << "\n";
    return code;
  };

  try {
    const Json report = execute(req);
    if (report.contains("advisory")) err << "quiverlab " << req.subcommand << ": " << report["advisory"].get<std::string>() << "\n";
    out << report.dump(2) << "\n";
    return kOk;
  } catch (const ValidationError& e) {
    return fail(kValidation, e.what());
  } catch (const CapacityError& e) {
    return fail(kCapacity, e.what());
  } catch (const InternalError& e) {
    return fail(kInternal, e.what());
  } catch (const std::exception& e) {
    return fail(kInternal, e.what());
  }
}

}  // namespace quiverlab::cli
