#include "quiverlab/reflections.hpp"

#include "quiverlab/errors.hpp"

#include <deque>
#include <set>
#include <string>

namespace quiverlab {

namespace {

void check_vertex(const Quiver& q, std::size_t i) {
  if (i >= q.size()) throw ValidationError("vertex index " + std::to_string(i) + " out of range");
}

void check_param_lengths(const Quiver& q, const ParamPair& params) {
  if (params.lambda.size() != q.size() || params.theta.size() != q.size())
    throw ValidationError("parameter length does not match the number of vertices");
}

struct StateKey {
  std::vector<std::int64_t> dim;
  std::vector<std::string> lambda, theta;
  auto operator<=>(const StateKey&) const = default;
};

StateKey key_of(const Reflected& s) {
  StateKey k{s.dim.entries(), {}, {}};
  for (const auto& x : s.params.lambda) k.lambda.push_back(to_string(x));
  for (const auto& x : s.params.theta) k.theta.push_back(to_string(x));
  return k;
}

}  // namespace

Reflected reflect_at(const Quiver& q, const DimVector& v, const ParamPair& params, std::size_t i) {
  check_compatible(q, v);
  check_vertex(q, i);
  check_param_lengths(q, params);
  if (q.loops(i) != 0) throw ValidationError("vertex " + q.labels()[i] + " carries a loop");

  const IntMatrix c = cartan_matrix(q);
  const std::int64_t vi = cartan_pairing(q, v, DimVector::unit(q.size(), i));
  DimVector sv = v;
  sv[i] -= vi;
  if (sv[i] < 0)
    throw ValidationError("reflection at " + q.labels()[i] + " gives a negative dimension " + sv.str());

  ParamPair out = params;
  for (std::size_t j = 0; j < q.size(); ++j) {
    out.lambda[j] = params.lambda[j] - c(i, j) * params.lambda[i];
    out.theta[j] = params.theta[j] - c(i, j) * params.theta[i];
  }
  return {std::move(sv), std::move(out)};
}

ReflectionAdmissibility reflection_admissibility(const Quiver& q, const DimVector& v, const ParamPair& params,
                                                 std::size_t i) {
  check_compatible(q, v);
  check_vertex(q, i);
  check_param_lengths(q, params);
  ReflectionAdmissibility a;
  a.loop_free = q.loops(i) == 0;
  a.lmn = params.lambda[i] != 0 || params.theta[i] != 0;
  a.pairing = cartan_pairing(q, v, DimVector::unit(q.size(), i));
  a.pm1 = a.pairing == 1 || a.pairing == -1;
  return a;
}

ReflectionOrbit reflection_orbit(const Quiver& q, const DimVector& v, const ParamPair& params, std::size_t max_size) {
  if (max_size < 1) throw ValidationError("orbit size cap must be at least 1");
  check_compatible(q, v);
  check_param_lengths(q, params);

  ReflectionOrbit orbit;
  std::set<StateKey> seen;
  std::deque<std::size_t> frontier;
  orbit.states.push_back({v, params});
  seen.insert(key_of(orbit.states.back()));
  frontier.push_back(0);

  const CartanForm form(q);
  while (!frontier.empty()) {
    const std::size_t at = frontier.front();
    frontier.pop_front();
    const Reflected cur = orbit.states[at];
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q.loops(i) != 0) continue;
      if (cur.dim[i] - form.pairing(cur.dim, DimVector::unit(q.size(), i)) < 0) continue;
      Reflected next = reflect_at(q, cur.dim, cur.params, i);
      if (!seen.insert(key_of(next)).second) continue;
      if (orbit.states.size() >= max_size) {
        orbit.truncated = true;
        return orbit;
      }
      orbit.states.push_back(std::move(next));
      frontier.push_back(orbit.states.size() - 1);
    }
  }
  return orbit;
}

}  // namespace quiverlab
