// Independent brute-force references used by the unit and acceptance suites.
#pragma once

#include "quiverlab/quiver.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace quiverlab::testing {

/// Expanded form 1 - sum v_i^2 + sum_{arrows i->j} v_i v_j.
inline std::int64_t p_expanded(const Quiver& q, const DimVector& v) {
  std::int64_t s = 1;
  for (std::size_t i = 0; i < q.size(); ++i) {
    s -= v[i] * v[i];
    for (std::size_t j = 0; j < q.size(); ++j) s += q.arrows(i, j) * v[i] * v[j];
  }
  return s;
}

/// Every nonzero u <= bound, in lexicographic order.
inline std::vector<DimVector> sub_vectors(const DimVector& bound) {
  std::vector<DimVector> out;
  DimVector u(bound.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == bound.size()) {
      if (!u.is_zero()) out.push_back(u);
      return;
    }
    for (std::int64_t x = 0; x <= bound[i]; ++x) {
      u[i] = x;
      rec(i + 1);
    }
    u[i] = 0;
  };
  rec(0);
  return out;
}

struct NaiveDecompositions {
  std::int64_t best = INT64_MIN;
  std::size_t count = 0;
  /// Decompositions attaining best with at least two parts.
  std::vector<std::vector<DimVector>> maximizers;
};

/// Walks every multiset decomposition of v (parts nonincreasing in lexicographic
/// order) without memoization.
inline NaiveDecompositions naive_decompositions(const Quiver& q, const DimVector& v) {
  NaiveDecompositions res;
  const std::vector<DimVector> parts = sub_vectors(v);
  std::vector<std::int64_t> p(parts.size());
  for (std::size_t k = 0; k < parts.size(); ++k) p[k] = p_expanded(q, parts[k]);
  std::vector<std::size_t> chosen;
  std::vector<std::vector<DimVector>> all;
  std::vector<std::int64_t> sums;
  std::function<void(const DimVector&, std::size_t, std::int64_t)> rec = [&](const DimVector& rest, std::size_t hi,
                                                                             std::int64_t acc) {
    if (rest.is_zero()) {
      ++res.count;
      std::vector<DimVector> d;
      for (auto k : chosen) d.push_back(parts[k]);
      all.push_back(std::move(d));
      sums.push_back(acc);
      return;
    }
    for (std::size_t k = hi + 1; k-- > 0;) {
      if (!parts[k].leq(rest)) continue;
      chosen.push_back(k);
      rec(rest - parts[k], k, acc + p[k]);
      chosen.pop_back();
    }
  };
  rec(v, parts.size() - 1, 0);
  for (auto s : sums) res.best = std::max(res.best, s);
  for (std::size_t k = 0; k < all.size(); ++k)
    if (sums[k] == res.best && all[k].size() >= 2) res.maximizers.push_back(all[k]);
  return res;
}

/// Proportionality by cross-multiplication.
inline bool proportional(const DimVector& a, const DimVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

/// Colexicographically first offender for genericity, by plain scan.
inline std::optional<DimVector> naive_generic_offender(const DimVector& v, const ParamPair& params) {
  auto subs = sub_vectors(v);
  std::sort(subs.begin(), subs.end(), [](const DimVector& a, const DimVector& b) {
    return std::lexicographical_compare(a.entries().rbegin(), a.entries().rend(), b.entries().rbegin(),
                                        b.entries().rend());
  });
  for (const auto& u : subs) {
    if (u == v || proportional(u, v)) continue;
    Rational l = 0, t = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      l += params.lambda[i] * u[i];
      t += params.theta[i] * u[i];
    }
    if (l == 0 && t == 0) return u;
  }
  return std::nullopt;
}

inline Quiver make_quiver(const IntMatrix& a) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.size(); ++i) labels.push_back(std::to_string(i + 1));
  return Quiver(labels, a);
}

inline Quiver random_quiver(std::mt19937_64& rng, std::size_t n, int max_arrows, bool loops = true) {
  std::uniform_int_distribution<int> cnt(0, max_arrows);
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j || loops) a(i, j) = cnt(rng);
  return make_quiver(a);
}

/// Random rational vector annihilated by v (entries with small numerators).
inline std::vector<Rational> random_annihilated(std::mt19937_64& rng, const DimVector& v) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  std::vector<Rational> x(v.size());
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0 && !pivot) {
      pivot = i;
      continue;
    }
    x[i] = Rational(num(rng), den(rng));
  }
  if (pivot) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != *pivot) s += x[i] * v[i];
    x[*pivot] = -s / v[*pivot];
  }
  return x;
}

}  // namespace quiverlab::testing
