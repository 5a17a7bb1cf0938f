#include "quiverlab/hilbert.hpp"

#include "quiverlab/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace quiverlab {

bool TruncSeries::integral() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const Rational& c) { return boost::multiprecision::denominator(c) == 1; });
}

std::vector<std::string> TruncSeries::to_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coefficients) out.push_back(to_string(c));
  return out;
}

namespace {

void check_series_input(const Quiver& q, const DimVector& v, int order) {
  check_compatible(q, v);
  if (!v.is_nonnegative()) throw ValidationError("dimension vector has a negative entry");
  if (v.is_zero()) throw ValidationError("dimension vector must be nonzero");
  if (order < 0) throw ValidationError("truncation order must be nonnegative");
}

/// Constant term over the maximal torus of prod GL(v_i) of
///   Weyl measure x [Koszul factors] x matter factors,
/// divided by the Weyl group order prod v_i!.
TruncSeries molien_weyl(const Quiver& q, const DimVector& v, int order, const HilbertOptions& opts, bool koszul) {
  check_series_input(q, v, order);
  if (order > opts.max_order)
    throw CapacityError("truncation order " + std::to_string(order) + " exceeds the limit " +
                        std::to_string(opts.max_order));
  const auto rank = static_cast<std::size_t>(v.total());
  if (rank > opts.max_rank)
    throw CapacityError("total torus rank " + std::to_string(rank) + " exceeds the limit " +
                        std::to_string(opts.max_rank));

  const std::size_t n = q.size();
  std::vector<std::size_t> base(n, 0);
  for (std::size_t i = 1; i < n; ++i) base[i] = base[i - 1] + static_cast<std::size_t>(v[i - 1]);

  std::vector<int> w(rank, 0);
  auto ratio = [&](std::size_t num, std::size_t den) -> std::span<const int> {
    std::fill(w.begin(), w.end(), 0);
    w[num] += 1;
    w[den] -= 1;
    return w;
  };

  LaurentSeries s = LaurentSeries::one(rank, order);
  auto settle = [&] {
    if (opts.prune) s.prune_unreachable();
    if (s.total_terms() > opts.max_terms)
      throw CapacityError("Laurent term count exceeds the budget of " + std::to_string(opts.max_terms));
  };

  // Weyl numerator prod_{a != b} (1 - z_a / z_b); no t, so pruning waits until
  // it has been applied in full.
  for (std::size_t i = 0; i < n; ++i)
    for (std::int64_t a = 0; a < v[i]; ++a)
      for (std::int64_t b = 0; b < v[i]; ++b)
        if (a != b) s.multiply_binomial(ratio(base[i] + a, base[i] + b), 0);
  settle();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::int64_t copy = 0; copy < q.arrows(i, j); ++copy)
        for (std::int64_t a = 0; a < v[i]; ++a)
          for (std::int64_t b = 0; b < v[j]; ++b) {
            s.divide_binomial(ratio(base[j] + b, base[i] + a));
            settle();
            s.divide_binomial(ratio(base[i] + a, base[j] + b));
            settle();
          }

  if (koszul) {
    s.divide_t2();
    for (std::size_t i = 0; i < n; ++i)
      for (std::int64_t a = 0; a < v[i]; ++a)
        for (std::int64_t b = 0; b < v[i]; ++b) {
          s.multiply_binomial(ratio(base[i] + a, base[i] + b), 2);
          settle();
        }
  }

  Integer weyl_order = 1;
  for (auto x : v) weyl_order *= factorial(static_cast<unsigned>(x));

  TruncSeries out;
  out.order = order;
  const auto raw = s.constant_terms();
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] % weyl_order != 0)
      throw InternalError("constant term " + raw[k].str() + " at t^" + std::to_string(k) +
                          " is not divisible by the Weyl group order " + weyl_order.str());
    out.coefficients.emplace_back(raw[k] / weyl_order);
  }
  return out;
}

using Exponents = std::vector<int>;

/// Sparse row over Q keyed by column.
using SparseRow = std::map<std::size_t, Rational>;

/// Incremental row echelon form; rank() is the number of pivots.
class EchelonBasis {
 public:
  void insert(SparseRow row) {
    while (!row.empty()) {
      const auto [lead, lead_val] = *row.begin();
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        const Rational inv = 1 / lead_val;
        for (auto& [c, x] : row) x *= inv;
        pivots_.emplace(lead, std::move(row));
        return;
      }
      const Rational factor = lead_val;
      for (const auto& [c, x] : it->second) {
        auto [pos, inserted] = row.try_emplace(c, 0);
        pos->second -= factor * x;
        if (pos->second == 0) row.erase(pos);
      }
    }
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace

TruncSeries koszul_euler_series(const Quiver& q, const DimVector& v, int order, const HilbertOptions& opts) {
  return molien_weyl(q, v, order, opts, true);
}

TruncSeries matter_series(const Quiver& q, const DimVector& v, int order, const HilbertOptions& opts) {
  return molien_weyl(q, v, order, opts, false);
}

TruncSeries abelian_invariant_oracle(const Quiver& q, const DimVector& v, int order) {
  check_series_input(q, v, order);
  const std::size_t n = q.size();
  for (auto x : v)
    if (x > 1) throw ValidationError("abelian oracle needs every dimension entry in {0, 1}");

  // Coordinates of T*R: x_alpha of weight e_head - e_tail and its partner
  // y_alpha of the opposite weight.
  std::vector<std::vector<int>> weight;
  struct ArrowCoords {
    std::size_t tail, head, x, y;
  };
  std::vector<ArrowCoords> arrows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (v[i] == 0 || v[j] == 0) continue;
      for (std::int64_t c = 0; c < q.arrows(i, j); ++c) {
        std::vector<int> wx(n, 0);
        wx[j] += 1;
        wx[i] -= 1;
        std::vector<int> wy(n, 0);
        for (std::size_t k = 0; k < n; ++k) wy[k] = -wx[k];
        arrows.push_back({i, j, weight.size(), weight.size() + 1});
        weight.push_back(std::move(wx));
        weight.push_back(std::move(wy));
      }
    }
  const std::size_t m = weight.size();

  // Weight-zero monomials of a given degree, in a fixed enumeration order.
  auto weight_zero_monomials = [&](int degree) {
    std::vector<Exponents> out;
    Exponents e(m, 0);
    std::vector<int> acc(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t c, int left) {
      if (c == m) {
        if (left == 0 && std::all_of(acc.begin(), acc.end(), [](int x) { return x == 0; })) out.push_back(e);
        return;
      }
      for (int a = (c + 1 == m) ? left : 0; a <= left; ++a) {
        e[c] = a;
        for (std::size_t k = 0; k < n; ++k) acc[k] += a * weight[c][k];
        rec(c + 1, left - a);
        for (std::size_t k = 0; k < n; ++k) acc[k] -= a * weight[c][k];
      }
      e[c] = 0;
    };
    rec(0, degree);
    return out;
  };

  // mu_i = sum_{head(alpha) = i} x_alpha y_alpha - sum_{tail(alpha) = i} x_alpha y_alpha.
  std::vector<std::vector<std::pair<int, const ArrowCoords*>>> mu(n);
  for (const auto& a : arrows) {
    if (a.head == a.tail) continue;
    mu[a.head].push_back({1, &a});
    mu[a.tail].push_back({-1, &a});
  }

  TruncSeries out;
  out.order = order;
  for (int k = 0; k <= order; ++k) {
    const auto basis = weight_zero_monomials(k);
    std::map<Exponents, std::size_t> column;
    for (std::size_t c = 0; c < basis.size(); ++c) column.emplace(basis[c], c);

    EchelonBasis ideal;
    if (k >= 2)
      for (const auto& mono : weight_zero_monomials(k - 2))
        for (std::size_t i = 0; i < n; ++i) {
          if (v[i] == 0 || mu[i].empty()) continue;
          SparseRow row;
          for (const auto& [sign, a] : mu[i]) {
            Exponents e = mono;
            e[a->x] += 1;
            e[a->y] += 1;
            auto& entry = row[column.at(e)];
            entry += sign;
            if (entry == 0) row.erase(column.at(e));
          }
          ideal.insert(std::move(row));
        }
    out.coefficients.emplace_back(static_cast<long long>(basis.size() - ideal.rank()));
  }
  return out;
}

TruncSeries symmetric_power_series(int n, int order) {
  if (n < 1) throw ValidationError("symmetric power needs n >= 1");
  if (order < 0) throw ValidationError("truncation order must be nonnegative");
  const auto len = static_cast<std::size_t>(order) + 1;
  std::vector<Rational> total(len);

  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      // z_lambda = prod_p p^{m_p} m_p!
      Integer z = 1;
      std::map<int, unsigned> mult;
      for (int p : parts) mult[p] += 1;
      for (const auto& [p, mp] : mult) {
        Integer pw = 1;
        for (unsigned r = 0; r < mp; ++r) pw *= p;
        z *= pw * factorial(mp);
      }
      std::vector<Integer> series(len, 0);
      series[0] = 1;
      for (int p : parts) {
        // (1 - t^p)^{-2} = sum_j (j + 1) t^{p j}
        std::vector<Integer> next(len, 0);
        for (std::size_t a = 0; a < len; ++a) {
          if (series[a] == 0) continue;
          for (std::size_t j = 0; a + j * static_cast<std::size_t>(p) < len; ++j)
            next[a + j * static_cast<std::size_t>(p)] += series[a] * static_cast<long long>(j + 1);
        }
        series = std::move(next);
      }
      for (std::size_t a = 0; a < len; ++a) total[a] += Rational(series[a], z);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
  return {order, std::move(total)};
}

}  // namespace quiverlab
