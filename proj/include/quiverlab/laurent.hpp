#pragma once

#include "quiverlab/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

namespace quiverlab {

/// Sparse multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients. Exponent vectors have a fixed length (the rank, at most
/// kMaxRank) and entries in [-kMaxExponent, kMaxExponent]. Zero coefficients
/// are never stored.
class LaurentPoly {
 public:
  static constexpr std::size_t kMaxRank = 8;
  static constexpr int kMaxExponent = 120;

  /// Packed exponent vector: one byte per variable, offset by 128.
  using Key = std::uint64_t;

  explicit LaurentPoly(std::size_t rank = 0);

  static LaurentPoly constant(std::size_t rank, const Integer& c);
  static LaurentPoly monomial(std::span<const int> exponents, const Integer& c = 1);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(std::span<const int> exponents) const;
  Integer constant_term() const;
  void add_term(std::span<const int> exponents, const Integer& c);

  /// this += c * x^shift * other
  void add_shifted(const LaurentPoly& other, std::span<const int> shift, const Integer& c = 1);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const;

  /// Drops every term whose exponent vector has L1 norm above max_l1.
  void prune_l1(std::int64_t max_l1);

  /// Visits (exponents, coefficient) in unspecified order.
  void for_each(const std::function<void(std::span<const int>, const Integer&)>& f) const;

  Key encode(std::span<const int> exponents) const;
  std::vector<int> decode(Key key) const;
  std::int64_t l1(Key key) const;

 private:
  void accumulate(Key key, const Integer& c);
  Key zero_key() const;

  std::size_t rank_;
  std::unordered_map<Key, Integer> terms_;
};

/// Truncated power series in t with Laurent polynomial coefficients; the
/// working representation of the constant-term integrand.
class LaurentSeries {
 public:
  LaurentSeries(std::size_t rank, int order);

  static LaurentSeries one(std::size_t rank, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t rank() const { return rank_; }
  const LaurentPoly& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  LaurentPoly& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
  std::size_t total_terms() const;

  /// *= (1 - t^power * x^w)
  void multiply_binomial(std::span<const int> w, int power);
  /// *= (1 - t x^w)^{-1}, geometric series truncated at the order.
  void divide_binomial(std::span<const int> w);
  /// *= (1 - t^2)^{-1}
  void divide_t2();

  /// Drops terms at t-order k whose L1 exponent norm exceeds 2 (order - k);
  /// valid when every remaining factor moves the L1 norm by at most 2 per
  /// unit of t-degree.
  void prune_unreachable();

  std::vector<Integer> constant_terms() const;

 private:
  std::size_t rank_;
  std::vector<LaurentPoly> coeffs_;
};

}  // namespace quiverlab
