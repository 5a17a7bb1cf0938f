#include "quiverlab/laurent.hpp"

#include "quiverlab/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace quiverlab {

namespace {

constexpr int kOffset = 128;

}  // namespace

LaurentPoly::LaurentPoly(std::size_t rank) : rank_(rank) {
  if (rank > kMaxRank)
    throw CapacityError("Laurent polynomial rank " + std::to_string(rank) + " exceeds " + std::to_string(kMaxRank));
}

LaurentPoly LaurentPoly::constant(std::size_t rank, const Integer& c) {
  LaurentPoly p(rank);
  p.accumulate(p.zero_key(), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::span<const int> exponents, const Integer& c) {
  LaurentPoly p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

LaurentPoly::Key LaurentPoly::zero_key() const {
  Key k = 0;
  for (std::size_t i = 0; i < rank_; ++i) k |= Key{kOffset} << (8 * i);
  return k;
}

LaurentPoly::Key LaurentPoly::encode(std::span<const int> exponents) const {
  if (exponents.size() != rank_) throw ValidationError("exponent vector length does not match the rank");
  Key k = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (std::abs(exponents[i]) > kMaxExponent) throw CapacityError("Laurent exponent out of range");
    k |= static_cast<Key>(exponents[i] + kOffset) << (8 * i);
  }
  return k;
}

std::vector<int> LaurentPoly::decode(Key key) const {
  std::vector<int> e(rank_);
  for (std::size_t i = 0; i < rank_; ++i) e[i] = static_cast<int>((key >> (8 * i)) & 0xff) - kOffset;
  return e;
}

std::int64_t LaurentPoly::l1(Key key) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank_; ++i) s += std::abs(static_cast<int>((key >> (8 * i)) & 0xff) - kOffset);
  return s;
}

void LaurentPoly::accumulate(Key key, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPoly::coefficient(std::span<const int> exponents) const {
  auto it = terms_.find(encode(exponents));
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::constant_term() const {
  auto it = terms_.find(zero_key());
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(std::span<const int> exponents, const Integer& c) { accumulate(encode(exponents), c); }

void LaurentPoly::add_shifted(const LaurentPoly& other, std::span<const int> shift, const Integer& c) {
  if (other.rank_ != rank_ || shift.size() != rank_) throw ValidationError("Laurent rank mismatch");
  if (other.terms_.empty() || c == 0) return;
  // Byte-wise addition of packed keys is exact as long as no byte leaves
  // [0, 255]; check the worst case before touching anything.
  int other_max = 0;
  for (const auto& [k, v] : other.terms_)
    for (std::size_t i = 0; i < rank_; ++i)
      other_max = std::max(other_max, std::abs(static_cast<int>((k >> (8 * i)) & 0xff) - kOffset));
  int shift_max = 0;
  for (int s : shift) shift_max = std::max(shift_max, std::abs(s));
  if (other_max + shift_max > kMaxExponent) throw CapacityError("Laurent exponent out of range");

  const Key delta = encode(shift) - zero_key();
  if (&other == this) {
    const LaurentPoly copy = other;
    for (const auto& [k, v] : copy.terms_) accumulate(k + delta, c * v);
    return;
  }
  terms_.reserve(terms_.size() + other.terms_.size());
  for (const auto& [k, v] : other.terms_) accumulate(k + delta, c * v);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (o.rank_ != rank_) throw ValidationError("Laurent rank mismatch");
  LaurentPoly r = *this;
  for (const auto& [k, v] : o.terms_) r.accumulate(k, v);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  if (o.rank_ != rank_) throw ValidationError("Laurent rank mismatch");
  LaurentPoly r = *this;
  for (const auto& [k, v] : o.terms_) r.accumulate(k, -v);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (o.rank_ != rank_) throw ValidationError("Laurent rank mismatch");
  LaurentPoly r(rank_);
  for (const auto& [k, v] : o.terms_) r.add_shifted(*this, decode(k), v);
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

void LaurentPoly::prune_l1(std::int64_t max_l1) {
  std::erase_if(terms_, [&](const auto& kv) { return l1(kv.first) > max_l1; });
}

void LaurentPoly::for_each(const std::function<void(std::span<const int>, const Integer&)>& f) const {
  for (const auto& [k, v] : terms_) {
    const auto e = decode(k);
    f(e, v);
  }
}

LaurentSeries::LaurentSeries(std::size_t rank, int order) : rank_(rank) {
  if (order < 0) throw ValidationError("truncation order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, LaurentPoly(rank));
}

LaurentSeries LaurentSeries::one(std::size_t rank, int order) {
  LaurentSeries s(rank, order);
  s[0] = LaurentPoly::constant(rank, 1);
  return s;
}

std::size_t LaurentSeries::total_terms() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += c.size();
  return n;
}

void LaurentSeries::multiply_binomial(std::span<const int> w, int power) {
  if (power == 0) {
    for (auto& c : coeffs_) c.add_shifted(c, w, -1);
    return;
  }
  for (int k = order(); k >= power; --k) (*this)[k].add_shifted((*this)[k - power], w, -1);
}

void LaurentSeries::divide_binomial(std::span<const int> w) {
  for (int k = 1; k <= order(); ++k) (*this)[k].add_shifted((*this)[k - 1], w, 1);
}

void LaurentSeries::divide_t2() {
  const std::vector<int> zero(rank_, 0);
  for (int k = 2; k <= order(); ++k) (*this)[k].add_shifted((*this)[k - 2], zero, 1);
}

void LaurentSeries::prune_unreachable() {
  for (int k = 0; k <= order(); ++k) (*this)[k].prune_l1(2 * static_cast<std::int64_t>(order() - k));
}

std::vector<Integer> LaurentSeries::constant_terms() const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.constant_term());
  return out;
}

}  // namespace quiverlab
