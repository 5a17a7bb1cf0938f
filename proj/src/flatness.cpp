#include "quiverlab/flatness.hpp"

#include "quiverlab/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

namespace quiverlab {

namespace {

constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min() / 4;

/// Mixed-radix index of the box {0 <= w <= v}. The first coordinate is the
/// most significant digit, so index order is lexicographic order and the
/// index is additive: idx(a + b) = idx(a) + idx(b).
class Box {
 public:
  Box(const DimVector& v, std::size_t budget) : v_(v), stride_(v.size()) {
    if (!v.is_nonnegative()) throw ValidationError("dimension vector has a negative entry");
    std::size_t s = 1;
    for (std::size_t k = v.size(); k-- > 0;) {
      stride_[k] = s;
      const auto radix = static_cast<std::size_t>(v[k]) + 1;
      if (s > budget / radix + 1) throw CapacityError("decomposition box exceeds the state budget of " + std::to_string(budget));
      s *= radix;
    }
    size_ = s;
    if (size_ > budget)
      throw CapacityError("decomposition box has " + std::to_string(size_) + " states, budget is " +
                          std::to_string(budget));
  }

  std::size_t size() const { return size_; }
  std::size_t dims() const { return v_.size(); }

  std::size_t index(const DimVector& w) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < w.size(); ++k) idx += static_cast<std::size_t>(w[k]) * stride_[k];
    return idx;
  }

  void decode(std::size_t idx, std::vector<std::int64_t>& digits) const {
    digits.resize(v_.size());
    for (std::size_t k = 0; k < v_.size(); ++k) {
      digits[k] = static_cast<std::int64_t>(idx / stride_[k]);
      idx %= stride_[k];
    }
  }

  DimVector vector_at(std::size_t idx) const {
    std::vector<std::int64_t> d;
    decode(idx, d);
    return DimVector(std::move(d));
  }

  /// Calls f(sub_index) for every 0 <= u <= w in increasing index order
  /// (u = 0 included) until f returns false.
  template <class F>
  void for_each_sub(const std::vector<std::int64_t>& w, F&& f) const {
    const std::size_t n = w.size();
    std::vector<std::int64_t> d(n, 0);
    std::size_t idx = 0;
    while (true) {
      if (!f(idx)) return;
      std::size_t k = n;
      while (k > 0) {
        --k;
        if (d[k] < w[k]) {
          ++d[k];
          idx += stride_[k];
          break;
        }
        idx -= static_cast<std::size_t>(d[k]) * stride_[k];
        d[k] = 0;
        if (k == 0) return;
      }
      if (n == 0) return;
    }
  }

 private:
  DimVector v_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 0;
};

/// max over decompositions of sum p, filled bottom-up over the box.
/// A cell that is not admissible never appears as a part.
struct DecompositionTable {
  const Box& box;
  std::vector<std::int64_t> p;      // p(w)
  std::vector<std::int64_t> split;  // best over proper splits, kNone if none
  std::vector<std::int64_t> best;   // max(p, split)
  std::vector<std::size_t> choice;  // 0 = keep whole, else index of the smaller part

  DecompositionTable(const Box& b, const CartanForm& form, const std::vector<char>* admissible, unsigned threads)
      : box(b), p(b.size(), kNone), split(b.size(), kNone), best(b.size(), kNone), choice(b.size(), 0) {
    const std::size_t size = box.size();

    // Group cells by total degree; a proper part always has smaller degree.
    std::vector<std::int64_t> digits;
    std::vector<std::vector<std::size_t>> layers;
    for (std::size_t c = 0; c < size; ++c) {
      box.decode(c, digits);
      const auto deg = static_cast<std::size_t>(std::accumulate(digits.begin(), digits.end(), std::int64_t{0}));
      if (layers.size() <= deg) layers.resize(deg + 1);
      layers[deg].push_back(c);
    }

    auto fill = [&](std::size_t c, std::vector<std::int64_t>& w) {
      if (admissible && !(*admissible)[c]) return;
      box.decode(c, w);
      p[c] = form.p(DimVector(w));
      std::int64_t s = kNone;
      std::size_t arg = 0;
      box.for_each_sub(w, [&](std::size_t u) {
        if (2 * u > c) return false;
        if (u == 0) return true;
        const std::size_t r = c - u;
        if (best[u] == kNone || best[r] == kNone) return true;
        const std::int64_t val = best[u] + best[r];
        if (val > s) {
          s = val;
          arg = u;
        }
        return true;
      });
      split[c] = s;
      if (s > p[c]) {
        best[c] = s;
        choice[c] = arg;
      } else {
        best[c] = p[c];
      }
    };

    for (std::size_t deg = 1; deg < layers.size(); ++deg) {
      const auto& layer = layers[deg];
      const unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(layer.size() / 64)));
      if (t <= 1) {
        std::vector<std::int64_t> w;
        for (std::size_t c : layer) fill(c, w);
        continue;
      }
      std::vector<std::jthread> pool;
      const std::size_t chunk = (layer.size() + t - 1) / t;
      for (unsigned k = 0; k < t; ++k) {
        const std::size_t lo = k * chunk, hi = std::min(layer.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
          std::vector<std::int64_t> w;
          for (std::size_t i = lo; i < hi; ++i) fill(layer[i], w);
        });
      }
    }
  }

  void expand(std::size_t c, std::vector<std::size_t>& out) const {
    if (choice[c] == 0) {
      out.push_back(c);
      return;
    }
    expand(choice[c], out);
    expand(c - choice[c], out);
  }

  bool strict(std::size_t c) const { return split[c] == kNone || p[c] > split[c]; }
};

std::vector<DimVector> to_parts(const Box& box, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end(), std::greater<>());
  std::vector<DimVector> parts;
  parts.reserve(idx.size());
  for (std::size_t c : idx) parts.push_back(box.vector_at(c));
  return parts;
}

/// Lists every nontrivial multiset decomposition of the top cell attaining
/// the table maximum. Parts are generated in nonincreasing index order.
class MaximizerEnumerator {
 public:
  MaximizerEnumerator(const DecompositionTable& t, FlatnessReport& r, std::size_t max_listed)
      : table_(t), report_(r), max_listed_(max_listed) {}

  void run(std::size_t top) {
    target_ = table_.best[top];
    std::vector<std::size_t> parts;
    recurse(top, top, 0, parts);
  }

 private:
  static constexpr std::size_t kNodeLimit = 50'000'000;

  void recurse(std::size_t rem, std::size_t max_part, std::int64_t acc, std::vector<std::size_t>& parts) {
    if (++nodes_ > kNodeLimit) {
      report_.listing_truncated = true;
      return;
    }
    if (rem == 0) {
      if (parts.size() >= 2 && acc == target_) record(parts);
      return;
    }
    std::vector<std::int64_t> w;
    table_.box.decode(rem, w);
    table_.box.for_each_sub(w, [&](std::size_t u) {
      if (u > max_part) return false;
      if (u == 0) return true;
      const std::size_t r = rem - u;
      if (parts.empty() && r == 0) return true;
      const std::int64_t bound = acc + table_.p[u] + (r == 0 ? 0 : table_.best[r]);
      if (bound < target_) return true;
      parts.push_back(u);
      recurse(r, u, acc + table_.p[u], parts);
      parts.pop_back();
      return !report_.listing_truncated;
    });
  }

  void record(const std::vector<std::size_t>& parts) {
    ++report_.maximizing_count;
    if (!std::all_of(parts.begin(), parts.end(), [&](std::size_t c) { return table_.strict(c); })) return;
    if (report_.stable_witnesses.size() >= max_listed_) {
      report_.listing_truncated = true;
      return;
    }
    report_.stable_witnesses.push_back(to_parts(table_.box, parts));
  }

  const DecompositionTable& table_;
  FlatnessReport& report_;
  std::size_t max_listed_;
  std::int64_t target_ = 0;
  std::size_t nodes_ = 0;
};

void require_nonzero(const DimVector& v) {
  if (v.is_zero()) throw ValidationError("dimension vector must be nonzero");
}

std::vector<Integer> integral_direction(const std::vector<Rational>& x) {
  Integer l = 1;
  for (const auto& r : x) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(r));
  std::vector<Integer> out;
  out.reserve(x.size());
  for (const auto& r : x) out.push_back(boost::multiprecision::numerator(r) * (l / boost::multiprecision::denominator(r)));
  return out;
}

bool orthogonal(const std::vector<Integer>& x, const std::vector<std::int64_t>& w) {
  Integer s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) s += x[i] * w[i];
  return s == 0;
}

}  // namespace

unsigned configured_threads() {
  if (const char* env = std::getenv("QUIVERLAB_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1) return static_cast<unsigned>(n);
  }
  return 1;
}

FlatnessReport flatness_certificate(const Quiver& q, const DimVector& v, const FlatnessOptions& opts) {
  check_compatible(q, v);
  require_nonzero(v);
  const Box box(v, opts.budget);
  const CartanForm form(q);
  const unsigned threads = opts.threads ? opts.threads : configured_threads();
  const DecompositionTable table(box, form, nullptr, threads);

  const std::size_t top = box.size() - 1;
  FlatnessReport report;
  report.p_value = table.p[top];
  report.best_sum = table.best[top];
  report.flat = report.best_sum == report.p_value;
  if (!report.flat) {
    std::vector<std::size_t> parts;
    table.expand(top, parts);
    report.witness = to_parts(box, std::move(parts));
  }
  if (opts.all_witnesses) MaximizerEnumerator(table, report, opts.max_listed).run(top);
  return report;
}

bool sigma_condition(const Quiver& q, const DimVector& v, const ParamPair& params, std::size_t budget) {
  check_compatible(q, v);
  require_nonzero(v);
  validate_params(v, params);
  const Box box(v, budget);
  const auto lam = integral_direction(params.lambda);
  const auto th = integral_direction(params.theta);
  std::vector<char> admissible(box.size());
  std::vector<std::int64_t> w;
  for (std::size_t c = 0; c < box.size(); ++c) {
    box.decode(c, w);
    admissible[c] = orthogonal(lam, w) && orthogonal(th, w);
  }
  const DecompositionTable table(box, CartanForm(q), &admissible, configured_threads());
  return table.strict(box.size() - 1);
}

GenericityResult is_generic(const DimVector& v, const ParamPair& params, std::size_t budget) {
  require_nonzero(v);
  if (params.lambda.size() != v.size() || params.theta.size() != v.size())
    throw ValidationError("parameter length does not match the number of vertices");
  const Box box(v, budget);
  const auto lam = integral_direction(params.lambda);
  const auto th = integral_direction(params.theta);
  const std::size_t n = v.size();
  // first coordinate varies fastest, so (1,0) precedes (0,1)
  std::vector<std::int64_t> w(n, 0);
  for (std::size_t c = 1; c + 1 < box.size(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] < v[i]) {
        ++w[i];
        break;
      }
      w[i] = 0;
    }
    bool proportional = true;
    for (std::size_t i = 0; i < n && proportional; ++i)
      for (std::size_t j = i + 1; j < n && proportional; ++j)
        if (w[i] * v[j] != w[j] * v[i]) proportional = false;
    if (proportional) continue;
    if (orthogonal(lam, w) && orthogonal(th, w)) return {false, DimVector(w)};
  }
  return {true, std::nullopt};
}

bool is_indivisible(const DimVector& v) {
  require_nonzero(v);
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g == 1;
}

std::int64_t expected_dimension(const Quiver& q, const DimVector& v) { return 2 * p_fn(q, v); }

}  // namespace quiverlab
