#include "quiverlab/type_a.hpp"

#include "quiverlab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace quiverlab {

namespace {

Quiver make_type_a(TypeAShape shape, std::size_t n) {
  if (n < 1) throw ValidationError("type A quiver needs at least one vertex");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  IntMatrix adj(n);
  for (std::size_t i = 0; i + 1 < n; ++i) adj(i, i + 1) = 1;
  if (shape == TypeAShape::Cycle) adj(n - 1, 0) += 1;
  return Quiver(std::move(labels), std::move(adj));
}

std::vector<std::int64_t> framed_excess(const Quiver& q, const DimVector& v, const FramingVector& d) {
  const IntMatrix c = cartan_matrix(q);
  std::vector<std::int64_t> w(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    std::int64_t cv = 0;
    for (std::size_t j = 0; j < q.size(); ++j) cv += c(i, j) * v[j];
    w[i] = d[i] - cv;
  }
  return w;
}

}  // namespace

TypeAQuiver::TypeAQuiver(TypeAShape shape, std::size_t n) : shape_(shape), n_(n), quiver_(make_type_a(shape, n)) {}

std::vector<VertexSet> connected_subsets(const TypeAQuiver& q) {
  const std::size_t n = q.n();
  std::vector<VertexSet> out;
  if (!q.affine()) {
    for (std::size_t len = 1; len <= n; ++len)
      for (std::size_t s = 0; s + len <= n; ++s) {
        VertexSet I(len);
        std::iota(I.begin(), I.end(), s);
        out.push_back(std::move(I));
      }
    return out;
  }
  for (std::size_t len = 1; len < n; ++len)
    for (std::size_t s = 0; s < n; ++s) {
      VertexSet I;
      for (std::size_t k = 0; k < len; ++k) I.push_back((s + k) % n);
      std::sort(I.begin(), I.end());
      out.push_back(std::move(I));
    }
  VertexSet all(n);
  std::iota(all.begin(), all.end(), 0);
  out.push_back(std::move(all));
  return out;
}

DimVector indicator(std::size_t n, const VertexSet& subset) {
  DimVector e(n);
  for (auto i : subset) e[i] += 1;
  return e;
}

TypeAFlatness flat_type_a(const TypeAQuiver& q, const DimVector& v, const FramingVector& d) {
  check_compatible(q.quiver(), v);
  if (d.size() != q.n()) throw ValidationError("framing vector length does not match the number of vertices");
  if (!v.is_nonnegative() || !d.is_nonnegative()) throw ValidationError("negative dimension or framing entry");
  if (d.is_zero()) throw ValidationError("framing vector is identically zero");
  const auto w = framed_excess(q.quiver(), v, d);
  TypeAFlatness out;
  for (const auto& I : connected_subsets(q)) {
    std::int64_t s = 0;
    for (auto i : I) s += w[i];
    if (s < -1) {
      out.flat = false;
      out.violating = I;
      out.violating_value = s;
      return out;
    }
  }
  return out;
}

TestVectorDecomposition decompose_test_vector(const TypeAQuiver& q, const DimVector& u) {
  check_compatible(q.quiver(), u);
  if (!u.is_nonnegative()) throw ValidationError("test vector has a negative entry");
  TestVectorDecomposition out;
  DimVector rest = u;
  if (q.affine()) {
    out.m = *std::min_element(rest.begin(), rest.end());
    for (std::size_t i = 0; i < q.n(); ++i) rest[i] -= out.m;
  }
  while (!rest.is_zero()) {
    for (auto& comp : support_components(q.quiver(), rest)) {
      for (auto i : comp) rest[i] -= 1;
      out.subsets.push_back(std::move(comp));
    }
  }
  return out;
}

std::int64_t WalgParams::N() const { return std::accumulate(r.begin(), r.end(), std::int64_t{0}); }

void WalgParams::validate() const {
  if (r.size() < 2) throw ValidationError("need at least two r entries");
  if (d.size() + 1 != r.size())
    throw ValidationError("expected " + std::to_string(r.size() - 1) + " d entries, got " + std::to_string(d.size()));
  for (auto x : r)
    if (x < 0) throw ValidationError("r entries must be nonnegative");
  for (auto x : d)
    if (x < 0) throw ValidationError("d entries must be nonnegative");
  std::int64_t weighted = 0;
  for (std::size_t i = 0; i < d.size(); ++i) weighted += static_cast<std::int64_t>(i + 1) * d[i];
  if (weighted != N())
    throw ValidationError("sum_i i*d_i = " + std::to_string(weighted) + " but sum r_i = " + std::to_string(N()));
}

DimVector walg_dims(const WalgParams& p) {
  p.validate();
  const std::size_t n = p.n();
  DimVector v(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    std::int64_t x = 0;
    for (std::size_t j = i + 1; j <= n; ++j) {
      x += p.r[j - 1];
      if (j < n) x -= static_cast<std::int64_t>(j - i) * p.d[j - 1];
    }
    if (x < 0) throw ValidationError("v_" + std::to_string(i) + " = " + std::to_string(x) + " is negative");
    v[i - 1] = x;
  }
  return v;
}

bool walg_flat(const WalgParams& p) {
  walg_dims(p);
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = i + 1; j < p.n(); ++j)
      if (p.r[i] - p.r[j] < -1) return false;
  return true;
}

std::vector<IntervalIdentity> walg_identity_checks(const WalgParams& p) {
  const DimVector v = walg_dims(p);
  const TypeAQuiver path(TypeAShape::Path, p.n() - 1);
  const auto w = framed_excess(path.quiver(), v, FramingVector(DimVector(p.d)));
  std::vector<IntervalIdentity> out;
  for (std::size_t i = 1; i <= p.n(); ++i)
    for (std::size_t j = i + 1; j <= p.n(); ++j) {
      std::int64_t lhs = 0;
      for (std::size_t k = i; k < j; ++k) lhs += w[k - 1];
      out.push_back({i, j, lhs, p.r[i - 1] - p.r[j - 1]});
    }
  return out;
}

}  // namespace quiverlab
