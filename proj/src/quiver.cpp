#include "quiverlab/quiver.hpp"

#include "quiverlab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace quiverlab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw ValidationError("IntMatrix rows must form a square matrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_symmetric() const { return *this == transposed(); }

DimVector::DimVector(std::vector<std::int64_t> entries) : e_(std::move(entries)) {}
DimVector::DimVector(std::initializer_list<std::int64_t> entries) : e_(entries) {}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
  DimVector e(n);
  e[i] = 1;
  return e;
}

bool DimVector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](std::int64_t x) { return x == 0; });
}

bool DimVector::is_nonnegative() const {
  return std::all_of(e_.begin(), e_.end(), [](std::int64_t x) { return x >= 0; });
}

std::int64_t DimVector::total() const { return std::accumulate(e_.begin(), e_.end(), std::int64_t{0}); }

bool DimVector::leq(const DimVector& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

DimVector DimVector::operator+(const DimVector& o) const {
  DimVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

DimVector DimVector::operator-(const DimVector& o) const {
  DimVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

DimVector DimVector::operator*(std::int64_t k) const {
  DimVector r(*this);
  for (auto& x : r.e_) x *= k;
  return r;
}

std::string DimVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

ParamPair ParamPair::zero(std::size_t n) { return {std::vector<Rational>(n), std::vector<Rational>(n)}; }

Rational dot(const std::vector<Rational>& x, const DimVector& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s += x[i] * v[i];
  return s;
}

void validate_params(const DimVector& v, const ParamPair& params) {
  if (params.lambda.size() != v.size() || params.theta.size() != v.size())
    throw ValidationError("parameter length does not match the number of vertices");
  if (dot(params.lambda, v) != 0) throw ValidationError("lambda is not annihilated by the dimension vector");
  if (dot(params.theta, v) != 0) throw ValidationError("theta is not annihilated by the dimension vector");
}

Quiver::Quiver(std::vector<std::string> labels, IntMatrix adjacency)
    : labels_(std::move(labels)), adj_(std::move(adjacency)) {
  if (adj_.size() != labels_.size())
    throw ValidationError("adjacency matrix side does not match the number of vertices");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw ValidationError("duplicate vertex label \"" + l + "\"");
  for (std::size_t i = 0; i < adj_.size(); ++i)
    for (std::size_t j = 0; j < adj_.size(); ++j)
      if (adj_(i, j) < 0) throw ValidationError("negative arrow count");
}

Quiver Quiver::build(std::vector<std::string> labels,
                     const std::vector<std::pair<std::string, std::string>>& arrows) {
  IntMatrix adj(labels.size());
  auto find = [&](const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw ValidationError("unknown arrow endpoint \"" + l + "\"");
    return static_cast<std::size_t>(it - labels.begin());
  };
  for (const auto& [tail, head] : arrows) adj(find(tail), find(head)) += 1;
  return Quiver(std::move(labels), std::move(adj));
}

std::optional<std::size_t> Quiver::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Quiver Quiver::reversed() const { return Quiver(labels_, adj_.transposed()); }

Quiver Quiver::induced(const std::vector<std::size_t>& vertices) const {
  std::vector<std::string> labels;
  IntMatrix adj(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    labels.push_back(labels_.at(vertices[a]));
    for (std::size_t b = 0; b < vertices.size(); ++b) adj(a, b) = adj_(vertices[a], vertices[b]);
  }
  return Quiver(std::move(labels), std::move(adj));
}

IntMatrix cartan_matrix(const Quiver& q) {
  const auto& a = q.adjacency();
  IntMatrix c(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) c(i, j) = (i == j ? 2 : 0) - a(i, j) - a(j, i);
  return c;
}

void check_compatible(const Quiver& q, const DimVector& v) {
  if (v.size() != q.size())
    throw ValidationError("dimension vector has " + std::to_string(v.size()) + " entries, quiver has " +
                          std::to_string(q.size()) + " vertices");
}

namespace {

std::int64_t bilinear(const IntMatrix& m, const DimVector& x, const DimVector& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (x[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < m.size(); ++j) row += m(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

}  // namespace

std::int64_t CartanForm::pairing(const DimVector& x, const DimVector& y) const { return bilinear(c_, x, y); }

std::int64_t cartan_pairing(const Quiver& q, const DimVector& x, const DimVector& y) {
  check_compatible(q, x);
  check_compatible(q, y);
  return bilinear(cartan_matrix(q), x, y);
}

std::int64_t adjacency_pairing(const Quiver& q, const DimVector& x, const DimVector& y) {
  check_compatible(q, x);
  check_compatible(q, y);
  IntMatrix s(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) s(i, j) = q.arrows(i, j) + q.arrows(j, i);
  return bilinear(s, x, y);
}

std::int64_t p_fn(const Quiver& q, const DimVector& v) {
  check_compatible(q, v);
  return CartanForm(q).p(v);
}

FramedData frame(const Quiver& q, const DimVector& v, const FramingVector& d, const ParamPair& params) {
  check_compatible(q, v);
  if (d.size() != q.size()) throw ValidationError("framing vector length does not match the number of vertices");
  if (!d.is_nonnegative()) throw ValidationError("framing vector has a negative entry");
  if (d.is_zero()) throw ValidationError("framing vector is identically zero");
  if (params.lambda.size() != q.size() || params.theta.size() != q.size())
    throw ValidationError("parameter length does not match the number of vertices");

  const std::size_t n = q.size();
  std::vector<std::string> labels = q.labels();
  std::string inf = kFramingVertexLabel;
  while (q.index_of(inf)) inf += "'";
  labels.push_back(inf);

  IntMatrix adj(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) adj(i, j) = q.arrows(i, j);
    adj(n, i) = d[i];
  }

  std::vector<std::int64_t> dims(v.begin(), v.end());
  dims.push_back(1);

  ParamPair ext = params;
  ext.lambda.push_back(-dot(params.lambda, v));
  ext.theta.push_back(-dot(params.theta, v));

  return {Quiver(std::move(labels), std::move(adj)), DimVector(std::move(dims)), std::move(ext)};
}

std::vector<std::vector<std::size_t>> support_components(const Quiver& q, const DimVector& v) {
  check_compatible(q, v);
  const std::size_t n = q.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (v[s] <= 0 || comp[s] >= 0) continue;
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      members.push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (v[j] <= 0 || comp[j] >= 0) continue;
        if (q.arrows(i, j) + q.arrows(j, i) > 0) {
          comp[j] = comp[s];
          stack.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace quiverlab
