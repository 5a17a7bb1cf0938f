#pragma once

#include "quiverlab/numeric.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quiverlab {

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t size() const { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  IntMatrix transposed() const;
  bool is_symmetric() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

/// Nonnegative integer vector indexed by the vertices of a quiver.
/// Ordering (operator<=>) is lexicographic; use leq() for the componentwise
/// partial order.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::size_t n) : e_(n, 0) {}
  explicit DimVector(std::vector<std::int64_t> entries);
  DimVector(std::initializer_list<std::int64_t> entries);

  static DimVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return e_.size(); }
  std::int64_t operator[](std::size_t i) const { return e_[i]; }
  std::int64_t& operator[](std::size_t i) { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  const std::vector<std::int64_t>& entries() const { return e_; }

  bool is_zero() const;
  bool is_nonnegative() const;
  std::int64_t total() const;
  /// Componentwise <=.
  bool leq(const DimVector& other) const;

  DimVector operator+(const DimVector& o) const;
  DimVector operator-(const DimVector& o) const;
  DimVector operator*(std::int64_t k) const;

  bool operator==(const DimVector&) const = default;
  auto operator<=>(const DimVector&) const = default;

  std::string str() const;

 private:
  std::vector<std::int64_t> e_;
};

/// Framing vector d: nonnegative integers, one per vertex.
class FramingVector : public DimVector {
 public:
  using DimVector::DimVector;
  explicit FramingVector(const DimVector& d) : DimVector(d) {}
};

/// Deformation parameter lambda and stability parameter theta.
struct ParamPair {
  std::vector<Rational> lambda;
  std::vector<Rational> theta;

  static ParamPair zero(std::size_t n);
  bool operator==(const ParamPair&) const = default;
};

Rational dot(const std::vector<Rational>& x, const DimVector& v);

/// Checks lengths and the annihilation constraints lambda.v = theta.v = 0.
/// Throws ValidationError naming the violated constraint.
void validate_params(const DimVector& v, const ParamPair& params);

/// Finite directed multigraph stored as an adjacency matrix; a(i,j) counts
/// arrows i->j and a(i,i) counts loops at i. Vertex order is declaration order.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> labels, IntMatrix adjacency);

  static Quiver build(std::vector<std::string> labels,
                      const std::vector<std::pair<std::string, std::string>>& arrows);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const IntMatrix& adjacency() const { return adj_; }
  std::int64_t arrows(std::size_t from, std::size_t to) const { return adj_(from, to); }
  std::int64_t loops(std::size_t i) const { return adj_(i, i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Every arrow reversed (transposed adjacency).
  Quiver reversed() const;
  /// Full subquiver on the given vertices, in the given order.
  Quiver induced(const std::vector<std::size_t>& vertices) const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> labels_;
  IntMatrix adj_;
};

/// C_Q = 2 Id - A - A^T.
IntMatrix cartan_matrix(const Quiver& q);

/// x . C_Q y
std::int64_t cartan_pairing(const Quiver& q, const DimVector& x, const DimVector& y);
/// x . (A + A^T) y
std::int64_t adjacency_pairing(const Quiver& q, const DimVector& x, const DimVector& y);

/// p(v) = 1 - v.C_Q v / 2. Throws ValidationError on a length mismatch.
std::int64_t p_fn(const Quiver& q, const DimVector& v);

/// Cached Cartan matrix for repeated p-evaluations in inner loops.
class CartanForm {
 public:
  explicit CartanForm(const Quiver& q) : c_(cartan_matrix(q)) {}
  const IntMatrix& matrix() const { return c_; }
  std::int64_t pairing(const DimVector& x, const DimVector& y) const;
  std::int64_t p(const DimVector& v) const { return 1 - pairing(v, v) / 2; }

 private:
  IntMatrix c_;
};

struct FramedData {
  Quiver quiver;
  DimVector dim;
  ParamPair params;
};

/// Label used for the framing vertex.
inline constexpr const char* kFramingVertexLabel = "inf";

/// Adds a vertex "inf" of dimension 1 with d_i arrows inf->i; extends
/// lambda, theta by lambda_inf = -sum lambda_i v_i (same for theta).
/// Throws ValidationError when d is identically zero or lengths disagree.
FramedData frame(const Quiver& q, const DimVector& v, const FramingVector& d, const ParamPair& params);

/// Connected components (arrows of either orientation) of the full subquiver
/// on {i : v_i > 0}. Components are sorted by smallest vertex, vertices
/// ascending.
std::vector<std::vector<std::size_t>> support_components(const Quiver& q, const DimVector& v);

void check_compatible(const Quiver& q, const DimVector& v);

}  // namespace quiverlab
