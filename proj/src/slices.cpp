#include "quiverlab/slices.hpp"

#include "quiverlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace quiverlab {

DimVector RepType::total(std::size_t n) const {
  DimVector s(n);
  for (const auto& part : parts) {
    if (part.dim.size() != n) throw ValidationError("representation type part has the wrong length");
    s = s + part.dim * part.multiplicity;
  }
  return s;
}

namespace {

class TypeParser {
 public:
  explicit TypeParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  RepType parse(std::size_t n) {
    RepType tau;
    if (s_.empty()) throw ValidationError("empty representation type");
    while (true) {
      RepTypePart part;
      part.multiplicity = number();
      expect(':');
      expect('(');
      std::vector<std::int64_t> entries{number()};
      while (peek() == ',') {
        ++pos_;
        entries.push_back(number());
      }
      expect(')');
      if (entries.size() != n)
        throw ValidationError("type part has " + std::to_string(entries.size()) + " entries, expected " +
                              std::to_string(n));
      part.dim = DimVector(std::move(entries));
      tau.parts.push_back(std::move(part));
      if (pos_ == s_.size()) break;
      expect(';');
    }
    return tau;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) throw ValidationError(std::string("malformed representation type: expected '") + c + "' at offset " + std::to_string(pos_));
    ++pos_;
  }

  std::int64_t number() {
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && s_[start] == '-'))
      throw ValidationError("malformed representation type: expected a number at offset " + std::to_string(start));
    return std::stoll(s_.substr(start, pos_ - start));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

RepType parse_rep_type(std::string_view text, std::size_t n) { return TypeParser(text).parse(n); }

std::vector<RepTypeViolation> validate_rep_type(const Quiver& q, const DimVector& v, const ParamPair& params,
                                                const RepType& tau, bool strict) {
  using Kind = RepTypeViolation::Kind;
  std::vector<RepTypeViolation> out;
  const std::size_t n = q.size();
  if (v.size() != n) {
    out.push_back({Kind::Length, -1, "dimension vector length does not match the quiver"});
    return out;
  }
  bool lengths_ok = true;
  for (std::size_t t = 0; t < tau.parts.size(); ++t) {
    const auto& part = tau.parts[t];
    const int idx = static_cast<int>(t);
    if (part.dim.size() != n) {
      out.push_back({Kind::Length, idx, "part " + std::to_string(t + 1) + " has the wrong length"});
      lengths_ok = false;
      continue;
    }
    if (part.multiplicity <= 0)
      out.push_back({Kind::Multiplicity, idx, "part " + std::to_string(t + 1) + " has a nonpositive multiplicity"});
    if (part.dim.is_zero() || !part.dim.is_nonnegative())
      out.push_back({Kind::ZeroPart, idx, "part " + std::to_string(t + 1) + " is not a nonzero nonnegative vector"});
    if (params.lambda.size() == n && dot(params.lambda, part.dim) != 0)
      out.push_back({Kind::LambdaPairing, idx,
                     "lambda . " + part.dim.str() + " = " + to_string(dot(params.lambda, part.dim)) + " != 0"});
    if (params.theta.size() == n && dot(params.theta, part.dim) != 0)
      out.push_back({Kind::ThetaPairing, idx,
                     "theta . " + part.dim.str() + " = " + to_string(dot(params.theta, part.dim)) + " != 0"});
    if (strict)
      for (std::size_t u = 0; u < t; ++u)
        if (tau.parts[u].dim == part.dim)
          out.push_back({Kind::Duplicate, idx, "part " + std::to_string(t + 1) + " repeats part " + std::to_string(u + 1)});
  }
  if (lengths_ok) {
    const DimVector s = tau.total(n);
    if (s != v) out.push_back({Kind::Sum, -1, "sum of k_t v_t is " + s.str() + ", expected " + v.str()});
  }
  return out;
}

SliceResult slice_quiver(const Quiver& q, const RepType& tau) {
  const std::size_t r = tau.parts.size();
  if (r == 0) throw ValidationError("representation type has no parts");
  const CartanForm form(q);
  SliceResult out;
  std::vector<std::string> labels;
  IntMatrix adj(r);
  std::vector<std::int64_t> dims;
  for (std::size_t t = 0; t < r; ++t) {
    const auto& part = tau.parts[t];
    check_compatible(q, part.dim);
    if (part.multiplicity <= 0) throw ValidationError("multiplicities must be positive");
    if (part.dim.is_zero() || !part.dim.is_nonnegative())
      throw ValidationError("type parts must be nonzero nonnegative vectors");
    labels.push_back(std::to_string(t + 1));
    dims.push_back(part.multiplicity);
    const std::int64_t loops = form.p(part.dim);
    if (loops < 0)
      throw InadmissibleTypeError("p" + part.dim.str() + " = " + std::to_string(loops) + " < 0");
    adj(t, t) = loops;
    for (std::size_t u = t + 1; u < r; ++u) {
      const std::int64_t arrows = -form.pairing(part.dim, tau.parts[u].dim);
      if (arrows < 0)
        throw InadmissibleTypeError("-" + part.dim.str() + ".C_Q" + tau.parts[u].dim.str() + " = " +
                                    std::to_string(arrows) + " < 0");
      adj(t, u) = arrows;
    }
    out.provenance.push_back(part.dim);
  }
  out.slice_quiver = Quiver(std::move(labels), std::move(adj));
  out.slice_dim = DimVector(std::move(dims));
  return out;
}

std::pair<std::int64_t, std::int64_t> p_identity_sides(const Quiver& q, const RepType& tau) {
  const SliceResult s = slice_quiver(q, tau);
  return {p_fn(s.slice_quiver, s.slice_dim), p_fn(q, tau.total(q.size()))};
}

}  // namespace quiverlab
