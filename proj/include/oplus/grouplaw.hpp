#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "oplus/exact.hpp"
#include "oplus/quadext.hpp"

namespace oplus {

namespace detail {
inline Rational constant_like(const Rational&, const Rational& v) { return v; }
inline QuadExt constant_like(const QuadExt& model, const Rational& v) {
  return QuadExt(v, model.d());
}
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
}  // namespace detail

/// A commutative polynomial group law x (+) y = P(x, y).
///
/// Two families exist (the degree argument rules out everything else):
///   affine    P(x,y) = x + y + shift, a group on all of K;
///   bilinear  P(x,y) = scale*x*y + offset*(x+y) + (offset^2-offset)/scale,
///             a group on K minus the annihilator -offset/scale.
/// The bilinear law is the pullback of field multiplication through
/// f(x) = scale*x + offset, which is what identity/invert lean on.
/// C is Rational or QuadExt; all coefficients of one law share C.
template <typename C>
class GroupLaw {
 public:
  enum class Kind { affine, bilinear };

  static GroupLaw affine(C shift) {
    return GroupLaw(Kind::affine, std::move(shift), std::nullopt);
  }
  static GroupLaw bilinear(C scale, C offset) {
    if (detail::is_zero(scale))
      throw std::domain_error("bilinear law requires a nonzero x*y coefficient");
    return GroupLaw(Kind::bilinear, std::move(scale), std::move(offset));
  }

  Kind kind() const { return kind_; }
  bool is_affine() const { return kind_ == Kind::affine; }
  bool is_bilinear() const { return kind_ == Kind::bilinear; }

  const C& shift() const { require(Kind::affine); return first_; }
  const C& scale() const { require(Kind::bilinear); return first_; }
  const C& offset() const { require(Kind::bilinear); return *second_; }

  /// Constant coefficient of P: shift, or (offset^2 - offset)/scale.
  C constant_term() const {
    if (is_affine()) return first_;
    const C& b = *second_;
    return (b * b - b) / first_;
  }

  C evaluate(const C& x, const C& y) const {
    if (is_affine()) return x + y + first_;
    return first_ * x * y + *second_ * x + *second_ * y + constant_term();
  }

  /// e with e (+) x = x: -shift, or (1 - offset)/scale.
  C identity() const {
    if (is_affine()) return -first_;
    return (detail::constant_like(first_, Rational(1)) - *second_) / first_;
  }

  /// y with x (+) y = identity(). For bilinear laws this is
  /// f^{-1}(1/f(x)); the annihilator (f(x) = 0) has no inverse.
  C invert(const C& x) const {
    if (is_affine()) return -x - first_ - first_;
    C w = multiplicative_image(x);
    if (detail::is_zero(w))
      throw std::domain_error("annihilator has no inverse");
    C one = detail::constant_like(first_, Rational(1));
    return (one / w - *second_) / first_;
  }

  /// The absorbing point -offset/scale excluded from a bilinear group;
  /// affine laws have none.
  std::optional<C> annihilator() const {
    if (is_affine()) return std::nullopt;
    return -*second_ / first_;
  }

  /// f(x) = scale*x + offset, the isomorphism onto (K^x, *).
  C multiplicative_image(const C& x) const {
    if (is_affine())
      throw std::domain_error("affine laws have no multiplicative isomorphism");
    return first_ * x + *second_;
  }

  friend bool operator==(const GroupLaw& a, const GroupLaw& b) {
    return a.kind_ == b.kind_ && a.first_ == b.first_ && a.second_ == b.second_;
  }

 private:
  GroupLaw(Kind kind, C first, std::optional<C> second)
      : kind_(kind), first_(std::move(first)), second_(std::move(second)) {}

  void require(Kind kind) const {
    if (kind_ != kind) throw std::domain_error("wrong group-law kind");
  }

  Kind kind_;
  C first_;                // shift (affine) or scale (bilinear)
  std::optional<C> second_;  // offset (bilinear)
};

using RationalLaw = GroupLaw<Rational>;
using QuadLaw = GroupLaw<QuadExt>;

/// Required values of 1 (+) 1 and 2 (+) 2.
struct ConstraintPair {
  Rational u;
  Rational v;
};

/// Everything solve() finds for one constraint pair. Exactly one of the
/// two law vectors is populated: rational_laws when the discriminant is a
/// rational square (or only the affine law exists), quadratic_laws over
/// Q(sqrt(field_radicand)) otherwise. Ordering is deterministic: affine
/// law first, then the bilinear +sqrt root, then the -sqrt root.
struct SolveResult {
  Rational discriminant;
  std::optional<Int> field_radicand;
  std::vector<RationalLaw> rational_laws;
  std::vector<QuadLaw> quadratic_laws;
};

/// 9 - 8u - 4v + 4uv; its square-ness over Q decides rational solvability
/// of the bilinear family.
Rational discriminant(const ConstraintPair& pair);

/// All group laws in the two families with 1(+)1 = u and 2(+)2 = v:
/// the affine law x+y+(u-2) iff v-u = 2, and the bilinear laws from
/// scale = u+v-3 +- sqrt(discriminant), offset = (v-u-3*scale)/2, the
/// scale = 0 root dropped. A negative discriminant yields no bilinear
/// laws (real quadratic fields only). An empty result is valid.
SolveResult solve(const ConstraintPair& pair);

/// True iff solve() finds a law with rational coefficients; with
/// bilinear_only, the affine law does not count (the theorems' sense).
bool is_true_over_q(const ConstraintPair& pair, bool bilinear_only = false);

/// The associativity characterization of the coefficient triple of
/// a*x*y + b*(x+y) + c: either a = 0 and b = 1, or a != 0 and a*c = b^2 - b.
template <typename C>
bool verify_coefficient_constraint(const C& a, const C& b, const C& c) {
  if (detail::is_zero(a))
    return b == detail::constant_like(b, Rational(1));
  return a * c == b * b - b;
}

}  // namespace oplus
