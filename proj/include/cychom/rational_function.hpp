#ifndef CYCHOM_RATIONAL_FUNCTION_HPP
#define CYCHOM_RATIONAL_FUNCTION_HPP

#include <string>
#include <utility>

#include "polynomial.hpp"
#include "rational.hpp"

namespace cychom {

/*
 * The field K(t) of rational functions in one variable.  Canonical form:
 * numerator and denominator are coprime and the denominator is monic, so
 * equality is plain coefficient comparison.
 */
template <Field K>
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial<K>(K{1})) {}
  RationalFunction(long c) : num_(Polynomial<K>(K(c))), den_(Polynomial<K>(K{1})) {}
  RationalFunction(const K& c) : num_(Polynomial<K>(c)), den_(Polynomial<K>(K{1})) {}
  RationalFunction(const Polynomial<K>& p) : num_(p), den_(Polynomial<K>(K{1})) {}
  RationalFunction(const Polynomial<K>& n, const Polynomial<K>& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw input_error("rational function with zero denominator");
    reduce();
  }

  static RationalFunction t() { return RationalFunction(Polynomial<K>::variable()); }

  const Polynomial<K>& num() const { return num_; }
  const Polynomial<K>& den() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) throw input_error("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  // d/dt by the quotient rule; exact, used for the dt component of
  // differentials of ground field coefficients.
  RationalFunction derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                            den_ * den_);
  }

  std::string str() const {
    if (den_.degree() == 0 && den_.coeff(0) == K{1}) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = Polynomial<K>(K{1});
      return;
    }
    auto g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Polynomial<K>::divmod(num_, g).first;
      den_ = Polynomial<K>::divmod(den_, g).first;
    }
    K lead = den_.leading();
    if (!(lead == K{1})) {
      K inv = K{1} / lead;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  Polynomial<K> num_, den_;
};

using RatFunc = RationalFunction<Rational>;

inline bool is_zero(const RatFunc& x) { return x.num().is_zero(); }
inline std::string scalar_str(const RatFunc& x) { return x.str(); }

} // namespace cychom

#endif
