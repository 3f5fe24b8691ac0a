#ifndef CYCHOM_POLYNOMIAL_HPP
#define CYCHOM_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace cychom {

/*
 * Dense univariate polynomial over a field, trailing zeros stripped, so the
 * zero polynomial has an empty coefficient vector and degree() == -1.
 * Only small degrees appear in practice (the Q(t) scalars of the relative
 * differential computations), so dense storage and schoolbook products are
 * the right tradeoff.
 */
template <Field K>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const K& c) {
    if (!(c == K{0})) c_.push_back(c);
  }
  Polynomial(long c) : Polynomial(K(c)) {}
  static Polynomial from_coeffs(std::vector<K> c) {
    Polynomial p;
    p.c_ = std::move(c);
    p.strip();
    return p;
  }
  // The variable t.
  static Polynomial variable() { return from_coeffs({K{0}, K{1}}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : K{0};
  }
  const K& leading() const { return c_.back(); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K{0});
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return from_coeffs(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K{0});
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
    return from_coeffs(std::move(c));
  }
  Polynomial operator-() const {
    std::vector<K> c(c_);
    for (auto& x : c) x = -x;
    return from_coeffs(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, K{0});
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return from_coeffs(std::move(c));
  }
  Polynomial operator*(const K& s) const {
    std::vector<K> c(c_);
    for (auto& x : c) x = x * s;
    return from_coeffs(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  // Euclidean division; the divisor must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                  const Polynomial& b) {
    if (b.is_zero()) throw input_error("polynomial division by zero");
    Polynomial q, r = a;
    std::vector<K> qc;
    if (a.degree() >= b.degree())
      qc.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, K{0});
    while (!r.is_zero() && r.degree() >= b.degree()) {
      K f = r.leading() / b.leading();
      int d = r.degree() - b.degree();
      qc[static_cast<size_t>(d)] = f;
      // r -= f t^d b, done in place to avoid re-stripping intermediates
      std::vector<K> rc(r.c_);
      for (size_t i = 0; i < b.c_.size(); ++i)
        rc[i + static_cast<size_t>(d)] =
            rc[i + static_cast<size_t>(d)] - f * b.c_[i];
      rc.pop_back();
      r = from_coeffs(std::move(rc));
    }
    q = from_coeffs(std::move(qc));
    return {q, r};
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    K inv = K{1} / leading();
    return (*this) * inv;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<K> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K(static_cast<long>(i));
    return from_coeffs(std::move(c));
  }

  K eval(const K& x) const {
    K v{0};
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == K{0}) continue;
      if (!out.empty()) out += " + ";
      out += scalar_str(c_[i]);
      if (i >= 1) out += "*" + var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void strip() {
    while (!c_.empty() && c_.back() == K{0}) c_.pop_back();
  }
  std::vector<K> c_;
};

// Monic gcd via Euclid.  Remainders are made monic at each step to keep the
// rational coefficients from ballooning.
template <Field K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
  while (!b.is_zero()) {
    auto [q, r] = Polynomial<K>::divmod(a, b);
    (void)q;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

template <Field K>
Polynomial<K> lcm(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial<K>();
  auto g = gcd(a, b);
  auto [q, r] = Polynomial<K>::divmod(a * b, g);
  return q.monic();
}

} // namespace cychom

#endif
