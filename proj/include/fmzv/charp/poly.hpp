#pragma once

// Dense univariate polynomials over a table-driven finite field.

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fmzv/charp/gf.hpp"

namespace fmzv::charp {

/// Polynomial in one variable (printed as T) with coefficients in a
/// FiniteField. Coefficients are stored low degree first with no trailing
/// zeros. The field must outlive every polynomial that refers to it.
class Poly {
 public:
  explicit Poly(const FiniteField& f) : f_(&f) {}
  Poly(const FiniteField& f, std::vector<GfElem> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const FiniteField& f, GfElem c) { return Poly(f, {c}); }
  static Poly one(const FiniteField& f) { return constant(f, FiniteField::one()); }
  static Poly monomial(const FiniteField& f, GfElem c, std::size_t deg) {
    std::vector<GfElem> v(deg + 1, FiniteField::zero());
    v[deg] = c;
    return Poly(f, std::move(v));
  }
  static Poly variable(const FiniteField& f) { return monomial(f, FiniteField::one(), 1); }
  static Poly from_codes(const FiniteField& f, const std::vector<int>& codes) {
    std::vector<GfElem> v;
    for (int c : codes) {
      if (c < 0 || static_cast<std::size_t>(c) >= f.order()) throw std::invalid_argument("coefficient code outside the field");
      v.emplace_back(static_cast<std::uint16_t>(c));
    }
    return Poly(f, std::move(v));
  }

  const FiniteField& field() const { return *f_; }
  const std::vector<GfElem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == FiniteField::one(); }
  bool is_constant() const { return c_.size() <= 1; }
  GfElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FiniteField::zero(); }
  GfElem leading() const { return c_.empty() ? FiniteField::zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == FiniteField::one(); }

  /// True when every coefficient has code below `order`, i.e. lies in the
  /// subfield encoded by the first `order` codes.
  bool coefficients_below(std::size_t order) const {
    for (auto c : c_)
      if (c.code >= order) return false;
    return true;
  }

  Poly operator+(const Poly& o) const {
    same_field(o);
    std::vector<GfElem> r(std::max(c_.size(), o.c_.size()), FiniteField::zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->add(coeff(i), o.coeff(i));
    return Poly(*f_, std::move(r));
  }
  Poly operator-(const Poly& o) const {
    same_field(o);
    std::vector<GfElem> r(std::max(c_.size(), o.c_.size()), FiniteField::zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->sub(coeff(i), o.coeff(i));
    return Poly(*f_, std::move(r));
  }
  Poly operator-() const {
    std::vector<GfElem> r(c_);
    for (auto& c : r) c = f_->neg(c);
    return Poly(*f_, std::move(r));
  }
  Poly operator*(const Poly& o) const {
    same_field(o);
    if (is_zero() || o.is_zero()) return Poly(*f_);
    std::vector<GfElem> r(c_.size() + o.c_.size() - 1, FiniteField::zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].code == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return Poly(*f_, std::move(r));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(GfElem k) const {
    std::vector<GfElem> r(c_);
    for (auto& c : r) c = f_->mul(c, k);
    return Poly(*f_, std::move(r));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(f_->inv(leading()));
  }

  /// (quotient, remainder) of division by a nonzero polynomial.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    a.same_field(b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const FiniteField& f = *a.f_;
    if (a.degree() < b.degree()) return {Poly(f), a};
    std::vector<GfElem> rem(a.c_);
    std::vector<GfElem> quo(a.c_.size() - b.c_.size() + 1, FiniteField::zero());
    const GfElem lead_inv = f.inv(b.leading());
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = rem.size(); k-- > db;) {
      const GfElem c = f.mul(rem[k], lead_inv);
      if (c.code == 0) continue;
      quo[k - db] = c;
      for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = f.sub(rem[k - db + i], f.mul(c, b.c_[i]));
    }
    rem.resize(db);
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
  }
  Poly operator/(const Poly& o) const { return divmod(*this, o).first; }
  Poly operator%(const Poly& o) const { return divmod(*this, o).second; }

  Poly pow(std::uint64_t e) const {
    Poly r = one(*f_), b = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r *= b;
      if (e > 1) b *= b;
    }
    return r;
  }

  /// a^Q for Q a power of the characteristic: coefficients c -> c^Q and
  /// T^i -> T^{iQ}, since the Q-th power map is additive.
  Poly frobenius(std::uint64_t Q) const {
    if (is_zero()) return *this;
    std::vector<GfElem> r(static_cast<std::size_t>(degree()) * Q + 1, FiniteField::zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * Q] = f_->pow(c_[i], Q);
    return Poly(*f_, std::move(r));
  }

  /// Applies a field map (e.g. raising coefficients to a power) termwise.
  template <class Fn>
  Poly map_coeffs(Fn&& fn) const {
    std::vector<GfElem> r(c_);
    for (auto& c : r) c = fn(c);
    return Poly(*f_, std::move(r));
  }

  GfElem eval(GfElem x) const {
    GfElem acc = FiniteField::zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
    return acc;
  }

  bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
  bool operator<(const Poly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t i = c_.size(); i-- > 0;)
      if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
  }

  std::vector<int> codes() const {
    std::vector<int> v;
    for (auto c : c_) v.push_back(c.code);
    return v;
  }

  /// Human-readable form. Coefficients outside the prime field print as
  /// <code> in the tower encoding.
  std::string str(const char* var = "T") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const auto c = c_[i].code;
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      const bool unit = c == 1;
      std::string coef = c < f_->characteristic() ? std::to_string(c) : "<" + std::to_string(c) + ">";
      if (i == 0) {
        os << coef;
        continue;
      }
      if (!unit) os << coef << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
    return os.str();
  }

  void same_field(const Poly& o) const {
    if (f_ != o.f_) throw std::invalid_argument("polynomials over different fields");
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().code == 0) c_.pop_back();
  }

  const FiniteField* f_;
  std::vector<GfElem> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// (g, u, v) with u a + v b = g = gcd(a, b) monic.
inline std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) {
  const FiniteField& f = a.field();
  Poly r0 = a, r1 = b, s0 = Poly::one(f), s1(f), t0(f), t1 = Poly::one(f);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const GfElem li = f.inv(r0.leading());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

}  // namespace fmzv::charp
