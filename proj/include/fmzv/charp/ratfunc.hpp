#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "fmzv/charp/poly.hpp"
#include "fmzv/ring.hpp"

namespace fmzv::charp {

/// Element of F(T) kept as num/den with den monic and gcd(num, den) = 1,
/// so equal values have equal representations.
class RatFunc {
 public:
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc zero(const FiniteField& f) { return RatFunc(Poly(f)); }
  static RatFunc one(const FiniteField& f) { return RatFunc(Poly::one(f)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FiniteField& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator+(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    const Poly g = gcd(den_, o.den_);
    const Poly a = o.den_ / g;  // cofactor for *this
    const Poly b = den_ / g;
    return RatFunc(num_ * a + o.num_ * b, den_ * a);
  }
  RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
  RatFunc operator-() const { return raw(-num_, den_); }
  RatFunc operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return zero(field());
    // Cross-cancel first to keep intermediate degrees small.
    const Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    return RatFunc((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
  }
  RatFunc operator/(const RatFunc& o) const { return *this * o.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  RatFunc inverse() const {
    if (is_zero()) throw not_invertible("inverse of zero rational function");
    return RatFunc(den_, num_);
  }

  RatFunc pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return raw(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)));
  }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  static RatFunc raw(Poly num, Poly den) {
    RatFunc r(Poly(num.field()));
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::one(num_.field());
      return;
    }
    const Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    const GfElem li = num_.field().inv(den_.leading());
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }

  Poly num_;
  Poly den_;
};

}  // namespace fmzv::charp

namespace fmzv {

template <>
struct ring_traits<charp::RatFunc> {
  using RF = charp::RatFunc;
  static RF zero(const RF& like) { return RF::zero(like.field()); }
  static RF one(const RF& like) { return RF::one(like.field()); }
  static RF from_int(const RF& like, std::int64_t v) {
    return RF(charp::Poly::constant(like.field(), like.field().from_int(v)));
  }
  static bool is_zero(const RF& x) { return x.is_zero(); }
  static RF invert(const RF& x) { return x.inverse(); }
};

}  // namespace fmzv
