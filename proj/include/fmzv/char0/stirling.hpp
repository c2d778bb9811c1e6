#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fmzv/ring.hpp"
#include "fmzv/series.hpp"

namespace fmzv::char0 {

enum class StirlingKind { first, second };

/// Triangular tables of unsigned first-kind [n m] and second-kind {n m}
/// Stirling numbers for 0 <= m, n <= bound.
///
/// Built by the recurrences
///   [n+1, m] = n [n, m] + [n, m-1],   {n+1, m} = m {n, m} + {n, m-1}
/// and cross-checked at construction against the defining identities
///   x(x+1)...(x+n-1) = sum_m [n m] x^m,  (e^x - 1)^m = m! sum_n {n m} x^n/n!.
class StirlingTable {
 public:
  explicit StirlingTable(std::size_t bound) : bound_(bound) {
    first_.assign(bound + 1, std::vector<BigInt>(bound + 1, 0));
    second_ = first_;
    first_[0][0] = second_[0][0] = 1;
    for (std::size_t n = 0; n < bound; ++n) {
      for (std::size_t m = 1; m <= n + 1; ++m) {
        first_[n + 1][m] = BigInt(static_cast<unsigned long>(n)) * first_[n][m] + first_[n][m - 1];
        second_[n + 1][m] = BigInt(static_cast<unsigned long>(m)) * second_[n][m] + second_[n][m - 1];
      }
    }
    validate();
  }

  std::size_t bound() const { return bound_; }

  const BigInt& get(StirlingKind kind, std::size_t n, std::size_t m) const {
    if (n > bound_ || m > bound_) throw std::out_of_range("Stirling index beyond table bound");
    return kind == StirlingKind::first ? first_[n][m] : second_[n][m];
  }
  const BigInt& first(std::size_t n, std::size_t m) const { return get(StirlingKind::first, n, m); }
  const BigInt& second(std::size_t n, std::size_t m) const { return get(StirlingKind::second, n, m); }

 private:
  void validate() const {
    // Rising factorial, expanded as an integer polynomial.
    std::vector<BigInt> rising{1};
    for (std::size_t n = 0; n <= bound_; ++n) {
      if (n > 0) {
        std::vector<BigInt> next(rising.size() + 1, 0);
        for (std::size_t m = 0; m < rising.size(); ++m) {
          next[m + 1] += rising[m];
          next[m] += BigInt(static_cast<unsigned long>(n - 1)) * rising[m];
        }
        rising = std::move(next);
      }
      for (std::size_t m = 0; m <= bound_; ++m) {
        const BigInt expect = m < rising.size() ? rising[m] : BigInt(0);
        if (first_[n][m] != expect) throw std::logic_error("first-kind Stirling table failed validation");
      }
    }
    // (e^x - 1)^m as ordinary series with rational coefficients.
    TruncSeries<BigRat> e1(bound_, BigRat(0));
    for (std::size_t n = 1; n <= bound_; ++n) e1.set(n, BigRat(BigInt(1), factorial(static_cast<unsigned>(n))));
    auto power = TruncSeries<BigRat>::constant(bound_, BigRat(1));
    for (std::size_t m = 0; m <= bound_; ++m) {
      if (m > 0) power = series_mul(power, e1);
      for (std::size_t n = 0; n <= bound_; ++n) {
        BigRat expect = power[n] * BigRat(factorial(static_cast<unsigned>(n))) /
                        BigRat(factorial(static_cast<unsigned>(m)));
        if (BigRat(second_[n][m]) != expect) throw std::logic_error("second-kind Stirling table failed validation");
      }
    }
  }

  std::size_t bound_;
  std::vector<std::vector<BigInt>> first_;
  std::vector<std::vector<BigInt>> second_;
};

}  // namespace fmzv::char0
