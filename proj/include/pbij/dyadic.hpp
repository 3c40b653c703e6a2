#ifndef PBIJ_DYADIC_HPP
#define PBIJ_DYADIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>

namespace pbij {

/// Exact nonnegative dyadic rational num / 2^exp. Canonical form keeps
/// the numerator odd (or zero with exponent zero), so equality is
/// structural. All metric values in the library are of this type; no
/// floating point is involved anywhere.
class Dyadic {
 public:
  using Int = boost::multiprecision::cpp_int;

  Dyadic() = default;  // zero
  Dyadic(Int numerator, unsigned exponent)
      : num_(std::move(numerator)), exp_(exponent) {
    if (num_ < 0) throw std::invalid_argument("Dyadic: negative numerator");
    normalize();
  }

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1, 0); }

  /// 2^{-k}
  static Dyadic pow2_neg(unsigned k) { return Dyadic(1, k); }

  /// The summand weight at coordinate n: 2^{-(n+1)}.
  static Dyadic weight(unsigned n) { return Dyadic(1, n + 1); }

  const Int& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  Dyadic& operator+=(const Dyadic& o) {
    unsigned e = std::max(exp_, o.exp_);
    num_ = (num_ << (e - exp_)) + (o.num_ << (e - o.exp_));
    exp_ = e;
    normalize();
    return *this;
  }
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }

  Dyadic doubled() const {
    if (exp_ > 0) return Dyadic(num_, exp_ - 1);
    return Dyadic(num_ * 2, 0);
  }
  Dyadic halved() const { return is_zero() ? *this : Dyadic(num_, exp_ + 1); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp_, b.exp_);
    Int lhs = a.num_ << (e - a.exp_);
    Int rhs = b.num_ << (e - b.exp_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Prints as `p/2^q` in lowest terms, e.g. "1/2^1", "0/2^0".
  std::string str() const {
    return num_.str() + "/2^" + std::to_string(exp_);
  }

 private:
  void normalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && (num_ & 1) == 0) {
      num_ >>= 1;
      --exp_;
    }
  }

  Int num_ = 0;
  unsigned exp_ = 0;
};

}  // namespace pbij

#endif
