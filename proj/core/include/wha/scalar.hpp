#ifndef WHA_SCALAR_HPP
#define WHA_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace wha {

/// Exact Gaussian rational re + im*i with arbitrary-precision parts.
///
/// Both parts are kept canonical (lowest terms, positive denominator), so
/// equality is component-wise. Text form is `p/q` or `p/q+r/s*i`, with the
/// denominators dropped when they are 1 and the imaginary part dropped when
/// it is 0. A negative imaginary part is written `p/q-r/s*i`.
class Scalar {
public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  Scalar(mpq_class re, mpq_class im);

  static Scalar parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order used only for deterministic sorting (lexicographic on parts).
  friend bool lex_less(const Scalar& a, const Scalar& b);

  std::string str() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace wha

#endif  // WHA_SCALAR_HPP
