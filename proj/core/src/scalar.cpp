#include "wha/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace wha {

namespace {

// Parses an optionally signed `p` or `p/q` with decimal digits only.
mpq_class parse_rational(std::string_view text, std::string_view whole) {
  auto fail = [&] {
    throw std::invalid_argument("malformed scalar '" + std::string(whole) + "'");
  };
  if (text.empty()) fail();
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') pos = 1;
  bool seen_digit = false;
  bool seen_slash = false;
  bool digit_after_slash = false;
  for (std::size_t k = pos; k < text.size(); ++k) {
    char c = text[k];
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
    } else {
      fail();
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) fail();

  std::string body(text.substr(text[0] == '+' ? 1 : 0));
  mpq_class q;
  if (q.set_str(body, 10) != 0) fail();
  if (sgn(q.get_den()) == 0) {
    throw std::invalid_argument("zero denominator in scalar '" + std::string(whole) + "'");
  }
  q.canonicalize();
  return q;
}

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())) != 0) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())) != 0) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty scalar");

  if (text.size() >= 2 && text.substr(text.size() - 2) == "*i") {
    // Split at the sign that starts the imaginary part (never position 0).
    std::string_view body = text.substr(0, text.size() - 2);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if (body[k] == '+' || body[k] == '-') {
        split = k;
        break;
      }
    }
    if (split == std::string_view::npos) {
      throw std::invalid_argument("malformed scalar '" + std::string(whole) + "'");
    }
    Scalar s;
    s.re_ = parse_rational(body.substr(0, split), whole);
    s.im_ = parse_rational(body.substr(split), whole);
    return s;
  }
  Scalar s;
  s.re_ = parse_rational(text, whole);
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  if (sgn(im_) == 0) return Scalar(1 / re_, mpq_class(0));
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  bool a_real = sgn(a.im_) == 0;
  bool b_real = sgn(b.im_) == 0;
  if (a_real && b_real) {
    r.re_ = a.re_ * b.re_;
  } else if (a_real) {
    r.re_ = a.re_ * b.re_;
    r.im_ = a.re_ * b.im_;
  } else if (b_real) {
    r.re_ = a.re_ * b.re_;
    r.im_ = a.im_ * b.re_;
  } else {
    r.re_ = a.re_ * b.re_ - a.im_ * b.im_;
    r.im_ = a.re_ * b.im_ + a.im_ * b.re_;
  }
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this = *this * o.inverse();
}

bool lex_less(const Scalar& a, const Scalar& b) {
  if (a.re_ != b.re_) return a.re_ < b.re_;
  return a.im_ < b.im_;
}

std::string Scalar::str() const {
  std::string out = rational_str(re_);
  if (sgn(im_) != 0) {
    if (sgn(im_) > 0) out += '+';
    out += rational_str(im_);
    out += "*i";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace wha
