#include "plesken/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace plesken {

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  *this *= o.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

std::string Scalar::str() const {
  if (is_real()) return re_.get_str();
  std::string im = im_.get_str() + "*I";
  if (sgn(re_) == 0) return im;
  if (sgn(im_) > 0) return re_.get_str() + "+" + im;
  return re_.get_str() + im;
}

namespace {

Rational parse_rational(std::string_view text, std::string_view whole) {
  auto fail = [&] {
    throw std::invalid_argument("malformed scalar: '" + std::string(whole) + "'");
  };
  if (text.empty()) fail();
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') pos = 1;
  std::size_t slash = std::string_view::npos;
  bool digit_seen = false;
  for (std::size_t k = pos; k < text.size(); ++k) {
    char c = text[k];
    if (c == '/') {
      if (slash != std::string_view::npos || !digit_seen) fail();
      slash = k;
      digit_seen = false;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digit_seen = true;
    } else {
      fail();
    }
  }
  if (!digit_seen) fail();
  std::string buf(text[0] == '+' ? text.substr(1) : text);
  Rational value;
  if (value.set_str(buf, 10) != 0) fail();
  if (slash != std::string_view::npos && sgn(value.get_den()) == 0) fail();
  value.canonicalize();
  return value;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::string_view s = compact;
  if (s.empty()) throw std::invalid_argument("malformed scalar: empty");

  if (s.back() != 'I' && s.back() != 'i') return Scalar(parse_rational(s, text));

  s.remove_suffix(1);
  if (!s.empty() && s.back() == '*') s.remove_suffix(1);
  // Split real and imaginary parts at the last sign that is not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view{} : s.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? s : s.substr(split);

  Rational im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_rational(im_part, text);
  }
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part, text);
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace plesken
