#include "hodgekit/gaussian_rational.hpp"

#include "hodgekit/errors.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace hodgekit {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return {q, 0};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

namespace {

std::string rational_str(const mpq_class& q) { return q.get_str(); }

// Magnitude of an imaginary part followed by 'i'; unit magnitude prints as bare "i".
std::string imag_str(const mpq_class& magnitude) {
  if (magnitude == 1) return "i";
  return rational_str(magnitude) + "i";
}

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  // Optional rational magnitude followed by optional 'i'. Returns false if nothing was read.
  bool term(mpq_class& value, bool& imaginary) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    bool have_number = pos_ > start;
    std::string digits(s_.substr(start, pos_ - start));
    if (have_number && pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == dstart) throw std::invalid_argument("missing denominator");
      digits += "/" + std::string(s_.substr(dstart, pos_ - dstart));
    }
    imaginary = false;
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      imaginary = true;
      ++pos_;
    }
    if (!have_number && !imaginary) return false;
    if (have_number) {
      value.set_str(digits, 10);
      if (value.get_den() == 0) throw std::domain_error("zero denominator");
      value.canonicalize();
    } else {
      value = 1;
    }
    return true;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string GaussianRational::str() const {
  if (sgn(im_) == 0) return rational_str(re_);
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag_str(abs(im_));
  return rational_str(re_) + (sgn(im_) < 0 ? "-" : "+") + imag_str(abs(im_));
}

GaussianRational GaussianRational::parse(std::string_view text) {
  Scanner sc(text);
  bool paren = sc.eat('(');
  mpq_class re = 0, im = 0;
  bool first = true;
  while (!sc.done() && sc.peek() != ')') {
    int sign = 1;
    if (sc.eat('-')) {
      sign = -1;
    } else if (sc.eat('+')) {
    } else if (!first) {
      throw std::invalid_argument("malformed coefficient '" + std::string(text) + "'");
    }
    mpq_class v;
    bool imaginary = false;
    if (!sc.term(v, imaginary)) throw std::invalid_argument("malformed coefficient '" + std::string(text) + "'");
    (imaginary ? im : re) += sign * v;
    first = false;
  }
  if (paren && !sc.eat(')')) throw std::invalid_argument("unbalanced parenthesis in '" + std::string(text) + "'");
  if (!sc.done() || first) throw std::invalid_argument("malformed coefficient '" + std::string(text) + "'");
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

GaussianRational i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return 1;
    case 1: return GaussianRational::i();
    case 2: return -1;
    default: return -GaussianRational::i();
  }
}

}  // namespace hodgekit
