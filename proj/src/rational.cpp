#include "ots/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace ots {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_double(double x) {
  Rational r;
  mpq_set_d(r.v_.get_mpq_t(), x);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty numeric string");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s.erase(s.begin());
  }
  if (s.empty()) throw std::invalid_argument("sign without digits: '" + text + "'");

  Rational out;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational: '" + text + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    out.v_ = mpq_class(n) / mpq_class(d);
  } else {
    std::string mantissa = s;
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
      mantissa = s.substr(0, epos);
      std::string es = s.substr(epos + 1);
      if (es.empty()) throw std::invalid_argument("malformed exponent: '" + text + "'");
      bool eneg = false;
      if (es[0] == '+' || es[0] == '-') {
        eneg = (es[0] == '-');
        es.erase(es.begin());
      }
      if (!all_digits(es) || es.size() > 6)
        throw std::invalid_argument("malformed exponent: '" + text + "'");
      exp10 = std::stol(es) * (eneg ? -1 : 1);
    }
    auto dot = mantissa.find('.');
    std::string digits = mantissa;
    if (dot != std::string::npos) {
      digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
      exp10 -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits.empty()) throw std::invalid_argument("no digits: '" + text + "'");
    if (!all_digits(digits)) throw std::invalid_argument("malformed number: '" + text + "'");
    mpz_class n(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    out.v_ = exp10 >= 0 ? mpq_class(n * scale) : mpq_class(n) / mpq_class(scale);
  }
  out.v_.canonicalize();
  if (negative) out.v_ = -out.v_;
  return out;
}

std::string Rational::str() const {
  mpz_class den = v_.get_den();
  if (den == 1) return v_.get_num().get_str();
  // Exact decimal exists iff den = 2^a * 5^b.
  mpz_class d = den;
  unsigned long a = 0, b = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
    d /= 2;
    ++a;
  }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
    d /= 5;
    ++b;
  }
  if (d != 1) return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  unsigned long k = a > b ? a : b;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
  mpz_class scaled = v_.get_num() * (scale / den);  // exact by construction
  bool neg = scaled < 0;
  std::string digits = (neg ? mpz_class(-scaled) : scaled).get_str();
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  digits.insert(digits.size() - k, ".");
  return (neg ? "-" : "") + digits;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational two_pi_upper() { return Rational(710, 113); }

}  // namespace ots
