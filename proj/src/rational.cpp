#include "gwall/rational.hpp"

#include <cctype>

#include "gwall/errors.hpp"

namespace gwall {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

void require_same_size(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) {
    throw DimensionError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                : trim(s.substr(slash + 1));
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-') {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

QVec parse_rational_list(std::string_view text, char sep) {
  QVec out;
  std::string_view s = trim(text);
  if (s.empty()) return out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(parse_rational(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

std::string to_string(const QVec& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += to_string(v[i]);
  }
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool all_integer(const QVec& v) {
  for (const auto& x : v) {
    if (!is_integer(x)) return false;
  }
  return true;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer isqrt_floor(const Rational& q) {
  if (sgn(q) < 0) throw DomainError("square root of a negative rational");
  // floor(sqrt(q)) == floor(sqrt(floor(q))).
  Integer f = floor(q);
  Integer r;
  mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
  return r;
}

namespace {

std::string render_scaled(const Integer& scaled, int digits) {
  const bool neg = sgn(scaled) < 0;
  std::string mag = Integer(abs(scaled)).get_str(10);
  if (digits > 0) {
    if (mag.size() <= static_cast<std::size_t>(digits)) {
      mag.insert(0, static_cast<std::size_t>(digits) + 1 - mag.size(), '0');
    }
    mag.insert(mag.size() - static_cast<std::size_t>(digits), ".");
  }
  return (neg ? "-" : "") + mag;
}

Integer pow10(int digits) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return p;
}

}  // namespace

std::string format_fixed(const Rational& q, int digits) {
  const Rational scaled = q * Rational(pow10(digits));
  // Round half away from zero.
  Integer r = floor(abs(scaled) + Rational(1, 2));
  if (sgn(scaled) < 0) r = -r;
  return render_scaled(r, digits);
}

std::string format_sqrt_fixed(const Rational& q, int digits) {
  const Integer p = pow10(digits);
  return render_scaled(isqrt_floor(q * Rational(p * p)), digits);
}

double to_double(const Rational& q) { return q.get_d(); }

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return false;
  }
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

QVec operator+(const QVec& a, const QVec& b) {
  require_same_size(a, b);
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVec operator-(const QVec& a, const QVec& b) {
  require_same_size(a, b);
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVec operator-(const QVec& a) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

QVec operator*(const Rational& s, const QVec& a) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

}  // namespace gwall
