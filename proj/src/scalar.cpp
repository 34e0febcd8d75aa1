#include "hqa/scalar.hpp"

#include <cctype>

namespace hqa {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

Field::Field(std::uint32_t characteristic) : p_(characteristic) {
  if (p_ != 0 && (!is_prime(p_) || p_ >= (1u << 31)))
    throw FieldError("characteristic " + std::to_string(p_) + " is not prime");
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long value) const {
  if (p_ == 0)
    return Scalar(mpq_class(mpz_class(std::to_string(value))));
  long long r = value % static_cast<long long>(p_);
  if (r < 0)
    r += p_;
  return Scalar(p_, static_cast<std::uint32_t>(r));
}

Scalar Field::from_integer(const mpz_class& value) const {
  if (p_ == 0)
    return Scalar(mpq_class(value));
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p_);
  return Scalar(p_, static_cast<std::uint32_t>(r.get_ui()));
}

Scalar Field::fraction(const mpz_class& num, const mpz_class& den) const {
  Scalar d = from_integer(den);
  if (d.is_zero())
    throw FieldError("division by zero: denominator " + den.get_str() +
                     " vanishes in characteristic " + std::to_string(p_));
  return from_integer(num) / d;
}

Scalar Field::parse(const std::string& text) const {
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0)
      throw FieldError("malformed scalar '" + text + "'");
    return z;
  };
  if (slash == std::string::npos)
    return from_integer(parse_int(text));
  return fraction(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

void Scalar::require_same_field(const Scalar& o) const {
  if (p_ != o.p_)
    throw FieldError("mixed fields: characteristic " + std::to_string(p_) + " vs " +
                     std::to_string(o.p_));
}

bool Scalar::is_zero() const {
  if (p_ != 0)
    return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (p_ != 0)
    return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

bool Scalar::is_negative() const {
  return p_ == 0 && sgn(std::get<mpq_class>(value_)) < 0;
}

Scalar Scalar::operator-() const {
  if (p_ != 0) {
    auto r = std::get<std::uint32_t>(value_);
    return Scalar(p_, r == 0 ? 0 : p_ - r);
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

namespace {
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0)
    t += p;
  return static_cast<std::uint32_t>(t);
}
} // namespace

Scalar Scalar::inv() const {
  if (is_zero())
    throw FieldError("inverse of zero");
  if (p_ != 0)
    return Scalar(p_, inverse_mod(std::get<std::uint32_t>(value_), p_));
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (p_ != 0) {
    std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(value_)) + std::get<std::uint32_t>(o.value_);
    value_ = static_cast<std::uint32_t>(s % p_);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (p_ != 0) {
    std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(value_)) + p_ - std::get<std::uint32_t>(o.value_);
    value_ = static_cast<std::uint32_t>(s % p_);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (p_ != 0) {
    std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(value_)) * std::get<std::uint32_t>(o.value_);
    value_ = static_cast<std::uint32_t>(s % p_);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  if (o.is_zero())
    throw FieldError("division by zero");
  return *this *= o.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_)
    return false;
  return a.value_ == b.value_;
}

std::uint32_t Scalar::residue() const {
  if (p_ == 0)
    throw FieldError("residue() on a rational scalar");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (p_ != 0)
    throw FieldError("rational() on a prime-field scalar");
  return std::get<mpq_class>(value_);
}

std::string Scalar::to_string() const {
  if (p_ != 0)
    return std::to_string(std::get<std::uint32_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

mpz_class rising_factorial(const mpz_class& x, unsigned k) {
  mpz_class result = 1;
  for (unsigned i = 0; i < k; ++i)
    result *= x + i;
  return result;
}

Scalar rising_factorial(const Scalar& x, unsigned k) {
  Field f = x.field();
  Scalar result = f.one();
  for (unsigned i = 0; i < k; ++i)
    result *= x + f.from_int(i);
  return result;
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::string coefficient_prefix(const Scalar& c, bool first) {
  std::string out;
  Scalar mag = c;
  if (c.is_negative()) {
    out = first ? "-" : " - ";
    mag = -c;
  } else if (!first) {
    out = " + ";
  }
  if (!mag.is_one())
    out += mag.to_string() + "*";
  return out;
}

} // namespace hqa
