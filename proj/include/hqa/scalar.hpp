#ifndef HQA_SCALAR_HPP
#define HQA_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace hqa {

/// Raised on division by zero, mixed-field arithmetic and bad field specs.
class FieldError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Scalar;

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
class Field {
public:
  /// Throws FieldError unless `characteristic` is 0 or a prime below 2^31.
  explicit Field(std::uint32_t characteristic = 0);

  static Field rationals() { return Field(0); }

  std::uint32_t characteristic() const { return p_; }
  bool is_prime_field() const { return p_ != 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  Scalar from_integer(const mpz_class& value) const;
  /// num/den reduced into the field; throws FieldError when den vanishes.
  Scalar fraction(const mpz_class& num, const mpz_class& den) const;
  /// Parses `k`, `-k` or `k/d`.
  Scalar parse(const std::string& text) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Exact field element. F_p values are canonical residues in [0, p); rationals
/// are fully reduced with a positive denominator.
class Scalar {
public:
  /// Rational zero. Prefer Field::zero() when the field is known.
  Scalar() : p_(0), value_(mpq_class(0)) {}

  Field field() const { return Field(p_); }
  std::uint32_t characteristic() const { return p_; }

  bool is_zero() const;
  bool is_one() const;
  /// True for values whose canonical rendering starts with '-'.
  bool is_negative() const;

  Scalar operator-() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Residue for F_p values; throws for rationals.
  std::uint32_t residue() const;
  /// Rational value; throws for F_p values.
  const mpq_class& rational() const;

  /// `k/d` for rationals, bare residue for F_p.
  std::string to_string() const;

private:
  friend class Field;
  Scalar(std::uint32_t p, std::uint32_t residue) : p_(p), value_(residue) {}
  Scalar(mpq_class q) : p_(0), value_(std::move(q)) {}

  void require_same_field(const Scalar& o) const;

  std::uint32_t p_;
  std::variant<std::uint32_t, mpq_class> value_;
};

/// x(x+1)...(x+k-1); the empty product is 1.
mpz_class rising_factorial(const mpz_class& x, unsigned k);
Scalar rising_factorial(const Scalar& x, unsigned k);

/// Binomial coefficient over the integers (0 when k > n or n < 0).
mpz_class binomial(long n, long k);

mpz_class factorial(unsigned n);

/// Separator and coefficient written before a term: "", " + ", " - ", "2*".
std::string coefficient_prefix(const Scalar& c, bool first);

} // namespace hqa

#endif
