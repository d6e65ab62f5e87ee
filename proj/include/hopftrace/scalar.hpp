#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopftrace {

/// Raised when operands live over different fields or a value fails to parse.
struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ground field descriptor: the rationals (prime == 0) or GF(p) for a prime
/// p < 2^31.
struct Field {
  std::uint32_t prime = 0;

  static Field rationals() { return Field{0}; }
  static Field gf(std::uint32_t p);

  bool is_rational() const { return prime == 0; }
  bool operator==(const Field&) const = default;
  std::string name() const;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; values are held in machine words while they fit and promoted
/// to GMP transparently on overflow (and demoted back, so representation is
/// canonical). GF(p) residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar of_int(long n, Field f);
  static Scalar of_fraction(long num, long den);  // rationals only
  static Scalar of_mpq(const mpq_class& q);

  /// Parses the canonical text form: "a" or "a/b" over the rationals,
  /// a canonical residue over GF(p).
  static Scalar parse(const std::string& text, Field f);

  Field field() const { return Field{prime_}; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // throws FieldError on zero

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text form, bit-stable: lowest-terms "a" / "a/b", or the
  /// residue representative in [0, p).
  std::string str() const;

  mpq_class rat() const;          // rationals only
  std::uint64_t residue() const;  // GF(p) only

 private:
  static Scalar make_rational(std::int64_t n, std::uint64_t d);  // reduced input
  static Scalar promote(const mpq_class& q);                     // canonicalized input

  // kind 0: small rational n_/d_; kind 1: big rational in big_; kind 2: GF(p)
  // residue in n_.
  std::int64_t n_ = 0;
  std::uint64_t d_ = 1;
  std::uint32_t prime_ = 0;
  std::uint8_t kind_ = 0;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace hopftrace
