#include "hopftrace/scalar.hpp"

namespace hopftrace {

namespace {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::gf(std::uint32_t p) {
  if (!is_prime_u32(p)) throw FieldError("GF(p) modulus must be prime, got " + std::to_string(p));
  return Field{p};
}

std::string Field::name() const {
  return is_rational() ? "rational" : "GF(" + std::to_string(prime) + ")";
}

Scalar Scalar::zero(Field f) {
  return f.is_rational() ? Scalar(f, mpq_class(0)) : Scalar(f, std::uint64_t{0});
}

Scalar Scalar::one(Field f) {
  return f.is_rational() ? Scalar(f, mpq_class(1)) : Scalar(f, std::uint64_t{1 % f.prime});
}

Scalar Scalar::of_int(long n, Field f) {
  if (f.is_rational()) return Scalar(f, mpq_class(n));
  long long m = n % static_cast<long long>(f.prime);
  if (m < 0) m += f.prime;
  return Scalar(f, static_cast<std::uint64_t>(m));
}

Scalar Scalar::of_fraction(long num, long den) {
  if (den == 0) throw FieldError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(Field::rationals(), q);
}

Scalar Scalar::of_mpq(mpq_class q) {
  q.canonicalize();
  return Scalar(Field::rationals(), std::move(q));
}

Scalar Scalar::parse(const std::string& text, Field f) {
  if (text.empty()) throw FieldError("empty scalar literal");
  if (f.is_rational()) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw FieldError("bad rational literal '" + text + "'");
    q.canonicalize();
    return Scalar(f, q);
  }
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw FieldError("bad residue literal '" + text + "'");
  }
  if (pos != text.size()) throw FieldError("bad residue literal '" + text + "'");
  long long m = v % static_cast<long long>(f.prime);
  if (m < 0) m += f.prime;
  return Scalar(f, static_cast<std::uint64_t>(m));
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(std::get<mpq_class>(v_)) == 0 : std::get<std::uint64_t>(v_) == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? std::get<mpq_class>(v_) == 1
                              : std::get<std::uint64_t>(v_) == 1 % field_.prime;
}

void Scalar::require_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldError("mixed fields: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  if (field_.is_rational())
    return Scalar(field_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
  return Scalar(field_, (std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(o.v_)) % field_.prime);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same(o);
  if (field_.is_rational())
    return Scalar(field_, mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_)));
  std::uint64_t a = std::get<std::uint64_t>(v_), b = std::get<std::uint64_t>(o.v_);
  return Scalar(field_, (a + field_.prime - b) % field_.prime);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  if (field_.is_rational())
    return Scalar(field_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
  return Scalar(field_, std::get<std::uint64_t>(v_) * std::get<std::uint64_t>(o.v_) % field_.prime);
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
  std::uint64_t a = std::get<std::uint64_t>(v_);
  return Scalar(field_, a == 0 ? 0 : field_.prime - a);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero in " + field_.name());
  if (field_.is_rational())
    return Scalar(field_, mpq_class(1 / std::get<mpq_class>(v_)));
  return Scalar(field_, mod_pow(std::get<std::uint64_t>(v_), field_.prime - 2, field_.prime));
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  if (field_.is_rational()) return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
  return std::get<std::uint64_t>(v_) == std::get<std::uint64_t>(o.v_);
}

std::string Scalar::str() const {
  if (field_.is_rational()) return std::get<mpq_class>(v_).get_str();
  return std::to_string(std::get<std::uint64_t>(v_));
}

const mpq_class& Scalar::rat() const {
  if (!field_.is_rational()) throw FieldError("not a rational scalar");
  return std::get<mpq_class>(v_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw FieldError("not a prime-field scalar");
  return std::get<std::uint64_t>(v_);
}

}  // namespace hopftrace
