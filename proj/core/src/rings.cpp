#include "trueelem/rings.hpp"

#include <cctype>

namespace trueelem {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RingMismatch: return "ring mismatch";
    case ErrorKind::NotInIdeal: return "not in ideal";
    case ErrorKind::IndexOutOfRange: return "index out of range";
    case ErrorKind::DiagonalIndex: return "diagonal index";
    case ErrorKind::DimensionTooSmall: return "dimension too small";
    case ErrorKind::NotSpecialLinear: return "determinant is not 1";
    case ErrorKind::NotUnit: return "not a unit";
    case ErrorKind::NotInClass: return "not in congruence class";
    case ErrorKind::NonzeroTrace: return "nonzero trace";
    case ErrorKind::EnumerationLimit: return "enumeration limit exceeded";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::InvalidArgument: return "invalid argument";
  }
  return "unknown";
}

namespace {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw Error(ErrorKind::Parse, "empty integer");
  for (std::size_t k = start; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw Error(ErrorKind::Parse, "malformed integer '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

RingSpec RingSpec::modular(const Integer& modulus) {
  if (modulus < 2)
    throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2, got " + modulus.get_str());
  return RingSpec(modulus);
}

RingSpec RingSpec::parse(std::string_view text) {
  text = trim(text);
  if (text == "Z") return integers();
  if (text.size() > 2 && text.substr(0, 2) == "Z/") return modular(parse_integer(text.substr(2)));
  throw Error(ErrorKind::Parse, "ring must be \"Z\" or \"Z/<m>\", got \"" + std::string(text) + "\"");
}

Integer RingSpec::canonical(const Integer& x) const {
  if (is_integers()) return x;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus_.get_mpz_t());
  return r;
}

std::string RingSpec::to_string() const {
  return is_integers() ? std::string("Z") : "Z/" + modulus_.get_str();
}

void require_same_ring(const RingSpec& a, const RingSpec& b) {
  if (!(a == b))
    throw Error(ErrorKind::RingMismatch, "ring mismatch: " + a.to_string() + " vs " + b.to_string());
}

RingValue operator+(const RingValue& a, const RingValue& b) {
  require_same_ring(a.spec_, b.spec_);
  return RingValue(a.spec_, Integer(a.value_ + b.value_));
}

RingValue operator-(const RingValue& a, const RingValue& b) {
  require_same_ring(a.spec_, b.spec_);
  return RingValue(a.spec_, Integer(a.value_ - b.value_));
}

RingValue operator*(const RingValue& a, const RingValue& b) {
  require_same_ring(a.spec_, b.spec_);
  return RingValue(a.spec_, Integer(a.value_ * b.value_));
}

bool RingValue::is_unit() const {
  if (spec_.is_integers()) return value_ == 1 || value_ == -1;
  Integer g;
  mpz_gcd(g.get_mpz_t(), value_.get_mpz_t(), spec_.modulus().get_mpz_t());
  return g == 1;
}

RingValue RingValue::unit_inverse() const {
  if (!is_unit()) throw Error(ErrorKind::NotUnit, to_string() + " is not a unit in " + spec_.to_string());
  if (spec_.is_integers()) return *this;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), value_.get_mpz_t(), spec_.modulus().get_mpz_t());
  return RingValue(spec_, inv);
}

Ideal::Ideal(RingSpec spec, const Integer& generator)
    : spec_(spec), generator_(spec, spec.is_integers() ? Integer(abs(generator)) : generator) {
  if (spec_.is_integers()) {
    lift_modulus_ = generator_.value();
  } else {
    mpz_gcd(lift_modulus_.get_mpz_t(), generator_.value().get_mpz_t(), spec_.modulus().get_mpz_t());
  }
}

Ideal Ideal::parse(const RingSpec& spec, std::string_view text) {
  text = trim(text);
  if (text.size() < 3 || text.front() != '(' || text.back() != ')')
    throw Error(ErrorKind::Parse, "ideal must look like \"(<N>)\", got \"" + std::string(text) + "\"");
  return Ideal(spec, parse_integer(trim(text.substr(1, text.size() - 2))));
}

Integer Ideal::cardinality() const {
  if (spec_.is_integers())
    throw Error(ErrorKind::InvalidArgument, "ideal cardinality requires a finite ring");
  return Integer(spec_.modulus() / lift_modulus_);
}

Integer Ideal::residue(const RingValue& x) const {
  require_same_ring(x.spec(), spec_);
  if (lift_modulus_ == 0) return x.value();
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.value().get_mpz_t(), lift_modulus_.get_mpz_t());
  return r;
}

Membership ideal_contains(const RingValue& x, const Ideal& ideal) {
  require_same_ring(x.spec(), ideal.spec());
  const RingSpec& spec = ideal.spec();
  if (!in_ideal(x, ideal)) return {};
  if (x.is_zero()) return {true, RingValue::zero(spec)};
  const Integer& n = ideal.generator().value();
  if (spec.is_integers()) return {true, RingValue(spec, Integer(x.value() / n))};

  // N q = x (mod m): with g = gcd(N, m), q = (x/g) (N/g)^{-1} mod (m/g).
  const Integer& g = ideal.lift_modulus();
  Integer reduced_modulus = spec.modulus() / g;
  if (reduced_modulus == 1) return {true, RingValue::zero(spec)};
  Integer inv;
  Integer reduced_n = n / g;
  mpz_invert(inv.get_mpz_t(), reduced_n.get_mpz_t(), reduced_modulus.get_mpz_t());
  Integer q = (x.value() / g) * inv;
  mpz_fdiv_r(q.get_mpz_t(), q.get_mpz_t(), reduced_modulus.get_mpz_t());
  return {true, RingValue(spec, q)};
}

RingValue ideal_divide(const RingValue& z, const Ideal& ideal) {
  auto m = ideal_contains(z, ideal);
  if (!m.member)
    throw Error(ErrorKind::NotInIdeal,
                "not in ideal: " + z.to_string() + " is not in " + ideal.to_string() + " over " +
                    ideal.spec().to_string());
  return *m.witness;
}

bool congruent_mod_ideal(const RingValue& x, const RingValue& y, const Ideal& ideal) {
  return in_ideal(x - y, ideal);
}

Integer euler_phi(const Integer& d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "totient needs a positive argument");
  Integer n = d;
  Integer result = d;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace trueelem
