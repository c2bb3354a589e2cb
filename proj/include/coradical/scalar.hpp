#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace coradical {

/// Base of every error the engine raises.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input does not meet an operation's precondition (non-split field, C1/C2
/// failure, incompatible objects).
struct PreconditionError : Error {
  using Error::Error;
};

/// A file or scalar could not be parsed.
struct ParseError : Error {
  using Error::Error;
};

/// An asserted identity failed. Always a bug or a counterexample.
struct VerificationError : Error {
  using Error::Error;
};

enum class FieldKind { rationals, prime_field };

struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t characteristic = 0;

  static FieldSpec parse(const std::string& s);
  std::string str() const {
    return kind == FieldKind::rationals ? "q" : "fp:" + std::to_string(characteristic);
  }
  bool operator==(const FieldSpec&) const = default;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "q" || s == "Q") return {};
  if (s.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(s.substr(3));
    } catch (const std::exception&) {
      throw ParseError("bad field spec '" + s + "'");
    }
    if (!is_prime(p) || p >= (1ull << 31))
      throw ParseError("field characteristic must be a prime below 2^31, got '" + s + "'");
    return {FieldKind::prime_field, static_cast<std::uint32_t>(p)};
  }
  throw ParseError("bad field spec '" + s + "' (expected q or fp:<p>)");
}

/// Arbitrary-precision rational number, always in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static std::uint32_t characteristic() { return 0; }
  static FieldSpec field() { return {}; }

  bool is_zero() const { return sgn(v_) == 0; }
  Rational inv() const {
    if (is_zero()) throw Error("division by zero");
    return Rational(mpq_class(1) / v_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }
  static Rational parse(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(q);
  }

  const mpq_class& value() const { return v_; }
  double to_double() const { return v_.get_d(); }

 private:
  mpq_class v_;
};

/// Residue modulo a prime p < 2^31. The modulus is a per-thread context set
/// with ModP::Scope; every ModP value is interpreted against it.
class ModP {
 public:
  class Scope {
   public:
    explicit Scope(std::uint32_t p) : prev_(modulus_) {
      if (!is_prime(p) || p >= (1u << 31)) throw PreconditionError("ModP modulus must be a prime below 2^31");
      modulus_ = p;
    }
    ~Scope() { modulus_ = prev_; }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    std::uint32_t prev_;
  };

  ModP() = default;
  ModP(long long v) {  // NOLINT(google-explicit-constructor)
    const auto p = static_cast<long long>(modulus());
    long long r = v % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  static std::uint32_t modulus() {
    if (modulus_ == 0) throw Error("ModP used without an active ModP::Scope");
    return modulus_;
  }
  static std::uint32_t characteristic() { return modulus(); }
  static FieldSpec field() { return {FieldKind::prime_field, modulus()}; }

  std::uint32_t residue() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  ModP pow(std::uint64_t e) const {
    std::uint64_t base = v_, acc = 1;
    const std::uint64_t p = modulus();
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return raw(static_cast<std::uint32_t>(acc));
  }
  ModP inv() const {
    if (is_zero()) throw Error("division by zero");
    return pow(modulus() - 2);
  }

  friend ModP operator+(ModP a, ModP b) {
    std::uint64_t s = std::uint64_t(a.v_) + b.v_;
    if (s >= modulus()) s -= modulus();
    return raw(static_cast<std::uint32_t>(s));
  }
  friend ModP operator-(ModP a, ModP b) { return a + (-b); }
  friend ModP operator*(ModP a, ModP b) {
    return raw(static_cast<std::uint32_t>(std::uint64_t(a.v_) * b.v_ % modulus()));
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inv(); }
  ModP operator-() const { return raw(v_ == 0 ? 0 : modulus() - v_); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }
  friend bool operator!=(ModP a, ModP b) { return a.v_ != b.v_; }

  /// Plain residue; "r mod p" is also accepted by parse.
  std::string str() const { return std::to_string(v_); }
  static ModP parse(const std::string& s) {
    std::string body = s;
    if (auto pos = s.find(" mod "); pos != std::string::npos) {
      body = s.substr(0, pos);
      if (std::to_string(modulus()) != s.substr(pos + 5))
        throw ParseError("residue '" + s + "' does not match field modulus");
    }
    if (auto slash = body.find('/'); slash != std::string::npos) {
      const ModP den = parse(body.substr(slash + 1));
      if (den.is_zero()) throw ParseError("zero denominator in '" + s + "'");
      return parse(body.substr(0, slash)) / den;
    }
    try {
      std::size_t used = 0;
      long long v = std::stoll(body, &used);
      if (used != body.size()) throw ParseError("bad residue '" + s + "'");
      return ModP(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad residue '" + s + "'");
    }
  }

 private:
  static ModP raw(std::uint32_t v) {
    ModP r;
    r.v_ = v;
    return r;
  }
  std::uint32_t v_ = 0;
  static inline thread_local std::uint32_t modulus_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
inline std::ostream& operator<<(std::ostream& os, const ModP& r) { return os << r.str(); }

}  // namespace coradical
