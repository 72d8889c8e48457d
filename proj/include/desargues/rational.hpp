#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace desargues {

// Exact rational number backed by GMP. Always in lowest terms with a positive
// denominator; no operation ever rounds.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : q_(v) {}                // NOLINT(google-explicit-constructor)
  Rat(long v) : q_(v) {}               // NOLINT(google-explicit-constructor)
  Rat(long long v);                    // NOLINT(google-explicit-constructor)
  Rat(long long num, long long den);
  explicit Rat(const mpz_class& integer) : q_(integer) {}
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class q);

  // Accepts "p" or "p/q" with optional sign; throws Error{ParseError} on
  // malformed input or a zero denominator.
  static Rat parse(std::string_view text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rat abs() const;
  Rat inverse() const;

  // Exact square root when `*this` is the square of a rational.
  std::optional<Rat> exact_sqrt() const;

  double to_double() const { return q_.get_d(); }
  std::string str() const;
  std::size_t hash() const;

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  mpq_class q_;
};

struct RatHash {
  std::size_t operator()(const Rat& r) const { return r.hash(); }
};

}  // namespace desargues
