#include "desargues/rational.hpp"

#include <cctype>
#include <functional>

#include "desargues/error.hpp"

namespace desargues {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s)) {
    throw Error(ErrorKind::ParseError,
                "malformed rational '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rat::Rat(long long v) : q_(mpz_class(std::to_string(v), 10)) {}

Rat::Rat(long long num, long long den)
    : Rat(mpz_class(std::to_string(num), 10),
          mpz_class(std::to_string(den), 10)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text, text));
  const mpz_class num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!is_digits(den_text)) {
    throw Error(ErrorKind::ParseError,
                "malformed denominator in '" + std::string(text) + "'");
  }
  const mpz_class den(std::string(den_text), 10);
  if (den == 0) {
    throw Error(ErrorKind::ParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Rat(num, den);
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rat(mpq_class(1) / q_);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::optional<Rat> Rat::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  const mpz_class n = q_.get_num();
  const mpz_class d = q_.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) ||
      !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rat(rn, rd);
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::size_t Rat::hash() const {
  // Canonical form makes the decimal text a valid hash key.
  return std::hash<std::string>{}(str());
}

}  // namespace desargues
