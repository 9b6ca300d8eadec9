#include "kcut/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace kcut {

Rat::Rat(long num, long den) : Rat(Int(num), Int(den)) {}

Rat::Rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw std::runtime_error("rational: division by zero");
  q_ = mpq_class(num);
  q_ /= mpq_class(den);  // mpq division canonicalizes and fixes the sign
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::runtime_error("rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Int Rat::floor() const {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Int Rat::ceil() const {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rat Rat::frac() const { return *this - Rat(floor()); }

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view token) {
  std::string_view rest = token;
  bool negative = false;
  if (!rest.empty() && rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  }
  std::string_view num = rest;
  std::string_view den;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
    if (!all_digits(den))
      throw std::runtime_error("bad rational token '" + std::string(token) + "'");
  }
  if (!all_digits(num))
    throw std::runtime_error("bad rational token '" + std::string(token) + "'");
  Int n(std::string(num), 10);
  if (negative) n = -n;
  Int d = den.empty() ? Int(1) : Int(std::string(den), 10);
  if (sgn(d) == 0)
    throw std::runtime_error("bad rational token '" + std::string(token) +
                             "': zero denominator");
  return Rat(n, d);
}

std::string to_string(const Rat& r) { return r.str(); }

std::string to_string(const Int& v) { return v.get_str(); }

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace kcut
