#include "riesz/scalar.hpp"

#include <cstdlib>

#include "riesz/errors.hpp"

namespace riesz {

Rational rat(long num, long den) {
  if (den == 0) throw ValidationError("zero denominator");
  Rational x(num, den);
  x.canonicalize();
  return x;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  const std::string s(text);
  // mpq_class(string) accepts whitespace and other bases; validate the
  // shape first so "1.5" or "0x2" cannot sneak through.
  const auto ok_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!ok_int(s)) throw ParseError("bad rational literal '" + s + "'");
  } else {
    const std::string_view num(s.data(), slash);
    const std::string_view den(s.data() + slash + 1, s.size() - slash - 1);
    if (!ok_int(num) || !ok_int(den) || den.front() == '+' || den.front() == '-')
      throw ParseError("bad rational literal '" + s + "'");
  }
  Rational x(s);
  if (x.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  x.canonicalize();
  return x;
}

std::string to_string(const Rational& x) { return x.get_str(); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

double to_double(const Rational& x) { return x.get_d(); }

Rational pow_int(const Rational& x, unsigned long k) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), k);
  // Powers of a canonical fraction are canonical.
  return r;
}

std::optional<Rational> exact_root(const Rational& x, unsigned long k) {
  if (k == 0) throw ValidationError("zeroth root");
  if (sgn(x) < 0) return std::nullopt;
  Rational r;
  const bool num_ok =
      mpz_root(r.get_num_mpz_t(), x.get_num_mpz_t(), k) != 0;
  const bool den_ok =
      mpz_root(r.get_den_mpz_t(), x.get_den_mpz_t(), k) != 0;
  if (!num_ok || !den_ok) return std::nullopt;
  return r;
}

Rational dyadic_floor(const Rational& x, unsigned j) {
  mpz_class num = x.get_num();
  num <<= j;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
  Rational r(q);
  r /= pow_int(Rational(2), j);
  return r;
}

}  // namespace riesz
