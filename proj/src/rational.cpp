#include "ufpsched/rational.hpp"

namespace ufpsched {

Rat ratFromString(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

std::string ratToString(const Rat& r) { return r.get_str(); }

double ratToDouble(const Rat& r) { return r.get_d(); }

Rat ratPow(const Rat& base, long exp) {
  if (base == 0) throw std::domain_error("ratPow: zero base");
  if (exp == 0) return Rat(1);
  bool neg = exp < 0;
  unsigned long e = neg ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rat r(neg ? den : num, neg ? num : den);
  r.canonicalize();
  return r;
}

long floorLog(const Rat& base, const Rat& x) {
  if (base <= 1 || x <= 0) throw std::domain_error("floorLog: need base > 1, x > 0");
  long k = 0;
  Rat p(1);
  if (x >= 1) {
    while (p * base <= x) {
      p *= base;
      ++k;
    }
  } else {
    while (p > x) {
      p /= base;
      --k;
    }
  }
  return k;
}

long ceilLog(const Rat& base, const Rat& x) {
  long k = floorLog(base, x);
  return ratPow(base, k) == x ? k : k + 1;
}

}  // namespace ufpsched
