#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ufpsched {

// Exact rational scalar used for all times, costs and LP arithmetic.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat ratFromString(const std::string& s);
std::string ratToString(const Rat& r);
double ratToDouble(const Rat& r);

/// base^exp for integer exp (exp may be negative); base must be nonzero.
Rat ratPow(const Rat& base, long exp);

/// Largest k with base^k <= x. Requires base > 1, x > 0.
long floorLog(const Rat& base, const Rat& x);

/// Smallest k with base^k >= x. Requires base > 1, x > 0.
long ceilLog(const Rat& base, const Rat& x);

inline bool isInteger(const Rat& r) { return r.get_den() == 1; }

inline long ceilDiv(const Rat& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("ceilDiv overflow");
  return q.get_si();
}

inline long floorDiv(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("floorDiv overflow");
  return q.get_si();
}

}  // namespace ufpsched
