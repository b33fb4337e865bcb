#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace asymcert {

// Exact arbitrary-precision rational, canonical (gcd 1, positive denominator).
// mpq_class keeps that invariant as long as every entry point canonicalizes,
// so we use it directly and funnel construction from text through here.
using Rat = mpq_class;
using Int = mpz_class;

inline int sgn(const Rat& q) { return sgn(q.get_num()); }

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws
// std::invalid_argument on anything else, including a zero denominator.
inline Rat rat_from_string(const std::string& text) {
  Rat q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational: '" + text + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace asymcert
