#ifndef LY_RATIONAL_HPP
#define LY_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace ly {

/// Exact rational scalar. mpq_class keeps values canonical (reduced,
/// positive denominator), which is exactly the invariant we need.
using Rat = mpq_class;
using Vec = std::vector<Rat>;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline bool is_zero(const Vec& v) {
  for (const auto& q : v)
    if (sgn(q) != 0) return false;
  return true;
}

inline Vec unit_vec(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string render(const Rat& q) {
  Rat r = q;
  r.canonicalize();
  return r.get_str();
}

/// Accepts "p", "p/q", reducible forms, leading sign on the numerator.
inline Rat parse_rat(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace ly

#endif
