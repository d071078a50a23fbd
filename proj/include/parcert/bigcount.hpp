#ifndef PARCERT_BIGCOUNT_HPP
#define PARCERT_BIGCOUNT_HPP

#include <gmpxx.h>

#include <string>

namespace parcert {

// Exact, never-approximated value of a partition statistic. Always >= 0.
using BigCount = mpz_class;

using Rational = mpq_class;

inline std::string to_decimal(const BigCount& v) { return v.get_str(); }
inline std::string to_decimal(const Rational& v) { return v.get_str(); }

} // namespace parcert

#endif
