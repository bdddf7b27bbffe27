// Exact rational scalars. GMP keeps values canonical (gcd 1, positive
// denominator), which is exactly the invariant the rest of the code relies on.
#pragma once

#include <gmpxx.h>
#include <string>

namespace homcat {

using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_one(const Rat& r) { return r == 1; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

} // namespace homcat
