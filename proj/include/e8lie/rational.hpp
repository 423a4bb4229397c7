#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace e8lie {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(Rat const &q) { return boost::multiprecision::numerator(q); }
inline Int denominator(Rat const &q) { return boost::multiprecision::denominator(q); }

/// strips all factors of p from n, returning the exponent
inline int strip_factor(Int &n, Int const &p)
{
	int k = 0;
	if (n == 0)
		return 0;
	while (n % p == 0) {
		n /= p;
		++k;
	}
	return k;
}

} // namespace e8lie
