#pragma once

#include "e8lie/element.hpp"

#include <array>

namespace e8lie {

struct BadPrime : std::invalid_argument
{
	explicit BadPrime(long p)
	    : std::invalid_argument("prime " + std::to_string(p) + " is a bad prime here")
	{
	}
};

/// weight in epsilon-coordinates of R^8
struct WeightVector
{
	std::array<Rat, 8> coords{};

	Rat dot(WeightVector const &o) const
	{
		Rat s = 0;
		for (int i = 0; i < 8; ++i)
			s += coords[i] * o.coords[i];
		return s;
	}
	WeightVector operator+(WeightVector const &o) const
	{
		WeightVector r;
		for (int i = 0; i < 8; ++i)
			r.coords[i] = coords[i] + o.coords[i];
		return r;
	}
	WeightVector operator*(Rat const &a) const
	{
		WeightVector r;
		for (int i = 0; i < 8; ++i)
			r.coords[i] = coords[i] * a;
		return r;
	}
	bool operator==(WeightVector const &o) const { return coords == o.coords; }

	static WeightVector of(std::array<Rat, 8> c) { return {std::move(c)}; }
	static WeightVector scaled(long den, std::array<long, 8> num)
	{
		WeightVector r;
		for (int i = 0; i < 8; ++i)
			r.coords[i] = Rat(num[i], den);
		return r;
	}
};

/// the i-th fundamental weight in epsilon-coordinates (i in 1..8)
inline WeightVector fundamental_weight(int i)
{
	switch (i) {
	case 1: return WeightVector::scaled(1, {0, 0, 0, 0, 0, 0, 0, 2});
	case 2: return WeightVector::scaled(2, {1, 1, 1, 1, 1, 1, 1, 5});
	case 3: return WeightVector::scaled(2, {-1, 1, 1, 1, 1, 1, 1, 7});
	case 4: return WeightVector::scaled(1, {0, 0, 1, 1, 1, 1, 1, 5});
	case 5: return WeightVector::scaled(1, {0, 0, 0, 1, 1, 1, 1, 4});
	case 6: return WeightVector::scaled(1, {0, 0, 0, 0, 1, 1, 1, 3});
	case 7: return WeightVector::scaled(1, {0, 0, 0, 0, 0, 1, 1, 2});
	case 8: return WeightVector::scaled(1, {0, 0, 0, 0, 0, 0, 1, 1});
	default: throw std::out_of_range("fundamental weight index out of 1..8");
	}
}

inline WeightVector rho()
{
	WeightVector r;
	for (int i = 1; i <= 8; ++i)
		r = r + fundamental_weight(i);
	return r;
}

/// shifted highest weights of the two induced-module families, per orbit,
/// as recorded epsilon-tuples (the tuples of record for all comparisons)
inline WeightVector lambda_plus_rho(std::string const &label, bool primed)
{
	if (label == "a5a1")
		return primed ? WeightVector::scaled(12, {1, 3, 17, -5, 9, 11, 13, 55})
		              : WeightVector::scaled(12, {1, 3, 5, 7, 9, 11, 13, 55});
	if (label == "d5a1a2")
		return primed ? WeightVector::scaled(4, {0, -1, 7, 6, -3, -4, -5, 17})
		              : WeightVector::scaled(4, {0, -1, 3, 2, 6, 5, 4, 17});
	throw std::invalid_argument("unknown orbit label: " + label);
}

/// the same vectors rebuilt from their fundamental-weight expansions
inline WeightVector lambda_plus_rho_from_expansion(std::string const &label, bool primed)
{
	auto comb = [](std::array<Rat, 8> c) {
		WeightVector r;
		for (int i = 1; i <= 8; ++i)
			r = r + fundamental_weight(i) * c[i - 1];
		return r;
	};
	Rat const s6 = Rat(1, 6), s3 = Rat(1, 3), q = Rat(-1, 4);
	if (label == "a5a1")
		return primed ? comb({s3, s3, s6, Rat(7, 6), Rat(-11, 6), Rat(7, 6), s6, s6})
		              : comb({s3, s3, s6, s6, s6, s6, s6, s6});
	if (label == "d5a1a2")
		return primed ? comb({q, q, q, Rat(2), Rat(-9, 4), Rat(2), q, q})
		              : comb({q, q, q, Rat(1), q, Rat(1), q, q});
	throw std::invalid_argument("unknown orbit label: " + label);
}

/// (L+rho | L+rho) - (L'+rho | L'+rho), full Euclidean form on the recorded tuples
inline Rat norm_difference(std::string const &label)
{
	auto a = lambda_plus_rho(label, false);
	auto b = lambda_plus_rho(label, true);
	return a.dot(a) - b.dot(b);
}

/// Casimir eigenvalue shift r = (L+rho|L+rho) - (rho|rho)
inline Rat casimir_shift(std::string const &label, bool primed)
{
	auto v = lambda_plus_rho(label, primed);
	auto p = rho();
	return v.dot(v) - p.dot(p);
}

/// unit test in Z[1/2,1/3,1/5]: value = +-1 * 2^a 3^b 5^c
struct RUnitVerdict
{
	Rat value;
	bool is_unit = false;       // residual is +-1
	int e2 = 0, e3 = 0, e5 = 0; // exponents, denominator counted negative
	Rat residual;               // what remains after stripping 2, 3 and 5
};

inline RUnitVerdict r_unit(Rat const &q)
{
	RUnitVerdict v;
	v.value = q;
	if (q == 0) {
		v.residual = 0;
		return v;
	}
	Int num = numerator(q), den = denominator(q);
	v.e2 = strip_factor(num, 2) - strip_factor(den, 2);
	v.e3 = strip_factor(num, 3) - strip_factor(den, 3);
	v.e5 = strip_factor(num, 5) - strip_factor(den, 5);
	v.residual = Rat(num) / Rat(den);
	v.is_unit = v.residual == 1 || v.residual == -1;
	return v;
}

/// residue test of a 2,3,5-denominated rational mod a good prime p > 5
inline bool nonzero_mod_p(Rat const &q, long p)
{
	if (p == 2 || p == 3 || p == 5)
		throw BadPrime(p);
	Int num = numerator(q), den = denominator(q);
	if (den % p == 0)
		throw std::invalid_argument("denominator not invertible mod p");
	return num % p != 0;
}

} // namespace e8lie
