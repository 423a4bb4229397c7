#pragma once

#include "e8lie/orbits.hpp"
#include "e8lie/weights.hpp"

namespace e8lie {

/// the pairing (e, [.,.]) is singular on g(-1); signals upstream corruption
struct DegeneratePairing : std::runtime_error
{
	DegeneratePairing() : std::runtime_error("symplectic pairing on g(-1) is degenerate") {}
};

/// the two evaluation routes disagree
struct Inconsistency : std::runtime_error
{
	explicit Inconsistency(std::string const &w) : std::runtime_error(w) {}
};

/// Darboux basis z_1..z_2s of g(-1) for <x,y> = (e,[x,y]):
/// <z_{i+s}, z_j> = delta_ij, <z_i,z_j> = <z_{i+s},z_{j+s}> = 0 for i,j <= s.
struct SymplecticBasis
{
	std::vector<LieElement> z;
	int s = 0;

	/// starred companion: z_i* = z_{i+s} for i < s, else -z_{i-s} (0-based)
	LieElement zstar(int i) const { return i < s ? z[i + s] : -z[i - s]; }
};

inline SymplecticBasis darboux_basis_from(ChevalleyTable const &t, OrbitData const &od,
                                          std::vector<LieElement> initial)
{
	auto pairing = [&](LieElement const &x, LieElement const &y) {
		return t.invariant_form(od.e, t.bracket(x, y));
	};
	std::vector<LieElement> ps, qs, rem = std::move(initial);
	while (!rem.empty()) {
		LieElement x = rem.front();
		rem.erase(rem.begin());
		if (x.is_zero())
			continue;
		int j = -1;
		for (size_t i = 0; i < rem.size(); ++i)
			if (pairing(x, rem[i]) != 0) {
				j = int(i);
				break;
			}
		if (j < 0)
			throw DegeneratePairing();
		LieElement q = rem[j] * (Rat(1) / pairing(rem[j], x)); // <q, x> = 1
		rem.erase(rem.begin() + j);
		for (auto &v : rem) {
			LieElement next = v;
			next.axpy(-pairing(q, v), x);
			next.axpy(pairing(x, v), q);
			v = std::move(next);
		}
		ps.push_back(std::move(x));
		qs.push_back(std::move(q));
	}
	SymplecticBasis sb;
	sb.s = int(ps.size());
	sb.z = std::move(ps);
	for (auto &q : qs)
		sb.z.push_back(std::move(q));
	return sb;
}

/// deterministic Darboux basis from the canonical basis of g(-1)
inline SymplecticBasis darboux_basis(ChevalleyTable const &t, OrbitData const &od)
{
	return darboux_basis_from(t, od, od.g(-1).basis());
}

/// Gram matrix of the basis equals the standard symplectic matrix
inline bool has_standard_gram(ChevalleyTable const &t, OrbitData const &od,
                              SymplecticBasis const &sb)
{
	auto pairing = [&](LieElement const &x, LieElement const &y) {
		return t.invariant_form(od.e, t.bracket(x, y));
	};
	int n = 2 * sb.s;
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			Rat want = 0;
			if (i >= sb.s && j < sb.s && i - sb.s == j)
				want = 1;
			else if (i < sb.s && j >= sb.s && j - sb.s == i)
				want = -1;
			if (pairing(sb.z[i], sb.z[j]) != want)
				return false;
		}
	return true;
}

/// the evaluation point: f - f_1 resp. f + f_0
inline LieElement slice_point(OrbitData const &od)
{
	if (od.label == OrbitLabel::A5A1)
		return od.f - od.named("f1");
	return od.f + od.named("f0");
}

/// the degree-8 sums A = sum_i ([u,z_i*],p)([v,z_i],p) and the primed B
inline std::pair<Rat, Rat> sum_AB(ChevalleyTable const &t, OrbitData const &od,
                                  SymplecticBasis const &sb)
{
	LieElement p = slice_point(od);
	auto one_sum = [&](LieElement const &a, LieElement const &b) {
		Rat total = 0;
		for (int i = 0; i < 2 * sb.s; ++i)
			total += t.invariant_form(t.bracket(a, sb.zstar(i)), p) *
			         t.invariant_form(t.bracket(b, sb.z[i]), p);
		return total;
	};
	Rat A = one_sum(od.named("u"), od.named("v"));
	Rat B = od.label == OrbitLabel::A5A1 ? one_sum(od.named("u'"), od.named("v'")) : Rat(0);
	return {A, B};
}

/// closed forms of the sums via sl2 identities; must agree with sum_AB
inline std::pair<Rat, Rat> closed_form_AB(ChevalleyTable const &t, OrbitData const &od)
{
	auto F3 = [&](LieElement const &x) {
		return t.bracket(od.f, t.bracket(od.f, t.bracket(od.f, x)));
	};
	if (od.label == OrbitLabel::A5A1) {
		LieElement e1 = od.named("e1"), f1 = od.named("f1");
		LieElement h1 = t.bracket(e1, f1);
		auto HmH1 = [&](LieElement const &x) {
			return t.bracket(od.h, x) - t.bracket(h1, x);
		};
		auto closed = [&](LieElement const &a, LieElement const &b) {
			LieElement bminus = F3(b) * Rat(1, 36);
			LieElement quad = HmH1(HmH1(a)) - HmH1(a) * Rat(2);
			return Rat(8) * t.invariant_form(t.bracket(t.bracket(a, e1), f1), bminus) -
			       Rat(3) * t.invariant_form(quad, bminus);
		};
		return {closed(od.named("u"), od.named("v")), closed(od.named("u'"), od.named("v'"))};
	}
	LieElement const &u = od.named("u");
	LieElement const &e0 = od.named("e0");
	LieElement const &f0 = od.named("f0");
	LieElement vminus = F3(od.named("v")) * Rat(1, 36);
	auto EF = [&](LieElement const &x) { // [ad e0, ad f](x)
		return t.bracket(e0, t.bracket(od.f, x)) - t.bracket(od.f, t.bracket(e0, x));
	};
	LieElement quad = EF(EF(u)) - EF(u) * Rat(4) + u * Rat(3);
	Rat A = Rat(-3) * t.invariant_form(quad, vminus) -
	        Rat(8) * t.invariant_form(t.bracket(f0, t.bracket(e0, u)), vminus);
	return {A, Rat(0)};
}

/// the coefficient of the quadratic relation and the implied dimension of the
/// abelianized quotient
struct LambdaResult
{
	OrbitLabel label;
	Rat A, B;
	Rat phi_value; // A + B, the value of the degree-8 bracket sum at the slice point
	Rat lambda;
	int dim_ab = 0;
};

inline LambdaResult compute_lambda(ChevalleyTable const &t, OrbitData const &od)
{
	LambdaResult r;
	r.label = od.label;
	auto sb = darboux_basis(t, od);
	if (!has_standard_gram(t, od, sb))
		throw DegeneratePairing();
	auto [A, B] = sum_AB(t, od, sb);
	auto [Ac, Bc] = closed_form_AB(t, od);
	if (A != Ac || B != Bc)
		throw Inconsistency(label_name(od.label) +
		                    ": Darboux-sum route and closed-form route disagree");
	r.A = A;
	r.B = B;
	r.phi_value = A + B;
	Rat pair = t.invariant_form(od.e, slice_point(od));
	r.lambda = r.phi_value / (pair * pair);
	r.dim_ab = (r.lambda != 0 && r_unit(r.lambda).is_unit) ? 2 : 1;
	return r;
}

struct G6Report
{
	LieElement res_uv;   // [u,v] + 2w  resp. [u,v]
	LieElement res_upvp; // [u',v'] - 2w
	LieElement res_sum;  // [u,v] + [u',v']
	bool pass = false;
};

/// the relations in the top graded component: [u,v] = -2w, [u',v'] = 2w
/// and their sum zero; for the second orbit, [u,v] = 0
inline G6Report verify_g6_relations(ChevalleyTable const &t, OrbitData const &od)
{
	G6Report rep;
	LieElement uv = t.bracket(od.named("u"), od.named("v"));
	if (od.label == OrbitLabel::A5A1) {
		LieElement upvp = t.bracket(od.named("u'"), od.named("v'"));
		rep.res_uv = uv + od.named("w") * Rat(2);
		rep.res_upvp = upvp - od.named("w") * Rat(2);
		rep.res_sum = uv + upvp;
		rep.pass = rep.res_uv.is_zero() && rep.res_upvp.is_zero() && rep.res_sum.is_zero();
	} else {
		rep.res_uv = uv;
		rep.pass = uv.is_zero();
	}
	return rep;
}

} // namespace e8lie
