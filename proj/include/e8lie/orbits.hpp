#pragma once

#include "e8lie/linear.hpp"

#include <set>

namespace e8lie {

enum class OrbitLabel { A5A1, D5a1A2 };

inline std::string label_name(OrbitLabel l) { return l == OrbitLabel::A5A1 ? "a5a1" : "d5a1a2"; }

inline std::optional<OrbitLabel> parse_label(std::string const &s)
{
	if (s == "a5a1")
		return OrbitLabel::A5A1;
	if (s == "d5a1a2")
		return OrbitLabel::D5a1A2;
	return std::nullopt;
}

struct Sl2ViolationError : std::runtime_error
{
	explicit Sl2ViolationError(std::string const &w) : std::runtime_error(w) {}
};

/// a distinguished vector fails its graded-component invariant
struct GradedMembershipError : std::runtime_error
{
	explicit GradedMembershipError(std::string const &w) : std::runtime_error(w) {}
};

struct Sl2Report
{
	LieElement res_he, res_hf, res_ef; // residuals of the three identities
	bool pass() const { return res_he.is_zero() && res_hf.is_zero() && res_ef.is_zero(); }
};

/// checks [h,e] = 2e, [h,f] = -2f, [e,f] = h
inline Sl2Report verify_sl2(ChevalleyTable const &t, LieElement const &e, LieElement const &h,
                            LieElement const &f)
{
	Sl2Report r;
	r.res_he = t.bracket(h, e) - e * Rat(2);
	r.res_hf = t.bracket(h, f) + f * Rat(2);
	r.res_ef = t.bracket(e, f) - h;
	return r;
}

/// An orbit's triple, ad-h grading, graded centralizer and named vectors.
/// h is always derived as [e, f]; the grading is by integral ad-h eigenvalues.
struct OrbitData
{
	OrbitLabel label;
	LieElement e, f, h;
	std::array<long, 8> h_coroot{};
	std::map<long, Subspace> grading;     // nonzero g(i)
	std::map<long, Subspace> centralizer; // nonzero g_e(i)
	Subspace ge;                          // ker(ad e)
	std::map<std::string, LieElement> distinguished;

	Subspace const &g(long i) const
	{
		static Subspace const empty;
		auto it = grading.find(i);
		return it == grading.end() ? empty : it->second;
	}
	Subspace const &ge_graded(long i) const
	{
		static Subspace const empty;
		auto it = centralizer.find(i);
		return it == centralizer.end() ? empty : it->second;
	}
	LieElement const &named(std::string const &n) const
	{
		auto it = distinguished.find(n);
		if (it == distinguished.end())
			throw std::out_of_range("no distinguished vector '" + n + "'");
		return it->second;
	}
};

inline OrbitData orbit_data(ChevalleyTable const &t, Fixture const &fx, OrbitLabel label)
{
	OrbitData od;
	od.label = label;
	std::string const name = label_name(label);
	od.e = t.element(fx.element(name, "e"));
	od.f = t.element(fx.element(name, "f"));
	od.h = t.bracket(od.e, od.f);

	auto sl2 = verify_sl2(t, od.e, od.h, od.f);
	if (!sl2.pass())
		throw Sl2ViolationError(name + ": transcribed e, f do not close into an sl2 triple");
	for (auto const &[k, c] : od.h.terms()) {
		if (k < 2 * kNumPositive || denominator(c) != 1)
			throw Sl2ViolationError(name + ": h = [e,f] is not an integral toral element");
		od.h_coroot[k - 2 * kNumPositive] = long(numerator(c));
	}

	// grading by ad-h eigenvalues; every basis vector is an eigenvector
	auto ad_h = ad_operator(t, od.h);
	std::set<long> eigenvalues;
	for (int i = 0; i < kDim; ++i)
		eigenvalues.insert(t.basis_weight(i, od.h_coroot));
	int total = 0;
	for (long ev : eigenvalues) {
		auto sp = eigenspace(ad_h, Rat(ev));
		total += sp.dim();
		if (sp.dim())
			od.grading.emplace(ev, std::move(sp));
	}
	if (total != kDim)
		throw Sl2ViolationError(name + ": ad h is not diagonalizable over the integers");

	od.ge = kernel(ad_operator(t, od.e));
	int ge_total = 0;
	for (auto const &[ev, sp] : od.grading) {
		auto piece = od.ge.intersect(sp);
		ge_total += piece.dim();
		if (piece.dim()) {
			if (ev < 0)
				throw GradedMembershipError(name + ": centralizer meets a negative grade");
			od.centralizer.emplace(ev, std::move(piece));
		}
	}
	if (ge_total != od.ge.dim())
		throw GradedMembershipError(name + ": graded centralizer does not exhaust ker(ad e)");

	auto place = [&](std::string const &n, LieElement x, long grade) {
		if (!od.ge_graded(grade).contains(x))
			throw GradedMembershipError(name + ": '" + n + "' is not in the grade-" +
			                            std::to_string(grade) + " centralizer component");
		od.distinguished.emplace(n, std::move(x));
	};

	if (label == OrbitLabel::A5A1) {
		place("u", t.element(fx.element(name, "u")), 3);
		place("v", t.element(fx.element(name, "v")), 3);
		place("u'", t.element(fx.element(name, "up")), 3);
		place("v'", t.element(fx.element(name, "vp")), 3);
		place("w", t.element(fx.element(name, "w")), 6);
		place("e1", LieElement::e_vec(t.roots(), t.roots().simple(1)), 2);
		place("e'", t.element(fx.element(name, "ep")), 0);
		place("f'", t.element(fx.element(name, "fp")), 0);
		place("e_hr", t.element(fx.element(name, "etheta")), 0);
		place("f_hr", t.element(fx.element(name, "ftheta")), 0);
		place("hw1", t.element(fx.element(name, "hw1")), 1);
		od.distinguished.emplace("f1", LieElement::e_vec(t.roots(), -t.roots().simple(1)));
		od.distinguished.emplace("u1'", t.element(fx.element(name, "u1p")));
	} else {
		auto ep = t.element(fx.element(name, "ep"));
		auto fp = t.element(fx.element(name, "fp"));
		auto hp = t.bracket(ep, fp);
		auto sl2p = verify_sl2(t, ep, hp, fp);
		if (!sl2p.pass())
			throw Sl2ViolationError(name + ": (e', [e',f'], f') is not an sl2 triple");
		auto u = t.element(fx.element(name, "u"));
		auto v = t.bracket(fp, u);
		auto e0 = t.element(fx.element(name, "e0"));
		auto h0 = t.bracket(e0, od.f);
		auto f0 = t.bracket(h0, od.f) * Rat(1, 2);
		place("e'", ep, 0);
		place("f'", fp, 0);
		od.distinguished.emplace("h'", std::move(hp));
		place("u", std::move(u), 3);
		place("v", std::move(v), 3);
		place("e0", std::move(e0), 2);
		od.distinguished.emplace("h0", std::move(h0));
		od.distinguished.emplace("f0", std::move(f0));
		place("hw1", t.element(fx.element(name, "w")), 1);
	}
	return od;
}

struct CentralizerStructure
{
	int dim_ge = 0;
	int codim_derived = 0;       // codim of [g_e, g_e] in g_e
	bool complement_spanned_by_e = false;
	Subspace derived;            // [g_e, g_e]
};

/// computes [g_e, g_e], its codimension, and whether e spans a complement
inline CentralizerStructure centralizer_structure(ChevalleyTable const &t, OrbitData const &od)
{
	CentralizerStructure cs;
	cs.dim_ge = od.ge.dim();
	cs.derived = span_brackets(t, od.ge, od.ge);
	cs.codim_derived = cs.dim_ge - cs.derived.dim();
	auto basis = cs.derived.basis();
	basis.push_back(od.e);
	cs.complement_spanned_by_e =
	    !cs.derived.contains(od.e) && Subspace::span(basis).dim() == cs.dim_ge;
	return cs;
}

struct Lemma41Report
{
	int dim_inv_brackets11 = 0;   // dim [g_e(1),g_e(1)]^{g_e(0)}
	bool equals_line_e0 = false;
	int dim_inv_ge2 = 0;          // dim g_e(2)^{g_e(0)}
	bool inv_ge2_is_e_e0 = false;
	int dim_ge0_action_on_ge2 = 0; // dim [g_e(0), g_e(2)]
	bool pass() const
	{
		return dim_inv_brackets11 == 1 && equals_line_e0 && dim_inv_ge2 == 2 && inv_ge2_is_e_e0 &&
		       dim_ge0_action_on_ge2 == 5;
	}
};

inline Lemma41Report verify_lemma41(ChevalleyTable const &t, OrbitData const &od)
{
	if (od.label != OrbitLabel::D5a1A2)
		throw std::invalid_argument("verify_lemma41 expects the d5a1a2 orbit");
	Lemma41Report rep;
	auto ge0 = od.ge_graded(0).basis();
	auto br11 = span_brackets(t, od.ge_graded(1), od.ge_graded(1));
	auto inv = joint_annihilator(t, br11, ge0);
	rep.dim_inv_brackets11 = inv.dim();
	auto line = Subspace::span({od.named("e0")});
	rep.equals_line_e0 = inv == line;
	auto inv2 = joint_annihilator(t, od.ge_graded(2), ge0);
	rep.dim_inv_ge2 = inv2.dim();
	rep.inv_ge2_is_e_e0 = inv2 == Subspace::span({od.e, od.named("e0")});
	rep.dim_ge0_action_on_ge2 = span_brackets(t, od.ge_graded(0), od.ge_graded(2)).dim();
	return rep;
}

} // namespace e8lie
