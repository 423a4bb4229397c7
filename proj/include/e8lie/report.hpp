#pragma once

#include "e8lie/slice.hpp"

#include <chrono>
#include <json.hpp>

namespace e8lie {

/// one verified claim: what was expected, where it comes from, what we got
struct CheckRecord
{
	std::string id;
	std::string citation;   // source tag, e.g. S3.4 or Eq-3.2
	std::string provenance; // quoted | derived | forced
	std::string expected;
	std::string computed;
	bool pass = false;
};

struct VerificationReport
{
	std::string suite; // a5a1 | d5a1a2 | weights | properties
	std::string convention_id;
	std::vector<CheckRecord> checks;
	std::vector<std::string> notes; // documented source-text discrepancies
	double wall_seconds = 0;

	bool all_pass() const
	{
		for (auto const &c : checks)
			if (!c.pass)
				return false;
		return true;
	}

	int failures() const
	{
		int n = 0;
		for (auto const &c : checks)
			n += !c.pass;
		return n;
	}

	nlohmann::json to_json() const
	{
		nlohmann::json j;
		j["schema"] = "e8lie-report/1";
		j["suite"] = suite;
		j["convention_id"] = convention_id;
		j["all_pass"] = all_pass();
		j["wall_seconds"] = wall_seconds;
		j["checks"] = nlohmann::json::array();
		for (auto const &c : checks)
			j["checks"].push_back({{"id", c.id},
			                       {"citation", c.citation},
			                       {"provenance", c.provenance},
			                       {"expected", c.expected},
			                       {"computed", c.computed},
			                       {"pass", c.pass}});
		j["notes"] = notes;
		return j;
	}

	std::string to_text() const
	{
		std::ostringstream os;
		os << "suite " << suite << "  (convention " << convention_id << ")\n";
		for (auto const &c : checks)
			os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << "  expected "
			   << c.expected << ", computed " << c.computed << "  {" << c.provenance << ": "
			   << c.citation << "}\n";
		for (auto const &n : notes)
			os << "  note: " << n << "\n";
		os << (all_pass() ? "  all checks passed" : "  FAILURES: " + std::to_string(failures()))
		   << "  (" << wall_seconds << "s)\n";
		return os.str();
	}
};

namespace detail {

struct Recorder
{
	VerificationReport &rep;

	void operator()(std::string id, std::string cite, std::string prov, std::string expected,
	                std::string computed, bool pass) const
	{
		rep.checks.push_back({std::move(id), std::move(cite), std::move(prov),
		                      std::move(expected), std::move(computed), pass});
	}
	void rat(std::string id, std::string cite, std::string prov, Rat const &expected,
	         Rat const &got) const
	{
		(*this)(std::move(id), std::move(cite), std::move(prov), expected.str(), got.str(),
		        expected == got);
	}
	void num(std::string id, std::string cite, std::string prov, int expected, int got) const
	{
		(*this)(std::move(id), std::move(cite), std::move(prov), std::to_string(expected),
		        std::to_string(got), expected == got);
	}
	void yes(std::string id, std::string cite, std::string prov, bool ok,
	         std::string const &what = "holds") const
	{
		(*this)(std::move(id), std::move(cite), std::move(prov), what,
		        ok ? what : "violated", ok);
	}
};

} // namespace detail

/// full verification pipeline for one orbit
inline VerificationReport verify_orbit(ChevalleyTable const &t, Fixture const &fx,
                                       OrbitLabel label)
{
	auto t0 = std::chrono::steady_clock::now();
	VerificationReport rep;
	rep.suite = label_name(label);
	rep.convention_id = t.convention_id();
	detail::Recorder rec{rep};
	bool a5 = label == OrbitLabel::A5A1;

	OrbitData od = orbit_data(t, fx, label);

	auto sl2 = verify_sl2(t, od.e, od.h, od.f);
	rec.yes("sl2.triple", "S2", "derived", sl2.pass(), "[h,e]=2e, [h,f]=-2f, [e,f]=h");
	rec.rat("form.ef", a5 ? "S3.2" : "S4.1", "quoted", a5 ? 36 : 34,
	        t.invariant_form(od.e, od.f));
	rec.num("dim.centralizer", "S1", "quoted", 46, od.ge.dim());
	rec.num("rank.ad_e", "S1", "quoted", 202, kDim - od.ge.dim());
	rec.num("dim.ge0", a5 ? "S3.1" : "S4.1", "quoted", a5 ? 6 : 3, od.ge_graded(0).dim());
	rec.num("dim.ge3", a5 ? "S3.1" : "S4.1", "quoted", 4, od.ge_graded(3).dim());
	{
		bool nonneg = true;
		int total = 0;
		for (auto const &[ev, sp] : od.centralizer) {
			nonneg &= ev >= 0;
			total += sp.dim();
		}
		rec.yes("grading.nonnegative", "S2", "forced", nonneg && total == od.ge.dim(),
		        "centralizer grading nonnegative and exhaustive");
	}

	auto cs = centralizer_structure(t, od);
	rec.num("derived.codim", "S1", "quoted", 1, cs.codim_derived);
	rec.yes("derived.complement", "S1", "quoted", cs.complement_spanned_by_e,
	        "e spans a complement of [g_e,g_e]");

	LieElement p = slice_point(od);
	if (a5) {
		rec.num("dim.ge2", "S3.2", "quoted", 2, od.ge_graded(2).dim());
		rec.yes("ge2.span", "S3.2", "quoted",
		        od.ge_graded(2) == Subspace::span({od.e, od.named("e1")}),
		        "grade-2 centralizer spanned by e and e1");
		auto br11 = span_brackets(t, od.ge_graded(1), od.ge_graded(1));
		rec.yes("e1.in.brackets11", "S3.2", "quoted", br11.contains(od.named("e1")),
		        "e1 lies in [g_e(1),g_e(1)]");
		rec.yes("relation.v", "S3.1", "quoted",
		        (od.named("v") + t.bracket(od.named("e_hr"), od.named("u"))).is_zero(),
		        "v = -[e_hr, u]");
		rec.yes("relation.vp", "S3.1", "quoted",
		        (od.named("v'") - t.bracket(od.named("e'"), od.named("u'"))).is_zero(),
		        "v' = [e', u']");
		rec.rat("slice.pairing", "S3.2", "quoted", 35, t.invariant_form(od.e, p));
		rec.rat("slice.e1.pairing", "S3.2", "quoted", 0, t.invariant_form(od.named("e1"), p));
	} else {
		LieElement const &e0 = od.named("e0");
		LieElement const &f0 = od.named("f0");
		LieElement const &h0 = od.named("h0");
		{
			LieElement want = LieElement::h_vec(2) + LieElement::h_vec(5) +
			                  LieElement::h_vec(7) * Rat(2) + LieElement::h_vec(8) * Rat(2);
			rec.yes("h0.display", "S4.2", "quoted", h0 == want, "h0 = h2+h5+2h7+2h8");
		}
		rec.yes("h0.e", "S4.2", "quoted", (t.bracket(h0, od.e) - e0 * Rat(2)).is_zero(),
		        "[h0,e] = 2e0");
		rec.yes("h0.e0", "S4.2", "quoted", (t.bracket(h0, e0) - e0 * Rat(2)).is_zero(),
		        "[h0,e0] = 2e0");
		rec.yes("e.f0", "S4.2", "quoted", (t.bracket(od.e, f0) + h0).is_zero(), "[e,f0] = -h0");
		rec.yes("f0.f0.e", "S4.2", "quoted",
		        (t.bracket(f0, t.bracket(f0, od.e)) - f0 * Rat(2)).is_zero(),
		        "[f0,[f0,e]] = 2f0");
		rec.rat("form.e0f0", "S4.2", "quoted", -6, t.invariant_form(e0, f0));
		rec.rat("form.ef0", "S4.2", "quoted", -6, t.invariant_form(od.e, f0));
		rec.rat("slice.pairing", "S4.2", "quoted", 28, t.invariant_form(od.e, p));
		rec.rat("slice.e0.pairing", "S4.2", "quoted", 0, t.invariant_form(e0, p));
		{
			auto const &hp = od.named("h'");
			bool cochar = true;
			for (int i = 1; i <= 8; ++i) {
				LieElement ei = LieElement::e_vec(t.roots(), t.roots().simple(i));
				LieElement want = i == 6 ? ei : LieElement{};
				if (!(t.bracket(hp, ei) - want).is_zero())
					cochar = false;
			}
			rec.yes("hp.cocharacter", "S4.1", "derived", cochar,
			        "h' = [e',f'] acts by delta_i6 on simple vectors");
		}
		auto lem = verify_lemma41(t, od);
		rec.num("lemma41.dim", "Lemma-4.1", "quoted", 1, lem.dim_inv_brackets11);
		rec.yes("lemma41.line", "Lemma-4.1", "quoted", lem.equals_line_e0,
		        "invariant part of [g_e(1),g_e(1)] is the line through e0");
		rec.yes("ge2.invariants", "S4.2", "quoted", lem.dim_inv_ge2 == 2 && lem.inv_ge2_is_e_e0,
		        "invariant part of g_e(2) spanned by e and e0");
		rec.num("ge0.ge2.module", "S4.2", "quoted", 5, lem.dim_ge0_action_on_ge2);
	}

	auto g6 = verify_g6_relations(t, od);
	if (a5) {
		rec.yes("g6.uv", "Eq-3.1", "quoted", g6.res_uv.is_zero(), "[u,v] = -2w");
		rec.yes("g6.upvp", "Eq-3.1", "quoted", g6.res_upvp.is_zero(), "[u',v'] = 2w");
		rec.yes("g6.sum", "Eq-3.1", "quoted", g6.res_sum.is_zero(), "[u,v] + [u',v'] = 0");
	} else {
		rec.yes("g6.uv", "Eq-4.1", "quoted", g6.res_uv.is_zero(), "[u,v] = 0");
	}

	{
		LieElement cube = t.bracket(od.e, t.bracket(od.e, t.bracket(od.e, p)));
		rec.yes("slice.e_cubed", a5 ? "S3.4" : "S4.3", "quoted", cube.is_zero(),
		        "ad(e)^3 kills the slice point");
	}

	auto sb = darboux_basis(t, od);
	rec.yes("darboux.gram", a5 ? "S3.3" : "S4.3", "forced", has_standard_gram(t, od, sb),
	        "Gram matrix is the standard symplectic matrix");
	rec.num("darboux.halfdim", a5 ? "S3.3" : "S4.3", "derived", 11, sb.s);

	auto [A, B] = sum_AB(t, od, sb);
	auto [Ac, Bc] = closed_form_AB(t, od);
	rec.yes("routes.agree", a5 ? "S3.4" : "S4.3", "derived", A == Ac && B == Bc,
	        "Darboux-sum route equals closed-form route");
	if (a5) {
		rec.rat("sum.total", "S3.4", "quoted", -7350, Rat(36) * (A + B));
		auto F3 = [&](LieElement const &x) {
			return t.bracket(od.f, t.bracket(od.f, t.bracket(od.f, x)));
		};
		LieElement vminus = F3(od.named("v")) * Rat(1, 36);
		LieElement vpminus = F3(od.named("v'")) * Rat(1, 36);
		rec.yes("sum.A.short", "S3.4", "quoted", A == Rat(-9) * t.invariant_form(od.named("u"), vminus),
		        "A = -9(u, v-)");
		rec.yes("sum.B.short", "S3.4", "quoted",
		        B == Rat(-16) * t.invariant_form(od.named("u1'"), vpminus), "B = -16(u1', v-')");
		rec.rat("pairing.F3u.v", "S3.4", "quoted", 378,
		        t.invariant_form(F3(od.named("u")), od.named("v")));
		rec.rat("pairing.F3u1p.vp", "S3.4", "quoted", -672,
		        t.invariant_form(F3(od.named("u1'")), od.named("v'")));
	} else {
		rec.rat("sum.total", "S4.3", "quoted", 1176, A);
	}

	auto lam = compute_lambda(t, od);
	rec.rat("lambda", a5 ? "S3.4" : "S4.3", "quoted", a5 ? Rat(-1, 6) : Rat(3, 2), lam.lambda);
	{
		auto unit = r_unit(lam.lambda);
		Rat pairing2 = t.invariant_form(od.e, p) * t.invariant_form(od.e, p);
		auto nu7 = [](Rat const &q) { // 7-adic valuation
			Int n = numerator(q), d = denominator(q);
			return strip_factor(n, 7) - strip_factor(d, 7);
		};
		rec.yes("lambda.unit", a5 ? "S3.4" : "S4.3", "quoted", unit.is_unit,
		        "lambda is a unit in Z[1/2,1/3,1/5]");
		rec.yes("lambda.seven", a5 ? "S3.4" : "S4.3", "quoted",
		        nu7(pairing2) >= 2 && nu7(lam.phi_value) >= 2 && nu7(lam.lambda) == 0,
		        "the 7^2 factors cancel out of lambda");
		rec.num("dim.abelianization", "S1", "quoted", 2, lam.dim_ab);
	}

	if (a5) {
		rep.notes.push_back("the displayed h is inconsistent with [e,f]; h is derived (S3.1)");
		rep.notes.push_back("the displayed slice pairing once reads f-f0 for f-f1 (S3.2)");
		rep.notes.push_back("the displayed pair relations are used as v = -[e_hr,u] and "
		                    "v' = [e',u']; the displayed forms are not well-typed and the "
		                    "primed sign follows the quoted N-block (S3.1)");
	} else {
		rep.notes.push_back("h' is derived as [e',f'] = the cocharacter dual to node 6; the "
		                    "display carries an extra factor 2 (S4.1)");
		rep.notes.push_back("v is constructed as [f',u]; one displayed v-term has a corrupted "
		                    "slot (resolves to c8 = 0) and one reads c7 = 0 for c7 = 1 (S4.1)");
	}

	rep.wall_seconds =
	    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	return rep;
}

/// weight-lattice arithmetic suite
inline VerificationReport verify_weights()
{
	auto t0 = std::chrono::steady_clock::now();
	VerificationReport rep;
	rep.suite = "weights";
	detail::Recorder rec{rep};

	auto tuple_eq = [](WeightVector const &v, long den, std::array<long, 8> num) {
		return v == WeightVector::scaled(den, num);
	};
	rec.yes("fw4", "S4.4", "quoted", tuple_eq(fundamental_weight(4), 1, {0, 0, 1, 1, 1, 1, 1, 5}),
	        "fundamental weight 4 tuple");
	rec.yes("fw5", "S4.4", "quoted", tuple_eq(fundamental_weight(5), 1, {0, 0, 0, 1, 1, 1, 1, 4}),
	        "fundamental weight 5 tuple");
	rec.yes("fw6", "S4.4", "quoted", tuple_eq(fundamental_weight(6), 1, {0, 0, 0, 0, 1, 1, 1, 3}),
	        "fundamental weight 6 tuple");
	rec.yes("rho", "S4.4", "quoted", tuple_eq(rho(), 1, {0, 1, 2, 3, 4, 5, 6, 23}),
	        "rho tuple");

	struct Row
	{
		char const *label;
		bool primed;
		long den;
		std::array<long, 8> num;
		bool expansion_matches;
	};
	Row rows[] = {
	    {"a5a1", false, 12, {1, 3, 5, 7, 9, 11, 13, 55}, true},
	    {"a5a1", true, 12, {1, 3, 17, -5, 9, 11, 13, 55}, true},
	    {"d5a1a2", false, 4, {0, -1, 3, 2, 6, 5, 4, 17}, true},
	    {"d5a1a2", true, 4, {0, -1, 7, 6, -3, -4, -5, 17}, false},
	};
	for (auto const &r : rows) {
		std::string id = std::string(r.label) + (r.primed ? ".primed" : ".plain");
		auto rec_tuple = lambda_plus_rho(r.label, r.primed);
		rec.yes("tuple." + id, "S4.4", "quoted", tuple_eq(rec_tuple, r.den, r.num),
		        "recorded shifted-weight tuple");
		bool matches = lambda_plus_rho_from_expansion(r.label, r.primed) == rec_tuple;
		rec.yes("expansion." + id, "S4.4", r.expansion_matches ? "quoted" : "derived",
		        matches == r.expansion_matches,
		        r.expansion_matches ? "expansion route reproduces the tuple"
		                            : "expansion route deviates as documented");
	}
	rec.rat("normdiff.a5a1", "S4.4", "quoted", Rat(-5, 3), norm_difference("a5a1"));
	rec.rat("normdiff.d5a1a2", "S4.4", "quoted", Rat(-45, 16), norm_difference("d5a1a2"));
	rec.yes("normdiff.a5a1.unit", "S4.4", "derived", r_unit(norm_difference("a5a1")).is_unit,
	        "difference is a unit in Z[1/2,1/3,1/5]");
	rec.yes("normdiff.d5a1a2.unit", "S4.4", "derived", r_unit(norm_difference("d5a1a2")).is_unit,
	        "difference is a unit in Z[1/2,1/3,1/5]");
	{
		bool all = true;
		for (long p : {7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
		               79, 83, 89, 97})
			for (char const *label : {"a5a1", "d5a1a2"}) {
				Rat diff = casimir_shift(label, false) - casimir_shift(label, true);
				all &= nonzero_mod_p(diff, p);
			}
		rec.yes("casimir.separation", "S4.4", "quoted", all,
		        "r - r' is nonzero mod every good prime below 100");
	}
	rec.rat("casimir.diff.a5a1", "S4.4", "derived", Rat(-5, 3),
	        casimir_shift("a5a1", false) - casimir_shift("a5a1", true));
	rec.rat("casimir.diff.d5a1a2", "S4.4", "derived", Rat(-45, 16),
	        casimir_shift("d5a1a2", false) - casimir_shift("d5a1a2", true));

	rep.notes.push_back("the primed d5a1a2 expansion as displayed evaluates one 2*fw5 summand "
	                    "with a wrong tuple; the recorded epsilon-tuple is used, the expansion "
	                    "route differs by (0,0,0,2,-9/4,-9/4,-9/4,0) as pinned in tests (S4.4)");
	rep.notes.push_back("the displayed shortcut for the d5a1a2 norm difference keeps only two "
	                    "coordinates; the full inner product is computed (S4.4)");
	rep.wall_seconds =
	    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	return rep;
}

/// structural property suite: sweeps, Darboux independence, grading closure,
/// canonical idempotence; full=false uses the sampled sweeps
inline VerificationReport property_suite(ChevalleyTable const &t, Fixture const &fx,
                                         uint64_t seed, uint64_t n, bool full)
{
	auto t0 = std::chrono::steady_clock::now();
	VerificationReport rep;
	rep.suite = full ? "properties.full" : "properties.sampled";
	rep.convention_id = t.convention_id();
	detail::Recorder rec{rep};

	if (full) {
		auto jac = t.jacobi_sweep_full();
		rec.yes("jacobi.full", "S2", "forced", jac.ok,
		        jac.ok ? "all " + std::to_string(jac.checked) + " basis triples"
		               : jac.first_failure);
		auto inv = t.invariance_sweep_full();
		rec.yes("invariance.full", "S2", "forced", inv.ok,
		        inv.ok ? "all " + std::to_string(inv.checked) + " basis triples"
		               : inv.first_failure);
	} else {
		auto sam = t.sampled_sweep(seed, n);
		rec.yes("jacobi.invariance.sampled", "S2", "forced", sam.ok,
		        sam.ok ? std::to_string(sam.checked) + " random rational triples"
		               : sam.first_failure);
	}

	{
		std::string fail;
		bool ok = t.anchors_hold(fx, &fail);
		rec.yes("anchors.reproduced", "S3.1", "quoted", ok,
		        ok ? "all transcribed structure constants reproduced" : fail);
	}

	// exhaustive structure-constant properties
	{
		auto const &rs = t.roots();
		bool norm_ok = true, antisym_ok = true, negation_ok = true, coroot_form_ok = true;
		auto const &pos = rs.positive();
		for (auto const &a : pos)
			for (auto const &b : pos) {
				if (a == b || !rs.is_root(a + b))
					continue;
				int n1 = t.nconst(a, b);
				norm_ok &= n1 == 1 || n1 == -1;
				antisym_ok &= t.nconst(b, a) == -n1;
				negation_ok &= t.nconst(-a, -b) == -n1;
			}
		for (auto const &a : pos)
			for (auto const &b : pos) {
				LieElement ha, hb;
				for (int i = 0; i < 8; ++i) {
					if (a[i])
						ha.add(2 * kNumPositive + i, a[i]);
					if (b[i])
						hb.add(2 * kNumPositive + i, b[i]);
				}
				coroot_form_ok &= t.invariant_form(ha, hb) == rs.pairing(a, b);
			}
		rec.yes("nconst.normalized", "S2", "forced", norm_ok, "|N| = 1 on all root pairs");
		rec.yes("nconst.antisymmetric", "S2", "forced", antisym_ok, "N(a,b) = -N(b,a)");
		rec.yes("nconst.negation", "S3.1", "quoted", negation_ok, "N(-a,-b) = -N(a,b)");
		rec.yes("form.coroots", "S2", "forced", coroot_form_ok,
		        "(h_a, h_b) equals the root pairing");
	}

	for (auto label : {OrbitLabel::A5A1, OrbitLabel::D5a1A2}) {
		auto od = orbit_data(t, fx, label);
		std::string pre = label_name(label) + ".";

		// grading closure on nonzero graded pairs
		bool closure = true;
		for (auto const &[i, gi] : od.grading)
			for (auto const &[j, gj] : od.grading) {
				if (i > j)
					continue;
				auto br = span_brackets(t, gi, gj);
				if (br.dim() == 0)
					continue;
				auto tgt = od.grading.find(i + j);
				if (tgt == od.grading.end()) {
					closure = false;
					continue;
				}
				for (auto const &x : br.basis())
					closure &= tgt->second.contains(x);
			}
		rec.yes(pre + "grading.closure", "S2", "forced", closure,
		        "[g(i),g(j)] inside g(i+j) on all graded pairs");

		// Darboux independence of the sums over randomized symplectic bases
		auto base = darboux_basis(t, od);
		auto [A0, B0] = sum_AB(t, od, base);
		std::mt19937_64 rng(seed);
		std::uniform_int_distribution<int> pick(0, int(od.g(-1).dim()) - 1), coeff(-3, 3);
		bool indep = true;
		for (int trial = 0; trial < 3; ++trial) {
			auto vecs = od.g(-1).basis();
			for (int step = 0; step < 40; ++step) {
				int i = pick(rng), j = pick(rng);
				int c = coeff(rng);
				if (i != j && c)
					vecs[i].axpy(Rat(c), vecs[j]);
			}
			auto sb = darboux_basis_from(t, od, vecs);
			indep &= has_standard_gram(t, od, sb);
			auto [A1, B1] = sum_AB(t, od, sb);
			indep &= A1 == A0 && B1 == B0;
		}
		rec.yes(pre + "darboux.independence", "S3.3", "derived", indep,
		        "sums agree over randomized Darboux bases");

		// canonical-form idempotence on shuffled generating sets
		auto basis = od.ge.basis();
		std::vector<LieElement> shuffled;
		for (size_t i = 0; i < basis.size(); ++i) {
			LieElement x = basis[(i * 7 + 3) % basis.size()];
			x.axpy(Rat(2), basis[(i * 13 + 5) % basis.size()]);
			shuffled.push_back(std::move(x));
		}
		rec.yes(pre + "canonical.idempotent", "S2", "forced",
		        Subspace::span(shuffled) == od.ge && Subspace::span(od.ge.basis()) == od.ge,
		        "same span reduces to the identical canonical basis");
	}

	rep.wall_seconds =
	    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	return rep;
}

struct CriterionRow
{
	int index;
	std::string description;
	bool pass;
};

/// aggregates reports into the release-gate table; a missing record fails its row
inline std::vector<CriterionRow> acceptance_table(std::vector<VerificationReport> const &reps)
{
	auto has = [&](std::string const &suite, std::string const &id) {
		for (auto const &r : reps)
			if (r.suite.starts_with(suite))
				for (auto const &c : r.checks)
					if (c.id == id)
						return c.pass;
		return false;
	};
	using Ids = std::vector<std::pair<char const *, char const *>>;
	auto all = [&](Ids const &ids) {
		for (auto const &[s, id] : ids)
			if (!has(s, id))
				return false;
		return true;
	};
	std::vector<CriterionRow> rows;
	rows.push_back({1, "structure-constant anchors reproduced, negation rule exhaustive",
	                all({{"properties", "anchors.reproduced"}, {"properties", "nconst.negation"}})});
	rows.push_back({2, "sl2 triples and centralizer dimensions",
	                all({{"a5a1", "sl2.triple"},
	                     {"a5a1", "dim.centralizer"},
	                     {"a5a1", "dim.ge0"},
	                     {"a5a1", "dim.ge3"},
	                     {"a5a1", "ge2.span"},
	                     {"d5a1a2", "sl2.triple"},
	                     {"d5a1a2", "dim.centralizer"},
	                     {"d5a1a2", "dim.ge0"},
	                     {"d5a1a2", "dim.ge3"},
	                     {"d5a1a2", "ge2.invariants"}})});
	rows.push_back({3, "top graded-component relations",
	                all({{"a5a1", "g6.uv"},
	                     {"a5a1", "g6.upvp"},
	                     {"a5a1", "g6.sum"},
	                     {"d5a1a2", "g6.uv"}})});
	rows.push_back({4, "invariant part of [g_e(1),g_e(1)] is the line through e0",
	                all({{"d5a1a2", "lemma41.dim"}, {"d5a1a2", "lemma41.line"}})});
	rows.push_back({5, "slice pairings",
	                all({{"a5a1", "form.ef"},
	                     {"a5a1", "slice.pairing"},
	                     {"a5a1", "slice.e1.pairing"},
	                     {"d5a1a2", "form.ef"},
	                     {"d5a1a2", "form.e0f0"},
	                     {"d5a1a2", "slice.pairing"},
	                     {"d5a1a2", "slice.e0.pairing"}})});
	rows.push_back({6, "headline sums and both evaluation routes",
	                all({{"a5a1", "sum.total"},
	                     {"a5a1", "routes.agree"},
	                     {"a5a1", "sum.A.short"},
	                     {"a5a1", "sum.B.short"},
	                     {"a5a1", "pairing.F3u.v"},
	                     {"a5a1", "pairing.F3u1p.vp"},
	                     {"a5a1", "lambda"},
	                     {"d5a1a2", "sum.total"},
	                     {"d5a1a2", "routes.agree"},
	                     {"d5a1a2", "lambda"}})});
	rows.push_back({7, "lambda is a unit with the 7^2 cancellation, so dim = 2",
	                all({{"a5a1", "lambda.unit"},
	                     {"a5a1", "lambda.seven"},
	                     {"a5a1", "dim.abelianization"},
	                     {"d5a1a2", "lambda.unit"},
	                     {"d5a1a2", "lambda.seven"},
	                     {"d5a1a2", "dim.abelianization"}})});
	rows.push_back({8, "weight tuples, norm differences, units, modular separation",
	                all({{"weights", "tuple.a5a1.plain"},
	                     {"weights", "tuple.a5a1.primed"},
	                     {"weights", "tuple.d5a1a2.plain"},
	                     {"weights", "tuple.d5a1a2.primed"},
	                     {"weights", "normdiff.a5a1"},
	                     {"weights", "normdiff.d5a1a2"},
	                     {"weights", "normdiff.a5a1.unit"},
	                     {"weights", "normdiff.d5a1a2.unit"},
	                     {"weights", "casimir.separation"}})});
	{
		bool ok = all({{"properties", "nconst.normalized"},
		               {"properties", "nconst.antisymmetric"},
		               {"properties", "form.coroots"}});
		for (char const *orbit : {"a5a1", "d5a1a2"})
			for (char const *suffix : {"grading.closure", "darboux.independence",
			                            "canonical.idempotent"})
				ok &= has("properties", std::string(orbit) + "." + suffix);
		// either the full or the sampled sweep must have run and passed
		ok &= has("properties", "jacobi.full") || has("properties", "jacobi.invariance.sampled");
		ok &= has("properties", "invariance.full") ||
		      has("properties", "jacobi.invariance.sampled");
		rows.push_back({9, "structural property suites", ok});
	}
	return rows;
}

} // namespace e8lie
