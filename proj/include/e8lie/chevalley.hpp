#pragma once

#include "e8lie/element.hpp"
#include "e8lie/fixture.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace e8lie {

/// no sign assignment reproduces the transcribed anchors
struct AnchorUnsatisfiable : std::runtime_error
{
	explicit AnchorUnsatisfiable(std::string const &what) : std::runtime_error(what) {}
};

struct TableParseError : std::runtime_error
{
	TableParseError(int line, std::string const &what)
	    : std::runtime_error("line " + std::to_string(line) + ": " + what), lineno(line)
	{
	}
	int lineno;
};

struct ChecksumMismatch : std::runtime_error
{
	ChecksumMismatch() : std::runtime_error("table checksum mismatch") {}
};

namespace detail {

inline uint32_t crc32(std::string_view data)
{
	static auto const table = [] {
		std::array<uint32_t, 256> t{};
		for (uint32_t i = 0; i < 256; ++i) {
			uint32_t c = i;
			for (int k = 0; k < 8; ++k)
				c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
			t[i] = c;
		}
		return t;
	}();
	uint32_t crc = 0xFFFFFFFFu;
	for (unsigned char ch : data)
		crc = table[(crc ^ ch) & 0xFF] ^ (crc >> 8);
	return crc ^ 0xFFFFFFFFu;
}

} // namespace detail

/// bracket of two basis vectors, kept in machine integers
struct BasisBracket
{
	int target = -1;        // basis index of a single-term result, or -1
	int coeff = 0;          // its integer coefficient
	bool coroot = false;    // result lies in the Cartan
	std::array<int, 8> h{}; // coroot coefficients when coroot == true

	bool zero() const { return !coroot && target < 0; }
};

/// The complete bracket table of the 248-dimensional algebra, with the sign
/// convention calibrated against the transcribed anchor fixture, and the
/// invariant form normalized by (e_a, f_a) = 1. Immutable after construction.
class ChevalleyTable
{
  public:
	/// extraspecial construction followed by sign calibration against the fixture
	static ChevalleyTable build(RootSystem const &rs, Fixture const &fx)
	{
		ChevalleyTable t(rs);
		t.calibrate(fx);
		t.fill_signed();
		std::string fail;
		if (!t.anchors_hold(fx, &fail))
			throw AnchorUnsatisfiable("post-calibration check failed at " + fail);
		return t;
	}

	/// extraspecial construction with every extraspecial sign +1
	static ChevalleyTable build_uncalibrated(RootSystem const &rs)
	{
		ChevalleyTable t(rs);
		t.fill_signed();
		return t;
	}

	RootSystem const &roots() const { return *rs_; }

	/// identifier of the selected sign convention (hex of extraspecial flips)
	std::string const &convention_id() const { return convention_id_; }

	/// N_{a,b} for signed roots; 0 when a+b is not a root
	int nconst(Root const &a, Root const &b) const
	{
		int ia = signed_index(a), ib = signed_index(b);
		if (ia < 0 || ib < 0)
			throw std::invalid_argument("nconst: arguments must be roots");
		Root s = a + b;
		if (is_zero(s) || !rs_->is_root(s))
			return 0;
		return nsigned_[ia][ib];
	}

	BasisBracket bracket_basis(int i, int j) const
	{
		BasisBracket out;
		bool iroot = i < 2 * kNumPositive, jroot = j < 2 * kNumPositive;
		if (!iroot && !jroot)
			return out;
		if (!iroot || !jroot) {
			int hi = (!iroot ? i : j) - 2 * kNumPositive;
			int ri = !iroot ? j : i;
			int w = root_weight_[ri][hi];
			if (w == 0)
				return out;
			out.target = ri;
			out.coeff = !iroot ? w : -w;
			return out;
		}
		if (opposite(i) == j) {
			out.coroot = true;
			Root const &a = pos(i % kNumPositive);
			int sgn = i < kNumPositive ? 1 : -1;
			for (int k = 0; k < 8; ++k)
				out.h[k] = sgn * a[k];
			return out;
		}
		int tgt = sumidx_[i][j];
		if (tgt < 0)
			return out;
		out.target = tgt;
		out.coeff = nsigned_[i][j];
		return out;
	}

	LieElement bracket(LieElement const &x, LieElement const &y) const
	{
		LieElement out;
		for (auto const &[i, ci] : x.terms())
			for (auto const &[j, cj] : y.terms()) {
				auto bb = bracket_basis(i, j);
				if (bb.zero())
					continue;
				Rat c = ci * cj;
				if (bb.coroot) {
					for (int k = 0; k < 8; ++k)
						if (bb.h[k])
							out.add(2 * kNumPositive + k, c * bb.h[k]);
				} else
					out.add(bb.target, c * bb.coeff);
			}
		return out;
	}

	Rat invariant_form(LieElement const &x, LieElement const &y) const
	{
		Rat s = 0;
		for (auto const &[i, ci] : x.terms()) {
			if (i < 2 * kNumPositive) {
				Rat c = y.coeff(opposite(i));
				if (c != 0)
					s += ci * c;
			} else {
				int a = i - 2 * kNumPositive;
				for (int b = 0; b < 8; ++b) {
					Rat c = y.coeff(2 * kNumPositive + b);
					if (c != 0)
						s += ci * rs_->cartan(a + 1, b + 1) * c;
				}
			}
		}
		return s;
	}

	/// ad-h eigenvalue of a basis vector for a toral element given by integer
	/// coroot coefficients
	long basis_weight(int idx, std::array<long, 8> const &h) const
	{
		if (idx >= 2 * kNumPositive)
			return 0;
		long w = 0;
		for (int k = 0; k < 8; ++k)
			w += h[k] * root_weight_[idx][k];
		return w;
	}

	LieElement element(ElementFormula const &f) const
	{
		LieElement x;
		for (auto const &t : f.terms)
			x.axpy(t.coeff, LieElement::e_vec(*rs_, t.root));
		return x;
	}

	/// verifies every transcribed structure-constant anchor
	bool anchors_hold(Fixture const &fx, std::string *first_fail = nullptr) const
	{
		for (auto const &a : fx.nconsts)
			if (nconst(a.a, a.b) != a.value) {
				if (first_fail)
					*first_fail = "anchor " + a.tag;
				return false;
			}
		return true;
	}

	int signed_index(Root const &a) const
	{
		int i = rs_->positive_index(a);
		if (i >= 0)
			return i;
		i = rs_->positive_index(-a);
		return i >= 0 ? i + kNumPositive : -1;
	}

	static int opposite(int i) { return i < kNumPositive ? i + kNumPositive : i - kNumPositive; }

	// ---------------------------------------------------------------- sweeps

	struct SweepReport
	{
		bool ok = true;
		uint64_t checked = 0;
		std::string first_failure;

		void fail(std::string msg)
		{
			if (ok) {
				ok = false;
				first_failure = std::move(msg);
			}
		}
	};

	/// Jacobi identity over all unordered basis triples, machine integers
	SweepReport jacobi_sweep_full() const
	{
		SweepReport rep;
		std::array<long, kDim> acc{};
		std::vector<int> touched;
		touched.reserve(32);
		for (int i = 0; i < kDim; ++i)
			for (int j = i + 1; j < kDim; ++j)
				for (int k = j + 1; k < kDim; ++k) {
					++rep.checked;
					touched.clear();
					jacobi_accumulate(i, j, k, acc, touched);
					for (int t : touched) {
						if (acc[t] != 0)
							rep.fail("jacobi residual at basis triple (" + std::to_string(i) +
							         "," + std::to_string(j) + "," + std::to_string(k) + ")");
						acc[t] = 0;
					}
				}
		return rep;
	}

	/// ad-invariance ([x,y],z) + (y,[x,z]) = 0 over all basis triples
	SweepReport invariance_sweep_full() const
	{
		SweepReport rep;
		for (int x = 0; x < kDim; ++x)
			for (int y = 0; y < kDim; ++y)
				for (int z = y; z < kDim; ++z) {
					++rep.checked;
					long v = form_basis(bracket_basis(x, y), z) + form_basis(bracket_basis(x, z), y);
					if (v != 0)
						rep.fail("invariance residual at (" + std::to_string(x) + "," +
						         std::to_string(y) + "," + std::to_string(z) + ")");
				}
		return rep;
	}

	/// randomized Jacobi + invariance over sparse rational elements
	SweepReport sampled_sweep(uint64_t seed, uint64_t n) const
	{
		SweepReport rep;
		std::mt19937_64 rng(seed);
		std::uniform_int_distribution<int> idx(0, kDim - 1), num(-9, 9), den(1, 4), len(1, 4);
		auto rand_el = [&] {
			LieElement x;
			int m = len(rng);
			for (int i = 0; i < m; ++i) {
				int nu = num(rng);
				if (nu)
					x.add(idx(rng), Rat(nu, den(rng)));
			}
			return x;
		};
		for (uint64_t it = 0; it < n; ++it) {
			LieElement x = rand_el(), y = rand_el(), z = rand_el();
			LieElement jac = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) +
			                 bracket(bracket(z, x), y);
			Rat inv = invariant_form(bracket(x, y), z) + invariant_form(y, bracket(x, z));
			++rep.checked;
			if (!jac.is_zero() || inv != 0)
				rep.fail("sampled sweep residual at iteration " + std::to_string(it));
		}
		return rep;
	}

	// ------------------------------------------------------------------- io

	/// header, one line per unordered pair constant, CRC trailer
	void export_table(std::ostream &os) const
	{
		std::string body = serialize();
		std::ostringstream crc;
		crc << std::hex << std::setw(8) << std::setfill('0') << detail::crc32(body);
		os << body << "CRC " << crc.str() << "\n";
	}

	static ChevalleyTable import_table(std::istream &is, RootSystem const &rs)
	{
		ChevalleyTable t(rs);
		std::string line, body;
		int lineno = 0;
		bool have_crc = false, have_header = false;
		uint32_t crc = 0;
		std::vector<std::tuple<int, int, int>> entries;
		while (std::getline(is, line)) {
			++lineno;
			std::istringstream ls(line);
			std::string kw;
			if (!(ls >> kw))
				throw TableParseError(lineno, "blank line");
			if (kw == "E8") {
				std::string ver;
				if (!(ls >> ver >> t.convention_id_) || ver != "v1")
					throw TableParseError(lineno, "bad header");
				have_header = true;
				body += line + "\n";
			} else if (kw == "N") {
				Root a, b;
				long v;
				for (int i = 0; i < 8; ++i)
					if (!(ls >> a[i]))
						throw TableParseError(lineno, "bad first root");
				for (int i = 0; i < 8; ++i)
					if (!(ls >> b[i]))
						throw TableParseError(lineno, "bad second root");
				if (!(ls >> v))
					throw TableParseError(lineno, "missing value");
				if (v != 1 && v != -1)
					throw TableParseError(lineno, "structure constant out of {-1,1}");
				int ia = t.signed_index(a), ib = t.signed_index(b);
				if (ia < 0 || ib < 0 || t.sumidx_[ia][ib] < 0)
					throw TableParseError(lineno, "labels are not a root pair with root sum");
				entries.emplace_back(ia, ib, int(v));
				body += line + "\n";
			} else if (kw == "CRC") {
				std::string hex;
				if (!(ls >> hex))
					throw TableParseError(lineno, "bad CRC line");
				crc = uint32_t(std::stoul(hex, nullptr, 16));
				have_crc = true;
				break;
			} else {
				throw TableParseError(lineno, "unknown record '" + kw + "'");
			}
		}
		if (!have_header || !have_crc)
			throw TableParseError(lineno, "missing header or CRC trailer");
		if (detail::crc32(body) != crc)
			throw ChecksumMismatch();
		for (auto &row : t.nsigned_)
			row.fill(0);
		for (auto const &[ia, ib, v] : entries) {
			t.nsigned_[ia][ib] = int8_t(v);
			t.nsigned_[ib][ia] = int8_t(-v);
		}
		for (int i = 0; i < 2 * kNumPositive; ++i)
			for (int j = 0; j < 2 * kNumPositive; ++j) {
				if (t.sumidx_[i][j] < 0)
					continue;
				if (t.nsigned_[i][j] == 0)
					throw TableParseError(lineno, "incomplete table: missing pair constant");
				if (t.nsigned_[opposite(i)][opposite(j)] != -t.nsigned_[i][j])
					throw TableParseError(lineno, "negation rule violated");
			}
		return t;
	}

	bool same_constants(ChevalleyTable const &o) const { return nsigned_ == o.nsigned_; }

  private:
	explicit ChevalleyTable(RootSystem const &rs) : rs_(&rs)
	{
		auto const &pp = rs.positive();
		npos_.assign(kNumPositive, {});
		nsigned_.assign(2 * kNumPositive, {});
		sumidx_.assign(2 * kNumPositive, {});
		for (auto &row : sumidx_)
			row.fill(int16_t(-1));
		auto signed_root = [&](int i) { return i < kNumPositive ? pp[i] : -pp[i - kNumPositive]; };
		for (int i = 0; i < 2 * kNumPositive; ++i) {
			Root a = signed_root(i);
			for (int k = 0; k < 8; ++k)
				root_weight_[i][k] = rs.pairing(a, rs.simple(k + 1));
			for (int j = 0; j < 2 * kNumPositive; ++j) {
				Root s = a + signed_root(j);
				if (!is_zero(s) && rs.is_root(s))
					sumidx_[i][j] = int16_t(signed_index(s));
			}
		}
		es_.assign(kNumPositive, {-1, -1});
		es_sign_.assign(kNumPositive, 1);
		for (int g = 0; g < kNumPositive; ++g) {
			if (height(pp[g]) == 1)
				continue;
			for (int a = 0; a < g; ++a) {
				int b = rs.positive_index(pp[g] - pp[a]);
				if (b >= 0) {
					es_[g] = {a, b};
					break;
				}
			}
		}
	}

	Root const &pos(int i) const { return rs_->positive()[i]; }

	// positive-pair structure constants by extraspecial recursion
	int n_pos(int i, int j)
	{
		if (npos_[i][j])
			return npos_[i][j];
		int g = rs_->positive_index(pos(i) + pos(j));
		auto [a1, b1] = es_[g];
		int v;
		if (i == a1 && j == b1)
			v = es_sign_[g];
		else if (i == b1 && j == a1)
			v = -es_sign_[g];
		else {
			int xi = rs_->positive_index(pos(i) - pos(a1));
			if (xi >= 0)
				v = -es_sign_[g] * n_pos(xi, a1) * n_pos(xi, j);
			else {
				int eta = rs_->positive_index(pos(j) - pos(a1));
				v = -es_sign_[g] * n_pos(eta, a1) * n_pos(i, eta);
			}
		}
		npos_[i][j] = int8_t(v);
		npos_[j][i] = int8_t(-v);
		return v;
	}

	int n_signed(int ia, int ib)
	{
		bool pa = ia < kNumPositive, pb = ib < kNumPositive;
		if (pa && pb)
			return n_pos(ia, ib);
		if (!pa && !pb)
			return -n_pos(ia - kNumPositive, ib - kNumPositive);
		if (!pa)
			return -n_signed(ib, ia);
		int d = ib - kNumPositive;
		int diff = rs_->positive_index(pos(ia) - pos(d));
		if (diff >= 0)
			return -n_pos(d, diff);
		return n_pos(rs_->positive_index(pos(d) - pos(ia)), ia);
	}

	void fill_signed()
	{
		for (auto &row : npos_)
			row.fill(0);
		for (int i = 0; i < 2 * kNumPositive; ++i)
			for (int j = 0; j < 2 * kNumPositive; ++j)
				nsigned_[i][j] = sumidx_[i][j] >= 0 ? int8_t(n_signed(i, j)) : int8_t(0);
	}

	// ------------------------------------------------------------ calibration
	//
	// The construction's freedom is one sign per extraspecial pair, which is
	// equivalent to resigning basis vectors e_r -> eps_r e_r with eps = +1 on
	// simple roots. Every transcribed constraint is a condition on products
	// of eps over the roots of its terms: expanded against the all-plus-one
	// table, each term carries an eps-monomial mask. One- and two-term
	// conditions become F2-linear equations; the rest are checked over the
	// free bits of the solved linear system.

	using Mask = uint64_t;
	struct TwTerm
	{
		Rat c;
		Mask m;
	};
	using TwElement = std::map<int, std::map<Mask, Rat>>; // basis idx -> mask -> coeff

	struct Calibration
	{
		std::vector<Root> vars;
		std::map<Root, int> var_of;
		std::vector<std::pair<Mask, int>> linear;
		std::vector<std::string> names; // parallel to linear
		std::vector<std::vector<TwTerm>> hard;
	};

	int var_bit(Calibration &cal, Root const &r) const
	{
		Root p = rs_->is_positive(r) ? r : -r;
		if (height(p) <= 1)
			return -1; // simple roots are normalized to eps = +1
		auto it = cal.var_of.find(p);
		if (it != cal.var_of.end())
			return it->second;
		int b = int(cal.vars.size());
		if (b >= 64)
			throw std::logic_error("calibration variable set exceeds 64 bits");
		cal.vars.push_back(p);
		cal.var_of[p] = b;
		return b;
	}

	static void tw_insert(TwElement &out, int key, Mask m, Rat const &c)
	{
		auto &slot = out[key][m];
		slot += c;
		if (slot == 0) {
			out[key].erase(m);
			if (out[key].empty())
				out.erase(key);
		}
	}

	TwElement tw_formula(Calibration &cal, ElementFormula const &f) const
	{
		TwElement out;
		for (auto const &t : f.terms) {
			Mask m = 0;
			if (int b = var_bit(cal, t.root); b >= 0)
				m = Mask(1) << b;
			tw_insert(out, signed_index(t.root), m, t.coeff);
		}
		return out;
	}

	TwElement tw_bracket(TwElement const &x, TwElement const &y) const
	{
		TwElement out;
		for (auto const &[i, mi] : x)
			for (auto const &[j, mj] : y) {
				auto bb = bracket_basis(i, j);
				if (bb.zero())
					continue;
				for (auto const &[ma, ca] : mi)
					for (auto const &[mb, cb] : mj) {
						Rat c = ca * cb;
						Mask m = ma ^ mb;
						if (bb.coroot) {
							for (int k = 0; k < 8; ++k)
								if (bb.h[k])
									tw_insert(out, 2 * kNumPositive + k, m, c * bb.h[k]);
						} else
							tw_insert(out, bb.target, m, c * bb.coeff);
					}
			}
		return out;
	}

	static TwElement tw_scale(TwElement x, Rat const &a)
	{
		for (auto &[k, mm] : x)
			for (auto &[m, c] : mm)
				c *= a;
		return x;
	}

	static void tw_accumulate(TwElement &x, TwElement const &y, Rat const &a)
	{
		for (auto const &[k, mm] : y)
			for (auto const &[m, c] : mm)
				tw_insert(x, k, m, c * a);
	}

	std::vector<TwTerm> tw_form_terms(TwElement const &x, TwElement const &y) const
	{
		std::map<Mask, Rat> comb;
		for (auto const &[i, mi] : x) {
			if (i < 2 * kNumPositive) {
				auto jt = y.find(opposite(i));
				if (jt == y.end())
					continue;
				for (auto const &[ma, ca] : mi)
					for (auto const &[mb, cb] : jt->second)
						comb[ma ^ mb] += ca * cb;
			} else {
				int a = i - 2 * kNumPositive;
				for (int b = 0; b < 8; ++b) {
					auto jt = y.find(2 * kNumPositive + b);
					if (jt == y.end())
						continue;
					Rat cart = rs_->cartan(a + 1, b + 1);
					for (auto const &[ma, ca] : mi)
						for (auto const &[mb, cb] : jt->second)
							comb[ma ^ mb] += ca * cb * cart;
				}
			}
		}
		std::vector<TwTerm> out;
		for (auto const &[m, c] : comb)
			if (c != 0)
				out.push_back({c, m});
		return out;
	}

	void add_condition(Calibration &cal, std::vector<TwTerm> terms, std::string const &name)
	{
		if (terms.empty())
			return;
		if (terms.size() == 1) // c * (+-1) = 0 has no solution for c != 0
			throw AnchorUnsatisfiable("contradictory condition: " + name);
		if (terms.size() == 2) {
			auto const &[c1, m1] = terms[0];
			auto const &[c2, m2] = terms[1];
			std::vector<std::pair<int, int>> sols;
			for (int b1 = 0; b1 <= (m1 ? 1 : 0); ++b1)
				for (int b2 = 0; b2 <= (m2 ? 1 : 0); ++b2)
					if (c1 * (b1 ? -1 : 1) + c2 * (b2 ? -1 : 1) == 0)
						sols.emplace_back(b1, b2);
			int nfree = (m1 ? 1 : 0) + (m2 ? 1 : 0);
			if (sols.empty())
				throw AnchorUnsatisfiable("contradictory condition: " + name);
			if (int(sols.size()) == (1 << nfree) && nfree > 0)
				return; // vacuous
			if (sols.size() == 2 && m1 && m2 && sols[0].first != sols[1].first &&
			    sols[0].second != sols[1].second) {
				cal.linear.emplace_back(m1 ^ m2, sols[0].first ^ sols[0].second);
				cal.names.push_back(name);
			} else if (sols.size() == 1) {
				if (m1) {
					cal.linear.emplace_back(m1, sols[0].first);
					cal.names.push_back(name);
				}
				if (m2) {
					cal.linear.emplace_back(m2, sols[0].second);
					cal.names.push_back(name);
				}
			} else {
				cal.hard.push_back(std::move(terms));
			}
			return;
		}
		cal.hard.push_back(std::move(terms));
	}

	void calibrate(Fixture const &fx)
	{
		fill_signed(); // expansion happens against the all-plus-one base
		Calibration cal;
		for (auto const &a : fx.nconsts) {
			var_bit(cal, a.a);
			var_bit(cal, a.b);
			var_bit(cal, a.a + a.b);
		}
		std::map<std::pair<std::string, std::string>, TwElement> named;
		for (auto const &e : fx.elements)
			named[{e.orbit, e.name}] = tw_formula(cal, e);

		for (auto const &a : fx.nconsts) {
			int base = nconst(a.a, a.b);
			if (base == 0)
				throw AnchorUnsatisfiable("anchor on a non-root sum: " + a.tag);
			Mask m = 0;
			for (Root const &r : {a.a, a.b, a.a + a.b})
				if (int b = var_bit(cal, r); b >= 0)
					m ^= Mask(1) << b;
			cal.linear.emplace_back(m, base == a.value ? 0 : 1);
			cal.names.push_back("nconst " + a.tag);
		}

		for (auto const &id : fx.identities) {
			auto z = tw_bracket(named.at({id.orbit, id.x}), named.at({id.orbit, id.y}));
			if (!id.rhs.empty())
				tw_accumulate(z, named.at({id.orbit, id.rhs}), Rat(-id.scale));
			for (auto const &[key, mm] : z) {
				std::vector<TwTerm> terms;
				for (auto const &[m, c] : mm)
					terms.push_back({c, m});
				add_condition(cal, std::move(terms), "[" + id.x + "," + id.y + "] (" + id.tag + ")");
			}
		}

		auto value_condition = [&](std::string const &id, std::vector<TwTerm> terms) {
			std::map<Mask, Rat> comb;
			for (auto const &t : terms)
				comb[t.m] += t.c;
			comb[0] -= fx.value(id);
			std::vector<TwTerm> cond;
			for (auto const &[m, c] : comb)
				if (c != 0)
					cond.push_back({c, m});
			add_condition(cal, std::move(cond), "value " + id);
		};
		{
			auto const &f = named.at({"a5a1", "f"});
			auto F3 = [&](TwElement const &x) {
				return tw_bracket(f, tw_bracket(f, tw_bracket(f, x)));
			};
			value_condition("a5a1_form_F3u_v",
			                tw_form_terms(F3(named.at({"a5a1", "u"})), named.at({"a5a1", "v"})));
			value_condition("a5a1_form_F3u1p_vp",
			                tw_form_terms(F3(named.at({"a5a1", "u1p"})), named.at({"a5a1", "vp"})));
		}
		{
			auto const &fd = named.at({"d5a1a2", "f"});
			auto const &e0 = named.at({"d5a1a2", "e0"});
			auto const &u = named.at({"d5a1a2", "u"});
			auto v = tw_bracket(named.at({"d5a1a2", "fp"}), u);
			auto f0 = tw_scale(tw_bracket(tw_bracket(e0, fd), fd), Rat(1, 2));
			auto F3 = [&](TwElement const &x) {
				return tw_bracket(fd, tw_bracket(fd, tw_bracket(fd, x)));
			};
			auto EF = [&](TwElement const &x) {
				auto a = tw_bracket(e0, tw_bracket(fd, x));
				tw_accumulate(a, tw_bracket(fd, tw_bracket(e0, x)), Rat(-1));
				return a;
			};
			auto vminus = tw_scale(F3(v), Rat(1, 36));
			auto tt = EF(EF(u));
			tw_accumulate(tt, EF(u), Rat(-4));
			tw_accumulate(tt, u, Rat(3));
			auto terms = tw_form_terms(tt, vminus);
			for (auto &t : terms)
				t.c *= -3;
			for (auto const &t : tw_form_terms(tw_bracket(f0, tw_bracket(e0, u)), vminus))
				terms.push_back({t.c * -8, t.m});
			value_condition("d5a1a2_closed_form", std::move(terms));
		}

		// F2 elimination
		std::map<int, std::pair<Mask, int>> pivots;
		for (size_t r = 0; r < cal.linear.size(); ++r) {
			auto [vec, b] = cal.linear[r];
			while (vec) {
				int p = 63 - std::countl_zero(vec);
				auto it = pivots.find(p);
				if (it == pivots.end()) {
					pivots[p] = {vec, b};
					vec = 0;
					b = 0;
					break;
				}
				vec ^= it->second.first;
				b ^= it->second.second;
			}
			if (vec == 0 && b == 1)
				throw AnchorUnsatisfiable("inconsistent sign conditions near: " + cal.names[r]);
		}
		std::vector<int> free_bits;
		for (size_t i = 0; i < cal.vars.size(); ++i)
			if (!pivots.count(int(i)))
				free_bits.push_back(int(i));
		if (free_bits.size() > 24)
			throw std::logic_error("calibration search space unexpectedly large");

		auto assign = [&](uint64_t combo) {
			Mask x = 0;
			for (size_t i = 0; i < free_bits.size(); ++i)
				if (combo >> i & 1)
					x |= Mask(1) << free_bits[i];
			for (auto const &[p, row] : pivots) { // ascending pivot order
				int v = row.second;
				Mask lower = row.first & ((Mask(1) << p) - 1);
				v ^= std::popcount(lower & x) & 1;
				if (v)
					x |= Mask(1) << p;
			}
			return x;
		};
		auto hard_ok = [&](Mask x) {
			for (auto const &eq : cal.hard) {
				Rat tot = 0;
				for (auto const &t : eq)
					tot += (std::popcount(t.m & x) & 1) ? -t.c : t.c;
				if (tot != 0)
					return false;
			}
			return true;
		};
		bool found = false;
		Mask sol = 0;
		for (uint64_t combo = 0; combo < (uint64_t(1) << free_bits.size()); ++combo) {
			Mask x = assign(combo);
			if (hard_ok(x)) {
				sol = x;
				found = true;
				break;
			}
		}
		if (!found)
			throw AnchorUnsatisfiable("no sign assignment satisfies all anchors");

		// translate the resigning into the extraspecial signature
		auto eps = [&](int pos_idx) {
			auto it = cal.var_of.find(pos(pos_idx));
			if (it == cal.var_of.end())
				return 1;
			return (sol >> it->second & 1) ? -1 : 1;
		};
		std::vector<int8_t> sig(kNumPositive, 1);
		for (int g = 0; g < kNumPositive; ++g) {
			if (es_[g].first < 0)
				continue;
			auto [a, b] = es_[g];
			sig[g] = int8_t(eps(a) * eps(b) * eps(g) * n_pos(a, b));
		}
		es_sign_ = sig;
		std::ostringstream id;
		id << "es1-" << std::hex;
		int acc = 0, nb = 0;
		for (int g = 0; g < kNumPositive; ++g) {
			if (es_[g].first < 0)
				continue;
			acc = (acc << 1) | (sig[g] < 0 ? 1 : 0);
			if (++nb == 4) {
				id << acc;
				acc = 0;
				nb = 0;
			}
		}
		if (nb)
			id << (acc << (4 - nb));
		convention_id_ = id.str();
	}

	// (b, z) for a basis bracket result against a basis vector, machine integers
	long form_basis(BasisBracket const &b, int z) const
	{
		if (b.coroot) {
			if (z < 2 * kNumPositive)
				return 0;
			long s = 0;
			int zi = z - 2 * kNumPositive;
			for (int k = 0; k < 8; ++k)
				s += long(b.h[k]) * rs_->cartan(k + 1, zi + 1);
			return s;
		}
		if (b.target < 0)
			return 0;
		return z == opposite(b.target) ? b.coeff : 0;
	}

	void jacobi_accumulate(int i, int j, int k, std::array<long, kDim> &acc,
	                       std::vector<int> &touched) const
	{
		auto emit = [&](int idx, long c) {
			if (c == 0)
				return;
			if (acc[idx] == 0)
				touched.push_back(idx);
			acc[idx] += c;
		};
		auto emit_bb = [&](BasisBracket const &bb, long scale) {
			if (bb.coroot) {
				for (int t = 0; t < 8; ++t)
					emit(2 * kNumPositive + t, scale * bb.h[t]);
			} else if (bb.target >= 0)
				emit(bb.target, scale * bb.coeff);
		};
		auto add_term = [&](int a, int b, int c) { // [[a,b],c]
			auto inner = bracket_basis(a, b);
			if (inner.zero())
				return;
			if (inner.coroot) {
				for (int t = 0; t < 8; ++t)
					if (inner.h[t])
						emit_bb(bracket_basis(2 * kNumPositive + t, c), inner.h[t]);
			} else
				emit_bb(bracket_basis(inner.target, c), inner.coeff);
		};
		add_term(i, j, k);
		add_term(j, k, i);
		add_term(k, i, j);
	}

	std::string serialize() const
	{
		std::ostringstream os;
		os << "E8 v1 " << convention_id_ << "\n";
		auto emit_root = [&](Root const &r) {
			for (int c : r)
				os << " " << c;
		};
		for (int i = 0; i < 2 * kNumPositive; ++i)
			for (int j = i + 1; j < 2 * kNumPositive; ++j) {
				if (sumidx_[i][j] < 0)
					continue;
				Root a = i < kNumPositive ? pos(i) : -pos(i - kNumPositive);
				Root b = j < kNumPositive ? pos(j) : -pos(j - kNumPositive);
				os << "N";
				emit_root(a);
				emit_root(b);
				os << " " << int(nsigned_[i][j]) << "\n";
			}
		return os.str();
	}

	RootSystem const *rs_;
	std::vector<std::array<int8_t, kNumPositive>> npos_;
	std::vector<std::array<int8_t, 2 * kNumPositive>> nsigned_;
	std::vector<std::array<int16_t, 2 * kNumPositive>> sumidx_;
	int root_weight_[2 * kNumPositive][8] = {};
	std::vector<std::pair<int, int>> es_;
	std::vector<int8_t> es_sign_;
	std::string convention_id_ = "es1-uncalibrated";
};

} // namespace e8lie
