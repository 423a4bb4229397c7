#pragma once

#include "e8lie/rational.hpp"
#include "e8lie/roots.hpp"

#include <map>
#include <sstream>
#include <string>

namespace e8lie {

// Basis order: e_alpha for the 120 positive roots (0..119), f_alpha (120..239),
// then the simple coroots h_1..h_8 (240..247).
inline constexpr int kDim = 248;
inline constexpr int kNumPositive = 120;

enum class BasisKind { PositiveRootVector, NegativeRootVector, Coroot };

struct BasisIndex
{
	BasisKind kind;
	int n; // positive-root index, or coroot index 0..7

	static BasisIndex of(int idx)
	{
		if (idx < kNumPositive)
			return {BasisKind::PositiveRootVector, idx};
		if (idx < 2 * kNumPositive)
			return {BasisKind::NegativeRootVector, idx - kNumPositive};
		return {BasisKind::Coroot, idx - 2 * kNumPositive};
	}
	int flat() const
	{
		switch (kind) {
		case BasisKind::PositiveRootVector: return n;
		case BasisKind::NegativeRootVector: return kNumPositive + n;
		default: return 2 * kNumPositive + n;
		}
	}
};

/// sparse exact-rational vector over the fixed Chevalley basis order
class LieElement
{
  public:
	LieElement() = default;

	Rat coeff(int idx) const
	{
		auto it = terms_.find(idx);
		return it == terms_.end() ? Rat(0) : it->second;
	}

	void add(int idx, Rat const &c)
	{
		if (c == 0)
			return;
		auto [it, fresh] = terms_.try_emplace(idx, c);
		if (!fresh) {
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	LieElement &operator+=(LieElement const &o)
	{
		for (auto const &[k, v] : o.terms_)
			add(k, v);
		return *this;
	}

	LieElement &axpy(Rat const &a, LieElement const &o)
	{
		if (a == 0)
			return *this;
		for (auto const &[k, v] : o.terms_)
			add(k, a * v);
		return *this;
	}

	LieElement operator*(Rat const &a) const
	{
		LieElement r;
		if (a != 0)
			for (auto const &[k, v] : terms_)
				r.terms_.emplace(k, v * a);
		return r;
	}

	LieElement operator+(LieElement const &o) const
	{
		LieElement r = *this;
		r += o;
		return r;
	}
	LieElement operator-(LieElement const &o) const
	{
		LieElement r = *this;
		r.axpy(Rat(-1), o);
		return r;
	}
	LieElement operator-() const { return *this * Rat(-1); }

	bool is_zero() const { return terms_.empty(); }
	bool operator==(LieElement const &o) const { return terms_ == o.terms_; }

	std::map<int, Rat> const &terms() const { return terms_; }

	static LieElement basis(int idx)
	{
		LieElement x;
		x.add(idx, Rat(1));
		return x;
	}
	static LieElement e_vec(RootSystem const &rs, Root const &a)
	{
		int i = rs.positive_index(a);
		if (i >= 0)
			return basis(i);
		i = rs.positive_index(-a);
		if (i < 0)
			throw std::invalid_argument("not a root");
		return basis(kNumPositive + i);
	}
	static LieElement h_vec(int i) { return basis(2 * kNumPositive + (i - 1)); }

	std::string str(RootSystem const &rs) const
	{
		if (terms_.empty())
			return "0";
		std::ostringstream os;
		bool first = true;
		for (auto const &[k, v] : terms_) {
			os << (first ? "" : " + ") << "(" << v.str() << ")*";
			auto b = BasisIndex::of(k);
			if (b.kind == BasisKind::Coroot)
				os << "h" << (b.n + 1);
			else {
				os << (b.kind == BasisKind::PositiveRootVector ? "e[" : "f[");
				auto const &r = rs.positive()[b.n];
				for (int i = 0; i < 8; ++i)
					os << r[i] << (i == 7 ? "]" : ",");
			}
			first = false;
		}
		return os.str();
	}

  private:
	std::map<int, Rat> terms_;
};

} // namespace e8lie
