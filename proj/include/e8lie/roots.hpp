#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace e8lie {

/// a root written over the simple roots, Bourbaki numbering
using Root = std::array<int, 8>;

inline Root operator+(Root const &a, Root const &b)
{
	Root r;
	for (int i = 0; i < 8; ++i)
		r[i] = a[i] + b[i];
	return r;
}

inline Root operator-(Root const &a, Root const &b)
{
	Root r;
	for (int i = 0; i < 8; ++i)
		r[i] = a[i] - b[i];
	return r;
}

inline Root operator-(Root const &a)
{
	Root r;
	for (int i = 0; i < 8; ++i)
		r[i] = -a[i];
	return r;
}

inline int height(Root const &a)
{
	int h = 0;
	for (int c : a)
		h += c;
	return h;
}

inline bool is_zero(Root const &a)
{
	for (int c : a)
		if (c)
			return false;
	return true;
}

/// coefficient of the i-th simple root (i in 1..8)
inline int coefficient(Root const &a, int i)
{
	if (i < 1 || i > 8)
		throw std::out_of_range("simple-root index out of 1..8");
	return a[i - 1];
}

/// total order: height, then lexicographic on coefficients
struct RootOrder
{
	bool operator()(Root const &a, Root const &b) const
	{
		int ha = height(a), hb = height(b);
		if (ha != hb)
			return ha < hb;
		return a < b;
	}
};

/// The E8 root system: 240 roots over the simple basis, plus the Cartan matrix.
/// Immutable after construction; deterministic ordering.
class RootSystem
{
  public:
	RootSystem()
	{
		for (int i = 0; i < 8; ++i) {
			cartan_[i][i] = 2;
			simple_[i] = Root{};
			simple_[i][i] = 1;
		}
		static constexpr int edges[7][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6},
		                                    {6, 7}, {7, 8}, {2, 4}};
		for (auto [a, b] : edges)
			cartan_[a - 1][b - 1] = cartan_[b - 1][a - 1] = -1;

		// close the simple roots under the root-string criterion
		std::vector<Root> frontier(simple_.begin(), simple_.end());
		std::map<Root, bool> seen;
		for (auto const &s : simple_)
			seen[s] = true;
		while (!frontier.empty()) {
			std::vector<Root> next;
			for (auto const &r : frontier) {
				for (auto const &s : simple_) {
					Root cand = r + s;
					if (seen.count(cand))
						continue;
					int p = 0;
					Root t = r - s;
					while (seen.count(t) || seen.count(-t)) {
						++p;
						t = t - s;
					}
					if (p - pairing(r, s) > 0) {
						seen[cand] = true;
						next.push_back(cand);
					}
				}
			}
			frontier = std::move(next);
		}
		for (auto const &[r, _] : seen)
			positive_.push_back(r);
		std::sort(positive_.begin(), positive_.end(), RootOrder{});
		if (positive_.size() != 120)
			throw std::logic_error("root closure did not produce 120 positive roots");
		for (int i = 0; i < 120; ++i)
			index_[positive_[i]] = i;
	}

	/// all 240 roots: positives in order, then their negatives
	std::vector<Root> roots() const
	{
		std::vector<Root> all(positive_);
		for (auto const &r : positive_)
			all.push_back(-r);
		return all;
	}

	std::vector<Root> const &positive() const { return positive_; }
	Root const &simple(int i) const { return simple_.at(i - 1); }
	Root const &highest() const { return positive_.back(); }
	int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }

	/// symmetric pairing (a,b) with (alpha_i,alpha_j) the Cartan entry
	int pairing(Root const &a, Root const &b) const
	{
		int s = 0;
		for (int i = 0; i < 8; ++i) {
			if (!a[i])
				continue;
			for (int j = 0; j < 8; ++j)
				s += a[i] * cartan_[i][j] * b[j];
		}
		return s;
	}

	bool is_positive(Root const &a) const { return index_.count(a) != 0; }
	bool is_root(Root const &a) const { return index_.count(a) || index_.count(-a); }

	/// index into positive(), or -1
	int positive_index(Root const &a) const
	{
		auto it = index_.find(a);
		return it == index_.end() ? -1 : it->second;
	}

	/// a+b when it is again a root
	std::optional<Root> add_roots(Root const &a, Root const &b) const
	{
		Root s = a + b;
		if (!is_zero(s) && is_root(s))
			return s;
		return std::nullopt;
	}

  private:
	std::array<Root, 8> simple_;
	std::vector<Root> positive_;
	std::map<Root, int> index_;
	int cartan_[8][8] = {};
};

inline RootSystem const &root_system()
{
	static RootSystem const rs;
	return rs;
}

} // namespace e8lie
