#pragma once

#include "e8lie/chevalley.hpp"

#include <numeric>
#include <optional>

namespace e8lie {

/// sparse exact-rational operator on the 248-dimensional algebra
struct LinearOperator
{
	int dim = kDim;
	std::map<std::pair<int, int>, Rat> entries; // (row, col) -> value

	void add(int r, int c, Rat const &v)
	{
		if (v == 0)
			return;
		auto [it, fresh] = entries.try_emplace({r, c}, v);
		if (!fresh) {
			it->second += v;
			if (it->second == 0)
				entries.erase(it);
		}
	}

	LieElement apply(LieElement const &x) const
	{
		// column-sparse application
		LieElement out;
		for (auto const &[rc, v] : entries) {
			Rat c = x.coeff(rc.second);
			if (c != 0)
				out.add(rc.first, v * c);
		}
		return out;
	}

	LinearOperator operator-(LinearOperator const &o) const
	{
		LinearOperator r = *this;
		for (auto const &[rc, v] : o.entries)
			r.add(rc.first, rc.second, -v);
		return r;
	}

	static LinearOperator identity(Rat const &scale = Rat(1))
	{
		LinearOperator id;
		for (int i = 0; i < kDim; ++i)
			id.add(i, i, scale);
		return id;
	}
};

/// the matrix of ad x in the fixed basis order
inline LinearOperator ad_operator(ChevalleyTable const &t, LieElement const &x)
{
	LinearOperator op;
	for (int col = 0; col < kDim; ++col) {
		for (auto const &[i, ci] : x.terms()) {
			auto bb = t.bracket_basis(i, col);
			if (bb.zero())
				continue;
			if (bb.coroot) {
				for (int k = 0; k < 8; ++k)
					if (bb.h[k])
						op.add(2 * kNumPositive + k, col, ci * bb.h[k]);
			} else
				op.add(bb.target, col, ci * bb.coeff);
		}
	}
	return op;
}

namespace detail {

/// Integer-preserving Gauss-Jordan with deterministic pivoting (first nonzero
/// column in basis order, first available row) and gcd row normalization.
/// The result is the unique primitive-integer scaling of the reduced echelon
/// form, so equal row spaces produce identical matrices.
struct IntMatrix
{
	int cols = 0;
	std::vector<std::vector<Int>> rows;
	std::vector<int> pivots;

	static void normalize(std::vector<Int> &row)
	{
		Int g = 0;
		for (auto const &v : row)
			if (v != 0)
				g = boost::multiprecision::gcd(g, boost::multiprecision::abs(v));
		if (g == 0)
			return;
		Int lead = 0;
		for (auto const &v : row)
			if (v != 0) {
				lead = v;
				break;
			}
		if (lead < 0)
			g = -g;
		if (g != 1)
			for (auto &v : row)
				v /= g;
	}

	void reduce()
	{
		pivots.clear();
		size_t r = 0;
		for (int c = 0; c < cols && r < rows.size(); ++c) {
			size_t pr = r;
			while (pr < rows.size() && rows[pr][c] == 0)
				++pr;
			if (pr == rows.size())
				continue;
			std::swap(rows[r], rows[pr]);
			normalize(rows[r]);
			for (size_t i = 0; i < rows.size(); ++i) {
				if (i == r || rows[i][c] == 0)
					continue;
				Int a = rows[r][c], b = rows[i][c];
				for (int k = 0; k < cols; ++k)
					rows[i][k] = rows[i][k] * a - rows[r][k] * b;
				normalize(rows[i]);
			}
			pivots.push_back(c);
			++r;
		}
		rows.resize(r);
	}

	/// reduces an external rational row against this reduced matrix
	std::vector<Rat> residual(std::vector<Rat> row) const
	{
		for (size_t r = 0; r < pivots.size(); ++r) {
			int p = pivots[r];
			if (row[p] == 0)
				continue;
			Rat f = row[p] / Rat(rows[r][p]);
			for (int c = 0; c < cols; ++c)
				if (rows[r][c] != 0)
					row[c] -= f * Rat(rows[r][c]);
		}
		return row;
	}
};

inline std::vector<Int> clear_denominators(std::vector<Rat> const &row)
{
	Int l = 1;
	for (auto const &v : row)
		if (v != 0)
			l = boost::multiprecision::lcm(l, denominator(v));
	std::vector<Int> out(row.size());
	for (size_t i = 0; i < row.size(); ++i)
		out[i] = numerator(row[i]) * (l / denominator(row[i]));
	return out;
}

} // namespace detail

/// A subspace held in canonical reduced form; equality of spans is equality
/// of the representation.
class Subspace
{
  public:
	Subspace() { mat_.cols = kDim; }

	static Subspace span(std::vector<LieElement> const &vecs)
	{
		Subspace s;
		for (auto const &v : vecs) {
			if (v.is_zero())
				continue;
			std::vector<Rat> row(kDim, Rat(0));
			for (auto const &[k, c] : v.terms())
				row[k] = c;
			s.mat_.rows.push_back(detail::clear_denominators(row));
		}
		s.mat_.reduce();
		return s;
	}

	int dim() const { return int(mat_.rows.size()); }

	std::vector<LieElement> basis() const
	{
		std::vector<LieElement> out;
		for (auto const &row : mat_.rows) {
			LieElement x;
			for (int c = 0; c < kDim; ++c)
				if (row[c] != 0)
					x.add(c, Rat(row[c]));
			out.push_back(std::move(x));
		}
		return out;
	}

	bool contains(LieElement const &v) const
	{
		std::vector<Rat> row(kDim, Rat(0));
		for (auto const &[k, c] : v.terms())
			row[k] = c;
		auto res = mat_.residual(std::move(row));
		for (auto const &x : res)
			if (x != 0)
				return false;
		return true;
	}

	bool operator==(Subspace const &o) const
	{
		return mat_.rows == o.mat_.rows && mat_.pivots == o.mat_.pivots;
	}

	Subspace intersect(Subspace const &o) const
	{
		// x = sum a_i u_i = sum b_j v_j ; kernel of [U^T | -V^T]
		int p = dim(), q = o.dim();
		int n = p + q;
		std::vector<std::vector<Int>> rows(kDim, std::vector<Int>(n, Int(0)));
		for (int i = 0; i < p; ++i)
			for (int c = 0; c < kDim; ++c)
				rows[c][i] = mat_.rows[i][c];
		for (int j = 0; j < q; ++j)
			for (int c = 0; c < kDim; ++c)
				rows[c][p + j] = -o.mat_.rows[j][c];
		detail::IntMatrix m;
		m.cols = n;
		m.rows = std::move(rows);
		m.reduce();
		// free columns give coefficient vectors; map through the first basis
		std::vector<LieElement> gens;
		auto mybasis = basis();
		std::vector<bool> is_pivot(n, false);
		for (int c : m.pivots)
			is_pivot[c] = true;
		for (int f = 0; f < n; ++f) {
			if (is_pivot[f])
				continue;
			LieElement x;
			for (size_t r = 0; r < m.pivots.size(); ++r) {
				int pc = m.pivots[r];
				if (pc < p && m.rows[r][f] != 0)
					x.axpy(Rat(-m.rows[r][f], m.rows[r][pc]), mybasis[pc]);
			}
			if (f < p)
				x += mybasis[f];
			if (!x.is_zero())
				gens.push_back(std::move(x));
		}
		return span(gens);
	}

  private:
	detail::IntMatrix mat_;
};

/// canonical basis of the null space by integer-preserving elimination
inline Subspace kernel(LinearOperator const &op)
{
	// rows of the matrix as integer equations
	std::map<int, std::vector<std::pair<int, Rat>>> rowmap;
	for (auto const &[rc, v] : op.entries)
		rowmap[rc.first].emplace_back(rc.second, v);
	detail::IntMatrix m;
	m.cols = op.dim;
	for (auto const &[r, cols] : rowmap) {
		std::vector<Rat> row(op.dim, Rat(0));
		for (auto const &[c, v] : cols)
			row[c] = v;
		m.rows.push_back(detail::clear_denominators(row));
	}
	m.reduce();
	std::vector<bool> is_pivot(op.dim, false);
	for (int c : m.pivots)
		is_pivot[c] = true;
	std::vector<LieElement> gens;
	for (int f = 0; f < op.dim; ++f) {
		if (is_pivot[f])
			continue;
		LieElement x;
		x.add(f, Rat(1));
		for (size_t r = 0; r < m.pivots.size(); ++r) {
			int p = m.pivots[r];
			if (m.rows[r][f] != 0)
				x.add(p, Rat(-m.rows[r][f], m.rows[r][p]));
		}
		gens.push_back(std::move(x));
	}
	return Subspace::span(gens);
}

inline int rank(LinearOperator const &op) { return op.dim - kernel(op).dim(); }

inline Subspace eigenspace(LinearOperator const &op, Rat const &ev)
{
	return kernel(op - LinearOperator::identity(ev));
}

/// one solution of op(x) = target, if consistent; deterministic
inline std::optional<LieElement> solve(LinearOperator const &op, LieElement const &target)
{
	std::map<int, std::vector<std::pair<int, Rat>>> rowmap;
	for (auto const &[rc, v] : op.entries)
		rowmap[rc.first].emplace_back(rc.second, v);
	for (auto const &[k, v] : target.terms())
		rowmap.try_emplace(k); // ensure inconsistent rows are present
	detail::IntMatrix m;
	m.cols = op.dim + 1;
	for (auto const &[r, cols] : rowmap) {
		std::vector<Rat> row(op.dim + 1, Rat(0));
		for (auto const &[c, v] : cols)
			row[c] = v;
		row[op.dim] = target.coeff(r);
		m.rows.push_back(detail::clear_denominators(row));
	}
	m.reduce();
	LieElement x;
	for (size_t r = 0; r < m.pivots.size(); ++r) {
		int p = m.pivots[r];
		if (p == op.dim)
			return std::nullopt; // pivot in the augmented column
		if (m.rows[r][op.dim] != 0)
			x.add(p, Rat(m.rows[r][op.dim], m.rows[r][p]));
	}
	return x;
}

/// canonical basis of span{[x,y] : x in a, y in b}
inline Subspace span_brackets(ChevalleyTable const &t, Subspace const &a, Subspace const &b)
{
	std::vector<LieElement> gens;
	for (auto const &x : a.basis())
		for (auto const &y : b.basis())
			gens.push_back(t.bracket(x, y));
	return Subspace::span(gens);
}

/// the subspace of w annihilated by ad x for every listed x
inline Subspace joint_annihilator(ChevalleyTable const &t, Subspace const &w,
                                  std::vector<LieElement> const &actors)
{
	auto wb = w.basis();
	int n = int(wb.size());
	if (n == 0)
		return w;
	std::vector<std::vector<Rat>> rows;
	for (auto const &a : actors) {
		std::map<int, std::vector<Rat>> coord_rows;
		for (int j = 0; j < n; ++j) {
			LieElement img = t.bracket(a, wb[j]);
			for (auto const &[k, c] : img.terms()) {
				auto [it, fresh] = coord_rows.try_emplace(k, std::vector<Rat>(n, Rat(0)));
				it->second[j] = c;
			}
		}
		for (auto &[k, row] : coord_rows)
			rows.push_back(std::move(row));
	}
	detail::IntMatrix m;
	m.cols = n;
	for (auto const &row : rows)
		m.rows.push_back(detail::clear_denominators(row));
	m.reduce();
	std::vector<bool> is_pivot(n, false);
	for (int c : m.pivots)
		is_pivot[c] = true;
	std::vector<LieElement> gens;
	for (int f = 0; f < n; ++f) {
		if (is_pivot[f])
			continue;
		LieElement x = wb[f];
		for (size_t r = 0; r < m.pivots.size(); ++r) {
			int p = m.pivots[r];
			if (m.rows[r][f] != 0)
				x.axpy(Rat(-m.rows[r][f], m.rows[r][p]), wb[p]);
		}
		gens.push_back(std::move(x));
	}
	return Subspace::span(gens);
}

} // namespace e8lie
