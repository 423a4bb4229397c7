#pragma once

#include "e8lie/element.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace e8lie {

struct FixtureError : std::runtime_error
{
	explicit FixtureError(std::string const &what) : std::runtime_error(what) {}
};

/// one term of a transcribed element: rational coefficient on a signed root
struct ElementTerm
{
	Rat coeff;
	Root root; // negated tuple = f-vector
};

struct ElementFormula
{
	std::string orbit, name, tag;
	std::vector<ElementTerm> terms;
};

/// transcribed identity  [x, y] == scale * rhs   (rhs empty means 0)
struct IdentityAnchor
{
	std::string orbit, x, y, rhs, tag;
	int scale = 0;
};

/// transcribed structure constant N_{a,b} on signed roots
struct NConstAnchor
{
	Root a, b;
	int value;
	std::string tag;
};

/// quoted value of a named computed expression
struct ValueAnchor
{
	std::string id, tag;
	Rat target;
};

/// Transcription of the source data driving sign calibration and the
/// orbit constructions. Single point of audit; read, never embedded.
struct Fixture
{
	std::vector<NConstAnchor> nconsts;
	std::vector<ElementFormula> elements;
	std::vector<IdentityAnchor> identities;
	std::vector<ValueAnchor> values;

	ElementFormula const &element(std::string const &orbit, std::string const &name) const
	{
		for (auto const &e : elements)
			if (e.orbit == orbit && e.name == name)
				return e;
		throw FixtureError("fixture has no element '" + name + "' for orbit " + orbit);
	}

	Rat value(std::string const &id) const
	{
		for (auto const &v : values)
			if (v.id == id)
				return v.target;
		throw FixtureError("fixture has no value anchor '" + id + "'");
	}

	static Fixture load(std::string const &path)
	{
		std::ifstream in(path);
		if (!in)
			throw FixtureError("cannot open fixture file: " + path);
		Fixture fx;
		std::string line;
		int lineno = 0;
		bool header_seen = false;
		auto fail = [&](std::string const &msg) {
			throw FixtureError(path + ":" + std::to_string(lineno) + ": " + msg);
		};
		while (std::getline(in, line)) {
			++lineno;
			auto hash = line.find('#');
			if (hash != std::string::npos)
				line.erase(hash);
			std::istringstream ls(line);
			std::string kw;
			if (!(ls >> kw))
				continue;
			if (kw == "fixture") {
				std::string type, ver;
				if (!(ls >> type >> ver) || type != "e8")
					fail("bad fixture header");
				header_seen = true;
			} else if (kw == "nconst") {
				NConstAnchor n;
				for (int i = 0; i < 8; ++i)
					if (!(ls >> n.a[i]))
						fail("nconst: bad first root");
				for (int i = 0; i < 8; ++i)
					if (!(ls >> n.b[i]))
						fail("nconst: bad second root");
				if (!(ls >> n.value) || (n.value != 1 && n.value != -1))
					fail("nconst: value must be +-1");
				ls >> n.tag;
				fx.nconsts.push_back(n);
			} else if (kw == "elem") {
				std::string orbit, name, coeff;
				if (!(ls >> orbit >> name >> coeff))
					fail("elem: bad header fields");
				ElementTerm t;
				t.coeff = Rat(coeff);
				for (int i = 0; i < 8; ++i)
					if (!(ls >> t.root[i]))
						fail("elem: bad root tuple");
				std::string tag;
				ls >> tag;
				auto *e = fx.find_element(orbit, name);
				if (!e) {
					fx.elements.push_back({orbit, name, tag, {}});
					e = &fx.elements.back();
				}
				e->terms.push_back(t);
			} else if (kw == "ident") {
				IdentityAnchor id;
				if (!(ls >> id.orbit >> id.x >> id.y >> id.scale >> id.rhs))
					fail("ident: bad fields");
				if (id.rhs == "-")
					id.rhs.clear();
				ls >> id.tag;
				fx.identities.push_back(id);
			} else if (kw == "value") {
				ValueAnchor v;
				std::string target;
				if (!(ls >> v.id >> target))
					fail("value: bad fields");
				v.target = Rat(target);
				ls >> v.tag;
				fx.values.push_back(v);
			} else {
				fail("unknown keyword '" + kw + "'");
			}
		}
		if (!header_seen)
			fail("missing 'fixture e8 v1' header");
		return fx;
	}

  private:
	ElementFormula *find_element(std::string const &orbit, std::string const &name)
	{
		for (auto &e : elements)
			if (e.orbit == orbit && e.name == name)
				return &e;
		return nullptr;
	}
};

} // namespace e8lie
