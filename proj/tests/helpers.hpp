#pragma once

#include "e8lie/report.hpp"

inline e8lie::Fixture const &test_fixture()
{
	static auto const fx = e8lie::Fixture::load(E8LIE_DEFAULT_FIXTURE);
	return fx;
}

inline e8lie::ChevalleyTable const &test_table()
{
	static auto const t = e8lie::ChevalleyTable::build(e8lie::root_system(), test_fixture());
	return t;
}

inline e8lie::OrbitData const &test_orbit(e8lie::OrbitLabel label)
{
	static auto const a5 = e8lie::orbit_data(test_table(), test_fixture(), e8lie::OrbitLabel::A5A1);
	static auto const d5 =
	    e8lie::orbit_data(test_table(), test_fixture(), e8lie::OrbitLabel::D5a1A2);
	return label == e8lie::OrbitLabel::A5A1 ? a5 : d5;
}

inline e8lie::LieElement ev(e8lie::Root const &r)
{
	return e8lie::LieElement::e_vec(e8lie::root_system(), r);
}
