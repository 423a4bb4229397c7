#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>

using namespace e8lie;

namespace {

// minimal structural validator for the shipped schema: type tags, required
// keys, enums, and array item shapes
bool validate(nlohmann::json const &schema, nlohmann::json const &value)
{
	if (schema.contains("type")) {
		auto ty = schema["type"].get<std::string>();
		if (ty == "object" && !value.is_object())
			return false;
		if (ty == "array" && !value.is_array())
			return false;
		if (ty == "string" && !value.is_string())
			return false;
		if (ty == "boolean" && !value.is_boolean())
			return false;
		if (ty == "number" && !value.is_number())
			return false;
	}
	if (schema.contains("enum")) {
		bool hit = false;
		for (auto const &e : schema["enum"])
			hit |= e == value;
		if (!hit)
			return false;
	}
	if (schema.contains("required"))
		for (auto const &key : schema["required"])
			if (!value.contains(key.get<std::string>()))
				return false;
	if (schema.contains("properties") && value.is_object())
		for (auto const &[key, sub] : schema["properties"].items())
			if (value.contains(key) && !validate(sub, value[key]))
				return false;
	if (schema.contains("items") && value.is_array())
		for (auto const &item : value)
			if (!validate(schema["items"], item))
				return false;
	return true;
}

} // namespace

TEST_CASE("reports are schema-valid and text/json carry the same checks")
{
	std::ifstream sf(E8LIE_SCHEMA_FILE);
	REQUIRE(sf.good());
	auto schema = nlohmann::json::parse(sf);
	for (auto label : {OrbitLabel::A5A1, OrbitLabel::D5a1A2}) {
		auto rep = verify_orbit(test_table(), test_fixture(), label);
		auto j = rep.to_json();
		CHECK(validate(schema, j));
		CHECK(j["all_pass"].get<bool>());
		// round-trip through the serializer
		auto j2 = nlohmann::json::parse(j.dump());
		CHECK(j2 == j);
		// the text rendering carries exactly the same check ids, in order
		std::vector<std::string> text_ids;
		std::istringstream lines(rep.to_text());
		std::string line;
		while (std::getline(lines, line)) {
			std::istringstream ls(line);
			std::string status, id;
			ls >> status >> id;
			if (status == "[PASS]" || status == "[FAIL]")
				text_ids.push_back(id);
		}
		REQUIRE(text_ids.size() == rep.checks.size());
		for (size_t i = 0; i < text_ids.size(); ++i)
			CHECK(text_ids[i] == rep.checks[i].id);
		CHECK(j["checks"].size() == rep.checks.size());
	}
}

TEST_CASE("weights and property reports pass")
{
	auto w = verify_weights();
	CHECK(w.all_pass());
	auto p = property_suite(test_table(), test_fixture(), 42, 2000, false);
	CHECK(p.all_pass());
}

TEST_CASE("acceptance table aggregates the right rows")
{
	std::vector<VerificationReport> reps;
	reps.push_back(verify_orbit(test_table(), test_fixture(), OrbitLabel::A5A1));
	reps.push_back(verify_orbit(test_table(), test_fixture(), OrbitLabel::D5a1A2));
	reps.push_back(verify_weights());
	reps.push_back(property_suite(test_table(), test_fixture(), 42, 2000, false));
	auto rows = acceptance_table(reps);
	REQUIRE(rows.size() == 9);
	for (auto const &row : rows) {
		INFO(row.description);
		CHECK(row.pass);
	}
	// dropping the weights report must fail criterion eight, not crash
	reps.erase(reps.begin() + 2);
	auto rows2 = acceptance_table(reps);
	CHECK_FALSE(rows2[7].pass);
	CHECK(rows2[0].pass);
}
