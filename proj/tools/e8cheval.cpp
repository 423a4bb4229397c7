// Command-line driver: verification reports, table export/import/checks, selftest.
#include "e8lie/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitCalibration = 2;
constexpr int kExitUsage = 64;

struct Session
{
	e8lie::Fixture fixture;
	e8lie::ChevalleyTable table;

	static Session open(std::string const &path)
	{
		auto fx = e8lie::Fixture::load(path);
		auto tbl = e8lie::ChevalleyTable::build(e8lie::root_system(), fx);
		return {std::move(fx), std::move(tbl)};
	}
};

void emit(e8lie::VerificationReport const &rep, std::string const &format,
          std::string const &out_path)
{
	std::string payload =
	    format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_text();
	if (out_path.empty()) {
		std::cout << payload;
	} else {
		std::ofstream out(out_path);
		if (!out)
			throw std::runtime_error("cannot write " + out_path);
		out << payload;
	}
}

void print_criteria(std::vector<e8lie::VerificationReport> const &reps)
{
	std::cout << "release criteria:\n";
	for (auto const &row : e8lie::acceptance_table(reps))
		std::cout << "  criterion " << row.index << ": " << (row.pass ? "PASS" : "FAIL")
		          << "  - " << row.description << "\n";
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact-arithmetic verification of the two 202-dimensional rigid-orbit "
	             "computations in the E8 Lie algebra"};
	app.require_subcommand(1);
	std::string fixture_path = E8LIE_DEFAULT_FIXTURE;
	app.add_option("--fixture", fixture_path, "anchor fixture file")
	    ->capture_default_str();

	auto *verify = app.add_subcommand("verify", "run the full pipeline for one orbit");
	std::string label_arg, format = "text", out_path;
	verify->add_option("label", label_arg, "orbit label: a5a1 | d5a1a2")->required();
	verify->add_option("--format", format, "text | json")
	    ->check(CLI::IsMember({"text", "json"}));
	verify->add_option("--out", out_path, "write the report to a file");

	auto *table = app.add_subcommand("table", "structure-constant table utilities");
	table->require_subcommand(1);
	auto *texport = table->add_subcommand("export", "write the calibrated table");
	std::string export_path;
	texport->add_option("path", export_path)->required();
	auto *timport = table->add_subcommand("import", "read a table file and validate it");
	std::string import_path;
	timport->add_option("path", import_path)->required();
	auto *tcheck = table->add_subcommand("check", "run the property sweeps");
	std::string mode;
	uint64_t seed = 42, nsamples = 100000;
	tcheck->add_option("mode", mode, "full | sampled")
	    ->required()
	    ->check(CLI::IsMember({"full", "sampled"}));
	tcheck->add_option("--seed", seed, "seed for the sampled suite")->capture_default_str();
	tcheck->add_option("--n", nsamples, "sample count")->capture_default_str();

	auto *selftest = app.add_subcommand("selftest", "both orbits, weights, sampled properties");

	try {
		app.parse(argc, argv);
	} catch (CLI::ParseError const &e) {
		int code = app.exit(e);
		return code == 0 ? 0 : kExitUsage;
	}

	try {
		if (verify->parsed()) {
			auto label = e8lie::parse_label(label_arg);
			if (!label) {
				std::cerr << "unknown orbit label '" << label_arg
				          << "' (expected a5a1 or d5a1a2)\n";
				return kExitUsage;
			}
			auto s = Session::open(fixture_path);
			auto rep = verify_orbit(s.table, s.fixture, *label);
			auto wrep = e8lie::verify_weights();
			// orbit-scoped weight rows ride along in the orbit report
			for (auto const &c : wrep.checks)
				if (c.id.find(label_name(*label)) != std::string::npos)
					rep.checks.push_back(c);
			emit(rep, format, out_path);
			return rep.all_pass() ? 0 : kExitFail;
		}
		if (texport->parsed()) {
			auto s = Session::open(fixture_path);
			std::ofstream out(export_path);
			if (!out) {
				std::cerr << "cannot write " << export_path << "\n";
				return kExitFail;
			}
			s.table.export_table(out);
			std::cout << "wrote " << export_path << " (convention " << s.table.convention_id()
			          << ")\n";
			return 0;
		}
		if (timport->parsed()) {
			auto s = Session::open(fixture_path);
			std::ifstream in(import_path);
			if (!in) {
				std::cerr << "cannot read " << import_path << "\n";
				return kExitFail;
			}
			auto imported = e8lie::ChevalleyTable::import_table(in, e8lie::root_system());
			std::string fail;
			bool anchors = imported.anchors_hold(s.fixture, &fail);
			bool same = imported.same_constants(s.table);
			std::cout << "imported convention " << imported.convention_id() << "\n"
			          << "  anchors: " << (anchors ? "pass" : "FAIL at " + fail) << "\n"
			          << "  matches calibrated table: " << (same ? "yes" : "no") << "\n";
			return anchors ? 0 : kExitFail;
		}
		if (tcheck->parsed()) {
			auto s = Session::open(fixture_path);
			auto rep = e8lie::property_suite(s.table, s.fixture, seed, nsamples, mode == "full");
			// deterministic transcript on stdout; timing on stderr
			double secs = rep.wall_seconds;
			rep.wall_seconds = 0;
			std::cout << rep.to_text();
			std::cerr << "wall time: " << secs << "s\n";
			return rep.all_pass() ? 0 : kExitFail;
		}
		if (selftest->parsed()) {
			auto t0 = std::chrono::steady_clock::now();
			auto s = Session::open(fixture_path);
			std::vector<e8lie::VerificationReport> reps;
			reps.push_back(verify_orbit(s.table, s.fixture, e8lie::OrbitLabel::A5A1));
			reps.push_back(verify_orbit(s.table, s.fixture, e8lie::OrbitLabel::D5a1A2));
			reps.push_back(e8lie::verify_weights());
			reps.push_back(e8lie::property_suite(s.table, s.fixture, 42, 20000, false));
			bool ok = true;
			for (auto const &rep : reps) {
				std::cout << rep.to_text() << "\n";
				ok &= rep.all_pass();
			}
			print_criteria(reps);
			double secs =
			    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
			std::cout << "selftest wall time: " << secs << "s\n";
			return ok ? 0 : kExitFail;
		}
	} catch (e8lie::AnchorUnsatisfiable const &e) {
		std::cerr << "calibration failed: " << e.what() << "\n";
		return kExitCalibration;
	} catch (e8lie::FixtureError const &e) {
		std::cerr << "fixture error: " << e.what() << "\n";
		return kExitCalibration;
	} catch (e8lie::TableParseError const &e) {
		std::cerr << "table parse error: " << e.what() << "\n";
		return kExitFail;
	} catch (e8lie::ChecksumMismatch const &e) {
		std::cerr << e.what() << "\n";
		return kExitFail;
	} catch (std::exception const &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitFail;
	}
	return kExitUsage;
}
