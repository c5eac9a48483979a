// SPDX-License-Identifier: MIT
#include <filesystem>

#include "doctest.h"
#include "qnet/io.hpp"

using namespace qnet;

namespace {

const std::filesystem::path kData = QNET_TEST_DATA;

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qnet_test_" + name);
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("SHA-256 of a known message") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  }

  TEST_CASE("operators survive a JSON round trip") {
    Rng rng(51);
    const SystemLayout l({{"x", 2, Role::Out, 2}, {"y", 3, Role::In, 1}});
    const LabeledOperator a(l, random_hermitian(6, rng));
    const LabeledOperator b = operator_from_json(Json::parse(operator_to_json(a).dump()));
    CHECK(b.layout == a.layout);
    CHECK(max_abs(b.matrix() - a.matrix()) == 0.0);
  }

  TEST_CASE("witnesses written to disk re-validate on reload") {
    Rng rng(52);
    const SystemLayout l({{"A1in", 2, Role::In, 1}, {"A1out", 2, Role::Out, 1}});
    const ConstraintSet cs = dual_comb_constraints(l);
    const EntropyValue v = d_max_to_set(LabeledOperator(l, random_psd(4, rng)), cs);
    REQUIRE(v.witness);
    const auto path = temp_file("witness.json");
    write_operator_file(path, *v.witness);
    const LabeledOperator back = read_operator_file(path);
    std::filesystem::remove(path);
    CHECK(validate(back, cs, 1e-8).member);
    CHECK(max_abs(back.matrix() - v.witness->matrix()) == 0.0);
  }

  TEST_CASE("malformed inputs name the offending field") {
    try {
      load_problem(kData / "malformed_dims.json");
      FAIL("expected an input error");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("problem.objective.matrix.entries") != std::string::npos);
    }
    const Json unknown = Json::parse(R"({"task": "max_score", "objective": {"builder": "ocb"}, "colour": 1})");
    try {
      parse_problem(unknown, ".");
      FAIL("expected an input error");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("colour") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_problem(Json::parse(R"({"task": "fly"})"), "."), InputError);
    CHECK_THROWS_AS(operator_from_json(Json::parse(R"({"labels": ["a"], "dims": [2], "entries": [[1, 2], [3, 4]]})")),
                    InputError);
  }

  TEST_CASE("problem runs are reproducible") {
    const ProblemFile p = load_problem(kData / "inversion_d2.json");
    const RunResult a = run_problem(p, {true, {}});
    const RunResult b = run_problem(p, {true, {}});
    CHECK(a.exit_code == 0);
    CHECK(a.report["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(std::abs(a.report["value"].get<double>() - b.report["value"].get<double>()) <= 1e-9);
    CHECK(std::abs(a.report["dual_value"].get<double>() - a.report["value"].get<double>()) <= 1e-6);
    CHECK(a.report["input_digest"] == b.report["input_digest"]);
  }

  TEST_CASE("reference problem files") {
    const RunResult ocb = run_problem(load_problem(kData / "ocb_dmax.json"), {});
    CHECK(ocb.exit_code == 0);
    CHECK(ocb.report["value"].get<double>() == doctest::Approx(std::log2((1 + 1 / std::sqrt(2.0)) / 2)).epsilon(1e-6));
    const RunResult phi = run_problem(load_problem(kData / "phi_plus_min_entropy.json"), {});
    CHECK(phi.report["value"].get<double>() == doctest::Approx(-1.0).epsilon(1e-6));
  }

  TEST_CASE("exit codes follow the solver status") {
    CHECK(exit_code_for(SdpStatus::Optimal) == 0);
    CHECK(exit_code_for(SdpStatus::Infeasible) == 2);
    CHECK(exit_code_for(SdpStatus::Unbounded) == 2);
    CHECK(exit_code_for(SdpStatus::Inaccurate) == 3);
  }
}
