#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacspec/models.hpp"
#include "jacspec/report.hpp"
#include "jacspec/verify.hpp"

using namespace jacspec;

TEST_CASE("spectral result JSON round-trip is exact") {
    auto m = confluent_model({0.0, 1.0, 1.0});
    ToleranceConfig cfg;
    const SpectralResult r = find_real_eigenvalues(m, 0.5, 4.5, cfg);
    REQUIRE(!r.eigenvalues.empty());

    const Json j = to_json(r);
    const SpectralResult back = spectral_result_from_json(j);
    CHECK(back == r);

    // serialization itself is deterministic
    CHECK(j.dump() == to_json(back).dump());
}

TEST_CASE("round-trip through the printed text preserves every float") {
    auto m = qbessel_model({0.8, 0.5});
    ToleranceConfig cfg;
    cfg.truncation_N = 40;
    const SpectralResult r = find_real_eigenvalues(m, 0.1, 1.1, cfg);
    const std::string text = to_json(r).dump(2);
    const SpectralResult back = spectral_result_from_json(Json::parse(text));
    CHECK(back == r);
}

TEST_CASE("CSV flattening has one row per eigenvalue") {
    auto m = confluent_model({0.0, 1.0, 1.0});
    const SpectralResult r = find_real_eigenvalues(m, 0.5, 4.5, {});
    const std::string csv = to_csv(r);
    const auto rows = std::count(csv.begin(), csv.end(), '\n');
    CHECK(std::size_t(rows) == r.eigenvalues.size() + 1); // header + data
    CHECK(csv.rfind("z_re,z_im,", 0) == 0);
}

TEST_CASE("report envelope carries the fixed key order") {
    Report rep;
    rep.command = "spectrum";
    rep.model = "confluent";
    const std::string s = rep.to_json().dump();
    CHECK(s.find("\"command\"") < s.find("\"model\""));
    CHECK(s.find("\"model\"") < s.find("\"params\""));
    CHECK(s.find("\"params\"") < s.find("\"tolerances\""));
    CHECK(s.find("\"results\"") < s.find("\"errors\""));
    CHECK(s.find("\"errors\"") < s.find("\"wall_time_ms\""));
}

TEST_CASE("verify registry exposes the twelve suites") {
    const auto names = verify_suite_names();
    CHECK(names.size() == 12);
    CHECK_THROWS_AS((void)run_verify_suite("no-such-suite"), DomainError);

    // smoke-run the cheapest suite end to end
    const SuiteResult r = run_verify_suite("qsum-lemma");
    CHECK(r.pass);
    CHECK(r.max_err < 1e-11);
}
