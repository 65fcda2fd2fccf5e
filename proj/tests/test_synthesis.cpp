#include <doctest.h>

#include "rgw/automata.hpp"
#include "rgw/errors.hpp"
#include "rgw/grundy.hpp"
#include "rgw/synthesis.hpp"

#include "test_helpers.hpp"

#include <string>

using namespace rgw;
using rgwtest::w2;

TEST_SUITE("synthesis") {

TEST_CASE("inference recovers the mod-4 machine from its table") {
    RewriteSystem sys = rgwtest::load_game("a2b");
    GrundyTable table = build_table_up_to(sys, 8);
    InferenceOutcome out = infer_moore(sys, 8, table);
    REQUIRE(out.machine.has_value());
    CHECK(out.classes == 4);
    CHECK(moore_isomorphic(*out.machine,
                           parse_moore(rgwtest::slurp(rgwtest::fixtures_dir() / "fig1.moore"))));
}

TEST_CASE("inference recovers the eight-state machine for the mixed game") {
    RewriteSystem sys = rgwtest::load_game("a123b");
    GrundyTable table = build_table_up_to(sys, 10);
    InferenceOutcome out = infer_moore(sys, 10, table);
    REQUIRE(out.machine.has_value());
    CHECK(out.machine->num_states() == 8);
    CHECK(moore_isomorphic(*out.machine,
                           parse_moore(rgwtest::slurp(rgwtest::fixtures_dir() / "fig4.moore"))));
}

TEST_CASE("inference on a game with no machine yields none or a refutable one") {
    RewriteSystem sys = rgwtest::load_game("a2b2");
    GrundyTable table = build_table_up_to(sys, 10);
    InferenceOutcome out = infer_moore(sys, 10, table);
    if (out.machine.has_value()) {
        CHECK(!verify_grundy_moore(sys, *out.machine).verified);
    } else {
        CHECK(!out.detail.empty());
    }
}

TEST_CASE("inference refuses a table shorter than the training length") {
    RewriteSystem sys = rgwtest::load_game("a2b");
    GrundyTable table = build_table_up_to(sys, 4);
    CHECK_THROWS_AS(infer_moore(sys, 6, table), DomainError);
}

TEST_CASE("full loop proves the shipped games") {
    RewriteSystem sys = rgwtest::load_game("a2b");
    SynthesisResult res = synthesize_and_verify(sys, 4, 10);
    CHECK(res.status == SynthesisResult::Status::Proven);
    REQUIRE(res.machine.has_value());
    CHECK(res.machine->num_states() <= 4);
    CHECK(res.report.verified);
    CHECK(!res.attempts.empty());

    // The proved machine matches the shipped certificate up to minimization.
    MooreMachine shipped =
        parse_moore(rgwtest::slurp(rgwtest::fixtures_dir() / "fig1.moore"));
    CHECK(moore_isomorphic(minimize_moore(*res.machine), minimize_moore(shipped)));
}

TEST_CASE("full loop proves the three-rule game") {
    RewriteSystem sys = rgwtest::load_game("a12b");
    SynthesisResult res = synthesize_and_verify(sys, 6, 12);
    CHECK(res.status == SynthesisResult::Status::Proven);
    REQUIRE(res.machine.has_value());
    CHECK(res.machine->num_states() <= 12);
    MooreMachine shipped =
        parse_moore(rgwtest::slurp(rgwtest::fixtures_dir() / "fig3.moore"));
    CHECK(moore_isomorphic(minimize_moore(*res.machine), minimize_moore(shipped)));
}

TEST_CASE("full loop never proves the two-power game") {
    RewriteSystem sys = rgwtest::load_game("a2b2");
    SynthesisResult res = synthesize_and_verify(sys, 4, 10);
    CHECK(res.status != SynthesisResult::Status::Proven);
    CHECK(!res.attempts.empty());
}

TEST_CASE("class cap turns into an inconclusive run") {
    RewriteSystem sys = rgwtest::load_game("a2b");
    SynthesisOptions opts;
    opts.class_cap = 2; // the true machine needs 4 classes
    SynthesisResult res = synthesize_and_verify(sys, 4, 6, opts);
    CHECK(res.status == SynthesisResult::Status::Inconclusive);
    CHECK(!res.machine.has_value());
}

TEST_CASE("status names are stable") {
    CHECK(std::string(to_string(SynthesisResult::Status::Proven)) == "Proven");
    CHECK(std::string(to_string(SynthesisResult::Status::Refuted)) == "Refuted");
    CHECK(std::string(to_string(SynthesisResult::Status::Inconclusive)) == "Inconclusive");
}

} // TEST_SUITE
