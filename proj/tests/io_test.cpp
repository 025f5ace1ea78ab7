#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csdeduce/io.hpp"
#include "csdeduce/prover.hpp"
#include "test_support.hpp"

using namespace csd;

TEST_CASE("dimacs parsing with a header") {
    ParsedProblem p = parse_dimacs("c a comment\np cnf 3 2\n1 -2 0\n2 3 0\n");
    CHECK(p.declared_vars == 3);
    CHECK(p.declared_clauses == 2);
    REQUIRE(p.clauses.size() == 2);
    CHECK(p.clauses[0] == Clause::of({1, -2}));
    CHECK(p.clauses[1] == Clause::of({2, 3}));
    std::vector<int> lines = {3, 4};
    CHECK(p.clause_lines == lines);
    CHECK(p.warnings.empty());
}

TEST_CASE("dimacs parsing without a header") {
    ParsedProblem p = parse_dimacs("1 2 0\n-1 0\n");
    CHECK(p.declared_vars == -1);
    CHECK(p.declared_clauses == -1);
    REQUIRE(p.clauses.size() == 2);
}

TEST_CASE("dimacs free layout") {
    // Clauses may span lines and share lines; comments interleave.
    ParsedProblem p = parse_dimacs("p cnf 4 3\n1 2\nc middle\n3 0 -2 0\n4\n0\n");
    REQUIRE(p.clauses.size() == 3);
    CHECK(p.clauses[0] == Clause::of({1, 2, 3}));
    CHECK(p.clauses[1] == Clause::of({-2}));
    CHECK(p.clauses[2] == Clause::of({4}));
    std::vector<int> lines = {2, 4, 5};
    CHECK(p.clause_lines == lines);
}

TEST_CASE("dimacs structural errors") {
    CHECK_THROWS_WITH_AS(parse_dimacs("p cnf 2\n1 0\n"), "line 1: malformed header",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs("p cnf 2 1\np cnf 2 1\n1 0\n"),
                         "line 2: malformed header", ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs("1 0\np cnf 2 1\n"),
                         "line 2: malformed header", ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs("1 x 0\n"), "line 1: invalid token 'x'",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs("1 0\n0\n"),
                         "line 2: clause terminator with no literals", ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs("1 2000000000 0\n"),
                         "line 1: literal out of range", ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs("1 0\n2 3\n"),
                         "line 2: unterminated final clause", ParseError);
    try {
        parse_dimacs("p cnf 1 1\n\n1 broken 0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("dimacs warnings") {
    ParsedProblem count = parse_dimacs("p cnf 2 3\n1 0\n");
    REQUIRE(count.warnings.size() == 1);
    CHECK(count.warnings[0].find("does not match parsed count") != std::string::npos);

    ParsedProblem extend = parse_dimacs("p cnf 1 1\n1 5 0\n");
    REQUIRE(extend.warnings.size() == 1);
    CHECK(extend.warnings[0].find("universe extended") != std::string::npos);

    ParsedProblem taut = parse_dimacs("p cnf 2 1\n1 -1 2 0\n");
    REQUIRE(taut.warnings.size() == 1);
    CHECK(taut.warnings[0] == "tautological clause at line 2");
    CHECK(taut.clauses[0].is_tautology());
}

TEST_CASE("dimacs emission") {
    ClauseSet s({Clause::of({2, 1}), Clause::of({-3})});
    CHECK(emit_dimacs(s) == "p cnf 3 2\n1 2 0\n-3 0\n");
    CHECK(emit_dimacs(ClauseSet()) == "p cnf 0 0\n");
    // A bare terminator is unparseable, so a set holding the empty clause
    // cannot round-trip.
    CHECK_THROWS_AS(parse_dimacs(emit_dimacs(ClauseSet({Clause()}))), ParseError);
}

TEST_CASE("dimacs round-trip is bit-exact") {
    std::mt19937_64 rng(61);
    for (int round = 0; round < 150; ++round) {
        ClauseSet s = test::random_clause_set(rng, 6, 9, 1, 4);
        std::string text = emit_dimacs(s);
        ParsedProblem p = parse_dimacs(text);
        CHECK(p.clauses == s);
        CHECK(emit_dimacs(p.clauses) == text);
    }
}

namespace {

Proof two_step_proof() {
    Proof p;
    p.inputs = {Clause::of({1}), Clause::of({-1, 2}), Clause::of({-2})};
    ProofStep s1;
    s1.id = 4;
    s1.premises = {1, 2};
    s1.separation.parts = {
        Separation::Part{Clause::of({1}), Clause()},
        Separation::Part{Clause::of({-1}), Clause::of({2})}};
    s1.result = Clause::of({2});
    ProofStep s2;
    s2.id = 5;
    s2.premises = {4, 3};
    s2.separation.parts = {
        Separation::Part{Clause::of({2}), Clause()},
        Separation::Part{Clause::of({-2}), Clause()}};
    s2.result = Clause();
    p.steps = {s1, s2};
    p.refutation = true;
    return p;
}

}  // namespace

TEST_CASE("trace emission format") {
    CHECK(emit_trace(two_step_proof()) ==
          "S 4 P 1,2 K 1:1 K 2:-1 R 2\n"
          "S 5 P 4,3 K 4:2 K 3:-2 R #\n");
}

TEST_CASE("trace parsing") {
    Proof p = two_step_proof();
    Proof parsed = parse_trace(emit_trace(p), p.inputs);
    CHECK(parsed == p);

    // Comments are skipped; refutation is derived from the final step.
    Proof with_comment =
        parse_trace("c preamble\nS 4 P 1,2 K 1:1 K 2:-1 R 2\n", p.inputs);
    CHECK(with_comment.steps.size() == 1);
    CHECK_FALSE(with_comment.refutation);

    Proof empty_input = parse_trace("", {Clause()});
    CHECK(empty_input.refutation);
}

TEST_CASE("trace parsing rejects malformed steps") {
    std::vector<Clause> inputs = {Clause::of({1}), Clause::of({-1})};
    CHECK_THROWS_WITH_AS(parse_trace("X 3 P 1,2\n", inputs), "line 1: expected S",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_trace("S 2 P 1,2 K 1:1 K 2:-1 R #\n", inputs),
                         "line 1: bad step id", ParseError);
    CHECK_THROWS_WITH_AS(parse_trace("S 3 P 1,2 K 1:1 K 9:-1 R #\n", inputs),
                         "line 1: kept premise id does not match premise list",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_trace("S 3 P 1,9 K 1:1 K 9:-1 R #\n", inputs),
                         "line 1: unknown premise id 9", ParseError);
    CHECK_THROWS_WITH_AS(parse_trace("S 3 P 1,2 K 1:1 K 2:-1\n", inputs),
                         "line 1: expected R", ParseError);
    CHECK_THROWS_WITH_AS(parse_trace("S 3 P 1,2 K 1:1 K 2:-1 R\n", inputs),
                         "line 1: missing result clause", ParseError);
    CHECK_THROWS_WITH_AS(parse_trace("S 3 P 1,2 K 1:1 K 2:-1 R 1 #\n", inputs),
                         "line 1: misplaced #", ParseError);
    CHECK_THROWS_WITH_AS(parse_trace("S 3 P 1,2 K 1:0 K 2:-1 R #\n", inputs),
                         "line 1: kept literal cannot be 0", ParseError);
}

TEST_CASE("trace round-trip through the prover is bit-exact") {
    std::mt19937_64 rng(62);
    int proofs = 0;
    for (int round = 0; round < 200 && proofs < 60; ++round) {
        ClauseSet s = test::random_clause_set(rng, 4, 8, 1, 3);
        RefuteOutcome out = refute(s);
        if (out.kind != RefuteOutcome::Kind::kProof) continue;
        ++proofs;
        std::string text = emit_trace(out.proof);
        Proof parsed = parse_trace(text, s.clauses());
        CHECK(parsed == out.proof);
        CHECK(emit_trace(parsed) == text);
        CHECK(verify_proof(s, parsed).ok);
    }
    CHECK(proofs > 0);
}
