#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <random>

#include "csdeduce/oracle.hpp"
#include "csdeduce/proof.hpp"
#include "csdeduce/prover.hpp"
#include "test_support.hpp"

using namespace csd;

namespace {

Separation::Part part(std::initializer_list<int> kept,
                      std::initializer_list<int> residual) {
    return Separation::Part{Clause::of(kept), Clause::of(residual)};
}

ClauseSet chain_unsat() {
    return ClauseSet({Clause::of({1, 2}), Clause::of({2, 3}), Clause::of({3, 4}),
                      Clause::of({-3, -1}), Clause::of({-4, -2}),
                      Clause::of({-2, -3})});
}

ClauseSet four_var_sat() {
    return ClauseSet({Clause::of({-1}), Clause::of({-3, 4}), Clause::of({-2, -4}),
                      Clause::of({1, 2, 3})});
}

// A valid two step refutation of {1}, {-1, 2}, {-2}.
Proof small_valid_proof() {
    Proof p;
    p.inputs = {Clause::of({1}), Clause::of({-1, 2}), Clause::of({-2})};
    ProofStep s1;
    s1.id = 4;
    s1.premises = {1, 2};
    s1.separation.parts = {part({1}, {}), part({-1}, {2})};
    s1.result = Clause::of({2});
    ProofStep s2;
    s2.id = 5;
    s2.premises = {4, 3};
    s2.separation.parts = {part({2}, {}), part({-2}, {})};
    s2.result = Clause();
    p.steps = {s1, s2};
    p.refutation = true;
    return p;
}

ClauseSet small_valid_inputs() {
    return ClauseSet({Clause::of({1}), Clause::of({-1, 2}), Clause::of({-2})});
}

}  // namespace

TEST_CASE("separation rule on a multi-clause premise list") {
    std::vector<Clause> premises = {Clause::of({1, 2}), Clause::of({2, 3}),
                                    Clause::of({-2, -3}), Clause::of({-4, -2})};
    Separation sep;
    sep.parts = {part({2}, {1}), part({2, 3}, {}), part({-2, -3}, {}),
                 part({-2}, {-4})};
    CHECK(apply_scs(premises, sep) == Clause::of({1, -4}));
}

TEST_CASE("separation rule covers binary resolution") {
    std::vector<Clause> premises = {Clause::of({1, 2}), Clause::of({-1, 3})};
    Separation sep;
    sep.parts = {part({1}, {2}), part({-1}, {3})};
    CHECK(apply_scs(premises, sep) == Clause::of({2, 3}));
}

TEST_CASE("separation rule validation") {
    std::vector<Clause> premises = {Clause::of({1}), Clause::of({-1, 2})};

    Separation arity;
    arity.parts = {part({1}, {})};
    CHECK_THROWS_WITH_AS(apply_scs(premises, arity),
                         "separation does not partition premise", Error);

    Separation empty_kept;
    empty_kept.parts = {part({1}, {}), part({}, {-1, 2})};
    CHECK_THROWS_WITH_AS(apply_scs(premises, empty_kept),
                         "separation does not partition premise", Error);

    Separation overlap;
    overlap.parts = {part({1}, {1}), part({-1}, {2})};
    CHECK_THROWS_WITH_AS(apply_scs(premises, overlap),
                         "separation does not partition premise", Error);

    Separation wrong_union;
    wrong_union.parts = {part({1}, {}), part({-1}, {})};
    CHECK_THROWS_WITH_AS(apply_scs(premises, wrong_union),
                         "separation does not partition premise", Error);

    Separation not_contra;
    not_contra.parts = {part({1}, {}), part({2}, {-1})};
    CHECK_THROWS_WITH_AS(apply_scs(premises, not_contra),
                         "separated part is not a contradiction", Error);
}

TEST_CASE("verification accepts a hand-built refutation") {
    VerifyResult v = verify_proof(small_valid_inputs(), small_valid_proof());
    CHECK_MESSAGE(bool(v), v.diagnostic);
}

TEST_CASE("verification rejects tampered proofs") {
    ClauseSet s = small_valid_inputs();

    SUBCASE("inputs differ") {
        Proof p = small_valid_proof();
        p.inputs[0] = Clause::of({1, 3});
        CHECK_FALSE(verify_proof(s, p).ok);
    }
    SUBCASE("step id does not increase") {
        Proof p = small_valid_proof();
        p.steps[1].id = 4;
        CHECK_FALSE(verify_proof(s, p).ok);
    }
    SUBCASE("step id collides with an input id") {
        Proof p = small_valid_proof();
        p.steps[0].id = 3;
        CHECK_FALSE(verify_proof(s, p).ok);
    }
    SUBCASE("premise references a later step") {
        Proof p = small_valid_proof();
        p.steps[0].premises = {5, 2};
        CHECK_FALSE(verify_proof(s, p).ok);
    }
    SUBCASE("result does not match the separation") {
        Proof p = small_valid_proof();
        p.steps[0].result = Clause::of({2, 3});
        CHECK_FALSE(verify_proof(s, p).ok);
    }
    SUBCASE("kept literal missing") {
        Proof p = small_valid_proof();
        p.steps[0].separation.parts[1] = part({-1, 2}, {});
        // The union still matches, but {1} with {-1, 2} admits the
        // pair-free choice (1, 2), so the kept parts stop being a
        // contradiction.
        CHECK_FALSE(verify_proof(s, p).ok);
    }
    SUBCASE("refutation claim without the empty clause") {
        Proof p = small_valid_proof();
        p.steps.pop_back();
        CHECK_FALSE(verify_proof(s, p).ok);
        CHECK(verify_proof(s, p).diagnostic ==
              "refutation claim without empty clause");
    }
    SUBCASE("non-refutation prefix is fine") {
        Proof p = small_valid_proof();
        p.steps.pop_back();
        p.refutation = false;
        CHECK(verify_proof(s, p).ok);
    }
}

TEST_CASE("every single-field mutation is rejected") {
    ClauseSet s = chain_unsat();
    RefuteOutcome base = refute(s);
    REQUIRE(base.kind == RefuteOutcome::Kind::kProof);
    REQUIRE(verify_proof(s, base.proof).ok);

    std::mt19937_64 rng(51);
    for (int round = 0; round < 150; ++round) {
        Proof bad = test::mutate_proof(base.proof, rng, round % 5);
        VerifyResult v = verify_proof(s, bad);
        CHECK_FALSE(v.ok);
        CHECK_FALSE(v.diagnostic.empty());
    }
}

TEST_CASE("triangular separation on the documentation example") {
    ClauseSet s({Clause::of({1}), Clause::of({-1, 2}), Clause::of({-2})});
    auto found = find_triangular_separation(s, 0);
    REQUIRE(found.has_value());
    std::vector<std::size_t> want = {0, 1, 2};
    CHECK(found->premise_indices == want);
    CHECK(found->result.empty());
    std::vector<Clause> premises;
    for (std::size_t i : found->premise_indices) premises.push_back(s[i]);
    CHECK(apply_scs(premises, found->separation) == found->result);
}

TEST_CASE("triangular separation edge cases") {
    ClauseSet s({Clause::of({1, 2})});
    CHECK(find_triangular_separation(s, 0) == std::nullopt);
    CHECK_THROWS_WITH_AS(find_triangular_separation(s, 1),
                         "seed index out of range", Error);
    ClauseSet with_taut({Clause::of({1, -1}), Clause::of({2})});
    CHECK(find_triangular_separation(with_taut, 0) == std::nullopt);
    ClauseSet with_empty({Clause(), Clause::of({2})});
    CHECK(find_triangular_separation(with_empty, 0) == std::nullopt);
}

TEST_CASE("triangular separations are sound on random sets") {
    std::mt19937_64 rng(52);
    int produced = 0;
    for (int round = 0; round < 300; ++round) {
        ClauseSet s = test::random_clause_set(rng, 4, 6, 1, 3);
        auto found = find_triangular_separation(s, rng() % s.size());
        if (!found) continue;
        ++produced;
        std::vector<Clause> premises;
        for (std::size_t i : found->premise_indices) {
            REQUIRE(i < s.size());
            premises.push_back(s[i]);
        }
        Clause rebuilt = apply_scs(premises, found->separation);
        CHECK(rebuilt == found->result);
        CHECK(test::naive_entails(s, found->result));
    }
    CHECK(produced > 0);
}

TEST_CASE("refutation of the chain set under both strategies") {
    for (SearchStrategy st : {SearchStrategy::kTriangular, SearchStrategy::kBinary}) {
        RefuteOutcome out = refute(chain_unsat(), {}, st);
        REQUIRE(out.kind == RefuteOutcome::Kind::kProof);
        CHECK(out.proof.refutation);
        REQUIRE_FALSE(out.proof.steps.empty());
        CHECK(out.proof.steps.back().result.empty());
        VerifyResult v = verify_proof(chain_unsat(), out.proof);
        CHECK_MESSAGE(bool(v), v.diagnostic);
    }
}

TEST_CASE("satisfiable sets saturate") {
    for (SearchStrategy st : {SearchStrategy::kTriangular, SearchStrategy::kBinary}) {
        RefuteOutcome out = refute(four_var_sat(), {}, st);
        CHECK(out.kind == RefuteOutcome::Kind::kSaturated);
        CHECK_FALSE(out.proof.refutation);
    }
    CHECK(refute(ClauseSet()).kind == RefuteOutcome::Kind::kSaturated);
}

TEST_CASE("empty input clause refutes immediately") {
    RefuteOutcome out = refute(ClauseSet({Clause::of({1}), Clause()}));
    CHECK(out.kind == RefuteOutcome::Kind::kProof);
    CHECK(out.proof.refutation);
    CHECK(out.proof.steps.empty());
    CHECK(verify_proof(ClauseSet({Clause::of({1}), Clause()}), out.proof).ok);
}

TEST_CASE("resource limits") {
    DeductionConfig cfg;
    cfg.step_cap = 0;
    RefuteOutcome capped = refute(chain_unsat(), cfg);
    CHECK(capped.kind == RefuteOutcome::Kind::kResourceOut);
    CHECK_FALSE(capped.interrupted);

    std::atomic<bool> stop{true};
    RefuteOutcome interrupted =
        refute(chain_unsat(), {}, SearchStrategy::kTriangular, &stop);
    CHECK(interrupted.kind == RefuteOutcome::Kind::kResourceOut);
    CHECK(interrupted.interrupted);
}

TEST_CASE("refutation is deterministic") {
    RefuteOutcome a = refute(chain_unsat());
    RefuteOutcome b = refute(chain_unsat());
    CHECK(a.proof == b.proof);
    CHECK(a.steps_taken == b.steps_taken);
}

TEST_CASE("prover decision agrees with the oracle on random sets") {
    std::mt19937_64 rng(53);
    int unsat_count = 0, sat_count = 0;
    for (int round = 0; round < 150; ++round) {
        ClauseSet s = test::random_clause_set(rng, 4, 8, 1, 3);
        bool unsat = test::naive_unsatisfiable(s);
        RefuteOutcome out = refute(s);
        if (unsat) {
            REQUIRE(out.kind == RefuteOutcome::Kind::kProof);
            VerifyResult v = verify_proof(s, out.proof);
            CHECK_MESSAGE(bool(v), v.diagnostic);
            ++unsat_count;
        } else {
            REQUIRE(out.kind == RefuteOutcome::Kind::kSaturated);
            ++sat_count;
        }
    }
    CHECK(unsat_count > 0);
    CHECK(sat_count > 0);
}
