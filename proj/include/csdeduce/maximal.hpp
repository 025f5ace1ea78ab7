#ifndef CSDEDUCE_MAXIMAL_HPP
#define CSDEDUCE_MAXIMAL_HPP

#include <atomic>
#include <cstdint>
#include <optional>
#include <random>

#include "csdeduce/proof.hpp"
#include "csdeduce/types.hpp"

namespace csd {

inline constexpr int kDefaultMaterializeCap = 16;
inline constexpr int kDefaultCoverageCap = 24;

// A clause with exactly one polarity per variable of a declared universe.
// The canonical index sets bit i iff the variable with rank i in the
// ascending universe occurs positively, so index 0 is the all-negative
// clause and two maximal clauses over the same universe are equal iff
// their indices are.
struct MaximalClause {
    std::vector<int> universe;
    std::vector<bool> positive;

    Clause to_clause() const;
    Literal literal_at(std::size_t rank) const;
    std::uint64_t index() const;
    static MaximalClause from_index(const std::vector<int>& universe,
                                    std::uint64_t index);
};

// One bit per maximal-clause index over a universe, marking the indices
// generated by some clause of a source set (clause C generates D iff
// C ⊆ D). Optionally records the first generating clause per index.
struct CoverageTable {
    std::vector<int> universe;
    std::vector<std::uint64_t> words;
    std::vector<std::int32_t> generator;

    std::uint64_t size() const { return 1ull << universe.size(); }
    bool covered(std::uint64_t index) const;
    std::uint64_t covered_count() const;
    std::optional<std::uint64_t> first_uncovered() const;
    std::vector<std::uint64_t> uncovered(std::size_t limit) const;
};

enum class SatTag { kSat, kUnsat };

// Decision outcome. SAT carries the lowest-index uncovered maximal clause
// and the assignment it induces; both verdicts carry coverage statistics.
struct Verdict {
    SatTag tag = SatTag::kSat;
    std::optional<MaximalClause> witness;
    std::optional<Assignment> model;
    std::uint64_t covered = 0;
    std::uint64_t table_size = 0;
};

struct DeductionConfig {
    int v0_budget = 3;
    int retry_budget = 64;
    std::uint64_t seed = 0;
    int step_cap = 10000;
    int triangle_cap = 8;
};

// All 2^n maximal clauses over vars in ascending index order. Refuses to
// materialize beyond the cap ("maximal contradiction too large to
// materialize"); larger universes must go through coverage indices.
ClauseSet generate_maximal_contradiction(const std::vector<int>& vars,
                                         int cap = kDefaultMaterializeCap);

// Marks every maximal clause over V(S) generated by some clause of s. A
// clause C marks exactly the 2^(n-|C|) completions of its literals; a
// tautological clause marks nothing; an empty clause marks everything.
// Throws Error("universe too large") beyond the cap. The second form uses
// an explicit universe, which must contain V(S).
CoverageTable coverage(const ClauseSet& s, int cap = kDefaultCoverageCap,
                       bool track_generators = false);
CoverageTable coverage(const ClauseSet& s, const std::vector<int>& universe,
                       int cap = kDefaultCoverageCap,
                       bool track_generators = false);

// UNSAT iff every maximal-clause index over V(S) is covered; SAT otherwise
// with the lowest-index uncovered clause as witness.
Verdict decide(const ClauseSet& s, int cap = kDefaultCoverageCap);

// The assignment induced by an uncovered maximal clause: v ↦ false if v
// occurs positively in d, true otherwise. Every literal of ~d is true.
Assignment model_from_maximal_clause(const MaximalClause& d);

// One literal per clause drawn from C_i ∩ ~d (lowest canonical literal).
// The result contains no complementary pair and every returned literal is
// true under model_from_maximal_clause(d). Throws Error("maximal clause is
// expandable; not a witness") when some intersection is empty.
std::vector<Literal> satisfiable_instance(const ClauseSet& s, const MaximalClause& d);

enum class ModelSearchMethod {
    kRandomProbe = 1,     // accept a sampled D no clause is a subset of
    kDeletionSweep = 2,   // delete clauses literal by literal; empty set wins
    kSweepWithRepair = 3  // as the sweep, then flip unused variables greedily
};

// Uniform random maximal clause over the universe; one rng draw per
// variable in ascending order, bit = draw & 1. Exposed so callers can
// reproduce sampling sequences for a given seed.
MaximalClause sample_maximal_clause(const std::vector<int>& universe,
                                    std::mt19937_64& rng);

// Randomized model search; up to cfg.retry_budget sampled candidates from
// std::mt19937_64(cfg.seed). Any returned assignment satisfies s. Returns
// nullopt when the budget is exhausted.
std::optional<Assignment> find_model(const ClauseSet& s, ModelSearchMethod method,
                                     const DeductionConfig& cfg = {});

// Fixpoint of tautology deletion, duplicate deletion, subsumption
// (C ⊆ C' deletes C'), and the unit rule (a unit {x} deletes clauses
// containing x and strips ~x elsewhere). Conflicting units derive the
// empty clause.
ClauseSet redundancy_process(const ClauseSet& s);

// One deduction step over the maximal contradiction of a chosen variable
// subset: for each maximal clause O_t over v0 in index order, pick the
// clause with nonempty intersection that maximizes residual overlap with
// the previously accumulated residuals, then minimizes new residual
// literals, then minimizes residual literals on v0 variables, ties to the
// lowest clause index. Returns the union of residuals; the kept
// intersections form a standard contradiction.
Clause deduction_step(const ClauseSet& s, const std::vector<int>& v0,
                      const DeductionConfig& cfg = {});

struct DeductionStepDetail {
    Clause result;
    std::vector<std::size_t> chosen;  // clause index per maximal clause, in index order
    Separation separation;            // kept = C ∩ O_t, residual = C - O_t
};

DeductionStepDetail deduction_step_detail(const ClauseSet& s,
                                          const std::vector<int>& v0,
                                          const DeductionConfig& cfg = {});

enum class RefuteTag { kUnsat, kUndetermined, kResourceOut };

struct MaxcontraStepRecord {
    std::vector<int> v0;
    int step_id = 0;
    Clause result;
};

struct MaxcontraResult {
    RefuteTag tag = RefuteTag::kUndetermined;
    Proof proof;
    std::vector<MaxcontraStepRecord> deductions;
    ClauseSet residual;
    int steps_taken = 0;
};

// The maximal-contradiction deduction procedure: interleave redundancy
// processing (unit strips recorded as proof steps) with deduction steps
// over heuristically chosen variable subsets until the empty clause, a
// fixpoint with no productive step, or the step cap. Every step of the
// returned proof is a checked separation step.
MaxcontraResult maxcontra_refute(const ClauseSet& s, const DeductionConfig& cfg = {},
                                 const std::atomic<bool>* interrupt = nullptr);

}  // namespace csd

#endif
