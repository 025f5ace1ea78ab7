#ifndef CSDEDUCE_PROVER_HPP
#define CSDEDUCE_PROVER_HPP

#include <atomic>
#include <optional>

#include "csdeduce/maximal.hpp"
#include "csdeduce/proof.hpp"
#include "csdeduce/types.hpp"

namespace csd {

struct TriangularSeparation {
    std::vector<std::size_t> premise_indices;  // into s.clauses(), repetition allowed
    Separation separation;
    Clause result;
};

// Greedy triangle growth from a seed clause: pick the seed literal whose
// complement occurs in the most clauses as the first boundary literal;
// each further step keeps a clause's literals inside the accumulated
// complement set plus one new boundary literal; the triangle closes when a
// clause fits entirely inside the complement set. Returns nullopt when no
// closure is found within cfg.triangle_cap boundary literals. Any returned
// separation passes the kernel check.
std::optional<TriangularSeparation> find_triangular_separation(
    const ClauseSet& s, std::size_t seed_index, const DeductionConfig& cfg = {});

enum class SearchStrategy { kTriangular, kBinary };

struct RefuteOutcome {
    enum class Kind { kProof, kSaturated, kResourceOut };
    Kind kind = Kind::kSaturated;
    Proof proof;
    int steps_taken = 0;
    bool interrupted = false;
};

// Given-clause saturation. Each iteration activates the smallest passive
// clause, attempts a triangular separation seeded at it (under the
// triangular strategy), and always resolves it in all size-2 separations
// against the active set, which keeps the search refutation-complete. New
// clauses are discarded when tautological or subsumed. Stops at the empty
// clause (kProof), an empty passive set (kSaturated, meaning the set is
// satisfiable), or cfg.step_cap iterations (kResourceOut).
RefuteOutcome refute(const ClauseSet& s, const DeductionConfig& cfg = {},
                     SearchStrategy strategy = SearchStrategy::kTriangular,
                     const std::atomic<bool>* interrupt = nullptr);

}  // namespace csd

#endif
