#ifndef CSDEDUCE_PROOF_HPP
#define CSDEDUCE_PROOF_HPP

#include <string>
#include <vector>

#include "csdeduce/types.hpp"

namespace csd {

// A contradiction separation of a premise list: per premise, the kept part
// (joining the separated contradiction, never empty) and the residual part
// (contributed to the derived clause, possibly empty). Kept and residual
// partition the premise.
struct Separation {
    struct Part {
        Clause kept;
        Clause residual;

        bool operator==(const Part&) const = default;
    };
    std::vector<Part> parts;

    bool operator==(const Separation&) const = default;
};

// One deduction step: premises are referenced by id, where ids 1..m denote
// the input clauses in order and larger ids denote earlier steps. Premise
// ids may repeat. The result is the disjunction of the residuals.
struct ProofStep {
    int id = 0;
    std::vector<int> premises;
    Separation separation;
    Clause result;

    bool operator==(const ProofStep&) const = default;
};

struct Proof {
    std::vector<Clause> inputs;
    std::vector<ProofStep> steps;
    bool refutation = false;

    bool operator==(const Proof&) const = default;
};

// Applies the contradiction separation rule: validates that each part
// partitions its premise, that every kept part is nonempty, and that the
// kept parts together form a standard contradiction; returns the
// disjunction of the residuals. Throws Error("separation does not
// partition premise") or Error("separated part is not a contradiction").
Clause apply_scs(const std::vector<Clause>& premises, const Separation& sep);

struct VerifyResult {
    bool ok = false;
    std::string diagnostic;
    explicit operator bool() const { return ok; }
};

// Independently re-checks a proof against the input set: premise ordering,
// partition and nonemptiness of every separation part, the
// standard-contradiction property of every kept conjunction, result
// equality, and the terminal empty clause when refutation is claimed.
// Returns a first-failure diagnostic instead of throwing.
VerifyResult verify_proof(const ClauseSet& s, const Proof& p);

}  // namespace csd

#endif
