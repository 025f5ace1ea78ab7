#ifndef CSDEDUCE_PROOF_BUILDER_HPP
#define CSDEDUCE_PROOF_BUILDER_HPP

#include <map>
#include <utility>

#include "csdeduce/proof.hpp"

namespace csd {

// Incrementally builds a Proof. Inputs get ids 1..m; each recorded step gets
// the next id. Results are computed through apply_scs so every recorded
// step is a valid separation by construction.
class ProofBuilder {
public:
    explicit ProofBuilder(const ClauseSet& s) {
        proof_.inputs = s.clauses();
        int id = 1;
        for (const Clause& c : proof_.inputs) table_[id++] = c;
        next_id_ = id;
    }

    const Clause& clause(int id) const { return table_.at(id); }
    int next_id() const { return next_id_; }

    int add_step(std::vector<int> premises, Separation sep) {
        std::vector<Clause> prem;
        prem.reserve(premises.size());
        for (int pid : premises) prem.push_back(table_.at(pid));
        Clause result = apply_scs(prem, sep);
        int id = next_id_++;
        proof_.steps.push_back(ProofStep{id, std::move(premises), std::move(sep), result});
        table_[id] = proof_.steps.back().result;
        return id;
    }

    const Clause& result_of(int id) const { return table_.at(id); }

    Proof take(bool refutation) {
        proof_.refutation = refutation;
        return std::move(proof_);
    }

private:
    Proof proof_;
    std::map<int, Clause> table_;
    int next_id_ = 1;
};

}  // namespace csd

#endif
