#include "csdeduce/proof.hpp"

#include <map>

#include "csdeduce/kernel.hpp"

namespace csd {

Clause apply_scs(const std::vector<Clause>& premises, const Separation& sep) {
    if (sep.parts.size() != premises.size())
        throw Error("separation does not partition premise");
    std::vector<Clause> kept;
    kept.reserve(sep.parts.size());
    Clause result;
    for (std::size_t i = 0; i < premises.size(); ++i) {
        const Separation::Part& part = sep.parts[i];
        if (part.kept.empty())
            throw Error("separation does not partition premise");
        if (!clause_intersection(part.kept, part.residual).empty())
            throw Error("separation does not partition premise");
        if (clause_union(part.kept, part.residual) != premises[i])
            throw Error("separation does not partition premise");
        kept.push_back(part.kept);
        result = clause_union(result, part.residual);
    }
    if (!is_standard_contradiction(ClauseSet(std::move(kept))))
        throw Error("separated part is not a contradiction");
    return result;
}

VerifyResult verify_proof(const ClauseSet& s, const Proof& p) {
    auto fail = [](std::string msg) { return VerifyResult{false, std::move(msg)}; };

    if (p.inputs.size() != s.size())
        return fail("input clause list does not match problem");
    for (std::size_t i = 0; i < s.size(); ++i)
        if (p.inputs[i] != s[i])
            return fail("input clause " + std::to_string(i + 1) +
                        " does not match problem");

    const int m = static_cast<int>(s.size());
    std::map<int, const Clause*> derived;
    int last_id = m;
    for (const ProofStep& step : p.steps) {
        const std::string where = "step " + std::to_string(step.id) + ": ";
        if (step.id <= last_id)
            return fail(where + "id does not increase");
        if (step.premises.size() != step.separation.parts.size())
            return fail(where + "separation arity mismatch");
        if (step.premises.empty())
            return fail(where + "no premises");

        std::vector<Clause> premises;
        premises.reserve(step.premises.size());
        for (int pid : step.premises) {
            if (pid >= 1 && pid <= m) {
                premises.push_back(s[pid - 1]);
            } else {
                auto it = derived.find(pid);
                if (it == derived.end() || pid >= step.id)
                    return fail(where + "premise " + std::to_string(pid) +
                                " not an input or earlier step");
                premises.push_back(*it->second);
            }
        }

        Clause rebuilt;
        try {
            rebuilt = apply_scs(premises, step.separation);
        } catch (const Error& e) {
            return fail(where + e.what());
        }
        if (rebuilt != step.result)
            return fail(where + "result clause mismatch");

        derived[step.id] = &step.result;
        last_id = step.id;
    }

    if (p.refutation) {
        bool empty_reached = s.contains_empty_clause();
        if (!p.steps.empty() && p.steps.back().result.empty()) empty_reached = true;
        if (!empty_reached)
            return fail("refutation claim without empty clause");
    }
    return VerifyResult{true, ""};
}

}  // namespace csd
