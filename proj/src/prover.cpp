#include "csdeduce/prover.hpp"

#include <algorithm>

#include "csdeduce/kernel.hpp"
#include "proof_builder.hpp"

namespace csd {

namespace {

int complement_occurrences(const ClauseSet& s, const Literal& l) {
    Literal comp = l.complement();
    int n = 0;
    for (const Clause& c : s.clauses())
        if (c.contains(comp)) ++n;
    return n;
}

Clause complements_of(const std::vector<Literal>& boundary) {
    std::vector<Literal> comps;
    comps.reserve(boundary.size());
    for (const Literal& b : boundary) comps.push_back(b.complement());
    return Clause(std::move(comps));
}

}  // namespace

std::optional<TriangularSeparation> find_triangular_separation(
    const ClauseSet& s, std::size_t seed_index, const DeductionConfig& cfg) {
    if (seed_index >= s.size()) throw Error("seed index out of range");
    const Clause& seed = s[seed_index];
    if (seed.empty() || seed.is_tautology()) return std::nullopt;

    // First boundary literal: the seed literal whose complement occurs in
    // the most clauses; no complement anywhere means no triangle can close.
    bool found = false;
    Literal x1 = seed.literals().front();
    int best_occ = 0;
    for (const Literal& l : seed.literals()) {
        int occ = complement_occurrences(s, l);
        if (occ > best_occ) {
            best_occ = occ;
            x1 = l;
            found = true;
        }
    }
    if (!found) return std::nullopt;

    std::vector<Literal> boundary{x1};
    std::vector<std::size_t> premise_indices{seed_index};
    Separation sep;
    sep.parts.push_back({Clause({x1}), clause_difference(seed, Clause({x1}))});

    while (true) {
        Clause comp_set = complements_of(boundary);

        for (std::size_t c = 0; c < s.size(); ++c) {
            if (s[c].empty() || !s[c].subset_of(comp_set)) continue;
            premise_indices.push_back(c);
            sep.parts.push_back({s[c], Clause()});
            std::vector<Clause> premises;
            premises.reserve(premise_indices.size());
            for (std::size_t idx : premise_indices) premises.push_back(s[idx]);
            Clause result = apply_scs(premises, sep);
            return TriangularSeparation{std::move(premise_indices), std::move(sep),
                                        std::move(result)};
        }

        if (static_cast<int>(boundary.size()) >= cfg.triangle_cap)
            return std::nullopt;

        // Grow: admit one clause lying inside the complement set except for
        // a single fresh boundary literal; prefer small residuals, then
        // large kept parts.
        bool grown = false;
        std::size_t grow_clause = 0;
        Literal grow_lit = x1;
        Clause grow_kept, grow_resid;
        for (std::size_t c = 0; c < s.size(); ++c) {
            Clause inside = clause_intersection(s[c], comp_set);
            Literal fresh = x1;
            int fresh_occ = -1;
            bool has_fresh = false;
            for (const Literal& l : s[c].literals()) {
                bool on_boundary = false;
                for (const Literal& b : boundary)
                    if (b.var() == l.var()) { on_boundary = true; break; }
                if (on_boundary) continue;
                int occ = complement_occurrences(s, l);
                if (occ > fresh_occ) {
                    fresh_occ = occ;
                    fresh = l;
                    has_fresh = true;
                }
            }
            if (!has_fresh) continue;
            Clause kept = clause_union(inside, Clause({fresh}));
            Clause resid = clause_difference(s[c], kept);
            bool better;
            if (!grown) better = true;
            else if (resid.size() != grow_resid.size())
                better = resid.size() < grow_resid.size();
            else if (kept.size() != grow_kept.size())
                better = kept.size() > grow_kept.size();
            else better = false;
            if (better) {
                grown = true;
                grow_clause = c;
                grow_lit = fresh;
                grow_kept = kept;
                grow_resid = resid;
            }
        }
        if (!grown) return std::nullopt;

        boundary.push_back(grow_lit);
        premise_indices.push_back(grow_clause);
        sep.parts.push_back({grow_kept, grow_resid});
    }
}

namespace {

struct ActiveItem {
    Clause clause;
    int id;
};

bool subsumed_by_any(const Clause& c, const std::vector<ActiveItem>& items) {
    for (const ActiveItem& it : items)
        if (it.clause.subset_of(c)) return true;
    return false;
}

}  // namespace

RefuteOutcome refute(const ClauseSet& s, const DeductionConfig& cfg,
                     SearchStrategy strategy, const std::atomic<bool>* interrupt) {
    ProofBuilder builder(s);
    RefuteOutcome out;

    for (const Clause& c : s.clauses()) {
        if (c.empty()) {
            out.kind = RefuteOutcome::Kind::kProof;
            out.proof = builder.take(true);
            return out;
        }
    }

    std::vector<ActiveItem> active;
    std::vector<ActiveItem> passive;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!s[i].is_tautology())
            passive.push_back(ActiveItem{s[i], static_cast<int>(i) + 1});

    // Appends a derived clause unless it is tautological or subsumed;
    // records the proof step only for clauses actually admitted.
    bool refuted = false;
    auto admit = [&](const Clause& result, std::vector<int> premises,
                     Separation sep) {
        if (result.is_tautology()) return;
        if (subsumed_by_any(result, active) || subsumed_by_any(result, passive))
            return;
        int id = builder.add_step(std::move(premises), std::move(sep));
        if (result.empty()) {
            refuted = true;
            return;
        }
        passive.push_back(ActiveItem{result, id});
    };

    while (true) {
        if (refuted) {
            out.kind = RefuteOutcome::Kind::kProof;
            out.proof = builder.take(true);
            return out;
        }
        if (interrupt && interrupt->load()) {
            out.kind = RefuteOutcome::Kind::kResourceOut;
            out.interrupted = true;
            out.proof = builder.take(false);
            return out;
        }
        if (out.steps_taken >= cfg.step_cap) {
            out.kind = RefuteOutcome::Kind::kResourceOut;
            out.proof = builder.take(false);
            return out;
        }
        if (passive.empty()) {
            out.kind = RefuteOutcome::Kind::kSaturated;
            out.proof = builder.take(false);
            return out;
        }

        // Given clause: smallest passive clause, ties to the oldest id.
        std::size_t pick = 0;
        for (std::size_t i = 1; i < passive.size(); ++i) {
            if (passive[i].clause.size() < passive[pick].clause.size() ||
                (passive[i].clause.size() == passive[pick].clause.size() &&
                 passive[i].id < passive[pick].id))
                pick = i;
        }
        ActiveItem given = passive[pick];
        passive.erase(passive.begin() + pick);
        if (subsumed_by_any(given.clause, active)) continue;
        active.push_back(given);
        ++out.steps_taken;

        if (strategy == SearchStrategy::kTriangular) {
            std::vector<Clause> act;
            act.reserve(active.size());
            for (const ActiveItem& it : active) act.push_back(it.clause);
            ClauseSet act_set(std::move(act));
            auto tri =
                find_triangular_separation(act_set, active.size() - 1, cfg);
            if (tri) {
                std::vector<int> premises;
                premises.reserve(tri->premise_indices.size());
                for (std::size_t idx : tri->premise_indices)
                    premises.push_back(active[idx].id);
                admit(tri->result, std::move(premises), std::move(tri->separation));
                if (refuted) continue;
            }
        }

        for (const ActiveItem& other : active) {
            for (const Literal& x : given.clause.literals()) {
                Literal comp = x.complement();
                if (!other.clause.contains(comp)) continue;
                Clause left = clause_difference(given.clause, Clause({x}));
                Clause right = clause_difference(other.clause, Clause({comp}));
                Clause resolvent = clause_union(left, right);
                Separation sep;
                sep.parts.push_back({Clause({x}), left});
                sep.parts.push_back({Clause({comp}), right});
                admit(resolvent, {given.id, other.id}, std::move(sep));
                if (refuted) break;
            }
            if (refuted) break;
        }
    }
}

}  // namespace csd
