#include "csdeduce/maximal.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "csdeduce/kernel.hpp"
#include "proof_builder.hpp"

namespace csd {

Clause MaximalClause::to_clause() const {
    std::vector<Literal> lits;
    lits.reserve(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) lits.push_back(literal_at(i));
    return Clause(std::move(lits));
}

Literal MaximalClause::literal_at(std::size_t rank) const {
    return positive[rank] ? Literal::positive(universe[rank])
                          : Literal::negative(universe[rank]);
}

std::uint64_t MaximalClause::index() const {
    if (universe.size() > 64) throw Error("universe too large");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < universe.size(); ++i)
        if (positive[i]) idx |= 1ull << i;
    return idx;
}

MaximalClause MaximalClause::from_index(const std::vector<int>& universe,
                                        std::uint64_t index) {
    if (universe.size() > 64) throw Error("universe too large");
    MaximalClause d;
    d.universe = universe;
    d.positive.resize(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i)
        d.positive[i] = (index >> i) & 1;
    return d;
}

bool CoverageTable::covered(std::uint64_t index) const {
    return (words[index >> 6] >> (index & 63)) & 1;
}

std::uint64_t CoverageTable::covered_count() const {
    std::uint64_t total = 0;
    const std::uint64_t n = size();
    for (std::uint64_t w = 0; w < words.size(); ++w) {
        std::uint64_t word = words[w];
        if ((w + 1) * 64 > n) word &= (1ull << (n - w * 64)) - 1;
        total += std::popcount(word);
    }
    return total;
}

std::optional<std::uint64_t> CoverageTable::first_uncovered() const {
    const std::uint64_t n = size();
    for (std::uint64_t w = 0; w < words.size(); ++w) {
        std::uint64_t inv = ~words[w];
        if ((w + 1) * 64 > n) inv &= (1ull << (n - w * 64)) - 1;
        if (inv) return w * 64 + std::countr_zero(inv);
    }
    return std::nullopt;
}

std::vector<std::uint64_t> CoverageTable::uncovered(std::size_t limit) const {
    std::vector<std::uint64_t> out;
    const std::uint64_t n = size();
    for (std::uint64_t i = 0; i < n && out.size() < limit; ++i)
        if (!covered(i)) out.push_back(i);
    return out;
}

ClauseSet generate_maximal_contradiction(const std::vector<int>& vars, int cap) {
    std::vector<int> universe(vars);
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    if (universe.empty()) throw Error("maximal contradiction needs a variable");
    if (static_cast<int>(universe.size()) > cap)
        throw Error("maximal contradiction too large to materialize");
    const std::uint64_t n = 1ull << universe.size();
    std::vector<Clause> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i)
        out.push_back(MaximalClause::from_index(universe, i).to_clause());
    return ClauseSet(std::move(out));
}

CoverageTable coverage(const ClauseSet& s, const std::vector<int>& universe,
                       int cap, bool track_generators) {
    if (static_cast<int>(universe.size()) > cap) throw Error("universe too large");
    for (int v : s.universe())
        if (!std::binary_search(universe.begin(), universe.end(), v))
            throw Error("universe does not cover clause set");

    const std::size_t n = universe.size();
    CoverageTable table;
    table.universe = universe;
    table.words.assign(((1ull << n) + 63) / 64, 0);
    if (track_generators) table.generator.assign(1ull << n, -1);

    const std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
    for (std::size_t j = 0; j < s.size(); ++j) {
        const Clause& c = s[j];
        if (c.is_tautology()) continue;
        std::uint64_t base = 0, fixed = 0;
        for (const Literal& l : c.literals()) {
            std::size_t rank =
                std::lower_bound(universe.begin(), universe.end(), l.var()) -
                universe.begin();
            fixed |= 1ull << rank;
            if (l.is_positive()) base |= 1ull << rank;
        }
        const std::uint64_t free = full & ~fixed;
        std::uint64_t sub = free;
        while (true) {
            std::uint64_t idx = base | sub;
            if (track_generators && !table.covered(idx))
                table.generator[idx] = static_cast<std::int32_t>(j);
            table.words[idx >> 6] |= 1ull << (idx & 63);
            if (sub == 0) break;
            sub = (sub - 1) & free;
        }
    }
    return table;
}

CoverageTable coverage(const ClauseSet& s, int cap, bool track_generators) {
    return coverage(s, s.universe(), cap, track_generators);
}

Verdict decide(const ClauseSet& s, int cap) {
    CoverageTable table = coverage(s, cap);
    Verdict v;
    v.table_size = table.size();
    v.covered = table.covered_count();
    auto idx = table.first_uncovered();
    if (!idx) {
        v.tag = SatTag::kUnsat;
        return v;
    }
    v.tag = SatTag::kSat;
    v.witness = MaximalClause::from_index(table.universe, *idx);
    v.model = model_from_maximal_clause(*v.witness);
    return v;
}

Assignment model_from_maximal_clause(const MaximalClause& d) {
    Assignment a;
    for (std::size_t i = 0; i < d.universe.size(); ++i)
        a.set(d.universe[i], !d.positive[i]);
    return a;
}

std::vector<Literal> satisfiable_instance(const ClauseSet& s, const MaximalClause& d) {
    std::vector<Literal> comp;
    comp.reserve(d.universe.size());
    for (std::size_t i = 0; i < d.universe.size(); ++i)
        comp.push_back(d.literal_at(i).complement());
    Clause not_d(std::move(comp));

    std::vector<Literal> out;
    out.reserve(s.size());
    for (const Clause& c : s.clauses()) {
        Clause pick = clause_intersection(c, not_d);
        if (pick.empty())
            throw Error("maximal clause is expandable; not a witness");
        out.push_back(pick.literals().front());
    }
    return out;
}

MaximalClause sample_maximal_clause(const std::vector<int>& universe,
                                    std::mt19937_64& rng) {
    MaximalClause d;
    d.universe = universe;
    d.positive.resize(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) d.positive[i] = rng() & 1;
    return d;
}

namespace {

// Deletion sweep of Method II: walk the candidate's literals in ascending
// variable order and delete clauses containing the complement. Returns the
// surviving clause indices and flags the variables whose pass deleted
// something.
struct SweepOutcome {
    std::vector<std::size_t> survivors;
    std::vector<bool> used;
};

SweepOutcome deletion_sweep(const ClauseSet& s, const MaximalClause& d) {
    SweepOutcome out;
    out.used.assign(d.universe.size(), false);
    out.survivors.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out.survivors[i] = i;
    for (std::size_t rank = 0; rank < d.universe.size(); ++rank) {
        Literal comp = d.literal_at(rank).complement();
        std::vector<std::size_t> next;
        next.reserve(out.survivors.size());
        for (std::size_t idx : out.survivors) {
            if (s[idx].contains(comp)) out.used[rank] = true;
            else next.push_back(idx);
        }
        out.survivors.swap(next);
        if (out.survivors.empty()) break;
    }
    return out;
}

std::optional<Assignment> model_if_valid(const ClauseSet& s, const MaximalClause& d) {
    Assignment a = model_from_maximal_clause(d);
    if (!evaluate(s, a)) return std::nullopt;
    return a;
}

}  // namespace

std::optional<Assignment> find_model(const ClauseSet& s, ModelSearchMethod method,
                                     const DeductionConfig& cfg) {
    const std::vector<int>& universe = s.universe();
    std::mt19937_64 rng(cfg.seed);
    for (int k = 0; k < cfg.retry_budget; ++k) {
        MaximalClause d = sample_maximal_clause(universe, rng);
        if (method == ModelSearchMethod::kRandomProbe) {
            Clause dc = d.to_clause();
            bool expandable = false;
            for (const Clause& c : s.clauses())
                if (c.subset_of(dc)) { expandable = true; break; }
            if (!expandable) return model_if_valid(s, d);
            continue;
        }

        SweepOutcome sweep = deletion_sweep(s, d);
        if (sweep.survivors.empty()) return model_if_valid(s, d);
        if (method == ModelSearchMethod::kDeletionSweep) continue;

        // Repair: flip variables whose sweep pass never deleted a clause,
        // greedily by how many survivors the flip removes. Survivors are
        // subsets of d, so flips never disturb justified deletions.
        while (!sweep.survivors.empty()) {
            std::size_t best_rank = d.universe.size();
            std::size_t best_count = 0;
            for (std::size_t rank = 0; rank < d.universe.size(); ++rank) {
                if (sweep.used[rank]) continue;
                Literal old = d.literal_at(rank);
                std::size_t count = 0;
                for (std::size_t idx : sweep.survivors)
                    if (s[idx].contains(old)) ++count;
                if (count > best_count) {
                    best_count = count;
                    best_rank = rank;
                }
            }
            if (best_rank == d.universe.size()) break;
            Literal old = d.literal_at(best_rank);
            d.positive[best_rank] = !d.positive[best_rank];
            sweep.used[best_rank] = true;
            std::vector<std::size_t> next;
            for (std::size_t idx : sweep.survivors)
                if (!s[idx].contains(old)) next.push_back(idx);
            sweep.survivors.swap(next);
        }
        if (sweep.survivors.empty()) return model_if_valid(s, d);
    }
    return std::nullopt;
}

namespace {

struct WorkItem {
    Clause clause;
    int id;
};

bool contains_empty(const std::vector<WorkItem>& items) {
    for (const WorkItem& it : items)
        if (it.clause.empty()) return true;
    return false;
}

// Fixpoint simplification over the working set. When a builder is given,
// unit strips are recorded as separation steps so the simplification is
// part of the proof; structural deletions (tautology, duplicate,
// subsumption) need no steps. Bails out as soon as the empty clause
// appears so it stays the last derived clause.
void simplify_items(std::vector<WorkItem>& items, ProofBuilder* builder) {
    bool changed = true;
    while (changed) {
        changed = false;

        for (std::size_t i = 0; i < items.size();) {
            if (items[i].clause.is_tautology()) {
                items.erase(items.begin() + i);
                changed = true;
            } else {
                ++i;
            }
        }

        std::vector<char> dead(items.size(), 0);
        for (std::size_t j = 0; j < items.size(); ++j) {
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (i == j || dead[i]) continue;
                const Clause& a = items[i].clause;
                const Clause& b = items[j].clause;
                if (a == b ? i < j : a.subset_of(b)) {
                    dead[j] = 1;
                    changed = true;
                    break;
                }
            }
        }
        if (changed) {
            std::vector<WorkItem> live;
            live.reserve(items.size());
            for (std::size_t i = 0; i < items.size(); ++i)
                if (!dead[i]) live.push_back(std::move(items[i]));
            items.swap(live);
        }

        if (contains_empty(items)) return;

        bool derived_empty = false;
        for (std::size_t u = 0; u < items.size() && !derived_empty; ++u) {
            if (items[u].clause.size() != 1) continue;
            Literal unit = items[u].clause.literals().front();
            Literal comp = unit.complement();
            for (std::size_t x = 0; x < items.size(); ++x) {
                if (x == u || !items[x].clause.contains(comp)) continue;
                Clause stripped =
                    clause_difference(items[x].clause, Clause({comp}));
                int id;
                if (builder) {
                    Separation sep;
                    sep.parts.push_back({items[u].clause, Clause()});
                    sep.parts.push_back({Clause({comp}), stripped});
                    id = builder->add_step({items[u].id, items[x].id}, std::move(sep));
                } else {
                    id = items[x].id;
                }
                items[x] = WorkItem{stripped, id};
                changed = true;
                // Stop stripping once the empty clause exists; the next
                // subsumption round reduces the set to it without adding
                // steps, keeping it the final derived clause.
                if (stripped.empty()) {
                    derived_empty = true;
                    break;
                }
            }
        }
    }
}

int count_v0_literals(const Clause& c, const std::vector<int>& v0) {
    int n = 0;
    for (const Literal& l : c.literals())
        if (std::binary_search(v0.begin(), v0.end(), l.var())) ++n;
    return n;
}

}  // namespace

DeductionStepDetail deduction_step_detail(const ClauseSet& s,
                                          const std::vector<int>& v0_in,
                                          const DeductionConfig& cfg) {
    std::vector<int> v0(v0_in);
    std::sort(v0.begin(), v0.end());
    v0.erase(std::unique(v0.begin(), v0.end()), v0.end());
    if (v0.empty()) throw Error("V_0 must be nonempty");
    if (static_cast<int>(v0.size()) > cfg.v0_budget)
        throw Error("V_0 exceeds budget");

    DeductionStepDetail out;
    std::vector<Clause> residuals;
    Clause residual_union;
    const std::uint64_t count = 1ull << v0.size();
    for (std::uint64_t t = 0; t < count; ++t) {
        Clause o = MaximalClause::from_index(v0, t).to_clause();

        Clause overlap_base;
        if (!residuals.empty()) {
            Clause inter = residuals.front();
            for (std::size_t k = 1; k < residuals.size(); ++k)
                inter = clause_intersection(inter, residuals[k]);
            overlap_base = inter.empty() ? residual_union : inter;
        }

        bool found = false;
        std::size_t best = 0;
        int best_c2 = -1, best_c3 = -1, best_v0 = -1;
        Clause best_kept, best_resid;
        for (std::size_t j = 0; j < s.size(); ++j) {
            Clause kept = clause_intersection(s[j], o);
            if (kept.empty()) continue;
            Clause resid = clause_difference(s[j], o);
            int c2 = static_cast<int>(clause_intersection(resid, overlap_base).size());
            int c3 = static_cast<int>(clause_difference(resid, residual_union).size());
            int on_v0 = count_v0_literals(resid, v0);
            bool better;
            if (!found) better = true;
            else if (c2 != best_c2) better = c2 > best_c2;
            else if (c3 != best_c3) better = c3 < best_c3;
            else if (on_v0 != best_v0) better = on_v0 < best_v0;
            else better = false;
            if (better) {
                found = true;
                best = j;
                best_c2 = c2;
                best_c3 = c3;
                best_v0 = on_v0;
                best_kept = kept;
                best_resid = resid;
            }
        }
        if (!found) throw Error("V_0 not refutation-covering");

        out.chosen.push_back(best);
        out.separation.parts.push_back({best_kept, best_resid});
        residuals.push_back(best_resid);
        residual_union = clause_union(residual_union, best_resid);
    }

    std::vector<Clause> kept;
    kept.reserve(out.separation.parts.size());
    for (const Separation::Part& p : out.separation.parts) kept.push_back(p.kept);
    if (!is_standard_contradiction(ClauseSet(std::move(kept))))
        throw Error("separated part is not a contradiction");

    out.result = residual_union;
    return out;
}

Clause deduction_step(const ClauseSet& s, const std::vector<int>& v0,
                      const DeductionConfig& cfg) {
    return deduction_step_detail(s, v0, cfg).result;
}

namespace {

// Variables of the working set ranked by occurrence count (descending),
// ties to the lower variable index.
std::vector<int> ranked_variables(const std::vector<WorkItem>& items) {
    std::map<int, int> occurrences;
    for (const WorkItem& it : items)
        for (const Literal& l : it.clause.literals()) ++occurrences[l.var()];
    std::vector<int> vars;
    vars.reserve(occurrences.size());
    for (const auto& [v, n] : occurrences) vars.push_back(v);
    std::stable_sort(vars.begin(), vars.end(), [&](int a, int b) {
        return occurrences[a] != occurrences[b] ? occurrences[a] > occurrences[b]
                                                : a < b;
    });
    return vars;
}

bool all_cells_intersectable(const std::vector<WorkItem>& items,
                             const std::vector<int>& v0) {
    const std::uint64_t count = 1ull << v0.size();
    for (std::uint64_t t = 0; t < count; ++t) {
        Clause o = MaximalClause::from_index(v0, t).to_clause();
        bool hit = false;
        for (const WorkItem& it : items)
            if (!clause_intersection(it.clause, o).empty()) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

constexpr int kV0CandidateCap = 128;

}  // namespace

MaxcontraResult maxcontra_refute(const ClauseSet& s, const DeductionConfig& cfg,
                                 const std::atomic<bool>* interrupt) {
    ProofBuilder builder(s);
    std::vector<WorkItem> items;
    items.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        items.push_back(WorkItem{s[i], static_cast<int>(i) + 1});

    MaxcontraResult res;
    auto finish = [&](RefuteTag tag) {
        res.tag = tag;
        res.proof = builder.take(tag == RefuteTag::kUnsat);
        std::vector<Clause> rest;
        rest.reserve(items.size());
        for (const WorkItem& it : items) rest.push_back(it.clause);
        res.residual = ClauseSet(std::move(rest));
        return res;
    };

    while (true) {
        simplify_items(items, &builder);
        if (contains_empty(items)) return finish(RefuteTag::kUnsat);
        if (interrupt && interrupt->load()) return finish(RefuteTag::kResourceOut);
        if (res.steps_taken >= cfg.step_cap) return finish(RefuteTag::kResourceOut);

        std::vector<int> ranked = ranked_variables(items);
        const int max_size =
            std::min<int>(cfg.v0_budget, static_cast<int>(ranked.size()));
        bool progressed = false;
        for (int size = max_size; size >= 1 && !progressed; --size) {
            // Combinations of ranked variables in ranked order, best first.
            std::vector<int> pick(size);
            for (int i = 0; i < size; ++i) pick[i] = i;
            int tried = 0;
            while (tried < kV0CandidateCap) {
                ++tried;
                std::vector<int> v0;
                v0.reserve(size);
                for (int i : pick) v0.push_back(ranked[i]);
                std::sort(v0.begin(), v0.end());

                if (all_cells_intersectable(items, v0)) {
                    std::vector<Clause> current;
                    current.reserve(items.size());
                    for (const WorkItem& it : items) current.push_back(it.clause);
                    ClauseSet working(std::move(current));
                    DeductionStepDetail detail =
                        deduction_step_detail(working, v0, cfg);

                    bool redundant = detail.result.is_tautology();
                    if (!redundant)
                        for (const WorkItem& it : items)
                            if (it.clause.subset_of(detail.result)) {
                                redundant = true;
                                break;
                            }
                    if (!redundant) {
                        std::vector<int> premise_ids;
                        premise_ids.reserve(detail.chosen.size());
                        for (std::size_t idx : detail.chosen)
                            premise_ids.push_back(items[idx].id);
                        int id = builder.add_step(std::move(premise_ids),
                                                  std::move(detail.separation));
                        items.push_back(WorkItem{detail.result, id});
                        res.deductions.push_back(
                            MaxcontraStepRecord{v0, id, detail.result});
                        ++res.steps_taken;
                        progressed = true;
                        break;
                    }
                }

                // Advance to the next combination of ranked indices.
                int i = size - 1;
                while (i >= 0 &&
                       pick[i] == static_cast<int>(ranked.size()) - size + i)
                    --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        if (!progressed) return finish(RefuteTag::kUndetermined);
    }
}

ClauseSet redundancy_process(const ClauseSet& s) {
    std::vector<WorkItem> items;
    items.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        items.push_back(WorkItem{s[i], static_cast<int>(i) + 1});
    simplify_items(items, nullptr);
    std::vector<Clause> out;
    out.reserve(items.size());
    for (const WorkItem& it : items) out.push_back(it.clause);
    return ClauseSet(std::move(out));
}

}  // namespace csd
