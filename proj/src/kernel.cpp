#include "csdeduce/kernel.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_set>

namespace csd {

namespace {

// Searches for a pair-free choice of one literal per clause, i.e. a
// counterexample to the standard-contradiction property. Partial tuples
// that already contain a complementary pair are abandoned. Two prunings
// keep the search tractable without changing its outcome:
//
//  * Dominance. If the current clause holds a literal that was already
//    chosen, recursing on that literal alone suffices: it leaves the
//    chosen set unchanged, and a smaller chosen set admits every
//    completion a larger one does.
//  * Memoization. The fate of the search below a level depends only on
//    the set of chosen literals, encoded as assigned/value bit masks over
//    variable ranks. Failed (level, masks) states are cached. Universes
//    beyond 64 variables skip the cache.
class TupleSearch {
public:
    TupleSearch(std::vector<const Clause*> clauses, const std::vector<int>& universe)
        : clauses_(std::move(clauses)), memo_enabled_(universe.size() <= 64) {
        for (std::size_t i = 0; i < universe.size(); ++i)
            rank_[universe[i]] = i;
    }

    bool pair_free_exists() { return search(0, 0, 0); }

private:
    struct State {
        std::size_t level;
        std::uint64_t assigned;
        std::uint64_t value;
        bool operator==(const State&) const = default;
    };
    struct StateHash {
        std::size_t operator()(const State& s) const {
            std::uint64_t h = s.level * 0x9E3779B97F4A7C15ull;
            h ^= s.assigned + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            h ^= s.value + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h);
        }
    };

    bool search(std::size_t level, std::uint64_t assigned, std::uint64_t value) {
        if (level == clauses_.size()) return true;
        State key{level, assigned, value};
        if (memo_enabled_ && failed_.contains(key)) return false;

        bool found = false;
        const Clause& clause = *clauses_[level];
        const Literal* agreeing = nullptr;
        for (const Literal& l : clause.literals()) {
            std::uint64_t bit = bit_of(l);
            if ((assigned & bit) && ((value & bit) != 0) == l.is_positive()) {
                agreeing = &l;
                break;
            }
        }
        if (agreeing) {
            found = search(level + 1, assigned, value);
        } else {
            for (const Literal& l : clause.literals()) {
                std::uint64_t bit = bit_of(l);
                if (assigned & bit) continue;  // only the complement is chosen
                std::uint64_t next_value = l.is_positive() ? (value | bit) : value;
                if (search(level + 1, assigned | bit, next_value)) {
                    found = true;
                    break;
                }
            }
        }
        if (!found && memo_enabled_) failed_.insert(key);
        return found;
    }

    std::uint64_t bit_of(const Literal& l) const { return 1ull << rank_.at(l.var()); }

    std::vector<const Clause*> clauses_;
    bool memo_enabled_;
    std::map<int, std::size_t> rank_;
    std::unordered_set<State, StateHash> failed_;
};

// Fallback without bit masks for universes beyond 64 variables.
bool pair_free_tuple_exists_wide(const std::vector<const Clause*>& clauses,
                                 std::size_t level, std::vector<Literal>& chosen) {
    if (level == clauses.size()) return true;
    const Literal* agreeing = nullptr;
    for (const Literal& l : clauses[level]->literals())
        if (std::find(chosen.begin(), chosen.end(), l) != chosen.end()) {
            agreeing = &l;
            break;
        }
    if (agreeing) return pair_free_tuple_exists_wide(clauses, level + 1, chosen);
    for (const Literal& l : clauses[level]->literals()) {
        if (std::find(chosen.begin(), chosen.end(), l.complement()) != chosen.end())
            continue;
        chosen.push_back(l);
        bool found = pair_free_tuple_exists_wide(clauses, level + 1, chosen);
        chosen.pop_back();
        if (found) return true;
    }
    return false;
}

}  // namespace

bool is_standard_contradiction(const ClauseSet& s) {
    for (const Clause& c : s.clauses())
        if (c.empty()) throw Error("empty clause has no literal choice");
    if (s.empty()) return false;

    std::vector<const Clause*> order;
    order.reserve(s.size());
    for (const Clause& c : s.clauses()) order.push_back(&c);
    std::stable_sort(order.begin(), order.end(),
                     [](const Clause* a, const Clause* b) { return a->size() < b->size(); });

    if (s.universe().size() <= 64)
        return !TupleSearch(std::move(order), s.universe()).pair_free_exists();

    std::vector<Literal> chosen;
    chosen.reserve(order.size());
    return !pair_free_tuple_exists_wide(order, 0, chosen);
}

bool is_quasi_contradiction(const ClauseSet& s, int var_cap) {
    return !brute_force_model(s, var_cap).has_value();
}

ClauseSet sub_select(const ClauseSet& s, const Selection& sel) {
    if (sel.size() != s.size())
        throw Error("selection length does not match clause count");
    std::vector<Clause> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (sel[i].empty()) throw Error("selection must be nonempty");
        std::vector<Literal> lits;
        lits.reserve(sel[i].size());
        for (std::size_t pos : sel[i]) {
            if (pos >= s[i].size()) throw Error("selection position out of range");
            lits.push_back(s[i].literals()[pos]);
        }
        out.push_back(Clause(std::move(lits)));
    }
    return ClauseSet(std::move(out));
}

ClauseSet expand_by_literal(const ClauseSet& s, const Literal& l) {
    std::vector<Clause> out;
    out.reserve(2 * s.size());
    Clause pos(std::vector<Literal>{l});
    Clause neg(std::vector<Literal>{l.complement()});
    for (const Clause& c : s.clauses()) out.push_back(clause_union(c, pos));
    for (const Clause& c : s.clauses()) out.push_back(clause_union(c, neg));
    return ClauseSet(std::move(out));
}

ClauseSet expand_by_clauses(const ClauseSet& s, const ClauseSet& extra) {
    std::vector<Clause> out = s.clauses();
    out.insert(out.end(), extra.clauses().begin(), extra.clauses().end());
    return ClauseSet(std::move(out));
}

ClauseSet shrink_by_variable(const ClauseSet& s, int v) {
    Clause both(std::vector<Literal>{Literal::positive(v), Literal::negative(v)});
    std::vector<Clause> out;
    out.reserve(s.size());
    for (const Clause& c : s.clauses()) {
        Clause shrunk = clause_difference(c, both);
        if (shrunk.empty()) throw Error("shrink empties a clause");
        out.push_back(shrunk);
    }
    ClauseSet result(std::move(out));
    if (!is_standard_contradiction(result))
        throw Error("shrink breaks contradiction");
    return result;
}

}  // namespace csd
