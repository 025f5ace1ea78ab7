#include "csdeduce/types.hpp"

#include <algorithm>
#include <set>

namespace csd {

Literal::Literal(int code) : code_(code) {
    if (code == 0) throw Error("literal code must be nonzero");
}

std::string to_string(const Literal& l) { return std::to_string(l.code()); }

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
    for (std::size_t i = 0; i + 1 < lits_.size(); ++i) {
        if (lits_[i].var() == lits_[i + 1].var()) {
            tautology_ = true;
            break;
        }
    }
}

Clause Clause::of(std::initializer_list<int> codes) {
    std::vector<Literal> lits;
    lits.reserve(codes.size());
    for (int c : codes) lits.push_back(Literal(c));
    return Clause(std::move(lits));
}

bool Clause::contains(const Literal& l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::subset_of(const Clause& other) const {
    return std::includes(other.lits_.begin(), other.lits_.end(),
                         lits_.begin(), lits_.end());
}

std::string to_string(const Clause& c) {
    if (c.empty()) return "()";
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += " ";
        out += to_string(c.literals()[i]);
    }
    out += ")";
    return out;
}

Clause clause_union(const Clause& a, const Clause& b) {
    std::vector<Literal> merged;
    merged.reserve(a.size() + b.size());
    std::set_union(a.literals().begin(), a.literals().end(),
                   b.literals().begin(), b.literals().end(),
                   std::back_inserter(merged));
    return Clause(std::move(merged));
}

Clause clause_intersection(const Clause& a, const Clause& b) {
    std::vector<Literal> merged;
    std::set_intersection(a.literals().begin(), a.literals().end(),
                          b.literals().begin(), b.literals().end(),
                          std::back_inserter(merged));
    return Clause(std::move(merged));
}

Clause clause_difference(const Clause& a, const Clause& b) {
    std::vector<Literal> merged;
    std::set_difference(a.literals().begin(), a.literals().end(),
                        b.literals().begin(), b.literals().end(),
                        std::back_inserter(merged));
    return Clause(std::move(merged));
}

ClauseSet::ClauseSet(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
    std::set<int> vars;
    for (const Clause& c : clauses_)
        for (const Literal& l : c.literals()) vars.insert(l.var());
    universe_.assign(vars.begin(), vars.end());
}

bool ClauseSet::contains_empty_clause() const {
    for (const Clause& c : clauses_)
        if (c.empty()) return true;
    return false;
}

bool ClauseSet::contains_clause(const Clause& c) const {
    for (const Clause& d : clauses_)
        if (d == c) return true;
    return false;
}

ClauseSet ClauseSet::deduplicated() const {
    std::vector<Clause> out;
    for (const Clause& c : clauses_) {
        bool seen = false;
        for (const Clause& d : out)
            if (d == c) { seen = true; break; }
        if (!seen) out.push_back(c);
    }
    return ClauseSet(std::move(out));
}

void Assignment::set(int var, bool value) {
    if (var <= 0) throw Error("variable index must be positive");
    values_[var] = value;
}

std::optional<bool> Assignment::value(int var) const {
    auto it = values_.find(var);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

bool Assignment::total_over(std::span<const int> universe) const {
    for (int v : universe)
        if (!values_.count(v)) return false;
    return true;
}

bool Assignment::satisfies(const Literal& l) const {
    auto v = value(l.var());
    if (!v) throw Error("incomplete assignment");
    return *v == l.is_positive();
}

bool evaluate(const ClauseSet& s, const Assignment& a) {
    if (!a.total_over(s.universe())) throw Error("incomplete assignment");
    for (const Clause& c : s.clauses()) {
        bool sat = false;
        for (const Literal& l : c.literals()) {
            if (a.satisfies(l)) { sat = true; break; }
        }
        if (!sat) return false;
    }
    return true;
}

}  // namespace csd
