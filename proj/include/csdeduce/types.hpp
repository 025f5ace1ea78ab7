#ifndef CSDEDUCE_TYPES_HPP
#define CSDEDUCE_TYPES_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace csd {

// Library-level failure with a stable message; CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A propositional literal encoded as a nonzero signed integer, DIMACS style:
// +v is the positive literal of variable v, -v its negation. v >= 1.
class Literal {
public:
    explicit Literal(int code);

    static Literal positive(int var) { return Literal(var); }
    static Literal negative(int var) { return Literal(-var); }

    int code() const { return code_; }
    int var() const { return code_ < 0 ? -code_ : code_; }
    bool is_positive() const { return code_ > 0; }

    Literal complement() const { return Literal(-code_); }

    bool operator==(const Literal& o) const { return code_ == o.code_; }
    bool operator!=(const Literal& o) const { return code_ != o.code_; }

    // Canonical order: ascending variable, positive before negative.
    bool operator<(const Literal& o) const {
        if (var() != o.var()) return var() < o.var();
        return is_positive() && !o.is_positive();
    }

private:
    int code_;
};

std::string to_string(const Literal& l);

// A clause is a disjunction of literals kept sorted in canonical order with
// duplicates removed. Both polarities of a variable may coexist; such a
// clause is a tautology and is flagged rather than rejected.
class Clause {
public:
    Clause() = default;
    explicit Clause(std::vector<Literal> lits);

    // Convenience constructor from DIMACS codes, e.g. Clause::of({1, -2}).
    static Clause of(std::initializer_list<int> codes);

    const std::vector<Literal>& literals() const { return lits_; }
    std::size_t size() const { return lits_.size(); }
    bool empty() const { return lits_.empty(); }
    bool is_tautology() const { return tautology_; }

    bool contains(const Literal& l) const;
    // True when every literal of this clause occurs in the other.
    bool subset_of(const Clause& other) const;

    bool operator==(const Clause& o) const { return lits_ == o.lits_; }
    bool operator!=(const Clause& o) const { return lits_ != o.lits_; }
    bool operator<(const Clause& o) const { return lits_ < o.lits_; }

private:
    std::vector<Literal> lits_;
    bool tautology_ = false;
};

std::string to_string(const Clause& c);

// Sorted-merge set operations over canonical clauses.
Clause clause_union(const Clause& a, const Clause& b);
Clause clause_intersection(const Clause& a, const Clause& b);
Clause clause_difference(const Clause& a, const Clause& b);

// A clause set tracks its variable universe V(S): the sorted distinct
// variables occurring in any clause. Duplicate clauses are kept as given;
// callers that need set semantics deduplicate explicitly.
class ClauseSet {
public:
    ClauseSet() = default;
    explicit ClauseSet(std::vector<Clause> clauses);

    const std::vector<Clause>& clauses() const { return clauses_; }
    const std::vector<int>& universe() const { return universe_; }
    std::size_t size() const { return clauses_.size(); }
    bool empty() const { return clauses_.empty(); }

    const Clause& operator[](std::size_t i) const { return clauses_[i]; }

    bool contains_empty_clause() const;
    bool contains_clause(const Clause& c) const;
    ClauseSet deduplicated() const;

    bool operator==(const ClauseSet& o) const { return clauses_ == o.clauses_; }

private:
    std::vector<Clause> clauses_;
    std::vector<int> universe_;
};

// Partial truth assignment over variables.
class Assignment {
public:
    void set(int var, bool value);
    std::optional<bool> value(int var) const;
    bool assigns(int var) const { return values_.count(var) != 0; }
    std::size_t size() const { return values_.size(); }

    bool total_over(std::span<const int> universe) const;

    // Truth value of a literal; the variable must be assigned.
    bool satisfies(const Literal& l) const;

    const std::map<int, bool>& values() const { return values_; }

    bool operator==(const Assignment& o) const { return values_ == o.values_; }

private:
    std::map<int, bool> values_;
};

// Conjunction-of-disjunctions semantics. The assignment must cover V(S);
// otherwise throws Error("incomplete assignment"). An empty clause makes the
// set false; an empty set is true.
bool evaluate(const ClauseSet& s, const Assignment& a);

}  // namespace csd

#endif
