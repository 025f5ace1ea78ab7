#ifndef CSDEDUCE_KERNEL_HPP
#define CSDEDUCE_KERNEL_HPP

#include "csdeduce/oracle.hpp"
#include "csdeduce/types.hpp"

namespace csd {

// A per-clause choice of literal positions (indices into the canonical
// literal order), one entry per clause of the source set. Every entry must
// be nonempty.
using Selection = std::vector<std::vector<std::size_t>>;

// True iff every way of choosing one literal per clause yields a tuple
// containing at least one complementary pair. The check runs a depth-first
// search over pair-free partial tuples, visiting clauses in ascending size
// order, which is result-identical to full Cartesian enumeration.
// Throws Error("empty clause has no literal choice") if a clause is empty.
// The empty set is not a standard contradiction.
bool is_standard_contradiction(const ClauseSet& s);

// True iff the conjunction of the clauses is unsatisfiable, decided by
// truth-table search. Throws Error("oracle limit") when |V(S)| exceeds the
// cap. In propositional logic this coincides with
// is_standard_contradiction on every input.
bool is_quasi_contradiction(const ClauseSet& s, int var_cap = kDefaultOracleVarCap);

// Replaces each clause by the sub-clause formed from the selected literal
// positions. Selecting from a standard contradiction always yields a
// standard contradiction.
ClauseSet sub_select(const ClauseSet& s, const Selection& sel);

// Doubles the set: {C ∨ l for every C} followed by {C ∨ ~l for every C}.
// Preserves the standard-contradiction property. Duplicates are retained.
ClauseSet expand_by_literal(const ClauseSet& s, const Literal& l);

// Concatenates extra clauses after s. Adding clauses to a standard
// contradiction preserves the property.
ClauseSet expand_by_clauses(const ClauseSet& s, const ClauseSet& extra);

// Removes both polarities of v from every clause. Throws
// Error("shrink empties a clause") if some clause loses all literals and
// Error("shrink breaks contradiction") if the result fails the
// standard-contradiction check.
ClauseSet shrink_by_variable(const ClauseSet& s, int v);

}  // namespace csd

#endif
