#ifndef CSDEDUCE_ORACLE_HPP
#define CSDEDUCE_ORACLE_HPP

#include <optional>

#include "csdeduce/types.hpp"

namespace csd {

inline constexpr int kDefaultOracleVarCap = 20;

// Exhaustive truth-table search over V(S). Returns the lexicographically
// lowest model, ordering assignments as tuples (v_1, ..., v_n) over the
// ascending variable universe with false < true. Returns nullopt when the
// set is unsatisfiable. Throws Error("oracle limit") when |V(S)| exceeds
// the cap.
std::optional<Assignment> brute_force_model(const ClauseSet& s,
                                            int var_cap = kDefaultOracleVarCap);

// Convenience wrapper: true when brute_force_model finds nothing.
bool is_unsatisfiable(const ClauseSet& s, int var_cap = kDefaultOracleVarCap);

}  // namespace csd

#endif
