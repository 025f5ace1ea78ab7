#ifndef CSDEDUCE_TRIANGLE_HPP
#define CSDEDUCE_TRIANGLE_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "csdeduce/types.hpp"

namespace csd {

using CountResult = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultEnumerationCap = 1000000;

// A triangular standard contradiction over boundary literals x_1..x_{k-1}:
// clause t (t < k) holds its diagonal literal x_t plus a subset of the
// complement slots ~x_1..~x_{t-1}; the closing clause k holds a subset of
// ~x_1..~x_{k-1} always including ~x_{k-1}. Slot masks store the occupied
// complement slots (bit j-1 for ~x_j); diagonals are implicit. A full
// triangle occupies every slot.
struct Triangle {
    std::vector<Literal> boundary;
    std::vector<std::uint64_t> slots;

    int clause_count() const { return static_cast<int>(boundary.size()) + 1; }
    // Materializes clause t (1-based).
    Clause clause(int t) const;
    ClauseSet materialize() const;
};

// The k-clause full triangle over the boundary: D_1 = x_1,
// D_t = x_t ∨ ~x_1 ∨ ... ∨ ~x_{t-1}, D_k = ~x_1 ∨ ... ∨ ~x_{k-1}.
// Throws Error("invalid main boundary") unless the boundary literals are
// over pairwise distinct variables.
Triangle build_full_triangle(const std::vector<Literal>& boundary);

// Transverse cut: keep clauses i..k restricted to the boundary suffix
// x_i..x_{k-1}. For a full triangle this is the full triangle over the
// suffix. 1 ≤ i ≤ k-1.
ClauseSet sub_transverse(const Triangle& t, int i);

// Vertical cut: clauses 1..i-1 unchanged plus the closing clause restricted
// to ~x_1..~x_{i-1}. 2 ≤ i ≤ k.
ClauseSet sub_vertical(const Triangle& t, int i);

// Middle cut: clauses h..i restricted to the boundary window x_h..x_{i-1},
// with clause i contributing the closing part. 1 ≤ h ≤ i-1 ≤ k-1.
ClauseSet sub_middle(const Triangle& t, int h, int i);

// Deletion cut: drop the clauses with the removed interior indices and
// erase their boundary variables everywhere else. removed ⊆ {1..k-2};
// removing k-1 or k throws Error("cannot delete closing structure").
ClauseSet sub_delete(const Triangle& t, const std::vector<int>& removed);

struct PeelResult {
    ClauseSet clauses;
    bool no_sub_triangle = false;
};

// Tail-peeling of a triangle-shaped set: drop the closing clause, strip the
// last diagonal, then scan backwards for the first clause with a nonempty
// complement part; its top complement literal ~x_j0 closes the result over
// x_1..x_j0. When every complement part is empty the result degenerates to
// {x_1} with no_sub_triangle set. Throws Error("shape violation") when the
// input is not triangle-shaped.
PeelResult peel_tail(const ClauseSet& s);

// Number of full-clause-count sub-contradiction selections of the full
// n-clause triangle: product of (2^j - 1) for j = 1..n-1, times
// (2^(n-1) - 1). n ≥ 2.
CountResult count_cn(int n);

// Number of full-clause-count sub-contradiction selections of the maximal
// contradiction over n variables: (2^n - 1)^(2^n). n ≥ 1.
CountResult count_msc(int n);

struct BruteCountDetail {
    CountResult selections = 0;     // enumerated selections
    CountResult standard = 0;       // selections passing the kernel check
    CountResult rejected = 0;       // selections failing it (0 on standard input)
    CountResult distinct_sets = 0;  // distinct resulting clause multisets
    bool distinct_tracked = false;
};

// Enumerates every per-clause nonempty literal subset of s (all clauses
// participate), checking each selection with the kernel. Throws
// Error("enumeration too large") when the selection space exceeds the cap.
BruteCountDetail brute_count_detail(const ClauseSet& s, bool track_distinct = false,
                                    std::uint64_t cap = kDefaultEnumerationCap);

// The count of selections that are standard contradictions.
CountResult brute_count_sub_contradictions(const ClauseSet& s,
                                           std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace csd

#endif
