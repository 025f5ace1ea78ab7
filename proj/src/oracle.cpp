#include "csdeduce/oracle.hpp"

#include <cstdint>

namespace csd {

namespace {

struct ClauseMasks {
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
    bool empty = false;
};

}  // namespace

std::optional<Assignment> brute_force_model(const ClauseSet& s, int var_cap) {
    const std::vector<int>& vars = s.universe();
    const int n = static_cast<int>(vars.size());
    if (n > var_cap) throw Error("oracle limit");

    // Bit n-1-i holds variable vars[i], so incrementing the mask walks
    // assignments in lexicographic order over (vars[0], ..., vars[n-1]).
    std::vector<ClauseMasks> masks;
    masks.reserve(s.size());
    for (const Clause& c : s.clauses()) {
        ClauseMasks m;
        m.empty = c.empty();
        for (const Literal& l : c.literals()) {
            int rank = static_cast<int>(
                std::lower_bound(vars.begin(), vars.end(), l.var()) - vars.begin());
            std::uint64_t bit = 1ull << (n - 1 - rank);
            if (l.is_positive()) m.pos |= bit;
            else m.neg |= bit;
        }
        masks.push_back(m);
        if (m.empty) return std::nullopt;
    }

    const std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
    for (std::uint64_t a = 0;; ++a) {
        bool ok = true;
        for (const ClauseMasks& m : masks) {
            if ((m.pos & a) == 0 && (m.neg & (~a & full)) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            Assignment out;
            for (int i = 0; i < n; ++i)
                out.set(vars[i], (a >> (n - 1 - i)) & 1);
            return out;
        }
        if (a == full) break;
    }
    return std::nullopt;
}

bool is_unsatisfiable(const ClauseSet& s, int var_cap) {
    return !brute_force_model(s, var_cap).has_value();
}

}  // namespace csd
