#include "csdeduce/triangle.hpp"

#include <algorithm>
#include <set>

#include "csdeduce/kernel.hpp"

namespace csd {

Clause Triangle::clause(int t) const {
    const int k = clause_count();
    std::vector<Literal> lits;
    if (t < k) lits.push_back(boundary[t - 1]);
    for (int j = 1; j <= static_cast<int>(boundary.size()); ++j)
        if ((slots[t - 1] >> (j - 1)) & 1)
            lits.push_back(boundary[j - 1].complement());
    return Clause(std::move(lits));
}

ClauseSet Triangle::materialize() const {
    std::vector<Clause> out;
    out.reserve(clause_count());
    for (int t = 1; t <= clause_count(); ++t) out.push_back(clause(t));
    return ClauseSet(std::move(out));
}

Triangle build_full_triangle(const std::vector<Literal>& boundary) {
    if (boundary.empty()) throw Error("invalid main boundary");
    if (boundary.size() > 64) throw Error("triangle too large");
    std::set<int> vars;
    for (const Literal& l : boundary) vars.insert(l.var());
    if (vars.size() != boundary.size()) throw Error("invalid main boundary");

    Triangle t;
    t.boundary = boundary;
    const int k = t.clause_count();
    t.slots.resize(k);
    for (int c = 1; c < k; ++c)
        t.slots[c - 1] = (c == 1) ? 0 : ((1ull << (c - 1)) - 1);
    t.slots[k - 1] = (k - 1 == 64) ? ~0ull : ((1ull << (k - 1)) - 1);
    return t;
}

namespace {

// Intersects clause c of the triangle with the permitted slots of the cut
// window [lo, hi]: the diagonal for c < hi when c ≥ lo, and complements
// ~x_j for lo ≤ j < c. For a full triangle this reproduces the cut
// formulas exactly.
Clause window_clause(const Triangle& t, int c, int lo, int hi) {
    const int k = t.clause_count();
    std::vector<Literal> allowed;
    if (c < hi && c < k) allowed.push_back(t.boundary[c - 1]);
    const int top = std::min(c - 1, static_cast<int>(t.boundary.size()));
    for (int j = lo; j <= top; ++j)
        allowed.push_back(t.boundary[j - 1].complement());
    Clause cut = clause_intersection(t.clause(c), Clause(std::move(allowed)));
    if (cut.empty()) throw Error("cut produces an empty clause");
    return cut;
}

ClauseSet window(const Triangle& t, int lo, int hi) {
    std::vector<Clause> out;
    out.reserve(hi - lo + 1);
    for (int c = lo; c <= hi; ++c) out.push_back(window_clause(t, c, lo, hi));
    return ClauseSet(std::move(out));
}

}  // namespace

ClauseSet sub_transverse(const Triangle& t, int i) {
    const int k = t.clause_count();
    if (i < 1 || i > k - 1) throw Error("index out of range");
    return window(t, i, k);
}

ClauseSet sub_vertical(const Triangle& t, int i) {
    const int k = t.clause_count();
    if (i < 2 || i > k) throw Error("index out of range");
    std::vector<Clause> out;
    out.reserve(i);
    for (int c = 1; c < i; ++c) out.push_back(t.clause(c));
    std::vector<Literal> allowed;
    for (int j = 1; j < i; ++j) allowed.push_back(t.boundary[j - 1].complement());
    Clause closing = clause_intersection(t.clause(k), Clause(std::move(allowed)));
    if (closing.empty()) throw Error("cut produces an empty clause");
    out.push_back(closing);
    return ClauseSet(std::move(out));
}

ClauseSet sub_middle(const Triangle& t, int h, int i) {
    const int k = t.clause_count();
    if (h < 1 || h > i - 1 || i - 1 > k - 1) throw Error("index constraint violated");
    return window(t, h, i);
}

ClauseSet sub_delete(const Triangle& t, const std::vector<int>& removed) {
    const int k = t.clause_count();
    std::vector<char> drop(k + 1, 0);
    std::vector<Literal> erased;
    for (int idx : removed) {
        if (idx == k - 1 || idx == k) throw Error("cannot delete closing structure");
        if (idx < 1 || idx > k - 2) throw Error("cut index out of range");
        drop[idx] = 1;
        erased.push_back(t.boundary[idx - 1]);
        erased.push_back(t.boundary[idx - 1].complement());
    }
    Clause gone{std::vector<Literal>(erased)};
    std::vector<Clause> out;
    for (int c = 1; c <= k; ++c) {
        if (drop[c]) continue;
        out.push_back(clause_difference(t.clause(c), gone));
    }
    return ClauseSet(std::move(out));
}

PeelResult peel_tail(const ClauseSet& s) {
    const int total = static_cast<int>(s.size());
    if (total < 2) throw Error("shape violation");

    // Parse the shape: clause 1 is the first boundary literal; each
    // interior clause adds exactly one new diagonal beside complements of
    // earlier boundary literals; the last clause holds complements only,
    // including the latest.
    std::vector<Literal> boundary;
    std::vector<Clause> comp_parts(total);
    if (s[0].size() != 1) throw Error("shape violation");
    boundary.push_back(s[0].literals().front());
    for (int t = 2; t <= total; ++t) {
        std::vector<Literal> comps;
        comps.reserve(boundary.size());
        for (const Literal& b : boundary) comps.push_back(b.complement());
        Clause allowed(std::move(comps));
        Clause inside = clause_intersection(s[t - 1], allowed);
        Clause extra = clause_difference(s[t - 1], allowed);
        if (t < total) {
            if (extra.size() != 1) throw Error("shape violation");
            Literal diag = extra.literals().front();
            for (const Literal& b : boundary)
                if (b.var() == diag.var()) throw Error("shape violation");
            boundary.push_back(diag);
            comp_parts[t - 1] = inside;
        } else {
            if (!extra.empty()) throw Error("shape violation");
            if (!s[t - 1].contains(boundary.back().complement()))
                throw Error("shape violation");
        }
    }

    // Drop the closing clause and the last diagonal, then scan backwards
    // for the first nonempty complement part.
    for (int i = total - 1; i >= 2; --i) {
        const Clause& part = comp_parts[i - 1];
        if (part.empty()) continue;
        int j0 = 0;
        for (const Literal& l : part.literals())
            for (int j = 1; j <= static_cast<int>(boundary.size()); ++j)
                if (boundary[j - 1].complement() == l && j > j0) j0 = j;
        std::vector<Clause> out;
        out.reserve(j0 + 1);
        for (int t = 1; t <= j0; ++t) out.push_back(s[t - 1]);
        out.push_back(part);
        return PeelResult{ClauseSet(std::move(out)), false};
    }
    return PeelResult{ClauseSet({s[0]}), true};
}

CountResult count_cn(int n) {
    if (n < 2) throw Error("triangle needs at least two clauses");
    CountResult product = 1;
    for (int j = 1; j <= n - 1; ++j)
        product *= (CountResult(1) << j) - 1;
    product *= (CountResult(1) << (n - 1)) - 1;
    return product;
}

CountResult count_msc(int n) {
    if (n < 1) throw Error("variable count must be positive");
    if (n > 16) throw Error("count too large to materialize");
    CountResult base = (CountResult(1) << n) - 1;
    return boost::multiprecision::pow(base, 1u << n);
}

BruteCountDetail brute_count_detail(const ClauseSet& s, bool track_distinct,
                                    std::uint64_t cap) {
    CountResult space = 1;
    for (const Clause& c : s.clauses()) {
        if (c.empty()) throw Error("empty clause has no literal choice");
        space *= (CountResult(1) << c.size()) - 1;
    }
    if (space > cap) throw Error("enumeration too large");

    BruteCountDetail out;
    out.distinct_tracked = track_distinct;
    std::set<std::vector<Clause>> seen;

    const std::size_t m = s.size();
    std::vector<std::uint64_t> masks(m, 1);
    if (m == 0) return out;
    while (true) {
        std::vector<Clause> picked;
        picked.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Literal> lits;
            for (std::size_t b = 0; b < s[i].size(); ++b)
                if ((masks[i] >> b) & 1) lits.push_back(s[i].literals()[b]);
            picked.push_back(Clause(std::move(lits)));
        }
        out.selections += 1;
        if (is_standard_contradiction(ClauseSet(picked)))
            out.standard += 1;
        else
            out.rejected += 1;
        if (track_distinct) {
            std::sort(picked.begin(), picked.end());
            seen.insert(std::move(picked));
        }

        std::size_t i = 0;
        while (i < m) {
            ++masks[i];
            if (masks[i] < (1ull << s[i].size())) break;
            masks[i] = 1;
            ++i;
        }
        if (i == m) break;
    }
    if (track_distinct) out.distinct_sets = seen.size();
    return out;
}

CountResult brute_count_sub_contradictions(const ClauseSet& s, std::uint64_t cap) {
    return brute_count_detail(s, false, cap).standard;
}

}  // namespace csd
