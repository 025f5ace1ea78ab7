#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csdeduce/io.hpp"
#include "csdeduce/kernel.hpp"
#include "csdeduce/maximal.hpp"
#include "csdeduce/oracle.hpp"
#include "csdeduce/prover.hpp"
#include "csdeduce/triangle.hpp"

namespace py = pybind11;
using namespace csd;

namespace {

// Clauses cross the boundary as lists of DIMACS-style literal codes.
ClauseSet to_set(const std::vector<std::vector<int>>& raw) {
    std::vector<Clause> clauses;
    clauses.reserve(raw.size());
    for (const std::vector<int>& r : raw) {
        std::vector<Literal> lits;
        lits.reserve(r.size());
        for (int code : r) lits.push_back(Literal(code));
        clauses.push_back(Clause(std::move(lits)));
    }
    return ClauseSet(std::move(clauses));
}

std::vector<std::vector<int>> from_set(const ClauseSet& s) {
    std::vector<std::vector<int>> out;
    out.reserve(s.size());
    for (const Clause& c : s.clauses()) {
        std::vector<int> r;
        r.reserve(c.size());
        for (const Literal& l : c.literals()) r.push_back(l.code());
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<int> from_clause(const Clause& c) {
    std::vector<int> r;
    for (const Literal& l : c.literals()) r.push_back(l.code());
    return r;
}

std::optional<std::map<int, bool>> assignment_map(const std::optional<Assignment>& a) {
    if (!a) return std::nullopt;
    return a->values();
}

py::object big_int(const CountResult& v) {
    py::object ctor = py::module_::import("builtins").attr("int");
    return ctor(v.str());
}

std::vector<Literal> boundary_literals(const std::vector<int>& codes) {
    std::vector<Literal> out;
    out.reserve(codes.size());
    for (int c : codes) out.push_back(Literal(c));
    return out;
}

Triangle triangle_of(const std::vector<int>& boundary) {
    return build_full_triangle(boundary_literals(boundary));
}

const char* strategy_name(RefuteOutcome::Kind k) {
    switch (k) {
        case RefuteOutcome::Kind::kProof: return "proof";
        case RefuteOutcome::Kind::kSaturated: return "saturated";
        default: return "resource-out";
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Contradiction separation deduction over propositional clause sets";

    py::register_exception<Error>(m, "DeduceError");

    m.def(
        "is_standard_contradiction",
        [](const std::vector<std::vector<int>>& s) {
            return is_standard_contradiction(to_set(s));
        },
        py::arg("clauses"),
        "True iff every one-literal-per-clause choice contains a "
        "complementary pair.");

    m.def(
        "is_quasi_contradiction",
        [](const std::vector<std::vector<int>>& s, int var_cap) {
            return is_quasi_contradiction(to_set(s), var_cap);
        },
        py::arg("clauses"), py::arg("var_cap") = kDefaultOracleVarCap,
        "True iff the clause set is unsatisfiable (truth-table check).");

    m.def(
        "brute_force_model",
        [](const std::vector<std::vector<int>>& s) {
            return assignment_map(brute_force_model(to_set(s)));
        },
        py::arg("clauses"),
        "Lexicographically lowest model, or None when unsatisfiable.");

    m.def(
        "decide",
        [](const std::vector<std::vector<int>>& s) {
            Verdict v = decide(to_set(s));
            py::dict out;
            out["sat"] = v.tag == SatTag::kSat;
            out["covered"] = v.covered;
            out["table_size"] = v.table_size;
            out["witness"] = v.witness
                                 ? py::object(py::cast(from_clause(v.witness->to_clause())))
                                 : py::none();
            out["model"] = v.model ? py::object(py::cast(v.model->values()))
                                   : py::none();
            return out;
        },
        py::arg("clauses"),
        "Coverage decision: satisfiable iff some maximal clause over the "
        "universe is uncovered; carries the lowest such witness.");

    m.def(
        "satisfiable_instance",
        [](const std::vector<std::vector<int>>& s, const std::vector<int>& witness) {
            Clause w(boundary_literals(witness));
            ClauseSet set = to_set(s);
            MaximalClause d;
            d.universe = set.universe();
            for (int var : d.universe) d.positive.push_back(w.contains(Literal(var)));
            std::vector<int> out;
            for (const Literal& l : satisfiable_instance(set, d))
                out.push_back(l.code());
            return out;
        },
        py::arg("clauses"), py::arg("witness"),
        "One true literal per clause, drawn against an uncovered maximal "
        "clause given as a literal list.");

    m.def(
        "find_model",
        [](const std::vector<std::vector<int>>& s, int method, std::uint64_t seed,
           int budget) {
            DeductionConfig cfg;
            cfg.seed = seed;
            cfg.retry_budget = budget;
            return assignment_map(
                find_model(to_set(s), static_cast<ModelSearchMethod>(method), cfg));
        },
        py::arg("clauses"), py::arg("method") = 3, py::arg("seed") = 0,
        py::arg("budget") = 64,
        "Randomized model search (1 probe, 2 sweep, 3 sweep with repair).");

    m.def(
        "redundancy",
        [](const std::vector<std::vector<int>>& s) {
            return from_set(redundancy_process(to_set(s)));
        },
        py::arg("clauses"),
        "Fixpoint of tautology, duplicate, subsumption, and unit reduction.");

    m.def(
        "refute",
        [](const std::vector<std::vector<int>>& s, const std::string& strategy,
           int step_cap, std::uint64_t seed) {
            ClauseSet set = to_set(s);
            DeductionConfig cfg;
            cfg.step_cap = step_cap;
            cfg.seed = seed;
            py::dict out;
            if (strategy == "maxcontra") {
                MaxcontraResult r = maxcontra_refute(set, cfg);
                out["kind"] = r.tag == RefuteTag::kUnsat          ? "proof"
                              : r.tag == RefuteTag::kUndetermined ? "saturated"
                                                                  : "resource-out";
                out["trace"] = emit_trace(r.proof);
                out["steps"] = r.steps_taken;
                return out;
            }
            SearchStrategy st = strategy == "binary" ? SearchStrategy::kBinary
                                                     : SearchStrategy::kTriangular;
            if (strategy != "binary" && strategy != "triangular")
                throw Error("unknown strategy '" + strategy + "'");
            RefuteOutcome r = refute(set, cfg, st);
            out["kind"] = strategy_name(r.kind);
            out["trace"] = emit_trace(r.proof);
            out["steps"] = r.steps_taken;
            return out;
        },
        py::arg("clauses"), py::arg("strategy") = "triangular",
        py::arg("step_cap") = 10000, py::arg("seed") = 0,
        "Refutation search; returns kind, proof trace text, and step count.");

    m.def(
        "verify",
        [](const std::vector<std::vector<int>>& s, const std::string& trace) {
            ClauseSet set = to_set(s);
            Proof p = parse_trace(trace, set.clauses());
            VerifyResult v = verify_proof(set, p);
            return py::make_tuple(v.ok, v.diagnostic);
        },
        py::arg("clauses"), py::arg("trace"),
        "Re-checks a proof trace; returns (ok, diagnostic).");

    m.def(
        "maximal_contradiction",
        [](const std::vector<int>& vars) {
            return from_set(generate_maximal_contradiction(vars));
        },
        py::arg("variables"),
        "All maximal clauses over the variables, in ascending index order.");

    m.def(
        "full_triangle",
        [](const std::vector<int>& boundary) {
            return from_set(triangle_of(boundary).materialize());
        },
        py::arg("boundary"),
        "The triangular standard contradiction over the boundary literals.");

    m.def(
        "sub_transverse",
        [](const std::vector<int>& boundary, int i) {
            return from_set(sub_transverse(triangle_of(boundary), i));
        },
        py::arg("boundary"), py::arg("i"));

    m.def(
        "sub_vertical",
        [](const std::vector<int>& boundary, int i) {
            return from_set(sub_vertical(triangle_of(boundary), i));
        },
        py::arg("boundary"), py::arg("i"));

    m.def(
        "sub_middle",
        [](const std::vector<int>& boundary, int h, int i) {
            return from_set(sub_middle(triangle_of(boundary), h, i));
        },
        py::arg("boundary"), py::arg("h"), py::arg("i"));

    m.def(
        "sub_delete",
        [](const std::vector<int>& boundary, const std::vector<int>& removed) {
            return from_set(sub_delete(triangle_of(boundary), removed));
        },
        py::arg("boundary"), py::arg("removed"));

    m.def(
        "peel_tail",
        [](const std::vector<std::vector<int>>& s) {
            PeelResult r = peel_tail(to_set(s));
            return py::make_tuple(from_set(r.clauses), r.no_sub_triangle);
        },
        py::arg("clauses"),
        "Peels the closing clause; returns (clauses, degenerate_flag).");

    m.def(
        "count_cn", [](int n) { return big_int(count_cn(n)); }, py::arg("n"),
        "Full-size sub-contradiction count of the n-clause full triangle.");

    m.def(
        "count_msc", [](int n) { return big_int(count_msc(n)); }, py::arg("n"),
        "Full-size sub-contradiction count of the rank-n maximal "
        "contradiction.");

    m.def(
        "brute_count",
        [](const std::vector<std::vector<int>>& s) {
            BruteCountDetail d = brute_count_detail(to_set(s));
            py::dict out;
            out["selections"] = big_int(d.selections);
            out["standard"] = big_int(d.standard);
            out["rejected"] = big_int(d.rejected);
            return out;
        },
        py::arg("clauses"),
        "Exhaustive per-clause subset enumeration with kernel checking.");

    m.def(
        "parse_dimacs",
        [](const std::string& text) { return from_set(parse_dimacs(text).clauses); },
        py::arg("text"));

    m.def(
        "emit_dimacs",
        [](const std::vector<std::vector<int>>& s) { return emit_dimacs(to_set(s)); },
        py::arg("clauses"));
}
