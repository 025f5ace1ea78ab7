#include <atomic>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "csdeduce/io.hpp"
#include "csdeduce/kernel.hpp"
#include "csdeduce/maximal.hpp"
#include "csdeduce/oracle.hpp"
#include "csdeduce/prover.hpp"
#include "csdeduce/triangle.hpp"

namespace {

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 10;
constexpr int kExitUnknown = 20;
constexpr int kExitError = 1;

std::atomic<bool> g_interrupt{false};

void handle_interrupt(int) { g_interrupt.store(true); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw csd::Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

csd::ParsedProblem load_problem(const std::string& path) {
    csd::ParsedProblem p = csd::parse_dimacs(read_file(path));
    for (const std::string& w : p.warnings)
        std::cout << "c warning: " << w << "\n";
    return p;
}

void print_model(const csd::Assignment& model, int max_var) {
    std::cout << "v";
    for (int v = 1; v <= max_var; ++v) {
        bool value = model.value(v).value_or(false);
        std::cout << " " << (value ? v : -v);
    }
    std::cout << " 0\n";
}

int model_var_span(const csd::ParsedProblem& problem) {
    int max_var = problem.declared_vars > 0 ? problem.declared_vars : 0;
    if (!problem.clauses.universe().empty())
        max_var = std::max(max_var, problem.clauses.universe().back());
    return max_var;
}

int run_decide(const std::string& path, int uncovered_limit) {
    csd::ParsedProblem problem = load_problem(path);
    csd::Verdict verdict = csd::decide(problem.clauses);
    std::cout << "c covered " << verdict.covered << " of " << verdict.table_size
              << "\n";
    if (verdict.tag == csd::SatTag::kUnsat) {
        std::cout << "s UNSATISFIABLE\n";
        return kExitUnsat;
    }
    if (uncovered_limit > 0) {
        csd::CoverageTable table = csd::coverage(problem.clauses);
        for (std::uint64_t idx : table.uncovered(uncovered_limit)) {
            csd::Clause d =
                csd::MaximalClause::from_index(table.universe, idx).to_clause();
            std::cout << "c uncovered";
            for (const csd::Literal& l : d.literals()) std::cout << " " << l.code();
            std::cout << " 0\n";
        }
    }
    std::cout << "s SATISFIABLE\n";
    print_model(*verdict.model, model_var_span(problem));
    return kExitSat;
}

int run_model(const std::string& path, int method, int budget,
              std::uint64_t seed) {
    csd::ParsedProblem problem = load_problem(path);
    csd::DeductionConfig cfg;
    cfg.retry_budget = budget;
    cfg.seed = seed;
    auto found = csd::find_model(problem.clauses,
                                 static_cast<csd::ModelSearchMethod>(method), cfg);
    if (!found) {
        std::cout << "s UNKNOWN\n";
        return kExitUnknown;
    }
    std::cout << "s SATISFIABLE\n";
    print_model(*found, model_var_span(problem));
    return kExitSat;
}

void write_trace(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw csd::Error("cannot write '" + out_path + "'");
    out << text;
}

int run_prove(const std::string& path, const std::string& strategy,
              int max_steps, std::uint64_t seed, const std::string& out_path) {
    csd::ParsedProblem problem = load_problem(path);
    csd::DeductionConfig cfg;
    cfg.step_cap = max_steps;
    cfg.seed = seed;

    std::signal(SIGINT, handle_interrupt);

    if (strategy == "maxcontra") {
        csd::MaxcontraResult res =
            csd::maxcontra_refute(problem.clauses, cfg, &g_interrupt);
        for (const csd::MaxcontraStepRecord& rec : res.deductions) {
            std::cout << "c step " << rec.step_id << " v0";
            for (int v : rec.v0) std::cout << " " << v;
            std::cout << " R0";
            if (rec.result.empty()) std::cout << " #";
            for (const csd::Literal& l : rec.result.literals())
                std::cout << " " << l.code();
            std::cout << "\n";
        }
        std::string trace = csd::emit_trace(res.proof);
        switch (res.tag) {
            case csd::RefuteTag::kUnsat:
                write_trace(out_path, trace);
                std::cout << "s UNSATISFIABLE\n";
                return kExitUnsat;
            case csd::RefuteTag::kUndetermined:
                std::cout << "c residual " << res.residual.size() << " clauses\n";
                write_trace(out_path, trace + "c INCOMPLETE\n");
                std::cout << "s UNKNOWN\n";
                return kExitUnknown;
            case csd::RefuteTag::kResourceOut:
                write_trace(out_path, trace + "c INCOMPLETE\n");
                std::cout << "s UNKNOWN\n";
                return kExitUnknown;
        }
    }

    csd::SearchStrategy mode = strategy == "binary"
                                   ? csd::SearchStrategy::kBinary
                                   : csd::SearchStrategy::kTriangular;
    csd::RefuteOutcome res = csd::refute(problem.clauses, cfg, mode, &g_interrupt);
    std::cout << "c iterations " << res.steps_taken << "\n";
    std::string trace = csd::emit_trace(res.proof);
    switch (res.kind) {
        case csd::RefuteOutcome::Kind::kProof:
            write_trace(out_path, trace);
            std::cout << "s UNSATISFIABLE\n";
            return kExitUnsat;
        case csd::RefuteOutcome::Kind::kSaturated:
            write_trace(out_path, trace + "c SATURATED\n");
            std::cout << "s SATISFIABLE\n";
            return kExitSat;
        case csd::RefuteOutcome::Kind::kResourceOut:
            write_trace(out_path, trace + "c INCOMPLETE\n");
            std::cout << "s UNKNOWN\n";
            return kExitUnknown;
    }
    return kExitError;
}

int run_verify(const std::string& cnf_path, const std::string& trace_path) {
    csd::ParsedProblem problem = load_problem(cnf_path);
    csd::Proof proof =
        csd::parse_trace(read_file(trace_path), problem.clauses.clauses());
    csd::VerifyResult result = csd::verify_proof(problem.clauses, proof);
    if (!result.ok) {
        std::cout << "c " << result.diagnostic << "\n";
        std::cout << "s INVALID\n";
        return kExitError;
    }
    std::cout << "s VERIFIED\n";
    return kExitSat;
}

int run_count(const std::string& kind, int n, bool brute) {
    csd::CountResult formula =
        kind == "cn" ? csd::count_cn(n) : csd::count_msc(n);
    if (!brute) {
        std::cout << formula.str() << "\n";
        return kExitSat;
    }
    csd::ClauseSet host;
    if (kind == "cn") {
        std::vector<csd::Literal> boundary;
        for (int i = 1; i < n; ++i) boundary.push_back(csd::Literal::positive(i));
        host = csd::build_full_triangle(boundary).materialize();
    } else {
        std::vector<int> vars;
        for (int i = 1; i <= n; ++i) vars.push_back(i);
        host = csd::generate_maximal_contradiction(vars);
    }
    csd::BruteCountDetail detail = csd::brute_count_detail(host);
    std::cout << "c rejected " << detail.rejected.str() << "\n";
    std::cout << detail.standard.str() << "\n";
    if (detail.standard != formula || detail.rejected != 0) {
        std::cerr << "error: brute-force count disagrees with formula\n";
        return kExitError;
    }
    return kExitSat;
}

std::vector<csd::Literal> parse_literal_list(const std::string& text) {
    std::vector<csd::Literal> out;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, ',')) {
        try {
            int code = std::stoi(token);
            out.push_back(csd::Literal(code));
        } catch (const std::exception&) {
            throw csd::Error("bad literal '" + token + "'");
        }
    }
    return out;
}

int run_triangle(const std::string& boundary_text, const std::string& cut) {
    csd::Triangle tri = csd::build_full_triangle(parse_literal_list(boundary_text));
    csd::ClauseSet result;
    if (cut.empty()) {
        result = tri.materialize();
    } else {
        std::size_t colon = cut.find(':');
        if (colon == std::string::npos)
            throw csd::Error("cut must look like kind:indices");
        std::string kind = cut.substr(0, colon);
        std::vector<int> args;
        std::string token;
        std::istringstream ss(cut.substr(colon + 1));
        while (std::getline(ss, token, ',')) {
            try {
                args.push_back(std::stoi(token));
            } catch (const std::exception&) {
                throw csd::Error("bad cut index '" + token + "'");
            }
        }
        if (kind == "transverse" && args.size() == 1)
            result = csd::sub_transverse(tri, args[0]);
        else if (kind == "vertical" && args.size() == 1)
            result = csd::sub_vertical(tri, args[0]);
        else if (kind == "middle" && args.size() == 2)
            result = csd::sub_middle(tri, args[0], args[1]);
        else if (kind == "delete" && !args.empty())
            result = csd::sub_delete(tri, args);
        else
            throw csd::Error("unknown cut '" + cut + "'");
    }
    std::cout << csd::emit_dimacs(result);
    return kExitSat;
}

int run_check_sc(const std::string& path) {
    csd::ParsedProblem problem = load_problem(path);
    bool standard = csd::is_standard_contradiction(problem.clauses);
    std::cout << "standard-contradiction: " << (standard ? "yes" : "no") << "\n";
    try {
        bool quasi = csd::is_quasi_contradiction(problem.clauses);
        std::cout << "quasi-contradiction: " << (quasi ? "yes" : "no") << "\n";
    } catch (const csd::Error&) {
        std::cout << "quasi-contradiction: unknown (oracle limit)\n";
    }
    return standard ? kExitUnsat : kExitSat;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"contradiction-separation deduction toolkit"};
    app.require_subcommand(1);

    std::string cnf_path, trace_path, out_path, strategy = "triangular";
    std::string count_kind, boundary_text, cut;
    int method = 3, budget = 64, max_steps = 10000, uncovered = 0, n = 0;
    std::uint64_t seed = 0;
    bool brute = false;

    auto* decide = app.add_subcommand("decide", "coverage satisfiability verdict");
    decide->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
    decide->add_option("--uncovered", uncovered,
                       "list up to N uncovered maximal clauses");

    auto* model = app.add_subcommand("model", "randomized model search");
    model->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
    model->add_option("--method", method, "1 probe, 2 sweep, 3 sweep+repair")
        ->check(CLI::Range(1, 3));
    model->add_option("--budget", budget, "candidate budget K")
        ->check(CLI::PositiveNumber);
    model->add_option("--seed", seed, "rng seed")->envname("CSDEDUCE_SEED");

    auto* prove = app.add_subcommand("prove", "refutation search");
    prove->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
    prove->add_option("--strategy", strategy, "triangular, binary, or maxcontra")
        ->check(CLI::IsMember({"triangular", "binary", "maxcontra"}));
    prove->add_option("--max-steps", max_steps, "iteration cap")
        ->check(CLI::PositiveNumber);
    prove->add_option("--seed", seed, "rng seed")->envname("CSDEDUCE_SEED");
    prove->add_option("--out", out_path, "write the proof trace here");

    auto* verify = app.add_subcommand("verify", "check a proof trace");
    verify->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
    verify->add_option("trace", trace_path, "proof trace file")->required();

    auto* count = app.add_subcommand("count", "counting formulas");
    count->add_option("kind", count_kind, "cn or msc")
        ->required()
        ->check(CLI::IsMember({"cn", "msc"}));
    count->add_option("n", n, "size parameter")->required();
    count->add_flag("--brute", brute, "cross-check by brute-force enumeration");

    auto* triangle = app.add_subcommand("triangle", "triangular contradictions");
    triangle->add_option("--boundary", boundary_text, "comma-separated literals")
        ->required();
    triangle->add_option(
        "--cut", cut,
        "transverse:i, vertical:i, middle:h,i, or delete:i,j,...");

    auto* check = app.add_subcommand("check-sc", "standard-contradiction check");
    check->add_option("cnf", cnf_path, "DIMACS CNF file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide->parsed()) return run_decide(cnf_path, uncovered);
        if (model->parsed()) return run_model(cnf_path, method, budget, seed);
        if (prove->parsed())
            return run_prove(cnf_path, strategy, max_steps, seed, out_path);
        if (verify->parsed()) return run_verify(cnf_path, trace_path);
        if (count->parsed()) return run_count(count_kind, n, brute);
        if (triangle->parsed()) return run_triangle(boundary_text, cut);
        if (check->parsed()) return run_check_sc(cnf_path);
    } catch (const csd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
