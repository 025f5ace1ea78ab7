#include "csdeduce/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace csd {

namespace {

bool parse_int(const std::string& token, long& out) {
    if (token.empty()) return false;
    std::size_t i = (token[0] == '-') ? 1 : 0;
    if (i == token.size()) return false;
    for (std::size_t j = i; j < token.size(); ++j)
        if (token[j] < '0' || token[j] > '9') return false;
    try {
        out = std::stol(token);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace

ParsedProblem parse_dimacs(std::string_view text) {
    ParsedProblem out;
    std::vector<Clause> clauses;
    std::vector<Literal> current;
    int current_start_line = 0;
    bool header_seen = false;

    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tok;
        bool first_tok = true;
        while (tokens >> tok) {
            if (first_tok && tok == "c") break;
            if (first_tok && tok.size() > 1 && tok[0] == 'c' &&
                (tok[1] < '0' || tok[1] > '9') && tok[1] != '-')
                break;
            first_tok = false;

            if (tok == "p") {
                if (header_seen || !clauses.empty() || !current.empty())
                    throw ParseError("malformed header", line_no);
                std::string fmt, nv, nc, rest;
                if (!(tokens >> fmt >> nv >> nc) || fmt != "cnf" || (tokens >> rest))
                    throw ParseError("malformed header", line_no);
                long v = 0, c = 0;
                if (!parse_int(nv, v) || !parse_int(nc, c) || v < 0 || c < 0)
                    throw ParseError("malformed header", line_no);
                out.declared_vars = static_cast<int>(v);
                out.declared_clauses = static_cast<int>(c);
                header_seen = true;
                break;
            }

            long value = 0;
            if (!parse_int(tok, value) || (value == 0 && tok != "0"))
                throw ParseError("invalid token '" + tok + "'", line_no);
            if (value == 0) {
                if (current.empty())
                    throw ParseError("clause terminator with no literals", line_no);
                clauses.push_back(Clause(std::move(current)));
                current.clear();
                out.clause_lines.push_back(current_start_line);
                continue;
            }
            if (value > 1000000000 || value < -1000000000)
                throw ParseError("literal out of range", line_no);
            if (current.empty()) current_start_line = line_no;
            current.push_back(Literal(static_cast<int>(value)));
        }
    }
    if (!current.empty())
        throw ParseError("unterminated final clause", line_no == 0 ? 1 : line_no);

    out.clauses = ClauseSet(std::move(clauses));

    if (out.declared_clauses >= 0 &&
        out.declared_clauses != static_cast<int>(out.clauses.size()))
        out.warnings.push_back(
            "declared clause count " + std::to_string(out.declared_clauses) +
            " does not match parsed count " + std::to_string(out.clauses.size()));
    if (out.declared_vars >= 0 && !out.clauses.universe().empty() &&
        out.clauses.universe().back() > out.declared_vars)
        out.warnings.push_back(
            "literal index " + std::to_string(out.clauses.universe().back()) +
            " exceeds declared variable count " + std::to_string(out.declared_vars) +
            "; universe extended");
    for (std::size_t i = 0; i < out.clauses.size(); ++i)
        if (out.clauses[i].is_tautology())
            out.warnings.push_back("tautological clause at line " +
                                   std::to_string(out.clause_lines[i]));
    return out;
}

std::string emit_dimacs(const ClauseSet& s) {
    int max_var = s.universe().empty() ? 0 : s.universe().back();
    std::string out = "p cnf " + std::to_string(max_var) + " " +
                      std::to_string(s.size()) + "\n";
    for (const Clause& c : s.clauses()) {
        for (const Literal& l : c.literals()) {
            out += std::to_string(l.code());
            out += " ";
        }
        out += "0\n";
    }
    return out;
}

std::string emit_trace(const Proof& p) {
    std::string out;
    for (const ProofStep& step : p.steps) {
        out += "S " + std::to_string(step.id) + " P ";
        for (std::size_t i = 0; i < step.premises.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(step.premises[i]);
        }
        for (std::size_t i = 0; i < step.premises.size(); ++i) {
            out += " K " + std::to_string(step.premises[i]) + ":";
            const Clause& kept = step.separation.parts[i].kept;
            for (std::size_t j = 0; j < kept.size(); ++j) {
                if (j) out += ",";
                out += std::to_string(kept.literals()[j].code());
            }
        }
        out += " R";
        if (step.result.empty()) {
            out += " #";
        } else {
            for (const Literal& l : step.result.literals())
                out += " " + std::to_string(l.code());
        }
        out += "\n";
    }
    return out;
}

namespace {

std::vector<long> split_ints(const std::string& field, int line_no,
                             const char* what) {
    std::vector<long> out;
    std::string token;
    std::istringstream ss(field);
    while (std::getline(ss, token, ',')) {
        long v = 0;
        if (!parse_int(token, v))
            throw ParseError(std::string("bad ") + what + " '" + token + "'",
                             line_no);
        out.push_back(v);
    }
    if (out.empty())
        throw ParseError(std::string("empty ") + what + " list", line_no);
    return out;
}

}  // namespace

Proof parse_trace(std::string_view text, std::vector<Clause> inputs) {
    Proof proof;
    proof.inputs = std::move(inputs);
    const int m = static_cast<int>(proof.inputs.size());
    std::map<int, Clause> table;
    for (int i = 0; i < m; ++i) table[i + 1] = proof.inputs[i];

    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tok;
        if (!(tokens >> tok)) continue;
        if (tok == "c" || tok[0] == 'c') continue;
        if (tok != "S") throw ParseError("expected S", line_no);

        ProofStep step;
        long id = 0;
        if (!(tokens >> tok) || !parse_int(tok, id) || id <= m)
            throw ParseError("bad step id", line_no);
        step.id = static_cast<int>(id);

        if (!(tokens >> tok) || tok != "P")
            throw ParseError("expected P", line_no);
        if (!(tokens >> tok)) throw ParseError("missing premise list", line_no);
        for (long pid : split_ints(tok, line_no, "premise id"))
            step.premises.push_back(static_cast<int>(pid));

        for (std::size_t i = 0; i < step.premises.size(); ++i) {
            if (!(tokens >> tok) || tok != "K")
                throw ParseError("expected K", line_no);
            if (!(tokens >> tok)) throw ParseError("missing kept field", line_no);
            std::size_t colon = tok.find(':');
            if (colon == std::string::npos)
                throw ParseError("kept field missing ':'", line_no);
            long pid = 0;
            if (!parse_int(tok.substr(0, colon), pid) ||
                pid != step.premises[i])
                throw ParseError("kept premise id does not match premise list",
                                 line_no);
            std::vector<Literal> kept_lits;
            for (long code : split_ints(tok.substr(colon + 1), line_no,
                                        "kept literal")) {
                if (code == 0)
                    throw ParseError("kept literal cannot be 0", line_no);
                kept_lits.push_back(Literal(static_cast<int>(code)));
            }
            auto premise = table.find(static_cast<int>(pid));
            if (premise == table.end())
                throw ParseError("unknown premise id " + std::to_string(pid),
                                 line_no);
            Clause kept(std::move(kept_lits));
            step.separation.parts.push_back(
                {kept, clause_difference(premise->second, kept)});
        }

        if (!(tokens >> tok) || tok != "R")
            throw ParseError("expected R", line_no);
        std::vector<Literal> result_lits;
        bool empty_marker = false;
        while (tokens >> tok) {
            if (tok == "#") {
                if (!result_lits.empty() || empty_marker)
                    throw ParseError("misplaced #", line_no);
                empty_marker = true;
                continue;
            }
            long code = 0;
            if (!parse_int(tok, code) || code == 0 || empty_marker)
                throw ParseError("bad result literal '" + tok + "'", line_no);
            result_lits.push_back(Literal(static_cast<int>(code)));
        }
        if (result_lits.empty() && !empty_marker)
            throw ParseError("missing result clause", line_no);
        step.result = Clause(std::move(result_lits));

        table[step.id] = step.result;
        proof.steps.push_back(std::move(step));
    }

    proof.refutation = (!proof.steps.empty() && proof.steps.back().result.empty());
    for (const Clause& c : proof.inputs)
        if (c.empty()) proof.refutation = true;
    return proof;
}

}  // namespace csd
