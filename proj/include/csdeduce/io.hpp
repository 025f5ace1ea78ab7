#ifndef CSDEDUCE_IO_HPP
#define CSDEDUCE_IO_HPP

#include <string>
#include <string_view>

#include "csdeduce/proof.hpp"
#include "csdeduce/types.hpp"

namespace csd {

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

struct ParsedProblem {
    ClauseSet clauses;
    int declared_vars = -1;     // -1 when no header was present
    int declared_clauses = -1;
    std::vector<int> clause_lines;  // source line where each clause starts
    std::vector<std::string> warnings;
};

// DIMACS CNF: `c` comment lines, optional `p cnf <nvars> <nclauses>`
// header, clauses as nonzero integers terminated by 0, free line layout.
// Literals beyond the declared variable count extend the universe with a
// warning; count mismatches and tautological clauses are warnings too.
// Structural problems (malformed header, a 0 with no preceding literals,
// an unterminated final clause) throw ParseError with the line number.
ParsedProblem parse_dimacs(std::string_view text);

std::string emit_dimacs(const ClauseSet& s);

// Proof trace, one step per line:
//   S <id> P <p1,p2,...> K <p1>:<kept lits> ... R <result lits | #>
// Kept literals are comma-separated signed integers; the K entries follow
// premise order; `#` marks the empty result clause. Input clauses are
// implicitly ids 1..m. Comment lines starting with `c` are skipped on
// parse. emit/parse round-trip bit-exactly.
std::string emit_trace(const Proof& p);
Proof parse_trace(std::string_view text, std::vector<Clause> inputs);

}  // namespace csd

#endif
