#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fuds/io/parse_error.hpp"
#include "fuds/problems/max3sat.hpp"

namespace fuds::io {

/// DIMACS CNF reader for MAX-3SAT instances.
///
/// Accepts comment lines anywhere, a single "p cnf <vars> <clauses>" header,
/// clauses as 0-terminated literal runs free to span lines, and the trailing
/// "%" / "0" end markers some archive files carry after the final clause.
/// Rejects, with 1-based line numbers: a missing or malformed header,
/// literals out of range, empty clauses, clauses of more than 3 literals,
/// clause-count mismatches, and trailing garbage. Clauses with fewer than 3
/// literals are legal; the instance flags their presence.
inline problems::CnfInstance parse_dimacs(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t declared_vars = 0, declared_clauses = 0;
    bool header_seen = false, trailer_seen = false;
    std::vector<std::vector<std::int32_t>> clauses;
    std::vector<std::int32_t> current;

    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tok;
        bool first = true;
        while (tokens >> tok) {
            if (first && tok[0] == 'c') break; // comment line
            if (first && tok == "p") {
                if (header_seen) throw ParseError(line_no, "duplicate problem line");
                std::string fmt;
                long long v = -1, c = -1;
                if (!(tokens >> fmt >> v >> c) || fmt != "cnf" || v < 1 || c < 0 ||
                    (tokens >> tok))
                    throw ParseError(line_no, "malformed problem line (expected 'p cnf <vars> <clauses>')");
                declared_vars = static_cast<std::size_t>(v);
                declared_clauses = static_cast<std::size_t>(c);
                header_seen = true;
                break;
            }
            first = false;
            if (!header_seen)
                throw ParseError(line_no, "missing problem line before clause data");
            if (tok == "%") {
                if (!current.empty())
                    throw ParseError(line_no, "end marker '%' inside an unterminated clause");
                if (clauses.size() < declared_clauses)
                    throw ParseError(line_no, "end marker '%' before all declared clauses");
                trailer_seen = true;
                continue;
            }
            char* end = nullptr;
            const long long value = std::strtoll(tok.c_str(), &end, 10);
            if (end == tok.c_str() || *end != '\0')
                throw ParseError(line_no, "invalid token '" + tok + "'");
            if (value == 0) {
                if (clauses.size() == declared_clauses) continue; // tolerated end marker
                if (current.empty()) throw ParseError(line_no, "empty clause");
                clauses.push_back(current);
                current.clear();
                continue;
            }
            if (trailer_seen || clauses.size() == declared_clauses)
                throw ParseError(line_no, "more clauses than declared");
            const long long var = value > 0 ? value : -value;
            if (var > static_cast<long long>(declared_vars))
                throw ParseError(line_no, "literal " + std::to_string(value) +
                                              " outside 1.." + std::to_string(declared_vars));
            if (current.size() == 3)
                throw ParseError(line_no, "clause has more than 3 literals");
            current.push_back(static_cast<std::int32_t>(value));
        }
    }
    if (!header_seen) throw ParseError(line_no ? line_no : 1, "missing problem line");
    if (!current.empty()) throw ParseError(line_no, "unterminated clause at end of input");
    if (clauses.size() != declared_clauses)
        throw ParseError(line_no, "clause count mismatch: declared " +
                                      std::to_string(declared_clauses) + ", found " +
                                      std::to_string(clauses.size()));
    return problems::CnfInstance(declared_vars, clauses);
}

} // namespace fuds::io
