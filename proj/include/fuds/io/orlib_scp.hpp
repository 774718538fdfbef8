#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "fuds/io/parse_error.hpp"
#include "fuds/problems/scp.hpp"

namespace fuds::io {

namespace detail {

/// Whitespace-separated token stream that remembers the line each token
/// started on. The OR-Library covering format is pure numbers with free
/// line wrapping, so token position is the only useful error coordinate.
class NumberReader {
public:
    explicit NumberReader(std::string_view text) : text_(text) {}

    bool next(std::string& out, std::size_t& line) {
        while (pos_ < text_.size() && is_space(text_[pos_])) advance();
        if (pos_ >= text_.size()) return false;
        line = line_;
        out.clear();
        while (pos_ < text_.size() && !is_space(text_[pos_])) {
            out.push_back(text_[pos_]);
            advance();
        }
        return true;
    }

    std::size_t line() const { return line_; }

    long long integer(const char* what) {
        std::string tok;
        std::size_t line = 0;
        if (!next(tok, line))
            throw ParseError(line_, std::string("unexpected end of input, expected ") + what);
        char* end = nullptr;
        const long long v = std::strtoll(tok.c_str(), &end, 10);
        if (end == tok.c_str() || *end != '\0')
            throw ParseError(line, "expected " + std::string(what) + ", got '" + tok + "'");
        return v;
    }

    double real(const char* what) {
        std::string tok;
        std::size_t line = 0;
        if (!next(tok, line))
            throw ParseError(line_, std::string("unexpected end of input, expected ") + what);
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0')
            throw ParseError(line, "expected " + std::string(what) + ", got '" + tok + "'");
        return v;
    }

private:
    static bool is_space(char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
    }

    void advance() {
        if (text_[pos_] == '\n') ++line_;
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

} // namespace detail

/// OR-Library set covering reader: row count, column count, the column
/// costs, then per row the count of covering columns followed by their
/// 1-based indices. Tokens wrap lines freely. Rejects non-numeric tokens,
/// nonpositive costs, rows with no covering columns, column indices outside
/// 1..n, duplicate indices within a row, truncated input, and trailing
/// garbage, each with the 1-based line it was found on.
inline problems::ScpInstance parse_orlib_scp(std::string_view text) {
    detail::NumberReader in(text);

    const long long m = in.integer("row count");
    if (m < 1) throw ParseError(in.line(), "row count must be positive");
    const long long n = in.integer("column count");
    if (n < 1) throw ParseError(in.line(), "column count must be positive");

    std::vector<double> costs;
    costs.reserve(static_cast<std::size_t>(n));
    for (long long j = 0; j < n; ++j) {
        const double c = in.real("column cost");
        if (!(c > 0.0))
            throw ParseError(in.line(), "column cost must be positive (column " +
                                            std::to_string(j + 1) + ")");
        costs.push_back(c);
    }

    std::vector<std::vector<std::uint32_t>> row_cols(static_cast<std::size_t>(m));
    for (long long r = 0; r < m; ++r) {
        const long long k = in.integer("covering-column count");
        if (k < 1)
            throw ParseError(in.line(), "row " + std::to_string(r + 1) +
                                            " has no covering columns");
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (long long i = 0; i < k; ++i) {
            const long long j = in.integer("column index");
            if (j < 1 || j > n)
                throw ParseError(in.line(), "column index " + std::to_string(j) +
                                                " outside 1.." + std::to_string(n) +
                                                " in row " + std::to_string(r + 1));
            if (seen[static_cast<std::size_t>(j - 1)])
                throw ParseError(in.line(), "duplicate column index " + std::to_string(j) +
                                                " in row " + std::to_string(r + 1));
            seen[static_cast<std::size_t>(j - 1)] = 1;
            row_cols[static_cast<std::size_t>(r)].push_back(static_cast<std::uint32_t>(j - 1));
        }
    }

    std::string extra;
    std::size_t extra_line = 0;
    if (in.next(extra, extra_line))
        throw ParseError(extra_line, "trailing garbage '" + extra + "'");

    return problems::ScpInstance(static_cast<std::size_t>(m), static_cast<std::size_t>(n),
                                 std::move(row_cols), std::move(costs));
}

} // namespace fuds::io
