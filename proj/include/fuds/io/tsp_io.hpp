#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "fuds/io/parse_error.hpp"
#include "fuds/problems/tsp.hpp"
#include "fuds/rng.hpp"

namespace fuds::io {

/// Random symmetric instance: upper-triangle entries drawn iid uniform from
/// [0, 1) in row-major order (i < j), mirrored below, zero diagonal. The
/// draw order is part of the format contract so a (cities, seed) pair names
/// one instance forever.
inline problems::TspInstance gen_random_tsp(std::size_t cities, std::uint64_t seed) {
    if (cities < 2) throw std::invalid_argument("gen_random_tsp: need at least 2 cities");
    Rng rng(seed);
    std::vector<double> d(cities * cities, 0.0);
    for (std::size_t i = 0; i < cities; ++i)
        for (std::size_t j = i + 1; j < cities; ++j) {
            const double v = uniform_real(rng);
            d[i * cities + j] = v;
            d[j * cities + i] = v;
        }
    return problems::TspInstance(cities, std::move(d));
}

namespace detail {

inline std::string format_double(double v) {
    // 17 significant digits round-trip any double exactly through strtod.
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

} // namespace detail

/// Text form: city count on the first line, then one matrix row per line,
/// entries space-separated with 17 significant digits. parse_tsp reads the
/// values back bit-exactly.
inline std::string serialize_tsp(const problems::TspInstance& inst) {
    std::string out = std::to_string(inst.size());
    out.push_back('\n');
    for (std::size_t i = 0; i < inst.size(); ++i) {
        for (std::size_t j = 0; j < inst.size(); ++j) {
            if (j) out.push_back(' ');
            out += detail::format_double(inst(i, j));
        }
        out.push_back('\n');
    }
    return out;
}

/// Inverse of serialize_tsp. Rejects, with 1-based line numbers: a missing
/// or non-positive city count, ragged rows, non-numeric or negative or
/// non-finite entries, a nonzero diagonal, asymmetry beyond 1e-12, row count
/// mismatches, and trailing garbage. Asymmetry within tolerance is resolved
/// to the upper-triangle value.
inline problems::TspInstance parse_tsp(std::string_view text) {
    std::istringstream lines{std::string(text)};
    std::string line;
    std::size_t line_no = 0;

    auto next_content_line = [&](bool required) -> bool {
        while (std::getline(lines, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
            if (required) throw ParseError(line_no, "unexpected blank line");
        }
        return false;
    };

    if (!next_content_line(false)) throw ParseError(1, "missing city count");
    std::size_t n = 0;
    {
        std::istringstream head(line);
        long long v = 0;
        std::string extra;
        if (!(head >> v) || v < 2 || (head >> extra))
            throw ParseError(line_no, "city count line must hold one integer >= 2");
        n = static_cast<std::size_t>(v);
    }

    std::vector<double> d(n * n, 0.0);
    std::vector<std::size_t> row_line(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!next_content_line(true))
            throw ParseError(line_no + 1, "expected " + std::to_string(n) + " matrix rows, got " +
                                              std::to_string(i));
        row_line[i] = line_no;
        std::istringstream row(line);
        std::string tok;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(row >> tok))
                throw ParseError(line_no, "row " + std::to_string(i + 1) + " has " +
                                              std::to_string(j) + " entries, expected " +
                                              std::to_string(n));
            char* end = nullptr;
            const double v = std::strtod(tok.c_str(), &end);
            if (end == tok.c_str() || *end != '\0' || !std::isfinite(v))
                throw ParseError(line_no, "invalid distance '" + tok + "'");
            if (v < 0.0) throw ParseError(line_no, "negative distance '" + tok + "'");
            d[i * n + j] = v;
        }
        std::string extra;
        if (row >> extra)
            throw ParseError(line_no, "row " + std::to_string(i + 1) + " has more than " +
                                          std::to_string(n) + " entries");
    }
    if (next_content_line(false)) throw ParseError(line_no, "trailing garbage after matrix");

    for (std::size_t i = 0; i < n; ++i) {
        if (d[i * n + i] != 0.0)
            throw ParseError(row_line[i], "nonzero diagonal entry in row " + std::to_string(i + 1));
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(d[i * n + j] - d[j * n + i]) > 1e-12)
                throw ParseError(row_line[j], "asymmetric distances between cities " +
                                                  std::to_string(i + 1) + " and " +
                                                  std::to_string(j + 1));
            d[j * n + i] = d[i * n + j];
        }
    }
    return problems::TspInstance(n, std::move(d));
}

} // namespace fuds::io
