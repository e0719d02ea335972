// DIMACS CNF reader/writer.
//
// External format is 1-indexed; internal variables are 0-indexed. Reading
// then writing (or vice versa) is an identity on the clause list: literal
// order and duplicates survive the round trip.

#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "randsat/cnf.hpp"

namespace randsat {

struct DimacsOptions {
    // Strict mode rejects mixed clause widths; tolerant mode accepts them
    // (the formula's width becomes the maximum seen) and reports each
    // deviation through `warn`.
    bool strict_width = true;
    std::function<void(const std::string&)> warn;
};

Formula read_dimacs(std::istream& in, const DimacsOptions& opts = {});
Formula read_dimacs_file(const std::string& path, const DimacsOptions& opts = {});
Formula read_dimacs_string(const std::string& text, const DimacsOptions& opts = {});

void write_dimacs(const Formula& f, std::ostream& out,
                  const std::vector<std::string>& comments = {});
void write_dimacs_file(const Formula& f, const std::string& path,
                       const std::vector<std::string>& comments = {});
std::string write_dimacs_string(const Formula& f,
                                const std::vector<std::string>& comments = {});

}  // namespace randsat
