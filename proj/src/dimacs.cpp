#include "randsat/dimacs.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace randsat {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("dimacs: " + msg);
}

}  // namespace

Formula read_dimacs(std::istream& in, const DimacsOptions& opts) {
    std::string tok;
    long long n = -1, m = -1;

    // Header: comment lines may precede "p cnf <vars> <clauses>".
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == 'c') continue;
        std::istringstream hs(line);
        std::string p, fmt;
        if (!(hs >> p >> fmt >> n >> m) || p != "p" || fmt != "cnf" || n < 0 ||
            m < 0)
            fail("malformed header: " + line);
        break;
    }
    if (n < 0) fail("missing header");

    std::vector<Clause> clauses;
    clauses.reserve(static_cast<size_t>(m));
    Clause cur;
    long long lit;
    while (static_cast<long long>(clauses.size()) < m && in >> tok) {
        if (tok == "c") {  // comment until end of line
            std::getline(in, line);
            continue;
        }
        try {
            size_t pos = 0;
            lit = std::stoll(tok, &pos);
            if (pos != tok.size()) fail("bad token: " + tok);
        } catch (const std::logic_error&) {
            fail("bad token: " + tok);
        }
        if (lit == 0) {
            clauses.push_back(cur);
            cur.clear();
            continue;
        }
        long long v = lit < 0 ? -lit : lit;
        if (v > n) fail("variable index " + std::to_string(v) +
                        " exceeds declared count " + std::to_string(n));
        cur.push_back(Lit::make(static_cast<uint32_t>(v - 1), lit < 0));
    }
    if (static_cast<long long>(clauses.size()) < m)
        fail("expected " + std::to_string(m) + " clauses, got " +
             std::to_string(clauses.size()));
    if (!cur.empty()) fail("trailing unterminated clause");

    if (opts.strict_width) {
        size_t k = clauses.empty() ? 0 : clauses.front().size();
        for (const auto& c : clauses)
            if (c.size() != k)
                fail("mixed clause widths in strict mode (" +
                     std::to_string(c.size()) + " vs " + std::to_string(k) +
                     ")");
        return Formula::strict(static_cast<uint32_t>(n),
                               static_cast<uint32_t>(k), clauses);
    }

    Formula f = Formula::tolerant(static_cast<uint32_t>(n), clauses);
    if (!f.uniform_width() && opts.warn)
        opts.warn("mixed clause widths; using maximum width " +
                  std::to_string(f.width()));
    return f;
}

Formula read_dimacs_file(const std::string& path, const DimacsOptions& opts) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    return read_dimacs(in, opts);
}

Formula read_dimacs_string(const std::string& text, const DimacsOptions& opts) {
    std::istringstream in(text);
    return read_dimacs(in, opts);
}

void write_dimacs(const Formula& f, std::ostream& out,
                  const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
    for (size_t i = 0; i < f.num_clauses(); ++i) {
        for (Lit l : f.clause(i)) {
            long long v = static_cast<long long>(l.var()) + 1;
            out << (l.negated() ? -v : v) << ' ';
        }
        out << "0\n";
    }
}

void write_dimacs_file(const Formula& f, const std::string& path,
                       const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) fail("cannot open " + path + " for writing");
    write_dimacs(f, out, comments);
    if (!out) fail("write failed: " + path);
}

std::string write_dimacs_string(const Formula& f,
                                const std::vector<std::string>& comments) {
    std::ostringstream out;
    write_dimacs(f, out, comments);
    return out.str();
}

}  // namespace randsat
