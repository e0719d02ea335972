#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "randsat/dimacs.hpp"
#include "randsat/rng.hpp"
#include "test_util.hpp"

using namespace randsat;

TEST_CASE("known document parses with sign and index mapping") {
    const std::string text =
        "c a comment\n"
        "c another\n"
        "p cnf 3 2\n"
        "1 -2 3 0\n"
        "-1 -3 2 0\n";
    Formula f = read_dimacs_string(text);
    CHECK(f.num_vars() == 3);
    CHECK(f.num_clauses() == 2);
    CHECK(f.width() == 3);
    ClauseView c0 = f.clause(0);
    CHECK(c0[0] == Lit::make(0, false));
    CHECK(c0[1] == Lit::make(1, true));
    CHECK(c0[2] == Lit::make(2, false));
    ClauseView c1 = f.clause(1);
    CHECK(c1[0] == Lit::make(0, true));
    CHECK(c1[2] == Lit::make(1, false));
}

TEST_CASE("write then read is the identity") {
    RandomStream rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Formula f = test_util::random_formula(12, 3, 40, rng);
        Formula g = read_dimacs_string(write_dimacs_string(f));
        CHECK(f == g);
    }
    // Duplicate literals and complementary pairs survive the round trip.
    Clause odd{Lit::make(0, false), Lit::make(0, false), Lit::make(0, true)};
    Formula f = Formula::strict(1, 3, {odd});
    CHECK(read_dimacs_string(write_dimacs_string(f)) == f);
}

TEST_CASE("comments are written and skipped") {
    Formula f = Formula::strict(2, 1, {Clause{Lit::make(1, true)}});
    std::string text = write_dimacs_string(f, {"first", "second"});
    CHECK(text.rfind("c first\nc second\np cnf 2 1\n", 0) == 0);
    CHECK(read_dimacs_string(text) == f);
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS_AS(read_dimacs_string(""), std::runtime_error);
    CHECK_THROWS_AS(read_dimacs_string("p dnf 2 1\n1 0\n"), std::runtime_error);
    CHECK_THROWS_AS(read_dimacs_string("p cnf 2\n"), std::runtime_error);
    // Declared three clauses, provided two.
    CHECK_THROWS_AS(read_dimacs_string("p cnf 2 3\n1 0\n2 0\n"),
                    std::runtime_error);
    // Unterminated trailing clause.
    CHECK_THROWS_AS(read_dimacs_string("p cnf 2 1\n1 2\n"), std::runtime_error);
    // Variable beyond the declared count.
    CHECK_THROWS_AS(read_dimacs_string("p cnf 2 1\n3 0\n"), std::runtime_error);
    CHECK_THROWS_AS(read_dimacs_string("p cnf 2 1\n1 x 0\n"),
                    std::runtime_error);
}

TEST_CASE("tokens after the declared clauses are ignored") {
    Formula f = read_dimacs_string("p cnf 2 1\n1 0\n-2 0\n");
    CHECK(f.num_clauses() == 1);
}

TEST_CASE("mixed widths: strict rejects, tolerant warns") {
    const std::string text = "p cnf 3 2\n1 2 0\n-3 0\n";
    CHECK_THROWS_AS(read_dimacs_string(text), std::runtime_error);

    int warnings = 0;
    DimacsOptions opts;
    opts.strict_width = false;
    opts.warn = [&](const std::string&) { ++warnings; };
    Formula f = read_dimacs_string(text, opts);
    CHECK(f.num_clauses() == 2);
    CHECK(f.width() == 2);
    CHECK_FALSE(f.uniform_width());
    CHECK(warnings == 1);
}

TEST_CASE("file round trip") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "randsat_dimacs_test.cnf";
    RandomStream rng(9);
    Formula f = test_util::random_formula(8, 3, 20, rng);
    write_dimacs_file(f, path.string(), {"temp file"});
    CHECK(read_dimacs_file(path.string()) == f);
    fs::remove(path);
    CHECK_THROWS_AS(read_dimacs_file(path.string()), std::runtime_error);
}
