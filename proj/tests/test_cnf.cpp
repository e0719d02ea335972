#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "randsat/cnf.hpp"
#include "randsat/rng.hpp"
#include "randsat/sampling.hpp"
#include "test_util.hpp"

using namespace randsat;

TEST_CASE("literal encoding round trips") {
    for (uint32_t v : {0u, 1u, 7u, 1000u}) {
        for (bool neg : {false, true}) {
            Lit l = Lit::make(v, neg);
            CHECK(l.var() == v);
            CHECK(l.negated() == neg);
        }
    }
    CHECK(Lit{0}.var() == 0);
    CHECK_FALSE(Lit{0}.negated());
    CHECK(Lit{1}.negated());
}

TEST_CASE("assignment index and string conversions") {
    Assignment a = Assignment::from_index(6, 0b101101);
    CHECK(a.size() == 6);
    CHECK(a.get(0));
    CHECK_FALSE(a.get(1));
    CHECK(a.get(2));
    CHECK(a.get(3));
    CHECK_FALSE(a.get(4));
    CHECK(a.get(5));
    CHECK(a.to_index() == 0b101101);
    CHECK(a.to_string() == "101101");
    CHECK(Assignment::from_string("101101") == a);
    CHECK(Assignment::from_bits({true, false, true, true, false, true}) == a);

    CHECK(Assignment::from_index(64, ~uint64_t{0}).to_index() == ~uint64_t{0});
    CHECK_THROWS_AS(Assignment::from_index(65, 0), std::invalid_argument);
    CHECK_THROWS_AS(Assignment::from_string("10x"), std::invalid_argument);

    Assignment empty(0);
    CHECK(empty.size() == 0);
    CHECK(empty.to_string().empty());
}

TEST_CASE("assignment mutation keeps the zero tail") {
    Assignment a(65);
    a.set(64, true);
    CHECK(a.get(64));
    a.flip(64);
    CHECK_FALSE(a.get(64));
    a.flip(0);
    CHECK(a.get(0));

    Assignment c = Assignment(65).complement();
    for (uint32_t i = 0; i < 65; ++i) CHECK(c.get(i));
    // Tail bits beyond n stay zero so word-level equality works.
    CHECK((c.words().back() >> 1) == 0);
    CHECK(c.complement() == Assignment(65));
}

TEST_CASE("hamming distance") {
    Assignment a = Assignment::from_string("0011");
    Assignment b = Assignment::from_string("0101");
    CHECK(hamming_distance(a, b) == 2);
    CHECK(hamming_distance(a, a) == 0);
    CHECK_THROWS_AS(hamming_distance(a, Assignment(5)), std::invalid_argument);

    RandomStream rng(11);
    Assignment x = sample_assignment_uniform(130, rng);
    Assignment y = x;
    y.flip(0);
    y.flip(64);
    y.flip(129);
    CHECK(hamming_distance(x, y) == 3);
}

TEST_CASE("formula construction enforces width and range") {
    Clause c1{Lit::make(0, false), Lit::make(1, true)};
    Clause c2{Lit::make(2, false), Lit::make(0, false)};
    Formula f = Formula::strict(3, 2, {c1, c2});
    CHECK(f.num_vars() == 3);
    CHECK(f.width() == 2);
    CHECK(f.num_clauses() == 2);
    CHECK(f.uniform_width());
    CHECK(Clause(f.clause(0).begin(), f.clause(0).end()) == c1);
    CHECK(Clause(f.clause(1).begin(), f.clause(1).end()) == c2);

    CHECK_THROWS_AS(f.add_clause(Clause{Lit::make(0, false)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(f.add_clause(Clause{Lit::make(3, false), Lit::make(0, true)}),
                    std::out_of_range);

    Formula g = Formula::tolerant(3, {c1, Clause{Lit::make(2, true)}});
    CHECK(g.width() == 2);
    CHECK_FALSE(g.uniform_width());
    CHECK(g.num_clauses() == 2);

    Formula empty(4, 3);
    CHECK(empty.num_clauses() == 0);
    CHECK(empty.num_vars() == 4);
}

TEST_CASE("clause evaluation") {
    Assignment a = Assignment::from_string("10");
    CHECK(eval_clause(Clause{Lit::make(0, false)}, a));
    CHECK_FALSE(eval_clause(Clause{Lit::make(0, true)}, a));
    CHECK(eval_clause(Clause{Lit::make(1, true)}, a));
    // Tautology is always satisfied; the empty clause never is.
    CHECK(eval_clause(Clause{Lit::make(1, false), Lit::make(1, true)}, a));
    CHECK_FALSE(eval_clause(Clause{}, a));
    CHECK_THROWS_AS(eval_clause(Clause{Lit::make(2, false)}, a),
                    std::out_of_range);
}

TEST_CASE("clause counts match a naive reference") {
    RandomStream rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        Formula f = test_util::random_formula(10, 3, 30, rng);
        Assignment a = sample_assignment_uniform(10, rng);
        auto clauses = test_util::clauses_of(f);
        auto bits = test_util::bits_of(a);

        uint64_t expect_sat = test_util::naive_num_sat(clauses, bits);
        CHECK(num_clauses_sat(f, a) == expect_sat);
        CHECK(num_clauses_unsat(f, a) == 30 - expect_sat);
        CHECK(satisfies(f, a) == (expect_sat == 30));

        std::optional<size_t> naive_first;
        for (size_t i = 0; i < clauses.size(); ++i) {
            if (!test_util::naive_eval_clause(clauses[i], bits)) {
                naive_first = i;
                break;
            }
        }
        uint64_t evals = 0;
        CHECK(first_unsat_clause(f, a, &evals) == naive_first);
        CHECK(evals == (naive_first ? *naive_first + 1 : clauses.size()));
    }
}

TEST_CASE("clause counts require matching sizes") {
    Formula f = Formula::strict(3, 1, {Clause{Lit::make(0, false)}});
    CHECK_THROWS_AS(num_clauses_sat(f, Assignment(2)), std::invalid_argument);
    CHECK_THROWS_AS(satisfies(f, Assignment(4)), std::invalid_argument);
}

TEST_CASE("formula equality") {
    Clause c{Lit::make(0, false), Lit::make(1, false)};
    Formula a = Formula::strict(2, 2, {c});
    Formula b = Formula::strict(2, 2, {c});
    CHECK(a == b);
    b.add_clause(c);
    CHECK_FALSE(a == b);
}
