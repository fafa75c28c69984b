#include "dra/clifford.hpp"
#include "dra/json_io.hpp"

#include <doctest.h>

#include <random>

using namespace dra;

namespace {

CliffordElement g(int i) { return CliffordElement::generator(i); }

CliffordElement random_clifford(int n, std::mt19937_64& rng) {
    CliffordElement e;
    for (int t = 0; t < 4; ++t) {
        GammaSet s = static_cast<GammaSet>(rng() % (GammaSet(1) << n));
        long num = static_cast<long>(rng() % 9) - 4;
        e.add_term(s, Scalar(Rational(num, 1 + static_cast<long>(rng() % 3))));
    }
    return e;
}

/// Random symmetric invertible rational metric (retries until invertible).
Metric random_metric(int n, std::mt19937_64& rng) {
    while (true) {
        std::vector<std::vector<Rational>> up(static_cast<size_t>(n),
                                              std::vector<Rational>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Rational v(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 2));
                up[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
                up[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
            }
        try {
            return Metric(std::move(up));
        } catch (const std::domain_error&) {
            // singular draw, try again
        }
    }
}

} // namespace

TEST_CASE("metric construction validates symmetry and invertibility") {
    CHECK_THROWS_AS(Metric({{Rational(0), Rational(1)}, {Rational(2), Rational(0)}}),
                    std::domain_error);
    CHECK_THROWS_AS(Metric({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}),
                    std::domain_error);
    Metric g = Metric::off_diagonal(2);
    CHECK(g.down(1, 2) == Rational(1));
    CHECK(g.down(1, 1) == Rational(0));
}

TEST_CASE("metric parsing shorthands") {
    Metric d = Metric::parse("diag:1,1,-1", 3);
    CHECK(d.up(3, 3) == Rational(-1));
    CHECK(d.up(1, 2) == Rational(0));
    CHECK(Metric::parse("euclidean", 2) == Metric::euclidean(2));
    CHECK(Metric::parse("lorentzian", 4).up(4, 4) == Rational(-1));
    CHECK(Metric::parse("offdiag", 2).up(1, 2) == Rational(1));
    CHECK_THROWS_AS(Metric::parse("diag:1,1", 3), std::domain_error);
    CHECK_THROWS_AS(Metric::parse("martian", 3), std::domain_error);
}

TEST_CASE("g1 * g1 = 1 for the euclidean metric") {
    Metric m = Metric::euclidean(2);
    CHECK(clifford_mul(g(1), g(1), m) == CliffordElement(Scalar(1)));
}

TEST_CASE("g2 * g1 = -g1g2 for a diagonal metric") {
    Metric m = Metric::euclidean(2);
    CliffordElement want = CliffordElement::monomial(0b11, Scalar(-1));
    CHECK(clifford_mul(g(2), g(1), m) == want);
}

TEST_CASE("(g1g2)(g2g1) = -1 for diag(1,-1)") {
    Metric m = Metric::diagonal({Rational(1), Rational(-1)});
    CliffordElement g12 = clifford_mul(g(1), g(2), m);
    CliffordElement g21 = clifford_mul(g(2), g(1), m);
    CHECK(clifford_mul(g12, g21, m) == CliffordElement(Scalar(-1)));
}

TEST_CASE("lowering and raising indices") {
    SUBCASE("x_2 with diag(1,-1) is -x^2") {
        Metric m = Metric::diagonal({Rational(1), Rational(-1)});
        auto terms = lower_raise(LoweredKind::x_down, 2, m);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0] == std::pair<int, Rational>{2, Rational(-1)});
    }
    SUBCASE("d^1 with the identity metric is d_1") {
        Metric m = Metric::euclidean(3);
        auto terms = lower_raise(LoweredKind::del_up, 1, m);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0] == std::pair<int, Rational>{1, Rational(1)});
    }
    SUBCASE("g_1 with the off-diagonal metric is g2") {
        Metric m = Metric::off_diagonal(2);
        auto terms = lower_raise(LoweredKind::gamma_down, 1, m);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0] == std::pair<int, Rational>{2, Rational(1)});
    }
    SUBCASE("index out of range") {
        Metric m = Metric::euclidean(2);
        CHECK_THROWS_AS(lower_raise(LoweredKind::x_down, 3, m), std::domain_error);
    }
}

TEST_CASE("{gamma_a, gamma^b} = 2 delta_a^b") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 5; ++n) {
        std::vector<Metric> metrics{Metric::euclidean(n), Metric::lorentzian(n),
                                    Metric::off_diagonal(n), random_metric(n, rng)};
        for (const Metric& m : metrics) {
            for (int a = 1; a <= n; ++a) {
                CliffordElement ga_down;
                for (const auto& [j, c] : lower_raise(LoweredKind::gamma_down, a, m))
                    ga_down = ga_down + g(j) * Scalar(c);
                for (int b = 1; b <= n; ++b) {
                    CliffordElement anti = clifford_mul(ga_down, g(b), m) +
                                           clifford_mul(g(b), ga_down, m);
                    CHECK(anti == CliffordElement(Scalar(a == b ? 2 : 0)));
                }
            }
        }
    }
}

TEST_CASE("gamma_i gamma^i = n") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 5; ++n) {
        for (const Metric& m : {Metric::lorentzian(n), random_metric(n, rng)}) {
            CliffordElement sum;
            for (int i = 1; i <= n; ++i) {
                CliffordElement gi_down;
                for (const auto& [j, c] : lower_raise(LoweredKind::gamma_down, i, m))
                    gi_down = gi_down + g(j) * Scalar(c);
                sum = sum + clifford_mul(gi_down, g(i), m);
            }
            CHECK(sum == CliffordElement(Scalar(n)));
        }
    }
}

TEST_CASE("clifford_mul is associative on random triples") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        Metric m = random_metric(n, rng);
        CliffordElement a = random_clifford(n, rng);
        CliffordElement b = random_clifford(n, rng);
        CliffordElement c = random_clifford(n, rng);
        CHECK(clifford_mul(clifford_mul(a, b, m), c, m) ==
              clifford_mul(a, clifford_mul(b, c, m), m));
    }
}

TEST_CASE("clifford element rendering") {
    CliffordElement e = CliffordElement::monomial(0b101, Scalar(Rational(1, 2)));
    e.add_term(0, Scalar(-1));
    CHECK(e.str() == "-1 + 1/2 * g1^g3");
}

TEST_CASE("clifford JSON round-trip") {
    std::mt19937_64 rng(23);
    CliffordElement e = random_clifford(4, rng);
    CHECK(clifford_from_json(to_json(e)) == e);
    Metric m = random_metric(3, rng);
    CHECK(metric_from_json(to_json(m)) == m);
}
