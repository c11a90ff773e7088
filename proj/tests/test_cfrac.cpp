#include <catch2/catch_amalgamated.hpp>

#include "pellfrac/cfrac.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <random>
#include <vector>

using namespace pellfrac;

namespace {

using Float = boost::multiprecision::cpp_dec_float_100;

Float to_float(const QuadSurd& s) {
    return (Float(s.a().str()) + Float(s.b().str()) * sqrt(Float(s.d().str()))) / Float(s.c().str());
}

// Oracle: leading partial quotients computed numerically with 100-digit
// floats (independent of the exact integer recurrence).
std::vector<Int> float_digits(const QuadSurd& s, int count) {
    std::vector<Int> out;
    Float x = to_float(s);
    for (int i = 0; i < count; ++i) {
        const Float f = floor(x);
        out.emplace_back(f.convert_to<long long>());
        x = 1 / (x - f);
    }
    return out;
}

std::vector<Int> unrolled_prefix(const PeriodicCF& cf, int count) {
    std::vector<Int> out = cf.preperiod();
    while (static_cast<int>(out.size()) < count)
        out.insert(out.end(), cf.period().begin(), cf.period().end());
    out.resize(static_cast<std::size_t>(count));
    return out;
}

std::mt19937_64 rng(477101u);
Int rnd(long lo, long hi) { return Int(lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1))); }

QuadSurd random_surd() {
    for (;;) {
        const Int a = rnd(-40, 40), b = rnd(-15, 15), c = rnd(-20, 20), d = rnd(2, 300);
        if (b == 0 || c == 0 || is_square(d)) continue;
        return QuadSurd(a, b, c, d);
    }
}

PeriodicCF random_cf() {
    std::vector<Int> pre, per;
    const long npre = static_cast<long>(rng() % 4);
    for (long i = 0; i < npre; ++i) pre.push_back(i == 0 ? rnd(-5, 5) : rnd(1, 6));
    const long nper = 1 + static_cast<long>(rng() % 4);
    for (long i = 0; i < nper; ++i) per.push_back(rnd(1, 6));
    return PeriodicCF(std::move(pre), std::move(per));
}

}  // namespace

TEST_CASE("periodic continued fraction shape and printing", "[cfrac]") {
    const PeriodicCF cf({Int(3)}, {Int(3), Int(6)});
    CHECK(cf.signature() == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK(cf.str() == "[3; (3, 6)]");
    CHECK(PeriodicCF({}, {Int(2)}).str() == "[(2)]");
    CHECK(PeriodicCF({Int(-1), Int(2)}, {Int(1), Int(5)}).str() == "[-1, 2; (1, 5)]");

    CHECK_THROWS_AS(PeriodicCF({Int(1)}, {}), std::invalid_argument);
    CHECK_THROWS_AS(PeriodicCF({Int(1)}, {Int(0)}), std::invalid_argument);
    CHECK_THROWS_AS(PeriodicCF({Int(1), Int(0)}, {Int(2)}), std::invalid_argument);
    CHECK_THROWS_AS(PeriodicCF({}, {Int(-2)}), std::invalid_argument);
    CHECK_NOTHROW(PeriodicCF({Int(-7)}, {Int(1)}));  // first digit may be negative
}

TEST_CASE("canonical minimization and unrolling", "[cfrac]") {
    const PeriodicCF doubled({Int(2)}, {Int(1), Int(1)});
    CHECK(doubled.canonical() == PeriodicCF({Int(2)}, {Int(1)}));

    const PeriodicCF shifted({Int(2), Int(1)}, {Int(2), Int(1)});
    CHECK(shifted.canonical() == PeriodicCF({}, {Int(2), Int(1)}));

    const PeriodicCF both({Int(1), Int(2), Int(1), Int(2)}, {Int(1), Int(2), Int(1), Int(2)});
    CHECK(both.canonical() == PeriodicCF({}, {Int(1), Int(2)}));

    const PeriodicCF minimal({Int(1)}, {Int(1), Int(2)});
    CHECK(minimal.canonical() == minimal);

    CHECK(minimal.unrolled_once() == PeriodicCF({Int(1), Int(1), Int(2)}, {Int(1), Int(2)}));
    CHECK(minimal.unrolled_once().canonical() == minimal);
}

TEST_CASE("expansion of classical values", "[cfrac]") {
    CHECK(expand(QuadSurd(0, 1, 1, 2)) == PeriodicCF({Int(1)}, {Int(2)}));
    CHECK(expand(QuadSurd(0, 1, 1, 3)) == PeriodicCF({Int(1)}, {Int(1), Int(2)}));
    CHECK(expand(QuadSurd(0, 1, 1, 11)) == PeriodicCF({Int(3)}, {Int(3), Int(6)}));
    CHECK(expand(QuadSurd(1, 1, 2, 5)) == PeriodicCF({}, {Int(1)}));          // golden ratio
    CHECK(expand(QuadSurd(1, 1, 1, 2)) == PeriodicCF({}, {Int(2)}));          // 1 + sqrt(2)
    CHECK(expand(QuadSurd(3, 1, 2, 5)) == PeriodicCF({Int(2)}, {Int(1)}));    // (3 + sqrt(5))/2
    CHECK(expand(QuadSurd(0, 1, 1, 27)) == PeriodicCF({Int(5)}, {Int(5), Int(10)}));
    CHECK(expand(QuadSurd(0, 1, 1, 61)).period().size() == 11);

    // Numeric digit oracle on random inputs.
    for (int i = 0; i < 100; ++i) {
        const QuadSurd s = random_surd();
        const PeriodicCF cf = expand(s);
        CHECK(unrolled_prefix(cf, 15) == float_digits(s, 15));
    }
}

TEST_CASE("evaluation and round trips", "[cfrac]") {
    CHECK(evaluate(PeriodicCF({Int(1)}, {Int(2)})) == QuadSurd(0, 1, 1, 2));
    CHECK(evaluate(PeriodicCF({}, {Int(1)})) == QuadSurd(1, 1, 2, 5));
    CHECK(evaluate(PeriodicCF({Int(2)}, {Int(1)})) == QuadSurd(3, 1, 2, 5));
    CHECK(evaluate(PeriodicCF({Int(6)}, {Int(4), Int(12)})) == QuadSurd(0, 1, 1, 39));

    // evaluate accepts non-minimal representations.
    CHECK(evaluate(PeriodicCF({Int(2)}, {Int(1), Int(1)})) == QuadSurd(3, 1, 2, 5));
    CHECK(evaluate(PeriodicCF({Int(1), Int(1)}, {Int(2), Int(1)})) == QuadSurd(0, 1, 1, 3));
    CHECK(evaluate(PeriodicCF({Int(1), Int(2)}, {Int(1), Int(2)})) == QuadSurd(1, 1, 2, 3));

    SECTION("value -> digits -> value") {
        for (int i = 0; i < 200; ++i) {
            const QuadSurd s = random_surd();
            CHECK(evaluate(expand(s)) == s);
        }
    }

    SECTION("digits -> value -> digits recovers the canonical form") {
        // Any digit stream whose tail digits are all >= 1 is the continued
        // fraction expansion of its own value, so expanding the value must
        // reproduce exactly the minimal representation.
        for (int i = 0; i < 200; ++i) {
            const PeriodicCF cf = random_cf();
            CHECK(expand(evaluate(cf)) == cf.canonical());
            CHECK(evaluate(cf.unrolled_once()) == evaluate(cf));
        }
    }
}

TEST_CASE("convergent matrices", "[cfrac]") {
    CHECK(convergent_matrix({}) == Mat2::identity());
    CHECK(convergent_matrix({Int(7)}) == Mat2{7, 1, 1, 0});
    CHECK(convergent_matrix({Int(1), Int(2)}) == Mat2{3, 1, 2, 1});
    CHECK(convergent_matrix({Int(1), Int(2), Int(3)}).det() == -1);
}

TEST_CASE("equivalence matrix and induced quadratic", "[cfrac]") {
    // sqrt(3) = [1; (1, 2)]: P = [[1,1],[1,0]], Q = [[3,1],[2,1]],
    // P^-1 = [[0,1],[1,-1]], so E = P Q P^-1 = [[2,3],[1,2]].
    const PeriodicCF cf({Int(1)}, {Int(1), Int(2)});
    const Mat2 e = equivalence_matrix(cf);
    CHECK(e == Mat2{2, 3, 1, 2});
    CHECK(e.det() == 1);  // (-1)^k with k = 2
    CHECK(induced_quadratic(e) == QuadPoly(1, 0, -3));

    const Mat2 g = equivalence_matrix(PeriodicCF({}, {Int(1)}));  // golden ratio
    CHECK(g == Mat2{1, 1, 1, 0});
    CHECK(g.det() == -1);
    CHECK(induced_quadratic(g) == QuadPoly(1, -1, -1));

    CHECK_THROWS_AS(induced_quadratic(Mat2{2, 1, 0, 2}), std::invalid_argument);  // lower-left zero
    CHECK_THROWS_AS(induced_quadratic(Mat2{0, 1, 1, 0}), std::invalid_argument);  // rational fixed points

    for (int i = 0; i < 200; ++i) {
        const QuadSurd s = random_surd();
        const PeriodicCF cf2 = expand(s);
        const Mat2 m = equivalence_matrix(cf2);
        CHECK(m.det() == (cf2.period().size() % 2 == 0 ? 1 : -1));
        // The fixed quadratic of the matrix action is the minimal polynomial
        // of the value.
        CHECK(induced_quadratic(m) == s.minimal_poly());
    }
}
