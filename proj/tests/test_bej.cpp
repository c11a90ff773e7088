#include <catch2/catch_amalgamated.hpp>

#include "pellfrac/bej.hpp"

#include <random>

using namespace pellfrac;

namespace {

std::mt19937_64 rng(33550336u);
Int rnd(long lo, long hi) { return Int(lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1))); }

// A random value whose expansion is exactly [b1; (a1, a2)]: any digit stream
// with distinct period digits and b1 != a2 is already minimal.
struct Sig12 {
    Int b1, a1, a2;
    QuadSurd value;
};
Sig12 random_member() {
    for (;;) {
        const Int b1 = rnd(-3, 9), a1 = rnd(1, 9), a2 = rnd(1, 9);
        if (a1 == a2 || b1 == a2) continue;
        return {b1, a1, a2, evaluate(PeriodicCF({b1}, {a1, a2}))};
    }
}

}  // namespace

TEST_CASE("variety system construction", "[bej]") {
    SECTION("numeric coefficients, signature (1,2)") {
        const BejSystem sys = build_system(1, 2, QuadPoly(1, 0, -3));
        const VarContext ctx = sys.context();
        REQUIRE(*ctx == std::vector<std::string>{"y1", "x1", "x2"});
        const MPoly y1 = MPoly::variable(ctx, 0);
        const MPoly x1 = MPoly::variable(ctx, 1);
        const MPoly x2 = MPoly::variable(ctx, 2);
        CHECK(sys.equations()[0] == x1 * x2 - 2 * y1 * x1);
        CHECK(sys.equations()[1] == y1 * y1 * x1 - y1 * x1 * x2 - x2 + 3 * x1);
        CHECK(sys.equations()[2] == 3 * (x1 * x2 - 2 * y1 * x1));
    }

    SECTION("single-digit period vanishes exactly at the digit") {
        const BejSystem sys = build_system(0, 1, QuadPoly(1, -5, -1));
        CHECK(is_member(sys, {{}, {Int(5)}}));
        CHECK_FALSE(is_member(sys, {{}, {Int(4)}}));
        CHECK_FALSE(is_member(sys, {{}, {Int(-5)}}));
    }

    CHECK_THROWS_AS(build_system(1, 0, QuadPoly(1, 0, -3)), std::invalid_argument);
}

TEST_CASE("symbolic coefficient system matches the published equations", "[bej]") {
    const SymbolicSystem sys = build_system_symbolic(1, 2);
    REQUIRE(*sys.ctx == std::vector<std::string>{"A", "B", "C", "y1", "x1", "x2"});
    const MPoly a = MPoly::variable(sys.ctx, 0);
    const MPoly b = MPoly::variable(sys.ctx, 1);
    const MPoly c = MPoly::variable(sys.ctx, 2);
    const MPoly y1 = MPoly::variable(sys.ctx, 3);
    const MPoly x1 = MPoly::variable(sys.ctx, 4);
    const MPoly x2 = MPoly::variable(sys.ctx, 5);

    CHECK(sys.equations[0] == a * (x1 * x2 - 2 * y1 * x1) - b * x1);
    CHECK(sys.equations[1] == a * (y1 * y1 * x1 - y1 * x1 * x2 - x2) - c * x1);
    CHECK(sys.equations[2] == b * (y1 * y1 * x1 - y1 * x1 * x2 - x2) - c * (x1 * x2 - 2 * y1 * x1));
}

TEST_CASE("membership and fiber projection", "[bej]") {
    const BejSystem sqrt3 = build_system(1, 2, QuadPoly(1, 0, -3));
    CHECK(is_member(sqrt3, {{Int(1)}, {Int(1), Int(2)}}));
    CHECK_FALSE(is_member(sqrt3, {{Int(1)}, {Int(1), Int(3)}}));
    CHECK(fiber_projection(sqrt3, {{Int(1)}, {Int(1), Int(2)}}) == std::pair<Int, Int>{1, 2});
    // Conic check: C x^2 - B xy + A y^2 = (-1)^k A with (x, y) = (1, 2).
    CHECK(Int(-3) * 1 - 0 + Int(1) * 4 == 1);

    const BejSystem golden3 = build_system(1, 2, QuadPoly(1, -3, 1));
    CHECK(is_member(golden3, {{Int(2)}, {Int(1), Int(1)}}));
    CHECK(fiber_projection(golden3, {{Int(2)}, {Int(1), Int(1)}}) == std::pair<Int, Int>{1, 0});

    CHECK_THROWS_AS(fiber_projection(sqrt3, {{Int(1)}, {Int(1), Int(3)}}), std::domain_error);
    CHECK_THROWS_AS(is_member(sqrt3, {{Int(1)}, {Int(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(is_member(sqrt3, {{}, {Int(1), Int(2)}}), std::invalid_argument);

    SECTION("random signature-(1,2) values lie on their own variety") {
        for (int i = 0; i < 60; ++i) {
            const Sig12 m = random_member();
            const PeriodicCF cf = expand(m.value);
            REQUIRE(cf == PeriodicCF({m.b1}, {m.a1, m.a2}));
            const BejSystem sys = build_system(1, 2, m.value.minimal_poly());
            const VarietyPoint pt{{m.b1}, {m.a1, m.a2}};
            CHECK(is_member(sys, pt));
            // Perturbing x2 moves equation 1 by A*x1 != 0, so never a member.
            CHECK_FALSE(is_member(sys, {{m.b1}, {m.a1, m.a2 + 1}}));

            const auto [fx, fy] = fiber_projection(sys, pt);
            const Int a = sys.coeffs().A(), b = sys.coeffs().B(), c = sys.coeffs().C();
            CHECK(c * fx * fx - b * fx * fy + a * fy * fy == a);  // k = 2 even
            // The projection agrees with the integer equivalence matrix.
            const Mat2 e = equivalence_matrix(cf);
            CHECK(fx == e.m21);
            CHECK(fy == e.m22);
        }
    }
}

TEST_CASE("component classification of the signature-(1,2) variety", "[bej]") {
    const auto one = classify_v12(Int(0), Int(1), Int(5));
    REQUIRE(one.size() == 1);
    CHECK(one[0].kind == "zero-tail");
    CHECK(one[0].parametrization == "[y1; (0, 0)]");
    CHECK(one[0].dimension == 1);

    const auto free_tail = classify_v12(Int(0), Int(0), Int(7));
    REQUIRE(free_tail.size() == 1);
    CHECK(free_tail[0].kind == "free-x2");
    CHECK(free_tail[0].dimension == 2);

    const auto two = classify_v12(Int(1), Int(0), Int(-3));
    REQUIRE(two.size() == 2);
    CHECK(two[0].kind == "zero-tail");
    CHECK(two[1].kind == "parametrized");
    CHECK(two[1].dimension == 1);

    const auto three = classify_v12(Int(1), Int(2), Int(1));  // B^2 = 4AC
    REQUIRE(three.size() == 3);
    CHECK(three[2].kind == "degenerate-repeated-root");
    CHECK(three[2].parametrization == "[-B/(2*A); (x1, 0)]");

    CHECK_THROWS_AS(classify_v12(Int(0), Int(0), Int(0)), std::invalid_argument);

    SECTION("counts follow the case split on a coefficient grid") {
        for (long a = -4; a <= 4; ++a)
            for (long b = -4; b <= 4; ++b)
                for (long c = -4; c <= 4; ++c) {
                    if (a == 0 && b == 0 && c == 0) continue;
                    const std::size_t expected =
                        a == 0 ? 1 : (Int(b) * b == Int(4) * a * c ? 3 : 2);
                    CHECK(classify_v12(Int(a), Int(b), Int(c)).size() == expected);
                }
    }
}

TEST_CASE("family matching of quadratic irrationals", "[bej]") {
    SECTION("frozen examples") {
        const ComponentDescription d11 = component_of(QuadSurd(0, 1, 1, 11));  // [3; (3, 6)]
        CHECK(d11.dimension == 2);
        REQUIRE(d11.parameters.size() == 2);
        CHECK(d11.parameters[0] == std::pair<std::string, Rat>{"u", Rat(3) / 2});
        CHECK(d11.parameters[1] == std::pair<std::string, Rat>{"v", Rat(2)});

        const ComponentDescription d21 = component_of(QuadSurd(5, 1, 2, 21));  // [4; (1, 3)]
        CHECK(d21.dimension == 1);
        REQUIRE(d21.parameters.size() == 1);
        CHECK(d21.parameters[0] == std::pair<std::string, Rat>{"u", Rat(5)});

        const ComponentDescription d3 = component_of(QuadSurd(2, 1, 1, 3));  // [3; (1, 2)], even case
        CHECK(d3.dimension == 2);
        REQUIRE(d3.parameters.size() == 2);
        CHECK(d3.parameters[0] == std::pair<std::string, Rat>{"u", Rat(2)});
        CHECK(d3.parameters[1] == std::pair<std::string, Rat>{"v", Rat(-1)});

        const ComponentDescription d8 = component_of(QuadSurd(0, 1, 1, 8));  // 2*sqrt(2) = [2; (1, 4)]
        CHECK(d8.dimension == 2);
        CHECK(d8.parameters[0].second == Rat(1) / 2);
        CHECK(d8.parameters[1].second == Rat(4));

        CHECK_THROWS_AS(component_of(QuadSurd(0, 1, 1, 2)), signature_mismatch);  // [1; (2)]
        CHECK_THROWS_AS(component_of(QuadSurd(1, 1, 2, 5)), signature_mismatch);  // [(1)]
        CHECK_THROWS_AS(component_of(QuadSurd(-1, 1, 2, 15)), no_known_family);   // [1; (2, 3)]
    }

    SECTION("two-parameter sweep is recovered exactly") {
        for (long u = 1; u <= 8; ++u)
            for (long v = 2; v <= 8; ++v) {
                const QuadSurd th = evaluate(PeriodicCF({Int(u * v)}, {Int(2 * u), Int(2 * u * v)}));
                CHECK(th == QuadSurd(0, 1, 1, Int(v) * (Int(u) * u * v + 1)));
                const ComponentDescription d = component_of(th);
                CHECK(d.dimension == 2);
                CHECK(d.parameters[0].second == Rat(u));
                CHECK(d.parameters[1].second == Rat(v));
            }
    }

    SECTION("one-parameter sweep: odd u stays, even u is rerouted") {
        // u = 3 is excluded: (3+sqrt(5))/2 has a one-digit period, so its
        // signature is (1,1) and family matching rejects it by design.
        for (long u = 4; u <= 12; ++u) {
            const QuadSurd th(Int(u), 1, 2, Int(u) * u - 4);
            const ComponentDescription d = component_of(th);
            if (u % 2 == 1) {
                CHECK(d.dimension == 1);
                CHECK(d.parameters[0].second == Rat(u));
            } else {
                CHECK(d.dimension == 2);
                CHECK(d.parameters[0].second == Rat(u) / 2);
                CHECK(d.parameters[1].second == Rat(-1));
            }
        }
    }
}
