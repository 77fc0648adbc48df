#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rhomap/geometry.hpp"
#include "rhomap/real_map.hpp"

using namespace rhomap;

TEST_CASE("R on exact rationals") {
    CHECK(R_rational(Rational(1, 2)) == Rational(2, 3));
    CHECK(R_rational(Rational(1, 4)) == Rational(1, 3));
    CHECK(R_rational(Rational(0)) == Rational(2, 3));
    CHECK(R_rational(Rational(1)) == Rational(1, 3));
    CHECK(R_rational(Rational(1, 3)) == 1);
    CHECK(R_rational(Rational(2, 3)) == 0);
    CHECK(R_rational(Rational(3, 4)) == Rational(1, 6));
}

TEST_CASE("rational invariance of Q") {
    for (long q = 1; q <= 64; ++q)
        for (long p = 0; p <= q; ++p) {
            Rational x(p, q);
            x.canonicalize();
            Rational y = R_rational(x);
            CHECK(y >= 0);
            CHECK(y <= 1);  // exact rational output is itself the invariance witness
        }
}

TEST_CASE("guaranteed prefixes") {
    CHECK(R_prefix(FiniteWord("01"), 1).digits == FiniteWord("1"));
    CHECK(R_prefix(FiniteWord("0000"), 1).empty());
    FiniteWord b13 = beta(Rational(1, 3)).prefix(10);
    CHECK(R_prefix(b13, 1).digits == FiniteWord("11111"));
    // Prefix of the expansion of R(x) for every continuation staying in C:
    // check against exact evaluation on periodic continuations.
    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        FiniteWord w;
        for (int i = 0; i < 12; ++i) w.push_back(static_cast<int>(rng() % 2));
        EPWord b(w, FiniteWord("1"));
        GuaranteedPrefix g = R_prefix(w, 1);
        Rational y = R_rational(xi(b));
        if (y == 0 || g.empty()) continue;
        FiniteWord expansion = beta(y).prefix(g.digits.size());
        // The guarantee matches whenever the image expansion stays in C.
        auto img = rho_ep_any(b);
        if (std::holds_alternative<EPWord>(img) && std::get<EPWord>(img).in_C())
            CHECK(expansion == g.digits);
    }
}

TEST_CASE("guaranteed prefixes bracket exact orbits") {
    // As long as no iterate's expansion goes eventually 0 (which re-expands
    // through the other branch), rho^k of an input prefix must bracket the
    // exact R^k value inside its cylinder.
    std::mt19937 rng(43);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Rational x(1 + rng() % 200, 1 + rng() % 200);
        x.canonicalize();
        if (x > 1) x = 1 / x;
        if (x == 0) continue;
        EPWord c = beta(x);
        FiniteWord prefix = c.prefix(512);
        Rational value = x;
        for (int k = 1; k <= 4; ++k) {
            auto img = rho_ep_any(c);
            if (!std::holds_alternative<EPWord>(img) || !std::get<EPWord>(img).in_C())
                break;  // branch switch: the symbolic chain no longer tracks R
            c = std::get<EPWord>(img);
            prefix = rho(prefix);
            value = R_rational(value);
            if (prefix.empty()) break;
            CHECK(cylinder_interval(prefix).contains(value));
            CHECK(value == xi(c));
            ++checked;
        }
    }
    CHECK(checked > 300);
}

TEST_CASE("required_precision planner") {
    CHECK(required_precision(1, 1) == 2);
    CHECK(required_precision(2, 1) == 4);
    // No S-prefix length can survive two erasures: (10)^k vanishes twice.
    CHECK_THROWS_AS(required_precision(2, 2, 16), BudgetExceeded);
}

TEST_CASE("orbits and the two rational cycles") {
    OrbitRecord half = iterate_orbit(Rational(1, 2));
    CHECK(half.tail == CycleLabel::C0);
    CHECK(half.steps_to_cycle == 1);
    REQUIRE(half.points.size() >= 3);
    CHECK(half.points[0] == Rational(1, 2));
    CHECK(half.points[1] == Rational(2, 3));
    CHECK(half.points[2] == 0);

    OrbitRecord third = iterate_orbit(Rational(1, 3));
    CHECK(third.tail == CycleLabel::C1);
    CHECK(third.steps_to_cycle == 0);

    OrbitRecord zero = iterate_orbit(Rational(0));
    CHECK(zero.tail == CycleLabel::C0);

    CHECK(classify_Q(Rational(2, 3)) == QClass::Q0);
    CHECK(classify_Q(Rational(1)) == QClass::Q1);
    CHECK(classify_Q(Rational(1, 4)) == QClass::Q1);
    CHECK(classify_Q(Rational(5, 7)) == QClass::Q1);

    // Every small-denominator rational is attracted to C0 or C1.
    for (long q = 1; q <= 64; ++q)
        for (long p = 0; p <= q; ++p) {
            Rational x(p, q);
            x.canonicalize();
            CHECK_NOTHROW(classify_Q(x));
        }
}

TEST_CASE("maximal section S") {
    CHECK(S_section(Rational(1)) == Rational(1, 3));
    CHECK(S_section(Rational(1, 3)) == 1);
    CHECK(S_section(Rational(0)) == Rational(2, 3));
    CHECK(R_rational(S_section(Rational(0))) == 0);
    // Section property over small denominators.
    for (long q = 1; q <= 64; ++q)
        for (long p = 0; p <= q; ++p) {
            Rational y(p, q);
            y.canonicalize();
            CHECK(R_rational(S_section(y)) == y);
        }
}

TEST_CASE("functional equations hold exactly") {
    CHECK(R_rational(Rational(1, 2)) == 1 - R_rational(Rational(1)));
    CHECK(R_rational(Rational(1, 3)) == 1 - R_rational(Rational(2, 3)));
    CHECK(R_rational(Rational(3, 4)) == (1 - R_rational(Rational(1, 2))) / 2);

    std::mt19937 rng(47);
    for (int i = 0; i < 1000; ++i) {
        Rational x(1 + rng() % 400, 1 + rng() % 400);
        x.canonicalize();
        if (x > 1) x = 1 / x;
        if (x == 0) continue;
        FunctionalReport rep = check_functional(x);
        CHECK(rep.all());
        // Upper branch of the halving relation on (1/2, 1].
        if (x > Rational(1, 2))
            CHECK(R_rational(x) == R_rational(x - Rational(1, 2)) / 2);
    }
}

TEST_CASE("word-indexed functional equation") {
    CHECK(check_word_functional(FiniteWord("1"), Rational(1)));
    CHECK(check_word_functional(FiniteWord("00"), Rational(1, 3)));
    CHECK(check_word_functional(FiniteWord("11"), Rational(1)));
    // R(x/4) = R(x) for even n with v empty.
    CHECK(R_rational(Rational(1, 12)) == R_rational(Rational(1, 3)));

    std::mt19937 rng(53);
    for (int i = 0; i < 300; ++i) {
        Rational x(1 + rng() % 60, 1 + rng() % 60);
        x.canonicalize();
        if (x > 1) x = 1 / x;
        for (unsigned len = 1; len <= 4; ++len) {
            FiniteWord w = FiniteWord::from_index(rng() % (1u << len), len);
            CHECK(check_word_functional(w, x));
        }
    }
}

TEST_CASE("cylinder images and oscillation bounds") {
    CylinderImage all = image_of_cylinder(FiniteWord("00"));
    CHECK(all.full_interval);

    CylinderImage one = image_of_cylinder(FiniteWord("1"));
    CHECK(!one.full_interval);
    CHECK(one.isolated == Rational(2, 3));  // R(1/2)
    CHECK(one.cylinder.lo == 0);
    CHECK(one.cylinder.hi == Rational(1, 2));
    CHECK(one.diameter <= one.oscillation_bound);

    CylinderImage two = image_of_cylinder(FiniteWord("11"));
    CHECK(two.oscillation_bound == Rational(1, 2));
    CHECK(two.diameter <= Rational(1, 2));

    // Oscillation bound across all words of length <= 8; the isolated value
    // is R at the left endpoint and cylinder values are hit by R.
    for (unsigned len = 1; len <= 8; ++len)
        for (std::uint64_t k = 0; k < (1ull << len); ++k) {
            FiniteWord x = FiniteWord::from_index(k, len);
            CylinderImage img = image_of_cylinder(x);
            if (img.full_interval) {
                CHECK(x.ones_count() == 0);
                continue;
            }
            CHECK(img.diameter <= img.oscillation_bound);
            Interval cyl = cylinder_interval(x);
            CHECK(img.isolated == R_rational(cyl.lo == 0 ? cyl.hi : cyl.lo));
        }
}

TEST_CASE("left-continuity witness at dyadics") {
    for (Rational x : {Rational(1, 2), Rational(3, 8), Rational(5, 16), Rational(1, 4)}) {
        EPWord bx = beta(x);
        EPWord image = rho_ep(bx);
        std::size_t prev_len = 0;
        for (std::size_t j = 4; j <= 64; j *= 2) {
            FiniteWord g = rho(bx.prefix(j));
            CHECK(image.prefix(g.size()) == g);
            CHECK(g.size() >= prev_len);
            prev_len = g.size();
        }
        CHECK(prev_len >= 16);  // guaranteed digits grow without bound
    }
}

TEST_CASE("right-discontinuity witness at 1/2") {
    Interval I_half = I_interval(FiniteWord("1"));
    CHECK(I_half.lo == 0);
    CHECK(I_half.hi == Rational(1, 2));
    CHECK(!I_half.contains(R_rational(Rational(1, 2))));
    for (int j = 2; j <= 10; ++j)
        for (long m = 1; m <= 3; ++m) {
            Rational x = Rational(1, 2) + Rational(m) * pow2(-j - 2);
            CHECK(I_half.contains(R_rational(x)));
        }
}
