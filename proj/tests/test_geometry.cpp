#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "rhomap/geometry.hpp"

using namespace rhomap;

namespace {

bool same_rect_set(RectSet a, RectSet b) {
    auto key = [](const DyadicRect& r) { return std::make_pair(r.x_lo, r.y_lo); };
    auto lt = [&key](const DyadicRect& r, const DyadicRect& s) { return key(r) < key(s); };
    std::sort(a.rects.begin(), a.rects.end(), lt);
    std::sort(b.rects.begin(), b.rects.end(), lt);
    return a.rects == b.rects;
}

}  // namespace

TEST_CASE("I intervals at reference dyadic points") {
    Interval empty = I_interval(FiniteWord());
    CHECK(empty.lo == 0);
    CHECK(empty.hi == 1);
    Interval half = I_interval(FiniteWord("1"));  // x = 1/2
    CHECK(half.lo == 0);
    CHECK(half.hi == Rational(1, 2));
    Interval quarter = I_interval(FiniteWord("01"));  // x = 1/4
    CHECK(quarter.lo == Rational(1, 2));
    CHECK(quarter.hi == 1);
    // Terminal zeros do not change I_x.
    CHECK(I_interval(FiniteWord("0100")).lo == quarter.lo);
    CHECK(I_interval(FiniteWord("0100")).hi == quarter.hi);
    // t0 / t1 descent: I_{x/2} = t0(I_x), I_{(x+1)/2} = t1(I_x).
    std::mt19937 rng(67);
    for (int i = 0; i < 200; ++i) {
        FiniteWord x;
        for (int b = 0; b < static_cast<int>(rng() % 10); ++b)
            x.push_back(static_cast<int>(rng() % 2));
        Interval I = I_interval(x);
        Interval left = I_interval(FiniteWord("0") + x);
        CHECK(left.lo == 1 - I.hi);
        CHECK(left.hi == 1 - I.lo);
        Interval right = I_interval(FiniteWord("1") + x);
        CHECK(right.lo == (1 - I.hi) / 2);
        CHECK(right.hi == (1 - I.lo) / 2);
    }
}

TEST_CASE("K levels: direct formula equals the recursive T construction") {
    RectSet K0 = K_level(0);
    REQUIRE(K0.rects.size() == 1);
    CHECK(K0.rects[0] == DyadicRect{0, 1, 0, 1});

    RectSet K1 = K_level(1);
    REQUIRE(K1.rects.size() == 2);
    CHECK(K1.rects[0] == DyadicRect{0, Rational(1, 2), 0, 1});
    CHECK(K1.rects[1] == DyadicRect{Rational(1, 2), 1, 0, Rational(1, 2)});

    RectSet K2 = K_level(2);
    REQUIRE(K2.rects.size() == 4);
    CHECK(K2.rects[0] == DyadicRect{0, Rational(1, 4), 0, 1});
    CHECK(K2.rects[1] == DyadicRect{Rational(1, 4), Rational(1, 2), Rational(1, 2), 1});
    CHECK(K2.rects[2] == DyadicRect{Rational(1, 2), Rational(3, 4), 0, Rational(1, 2)});
    CHECK(K2.rects[3] == DyadicRect{Rational(3, 4), 1, Rational(1, 4), Rational(1, 2)});

    RectSet cur = K0;
    for (int n = 0; n <= 10; ++n) {
        CHECK(same_rect_set(cur, K_level(n)));
        cur = apply_T(cur);
    }
    CHECK_THROWS_AS(K_level(25), std::invalid_argument);
}

TEST_CASE("x projections tile [0,1] and heights follow the image length") {
    for (int n = 0; n <= 8; ++n) {
        RectSet K = K_level(n);
        Rational edge = 0;
        for (std::size_t k = 0; k < K.rects.size(); ++k) {
            CHECK(K.rects[k].x_lo == edge);
            edge = K.rects[k].x_hi;
            FiniteWord w = FiniteWord::from_index(k, static_cast<unsigned>(n));
            CHECK(K.rects[k].y_hi - K.rects[k].y_lo == pow2(-static_cast<long>(w.ones_count())));
        }
        CHECK(edge == 1);
    }
}

TEST_CASE("three-of-four-quarters structure") {
    // Each level-n rectangle splits into two children: the left keeps the full
    // height, the right keeps the lower half for even n and the upper half for
    // odd n (the removed quarter alternates right-top / right-bottom).
    for (int n = 0; n <= 8; ++n) {
        RectSet K = K_level(n);
        RectSet Knext = K_level(n + 1);
        for (std::size_t k = 0; k < K.rects.size(); ++k) {
            const DyadicRect& parent = K.rects[k];
            const DyadicRect& left = Knext.rects[2 * k];
            const DyadicRect& right = Knext.rects[2 * k + 1];
            CHECK(left.y_lo == parent.y_lo);
            CHECK(left.y_hi == parent.y_hi);
            Rational mid = (parent.y_lo + parent.y_hi) / 2;
            if (n % 2 == 0) {  // remove right-top
                CHECK(right.y_lo == parent.y_lo);
                CHECK(right.y_hi == mid);
            } else {  // remove right-bottom
                CHECK(right.y_lo == mid);
                CHECK(right.y_hi == parent.y_hi);
            }
        }
    }
}

TEST_CASE("area of K_n is exactly (3/4)^n") {
    Rational expect = 1;
    for (int n = 0; n <= 12; ++n) {
        CHECK(area(K_level(n)) == expect);
        expect *= Rational(3, 4);
    }
    CHECK(area(K_level(7)) == Rational(2187, 16384));
}

TEST_CASE("integral staircase") {
    CHECK(integral_staircase(0) == 0);
    CHECK(integral_staircase(2) == Rational(3, 16));
    for (int n = 0; n <= 20; n += 2) CHECK(integral_staircase(n) == integral_closed_form(n));
    // The odd levels add nothing: R_{2n+1} = R_{2n}, checked via bottom edges.
    for (int n = 0; n <= 10; n += 2) {
        RectSet K = K_level(n);
        RectSet K1 = K_level(n + 1);
        Rational a = 0, b = 0;
        for (const auto& r : K.rects) a += (r.x_hi - r.x_lo) * r.y_lo;
        for (const auto& r : K1.rects) b += (r.x_hi - r.x_lo) * r.y_lo;
        CHECK(a == b);
    }
    // Convergence to 3/7.
    CHECK(integral_closed_form(40) - Rational(3, 7) < 0);
    Rational gap = Rational(3, 7) - integral_closed_form(40);
    CHECK(gap < Rational(1, 100000));
    CHECK_THROWS_AS(integral_staircase(3), std::invalid_argument);
}

TEST_CASE("box count is exactly 3^n") {
    Int expect = 1;
    for (int n = 0; n <= 12; ++n) {
        CHECK(box_count(n) == expect);
        expect *= 3;
    }
    CHECK(box_count(8) == 6561);
    // Box-dimension estimate log(count)/log(2^n) tends to log2(3).
    double est = std::log(box_count(12).get_d()) / std::log(std::pow(2.0, 12));
    CHECK(est == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
}

TEST_CASE("graph containment in every K level") {
    std::mt19937 rng(71);
    for (int i = 0; i < 1000; ++i) {
        Rational x(rng() % 512, 1 + rng() % 511);
        x.canonicalize();
        if (x > 1) x = 1 / x;
        Rational y = R_rational(x);
        for (int n = 2; n <= 12; n += 5) {
            // Only the column holding x and its left neighbour can contain it.
            Rational scaled = x * pow2(n);
            Int col = scaled.get_num() / scaled.get_den();
            bool inside = false;
            for (long d = 0; d <= 1; ++d) {
                Int c = col - d;
                if (c < 0 || c >= Int(1) << n) continue;
                FiniteWord w = FiniteWord::from_index(c.get_ui(), static_cast<unsigned>(n));
                Interval I = I_interval(w);
                Rational x_lo = Rational(c) * pow2(-n);
                if (x_lo <= x && x <= x_lo + pow2(-n) && I.contains(y)) inside = true;
            }
            CHECK(inside);
        }
    }
}

TEST_CASE("right-cluster law at dyadic points") {
    std::mt19937 rng(73);
    for (int level = 1; level <= 8; ++level)
        for (int rep = 0; rep < 8; ++rep) {
            std::uint64_t k = rng() % (1ull << level);
            FiniteWord w = FiniteWord::from_index(k, static_cast<unsigned>(level));
            if (w.ones_count() == 0) continue;  // x = 0 is not a right-cluster point
            Rational x = w.dyadic_value();
            Interval I = I_interval(w);
            CHECK(!I.contains(R_rational(x)));
            for (int j = level + 2; j <= level + 8; ++j)
                for (long m = 1; m <= 3; ++m) {
                    Rational delta = Rational(m) * pow2(-j);
                    CHECK(I.contains(R_rational(x + delta)));
                }
        }
}

TEST_CASE("CSV export") {
    std::ostringstream rects;
    export_rects_csv(K_level(1), rects);
    CHECK(rects.str() ==
          "level,k,x_lo,x_hi,y_lo,y_hi\n"
          "1,0,0,0.5,0,1\n"
          "1,1,0.5,1,0,0.5\n");

    std::ostringstream graph;
    export_graph_csv(2, graph);
    CHECK(graph.str() ==
          "x,y\n"
          "0,0\n"
          "0.25,0.5\n"
          "0.5,0\n"
          "0.75,0.25\n");

    std::ostringstream integral;
    export_integral_csv(10, integral);
    const std::string rows = integral.str();
    CHECK(rows.substr(0, 8) == "level,A\n");
    CHECK(rows.find("2,0.1875\n") != std::string::npos);
    // Header plus 6 partials: A_0 .. A_10.
    CHECK(std::count(rows.begin(), rows.end(), '\n') == 7);
}
