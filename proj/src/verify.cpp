#include "rhomap/verify.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "rhomap/fibers.hpp"
#include "rhomap/geometry.hpp"
#include "rhomap/points.hpp"

namespace rhomap {

namespace {

struct Suite {
    std::vector<CheckResult> results;

    // Runs `body`, which returns an empty string on success or a
    // counterexample description on failure.
    template <typename F>
    void check(const std::string& name, F&& body) {
        CheckResult r;
        r.name = name;
        try {
            r.detail = body();
            r.pass = r.detail.empty() || r.detail[0] == '~';  // '~' marks informational
            if (!r.detail.empty() && r.detail[0] == '~') r.detail.erase(0, 1);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

FiniteWord random_word(std::mt19937& rng, std::size_t len) {
    FiniteWord w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<int>(rng() % 2));
    return w;
}

std::string show(const Rational& x) { return rational_str(x); }

}  // namespace

std::vector<CheckResult> verify_words(Budget) {
    Suite s;
    s.check("xi.beta roundtrip (q <= 64)", [] {
        for (long q = 1; q <= 64; ++q)
            for (long p = 0; p <= q; ++p) {
                Rational x(p, q);
                x.canonicalize();
                if (x > 0 && xi(beta(x)) != x) return "beta fails at " + show(x);
                if (x < 1 && xi(beta_prime(x)) != x) return "beta' fails at " + show(x);
            }
        return std::string();
    });
    s.check("beta branches split at dyadics", [] {
        for (long q = 1; q <= 64; ++q)
            for (long p = 1; p < q; ++p) {
                Rational x(p, q);
                x.canonicalize();
                const bool differ = beta(x) != beta_prime(x);
                if (differ != is_dyadic(x)) return "branch split wrong at " + show(x);
            }
        return std::string();
    });
    s.check("insertion shifts the k-th 1 by 2(a_1+..+a_k)", [] {
        std::mt19937 rng(101);
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<unsigned> a(1 + rng() % 4);
            for (auto& g : a) g = rng() % 4;
            FiniteWord b = random_word(rng, 48) + FiniteWord("1");
            if (b.ones_count() < a.size()) continue;
            FiniteWord shifted = insert_zero_pairs(NatSeqPrefix(a), b);
            unsigned cum = 0;
            for (std::size_t k = 1; k <= a.size(); ++k) {
                cum += a[k - 1];
                if (shifted.position_of_one(k) != b.position_of_one(k) + 2 * cum)
                    return "shift law fails at " + b.str();
            }
        }
        return std::string();
    });
    s.check("cylinder width = 2^-|w| (|w| <= 20)", [] {
        std::mt19937 rng(103);
        for (int len = 1; len <= 20; ++len)
            for (int rep = 0; rep < 32; ++rep) {
                FiniteWord w = random_word(rng, static_cast<std::size_t>(len));
                if (cylinder_interval(w).width() != pow2(-len))
                    return "width wrong for " + w.str();
            }
        return std::string();
    });
    s.check("canonicalize idempotent and value-preserving (lengths <= 8)", [] {
        for (unsigned pl = 1; pl <= 8; ++pl)
            for (unsigned ul = 0; ul <= 8; ++ul)
                for (std::uint64_t pv = 0; pv < (1u << pl); ++pv)
                    for (std::uint64_t uv = 0; uv < (1u << ul); ++uv) {
                        EPWord e(FiniteWord::from_index(uv, ul), FiniteWord::from_index(pv, pl));
                        if (EPWord(e.preperiod(), e.period()) != e)
                            return std::string("not idempotent at ") + e.str();
                        EPWord raw(FiniteWord::from_index(uv, ul), FiniteWord::from_index(pv, pl));
                        if (e.prefix(20) != raw.prefix(20))
                            return std::string("digits changed at ") + e.str();
                    }
        return std::string();
    });
    return s.results;
}

std::vector<CheckResult> verify_map(Budget b) {
    Suite s;
    s.check("rho = tau on even lengths (<= 16)", [] {
        for (unsigned len = 0; len <= 16; len += 2)
            for (std::uint64_t x = 0; x < (1ull << len); ++x) {
                FiniteWord w = FiniteWord::from_index(x, len);
                if (tau(w) != rho(w)) return "tau != rho at " + w.str();
            }
        return std::string();
    });
    s.check("rho(vw) = rho(v) rho_v(w)", [b] {
        const std::size_t cap = b == Budget::full ? 10 : 8;
        for (std::size_t lv = 0; lv <= cap; ++lv)
            for (std::uint64_t v = 0; v < (1ull << lv); ++v) {
                FiniteWord vw = FiniteWord::from_index(v, static_cast<unsigned>(lv));
                FiniteWord rv = rho(vw);
                std::mt19937 rng(static_cast<unsigned>(v + lv));
                for (int rep = 0; rep < 8; ++rep) {
                    FiniteWord w = random_word(rng, rng() % (cap + 1));
                    if (rho(vw + w) != rv + rho(w, parity_of(vw.size())))
                        return "defect at v=" + vw.str() + " w=" + w.str();
                }
            }
        return std::string();
    });
    s.check("section identity rho(sigma(b)) = b (1000 x 256)", [] {
        std::mt19937 rng(107);
        for (int i = 0; i < 1000; ++i) {
            FiniteWord w = random_word(rng, 256);
            if (rho(sigma(w)) != w) return "section fails at " + w.prefix(32).str() + "...";
        }
        return std::string();
    });
    s.check("fiber identity rho(<a>sigma(b)) = b", [] {
        std::mt19937 rng(109);
        for (int i = 0; i < 1000; ++i) {
            FiniteWord w = random_word(rng, 128);
            std::vector<unsigned> a(1 + rng() % 4);
            for (auto& g : a) g = rng() % 4;
            if (rho(insert_zero_pairs(NatSeqPrefix(a), sigma(w))) != w)
                return "fiber point fails at " + w.prefix(32).str() + "...";
        }
        return std::string();
    });
    s.check("sigma is the lexicographic maximum of its fiber", [] {
        std::mt19937 rng(113);
        for (int i = 0; i < 1000; ++i) {
            FiniteWord w = random_word(rng, 64);
            FiniteWord sec = sigma(w);
            std::vector<unsigned> a(1 + rng() % 3, 0);
            a[rng() % a.size()] = 1 + rng() % 3;
            if (!(insert_zero_pairs(NatSeqPrefix(a), sec).str() < sec.str()))
                return "maximality fails at " + w.prefix(32).str();
        }
        return std::string();
    });
    s.check("vanishing bound n_eps <= 2 floor(log2 |w|) + 2 (|w| <= 16)", [] {
        for (unsigned len = 1; len <= 16; ++len) {
            const int bound = 2 * static_cast<int>(std::floor(std::log2(len))) + 2;
            for (std::uint64_t x = 0; x < (1ull << len); ++x) {
                FiniteWord w = FiniteWord::from_index(x, len);
                if (vanishing_order(w) > bound) return "bound broken at " + w.str();
            }
            if (vanishing_order(FiniteWord::ones(len)) != bound)
                return "1^" + std::to_string(len) + " does not attain the bound";
        }
        return std::string();
    });
    s.check("n_eps(w) = n_eps(w0) (|w| <= 12)", [] {
        for (unsigned len = 1; len <= 12; ++len)
            for (std::uint64_t x = 0; x < (1ull << len); ++x) {
                FiniteWord w = FiniteWord::from_index(x, len);
                if (vanishing_order(w) != vanishing_order(w + FiniteWord("0")))
                    return "padding changes order at " + w.str();
            }
        return std::string();
    });
    s.check("halving |rho^2(w)| <= |w|/2 (even |w| <= 16)", [] {
        for (unsigned len = 2; len <= 16; len += 2)
            for (std::uint64_t x = 0; x < (1ull << len); ++x) {
                FiniteWord w = FiniteWord::from_index(x, len);
                if (rho(rho(w)).size() > len / 2) return "halving fails at " + w.str();
            }
        return std::string();
    });
    s.check("541/228 census", [] {
        long mixed = 0, uniform = 0;
        for (std::uint64_t x = 0; x < 256; ++x) {
            FiniteWord img = rho(FiniteWord::from_index(x, 8));
            for (std::size_t i = 0; i + 1 < img.size(); ++i)
                (img[i] != img[i + 1] ? mixed : uniform) += 1;
        }
        if (mixed != 541 || uniform != 228)
            return "got " + std::to_string(mixed) + "/" + std::to_string(uniform);
        return std::string();
    });
    s.check("rational invariance and attraction (q <= 128)", [] {
        for (long q = 1; q <= 128; ++q)
            for (long p = 0; p <= q; ++p) {
                Rational x(p, q);
                x.canonicalize();
                OrbitRecord rec = iterate_orbit(x);
                if (rec.tail != CycleLabel::C0 && rec.tail != CycleLabel::C1)
                    return "orbit of " + show(x) + " does not reach C0/C1";
            }
        return std::string();
    });
    s.check("section property R(S(y)) = y (q <= 64)", [] {
        for (long q = 1; q <= 64; ++q)
            for (long p = 0; p <= q; ++p) {
                Rational y(p, q);
                y.canonicalize();
                if (R_rational(S_section(y)) != y) return "section fails at " + show(y);
            }
        return std::string();
    });
    s.check("S avoids 00 in its sigma expansion", [] {
        for (long q = 1; q <= 64; ++q)
            for (long p = 0; p <= q; ++p) {
                Rational y(p, q);
                y.canonicalize();
                FiberSpec spec = fiber_spec(y);
                for (const auto& sb : {spec.sigma_beta, spec.sigma_beta_prime})
                    if (sb && sb->prefix(512).view().find("00") != std::string_view::npos)
                        return "00 factor in sigma word of " + show(y);
            }
        return std::string();
    });
    s.check("functional equations (1000 rationals)", [] {
        std::mt19937 rng(127);
        for (int i = 0; i < 1000; ++i) {
            Rational x(1 + rng() % 997, 1 + rng() % 997);
            x.canonicalize();
            if (x > 1) x = 1 / x;
            if (!check_functional(x).all()) return "functional equation fails at " + show(x);
            FiniteWord w = random_word(rng, 1 + rng() % 4);
            if (!check_word_functional(w, x))
                return "word equation fails at " + show(x) + ", w=" + w.str();
        }
        return std::string();
    });
    s.check("left-continuity witness at dyadics", [] {
        for (long j = 1; j <= 6; ++j)
            for (long m = 1; m < (1 << j); m += 2) {
                Rational x(m, 1 << j);
                x.canonicalize();
                if (x == 1) continue;
                EPWord bx = beta(x);
                EPWord image = rho_ep(bx);
                FiniteWord g = rho(bx.prefix(64));
                if (!(image.prefix(g.size()) == g)) return "prefix mismatch at " + show(x);
                if (g.size() < 16) return "guaranteed digits too short at " + show(x);
            }
        return std::string();
    });
    s.check("right-discontinuity witness at 1/2", [] {
        Interval I = I_interval(FiniteWord("1"));
        if (I.contains(R_rational(Rational(1, 2)))) return std::string("R(1/2) inside I_1/2");
        for (int j = 2; j <= 12; ++j)
            for (long m = 1; m <= 3; ++m) {
                Rational x = Rational(1, 2) + Rational(m) * pow2(-j - 2);
                if (!I.contains(R_rational(x))) return "sample escapes I_1/2 at " + show(x);
            }
        return std::string();
    });
    return s.results;
}

std::vector<CheckResult> verify_fibers(Budget b) {
    Suite s;
    s.check("fiber points map back to y (q <= 32, |a| <= 3)", [] {
        std::mt19937 rng(131);
        for (long q = 1; q <= 32; ++q)
            for (long p = 0; p <= q; ++p) {
                Rational y(p, q);
                y.canonicalize();
                FiberSpec spec = fiber_spec(y);
                for (Branch br : {Branch::beta, Branch::beta_prime}) {
                    if ((br == Branch::beta && !spec.sigma_beta) ||
                        (br == Branch::beta_prime && !spec.sigma_beta_prime))
                        continue;
                    for (int t = 0; t < 3; ++t) {
                        std::vector<unsigned> a(1 + rng() % 3);
                        for (auto& g : a) g = rng() % 4;
                        if (R_rational(fiber_point(y, NatSeqPrefix(a), br)) != y)
                            return "fiber point misses y = " + show(y);
                    }
                }
            }
        return std::string();
    });
    s.check("section is the fiber maximum", [] {
        std::mt19937 rng(137);
        for (long q = 1; q <= 32; ++q)
            for (long p = 0; p <= q; ++p) {
                Rational y(p, q);
                y.canonicalize();
                Rational top = S_section(y);
                FiberSpec spec = fiber_spec(y);
                for (Branch br : {Branch::beta, Branch::beta_prime}) {
                    if ((br == Branch::beta && !spec.sigma_beta) ||
                        (br == Branch::beta_prime && !spec.sigma_beta_prime))
                        continue;
                    std::vector<unsigned> a{static_cast<unsigned>(1 + rng() % 3)};
                    if (fiber_point(y, NatSeqPrefix(a), br) >= top)
                        return "non-maximal section at " + show(y);
                }
            }
        return std::string();
    });
    s.check("distinct a give distinct fiber points", [] {
        std::vector<NatSeqPrefix> as = {{}, {1}, {2}, {0, 1}, {1, 1}, {0, 0, 2}};
        std::set<Rational> seen;
        for (const auto& a : as) seen.insert(fiber_point(Rational(1, 3), a));
        if (seen.size() != as.size()) return std::string("collision in fiber points");
        return std::string();
    });
    s.check("Monte Carlo matches the measure formula (4 sigma)", [b] {
        const int N = b == Budget::full ? 1000000 : 200000;
        std::mt19937_64 rng(20240901);
        for (const char* ys : {"1", "0", "11", "01"}) {
            FiniteWord y(ys);
            long hits = 0;
            for (int i = 0; i < N; ++i) {
                std::uint64_t bits = rng();
                FiniteWord w;
                for (int bit = 0; bit < 64; ++bit)
                    w.push_back(static_cast<int>(bits >> bit & 1));
                FiniteWord img = rho(w);
                if (img.size() >= y.size() && y.is_prefix_of(img)) ++hits;
            }
            const double p = fiber_measure_cylinder(y).get_d();
            const double se = std::sqrt(p * (1 - p) / N);
            const double got = static_cast<double>(hits) / N;
            if (std::abs(got - p) >= 4 * se) {
                std::ostringstream os;
                os << "y=" << ys << ": got " << got << ", expected " << p << " +- " << 4 * se;
                return os.str();
            }
        }
        return std::string();
    });
    s.check("dimension equation monotone; solver converges on a grid", [] {
        for (int i = 1; i <= 1000; ++i) {
            Rational d(i, 1000);
            d.canonicalize();
            const double dim = dimension_from_density(d);
            const double t = std::pow(2.0, -dim);
            const double inv_d = d.get_den().get_d() / d.get_num().get_d();
            if (std::abs(t * t + std::pow(t, inv_d) - 1.0) > 1e-10)
                return "solver off at d = " + show(d);
        }
        return std::string();
    });
    s.check("dimension within [1/2, log2 phi] (q <= 64)", [] {
        const double hi = std::log2((1 + std::sqrt(5.0)) / 2);
        for (long q = 1; q <= 64; ++q)
            for (long p = 0; p <= q; ++p) {
                Rational y(p, q);
                y.canonicalize();
                const double dim = fiber_dimension(y);
                if (dim < 0.5 - 1e-12 || dim > hi + 1e-12)
                    return "dimension out of range at " + show(y);
            }
        return std::string();
    });
    return s.results;
}

std::vector<CheckResult> verify_graph(Budget) {
    Suite s;
    s.check("K recursion matches the direct formula (n <= 10)", [] {
        RectSet cur = K_level(0);
        for (int n = 0; n <= 10; ++n) {
            RectSet direct = K_level(n);
            if (cur.rects.size() != direct.rects.size()) return "size differs at level " + std::to_string(n);
            auto sorted = [](RectSet K) {
                std::sort(K.rects.begin(), K.rects.end(),
                          [](const DyadicRect& a, const DyadicRect& b) {
                              return std::pair(a.x_lo, a.y_lo) < std::pair(b.x_lo, b.y_lo);
                          });
                return K.rects;
            };
            if (sorted(cur) != sorted(direct)) return "rects differ at level " + std::to_string(n);
            cur = apply_T(cur);
        }
        return std::string();
    });
    s.check("three-quarters structure (n <= 8)", [] {
        for (int n = 0; n <= 8; ++n) {
            RectSet K = K_level(n);
            RectSet K1 = K_level(n + 1);
            for (std::size_t k = 0; k < K.rects.size(); ++k) {
                const DyadicRect& parent = K.rects[k];
                const DyadicRect& left = K1.rects[2 * k];
                const DyadicRect& right = K1.rects[2 * k + 1];
                const Rational mid = (parent.y_lo + parent.y_hi) / 2;
                const bool ok =
                    left.y_lo == parent.y_lo && left.y_hi == parent.y_hi &&
                    (n % 2 == 0 ? (right.y_lo == parent.y_lo && right.y_hi == mid)
                                : (right.y_lo == mid && right.y_hi == parent.y_hi));
                if (!ok) return "child split wrong at level " + std::to_string(n);
            }
        }
        return std::string();
    });
    s.check("area=(3/4)^n", [] {
        Rational expect = 1;
        for (int n = 0; n <= 12; ++n) {
            if (area(K_level(n)) != expect) return "area wrong at level " + std::to_string(n);
            expect *= Rational(3, 4);
        }
        return std::string();
    });
    s.check("graph containment G in K_n", [] {
        std::mt19937 rng(139);
        for (int i = 0; i < 1000; ++i) {
            Rational x(rng() % 1024, 1 + rng() % 1023);
            x.canonicalize();
            if (x > 1) x = 1 / x;
            Rational y = R_rational(x);
            for (int n : {4, 8, 12}) {
                bool inside = false;
                // Candidate columns: floor(x 2^n) and its left neighbour.
                Rational scaled = x * pow2(n);
                Int col = scaled.get_num() / scaled.get_den();
                for (long d = 0; d <= 1; ++d) {
                    Int c = col - d;
                    if (c < 0 || c >= Int(1) << n) continue;
                    FiniteWord w =
                        FiniteWord::from_index(c.get_ui(), static_cast<unsigned>(n));
                    Interval I = I_interval(w);
                    Rational x_lo = Rational(c) * pow2(-n);
                    if (x_lo <= x && x <= x_lo + pow2(-n) && I.contains(y)) inside = true;
                }
                if (!inside) return "point escapes K_" + std::to_string(n) + " at x = " + show(x);
            }
        }
        return std::string();
    });
    s.check("right-cluster law (levels <= 8)", [] {
        std::mt19937 rng(149);
        for (int level = 1; level <= 8; ++level)
            for (int rep = 0; rep < 8; ++rep) {
                FiniteWord w = FiniteWord::from_index(rng() % (1ull << level),
                                                      static_cast<unsigned>(level));
                if (w.ones_count() == 0) continue;
                Rational x = w.dyadic_value();
                Interval I = I_interval(w);
                if (I.contains(R_rational(x))) return "R(x) inside I_x at " + show(x);
                for (int j = level + 2; j <= level + 8; ++j)
                    if (!I.contains(R_rational(x + pow2(-j))))
                        return "cluster sample escapes at " + show(x);
            }
        return std::string();
    });
    s.check("boxcount=3^n", [] {
        Int expect = 1;
        for (int n = 0; n <= 12; ++n) {
            if (box_count(n) != expect) return "box count wrong at level " + std::to_string(n);
            expect *= 3;
        }
        return std::string();
    });
    s.check("integral staircase matches the closed form (levels <= 20)", [] {
        for (int n = 0; n <= 20; n += 2)
            if (integral_staircase(n) != integral_closed_form(n))
                return "A_" + std::to_string(n) + " differs from the closed form";
        return std::string();
    });
    return s.results;
}

std::vector<CheckResult> verify_chaos(Budget b) {
    Suite s;
    s.check("b0 digits and rho-fixedness to 1e5", [] {
        LazyWord b0 = b0_stream();
        if (b0.prefix(32) != FiniteWord("00101111010101111111010101010101"))
            return std::string("b0 leading digits wrong");
        FiniteWord img = rho(b0.prefix(100000));
        if (!(img == b0.prefix(img.size()))) return std::string("b0 is not rho-fixed");
        return std::string();
    });
    s.check("b0 ones density (observational)", [] {
        return "~density over 1e4 digits: " + rational_str(freq(FiniteWord("1"), b0_stream(), 10000));
    });
    s.check("Thue-Morse 2-cycle to 1e4", [] {
        LazyWord u = thue_morse(0), v = thue_morse(1);
        FiniteWord iu = rho(u.prefix(10000));
        FiniteWord iv = rho(v.prefix(10000));
        if (!(iu == v.prefix(iu.size()))) return std::string("rho(u) != ~u");
        if (!(iv == u.prefix(iv.size()))) return std::string("rho(~u) != u");
        return std::string();
    });
    s.check("x_ell is rho^{2l+1}-fixed (l = 1, 2)", [] {
        for (int ell : {1, 2}) {
            LazyWord x = x_ell_stream(ell);
            FiniteWord cur = x.prefix(10000);
            for (int i = 0; i < 2 * ell + 1; ++i) cur = rho(cur);
            if (!(cur == x.prefix(cur.size())))
                return "x_" + std::to_string(ell) + " not fixed";
        }
        return std::string();
    });
    s.check("phi injectivity on 20 parameters", [] {
        std::vector<NatSeqPrefix> params = {{},     {1},    {2},       {0, 1},    {0, 2},
                                            {1, 1}, {2, 1}, {0, 0, 1}, {0, 0, 2}, {1, 0, 1},
                                            {3},    {0, 3}, {1, 2},    {2, 2},    {0, 1, 1},
                                            {1, 1, 1}, {4}, {0, 0, 0, 1}, {2, 0, 1}, {3, 1}};
        std::set<std::string> seen;
        for (const auto& p : params) seen.insert(phi_fixed_point(p).prefix(256).str());
        if (seen.size() != params.size()) return std::string("phi prefix collision");
        return std::string();
    });
    s.check("psi . phi = id (entries <= 4, values <= 4)", [] {
        for (unsigned m = 1; m <= 4; ++m) {
            std::vector<unsigned> a(m, 0);
            for (;;) {
                NatSeqPrefix p{std::vector<unsigned>(a)};
                if (!(psi(phi_fixed_point(p), m) == p)) {
                    std::string sa;
                    for (auto g : a) sa += std::to_string(g) + ",";
                    return "psi(phi(a)) != a at a = " + sa;
                }
                std::size_t i = 0;
                while (i < m && a[i] == 4) a[i++] = 0;
                if (i == m) break;
                ++a[i];
            }
        }
        return std::string();
    });
    s.check("scrambled checkpoint law (depth 3)", [] {
        ScrambledParams p;
        p.alpha_sources = {FiniteWord("0"), FiniteWord("1")};
        p.depth = 3;
        ScrambledFamily fam = scrambled_family(p);
        FiniteWord w0 = fam.members[0].stream.prefix(1 << 19);
        FiniteWord w1 = fam.members[1].stream.prefix(1 << 19);
        long step = 0;
        for (int stage = 1; stage <= 3; ++stage) {
            while (step < fam.checkpoints[static_cast<std::size_t>(stage - 1)]) {
                w0 = rho(w0);
                w1 = rho(w1);
                ++step;
            }
            const int a0 = fam.members[0].alpha[static_cast<std::size_t>(stage - 1)];
            const int a1 = fam.members[1].alpha[static_cast<std::size_t>(stage - 1)];
            FiniteWord t0 = scrambled_target_prefix(stage, a0, 8);
            FiniteWord t1 = scrambled_target_prefix(stage, a1, 8);
            if (!(w0.prefix(t0.size()) == t0) || !(w1.prefix(t1.size()) == t1))
                return "checkpoint block missed at stage " + std::to_string(stage);
            if (a0 == a1) {
                if (!(w0.prefix(t0.size()) == w1.prefix(t1.size())))
                    return "match-stage blocks differ at stage " + std::to_string(stage);
            } else {
                Interval i0 = cylinder_interval(w0.prefix(8));
                Interval i1 = cylinder_interval(w1.prefix(8));
                Rational gap = std::max(i0.lo, i1.lo) - std::min(i0.hi, i1.hi);
                if (!(gap > Rational(1, 8)))
                    return "mismatch separation below 1/8 at stage " + std::to_string(stage);
            }
        }
        return std::string();
    });
    s.check("separated sets: cardinality and certified distance", [] {
        for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 3}, {3, 2}}) {
            SeparatedSet S = separated_set(k, n);
            const std::size_t expect = std::size_t(1) << (static_cast<std::size_t>(k) * (n + 1));
            if (S.points.size() != expect)
                return "cardinality wrong for S_" + std::to_string(k) + "," + std::to_string(n);
            Rational bound = pow2(-(k + 1));
            for (std::size_t a = 0; a < S.points.size(); ++a)
                for (std::size_t c = a + 1; c < S.points.size(); ++c)
                    if (separation_lower_bound(S, a, c) < bound)
                        return "separation below bound in S_" + std::to_string(k) + "," +
                               std::to_string(n);
            for (std::size_t idx : {std::size_t(0), S.points.size() / 2, S.points.size() - 1})
                if (!verify_member_checkpoints(S, idx))
                    return "checkpoint verification failed in S_" + std::to_string(k) + "," +
                           std::to_string(n);
        }
        return std::string();
    });
    s.check("subword complexity of b0 below 8n + 3", [b] {
        const std::size_t prefix = b == Budget::full ? 1000000 : 100000;
        LazyWord b0 = b0_stream();
        const std::size_t nmax = b == Budget::full ? 64 : 32;
        for (std::size_t n = 1; n <= nmax; ++n) {
            const std::size_t count = subword_complexity(b0, n, prefix);
            if (count >= 8 * n + 3)
                return "p(" + std::to_string(n) + ") = " + std::to_string(count);
        }
        return std::string();
    });
    s.check("complexity monotone and subadditive", [] {
        LazyWord b0 = b0_stream();
        std::size_t prev = 0;
        for (std::size_t len : {2000u, 10000u, 50000u}) {
            const std::size_t c = subword_complexity(b0, 12, len);
            if (c < prev) return std::string("complexity not monotone in prefix length");
            prev = c;
        }
        for (std::size_t n = 1; n <= 16; ++n)
            if (subword_complexity(b0, n + 1, 50000) > 2 * subword_complexity(b0, n, 50000))
                return "subadditivity fails at n = " + std::to_string(n);
        return std::string();
    });
    return s.results;
}

std::vector<CheckResult> verify_all(Budget b) {
    std::vector<CheckResult> all;
    for (auto* fn : {verify_words, verify_map, verify_fibers, verify_graph, verify_chaos}) {
        auto part = fn(b);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

}  // namespace rhomap
