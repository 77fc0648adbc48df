// The interval map R(x) = xi(rho(beta(x))) with R(0) = 2/3: exact evaluation
// on rationals, guaranteed prefixes, orbits and the two rational cycles, the
// maximal section S, functional equations and cylinder images.
#ifndef RHOMAP_REAL_MAP_HPP
#define RHOMAP_REAL_MAP_HPP

#include <optional>
#include <vector>

#include "rhomap/substitution.hpp"
#include "rhomap/words.hpp"

namespace rhomap {

// R on an exact rational in [0,1].
Rational R_rational(const Rational& x);

// Digits of rho^n(w): a common prefix of the expansions of R^n across the
// whole cylinder of w (empty when rho^n(w) = empty, i.e. no information).
struct GuaranteedPrefix {
    FiniteWord digits;
    int iterates = 0;
    bool empty() const { return digits.empty(); }
};

GuaranteedPrefix R_prefix(const FiniteWord& w, int iterates);

// Smallest power-of-two prefix length L such that every w in S (no 00 factor)
// of length L has |rho^n(w)| >= m, verified exhaustively; throws
// BudgetExceeded past the cap. For n >= 2 no such L exists ((10)^k vanishes in
// two steps), so the cap fires.
int required_precision(int m, int n, int cap = 24);

enum class CycleLabel { C0, C1, other, undecided };

struct OrbitRecord {
    std::vector<Rational> points;  // x, R(x), ... up to the first repeat
    CycleLabel tail = CycleLabel::undecided;
    std::vector<Rational> cycle;   // the repeating segment, in orbit order
    int steps_to_cycle = -1;
};

OrbitRecord iterate_orbit(const Rational& x, int max_steps = 10000);

// Q0 / Q1 membership; throws std::runtime_error if the budget is exhausted
// (which Prop-level theory rules out, so a throw is a test failure).
enum class QClass { Q0, Q1 };
QClass classify_Q(const Rational& x, int max_steps = 10000);

// S(y) = max R^{-1}(y), through the sigma section on the beta / beta' branch.
Rational S_section(const Rational& y);

struct FunctionalReport {
    bool halving;       // R(x/2) = 1 - R(x)
    bool shift_half;    // R((x+1)/2) = (1 - R(x))/2
    bool doubling;      // R(x) = 2 R(x + 1/2) on (0,1/2]
    bool all() const { return halving && shift_half && doubling; }
};

FunctionalReport check_functional(const Rational& x);

// The word-indexed family: R(x/2^n + 0.w) = 0.v + (1/2^m)((1+(-1)^{n+1})/2 + (-1)^n R(x))
// with v = rho(w), n = |w|, m = |v|.
bool check_word_functional(const FiniteWord& w, const Rational& x);

// Image of a dyadic cylinder under R: the full interval for x = 0^n, otherwise
// an isolated value plus the cylinder of rho(x), with oscillation diameter at
// most 1/2^{|x|_1 - 1}.
struct CylinderImage {
    bool full_interval = false;
    Rational isolated;          // xi(rho(x|_{k-1} 0 per(1))), k = last 1 of x
    Interval cylinder;          // xi([rho(x)])
    Rational diameter;          // exact diameter of the image set
    Rational oscillation_bound; // 1/2^{|x|_1 - 1}
};

CylinderImage image_of_cylinder(const FiniteWord& x);

}  // namespace rhomap

#endif  // RHOMAP_REAL_MAP_HPP
