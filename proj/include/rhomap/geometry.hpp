// Recursive plane geometry of the graph of R: the nested rectangle sets K_n,
// the vertical cluster intervals I_x, exact areas, the integral staircase
// converging to 3/7, dyadic box counts and CSV export.
#ifndef RHOMAP_GEOMETRY_HPP
#define RHOMAP_GEOMETRY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rhomap/real_map.hpp"

namespace rhomap {

struct DyadicRect {
    Rational x_lo, x_hi, y_lo, y_hi;
    bool operator==(const DyadicRect&) const = default;
};

struct RectSet {
    int level = 0;
    std::vector<DyadicRect> rects;  // ordered by k = 0 .. 2^level - 1
};

// I_x for x = 0.x_1...x_n: the cylinder of rho(x_1...x_n). I_empty = [0,1].
Interval I_interval(const FiniteWord& x);

// K_n by the direct formula: [k/2^n, (k+1)/2^n] x I_{k/2^n}.
RectSet K_level(int n);

// The operator T = T0 u T1 applied to a rectangle set, with
// T0(x,y) = (x/2, 1-y) and T1(x,y) = ((x+1)/2, (1-y)/2).
RectSet apply_T(const RectSet& K);

Rational area(const RectSet& K);

// A_n: integral of the step function R_n given by the bottom edges of K_n.
// Streams over k, so deep levels need no rectangle storage. n must be even.
Rational integral_staircase(int n);
// Closed form (3/7)(1 - (9/16)^{n/2}) summing the step increments
// A_{2m} - A_{2m-2} = (3/16)(9/16)^{m-1}.
Rational integral_closed_form(int n);

// Number of side-2^{-n} dyadic boxes contained in K_n; equals 3^n.
Int box_count(int n);

// CSV export: rectangles ("level,k,x_lo,x_hi,y_lo,y_hi"), the step function
// graph ("x,y") or integral partials ("level,A"). All coordinates are dyadic
// and printed as exact decimals.
void export_rects_csv(const RectSet& K, std::ostream& os);
void export_graph_csv(int level, std::ostream& os);
void export_integral_csv(int max_level, std::ostream& os);

}  // namespace rhomap

#endif  // RHOMAP_GEOMETRY_HPP
