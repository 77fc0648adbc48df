// Fibers of R: explicit fiber points <a>sigma(beta(y)), the exact measure of
// cylinder preimages, the density of 1s in the sigma-period, and the
// Hausdorff-dimension solver t^2 + t^{1/d} = 1.
#ifndef RHOMAP_FIBERS_HPP
#define RHOMAP_FIBERS_HPP

#include <optional>

#include "rhomap/real_map.hpp"

namespace rhomap {

enum class Branch { beta, beta_prime };

struct FiberSpec {
    Rational y;
    std::optional<EPWord> sigma_beta;        // absent only for y = 0
    std::optional<EPWord> sigma_beta_prime;  // present for dyadic y < 1
    bool includes_zero = false;              // true iff y = 2/3
};

FiberSpec fiber_spec(const Rational& y);

// x = xi(<a>sigma(branch(y))), an exact element of R^{-1}(y).
Rational fiber_point(const Rational& y, const NatSeqPrefix& a, Branch branch = Branch::beta);

// lambda(R^{-1}(xi([y]))) = 2^{2n - |sigma(y)|} / 3^n for y of length n.
Rational fiber_measure_cylinder(const FiniteWord& y);

// Density |q|_1 / |q| of 1s in the canonical sigma-period of y's fiber.
Rational density_d(const Rational& y);

// -log2 t for the unique root in (0,1) of t^2 + t^{1/d} = 1, by bisection.
double dimension_from_density(const Rational& d, double tol = 1e-14);

// Hausdorff dimension of R^{-1}(y) for rational y (Moran equation through the
// sigma-period density); always lands in [1/2, log2 golden-ratio].
double fiber_dimension(const Rational& y, double tol = 1e-14);

}  // namespace rhomap

#endif  // RHOMAP_FIBERS_HPP
