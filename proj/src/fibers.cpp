#include "rhomap/fibers.hpp"

#include <cmath>

namespace rhomap {

FiberSpec fiber_spec(const Rational& y) {
    if (y < 0 || y > 1) throw std::invalid_argument("fiber_spec: y must be in [0,1]");
    FiberSpec spec;
    spec.y = y;
    spec.includes_zero = (y == Rational(2, 3));
    if (y != 0) spec.sigma_beta = sigma_ep(beta(y));
    if (y != 1 && (y == 0 || is_dyadic(y))) spec.sigma_beta_prime = sigma_ep(beta_prime(y));
    return spec;
}

Rational fiber_point(const Rational& y, const NatSeqPrefix& a, Branch branch) {
    FiberSpec spec = fiber_spec(y);
    const std::optional<EPWord>& base =
        branch == Branch::beta ? spec.sigma_beta : spec.sigma_beta_prime;
    if (!base)
        throw std::invalid_argument("fiber_point: branch not defined for y = " + rational_str(y));
    return xi(insert_zero_pairs(a, *base));
}

Rational fiber_measure_cylinder(const FiniteWord& y) {
    if (y.empty()) throw std::invalid_argument("fiber_measure_cylinder: empty word");
    const long n = static_cast<long>(y.size());
    const long m = static_cast<long>(sigma(y).size());
    Int three_n;
    mpz_ui_pow_ui(three_n.get_mpz_t(), 3, static_cast<unsigned long>(n));
    Rational r = pow2(2 * n - m) / three_n;
    r.canonicalize();
    return r;
}

Rational density_d(const Rational& y) {
    const EPWord s = (y == 0) ? sigma_ep(beta_prime(y)) : sigma_ep(beta(y));
    const FiniteWord& q = s.period();
    Rational d(static_cast<unsigned long>(q.ones_count()),
               static_cast<unsigned long>(q.size()));
    d.canonicalize();
    return d;
}

double dimension_from_density(const Rational& d, double tol) {
    if (d <= 0 || d > 1) throw std::invalid_argument("dimension_from_density: d must be in (0,1]");
    const double inv_d = d.get_den().get_d() / d.get_num().get_d();
    auto f = [inv_d](double t) { return t * t + std::pow(t, inv_d) - 1.0; };
    // f is strictly increasing on (0,1) with f(0+) = -1 and f(1) = 1.
    double lo = 0.0, hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) lo = mid;
        else hi = mid;
    }
    return -std::log2(0.5 * (lo + hi));
}

double fiber_dimension(const Rational& y, double tol) {
    return dimension_from_density(density_d(y), tol);
}

}  // namespace rhomap
