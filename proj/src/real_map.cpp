#include "rhomap/real_map.hpp"

#include <map>

namespace rhomap {

Rational R_rational(const Rational& x) {
    if (x < 0 || x > 1) throw std::invalid_argument("R_rational: x must be in [0,1]");
    if (x == 0) return Rational(2, 3);
    auto image = rho_ep_any(beta(x));
    // An eventually-0 image is still an exact rational; the next beta call
    // re-expands it, matching the bookkeeping in the rational-orbit argument.
    if (std::holds_alternative<FiniteWord>(image))
        return std::get<FiniteWord>(image).dyadic_value();
    return xi(std::get<EPWord>(image));
}

GuaranteedPrefix R_prefix(const FiniteWord& w, int iterates) {
    if (w.empty()) throw std::invalid_argument("R_prefix: empty input prefix");
    if (iterates < 1) throw std::invalid_argument("R_prefix: iterates must be >= 1");
    FiniteWord cur = w;
    for (int i = 0; i < iterates; ++i) cur = rho(cur);
    return {cur, iterates};
}

namespace {

// Visit all words of the given length with no 00 factor.
template <typename F>
void for_each_S_word(unsigned len, F&& f) {
    FiniteWord w;
    auto rec = [&](auto&& self) -> void {
        if (w.size() == len) {
            f(w);
            return;
        }
        if (w.empty() || w.last() == 1) {
            w.push_back(0);
            self(self);
            w = w.prefix(w.size() - 1);
        }
        w.push_back(1);
        self(self);
        w = w.prefix(w.size() - 1);
    };
    rec(rec);
}

}  // namespace

int required_precision(int m, int n, int cap) {
    if (m < 1 || n < 1) throw std::invalid_argument("required_precision: m, n must be >= 1");
    for (int L = 1; L <= cap; L *= 2) {
        bool ok = true;
        for_each_S_word(static_cast<unsigned>(L), [&](const FiniteWord& w) {
            if (!ok) return;
            if (R_prefix(w, n).digits.size() < static_cast<std::size_t>(m)) ok = false;
        });
        if (ok) return L;
    }
    throw BudgetExceeded("required_precision: no prefix length up to " + std::to_string(cap) +
                         " guarantees " + std::to_string(m) + " digits after " +
                         std::to_string(n) + " iterates over S-words");
}

OrbitRecord iterate_orbit(const Rational& x, int max_steps) {
    OrbitRecord rec;
    std::map<Rational, int> seen;
    Rational cur = x;
    for (int step = 0; step <= max_steps; ++step) {
        auto [it, fresh] = seen.emplace(cur, step);
        if (!fresh) {
            rec.steps_to_cycle = it->second;
            rec.cycle.assign(rec.points.begin() + it->second, rec.points.end());
            const auto& c = rec.cycle;
            auto has = [&c](const Rational& v) {
                return std::find(c.begin(), c.end(), v) != c.end();
            };
            if (c.size() == 2 && has(Rational(0)) && has(Rational(2, 3)))
                rec.tail = CycleLabel::C0;
            else if (c.size() == 2 && has(Rational(1)) && has(Rational(1, 3)))
                rec.tail = CycleLabel::C1;
            else
                rec.tail = CycleLabel::other;
            return rec;
        }
        rec.points.push_back(cur);
        cur = R_rational(cur);
    }
    rec.tail = CycleLabel::undecided;
    return rec;
}

QClass classify_Q(const Rational& x, int max_steps) {
    OrbitRecord rec = iterate_orbit(x, max_steps);
    switch (rec.tail) {
        case CycleLabel::C0: return QClass::Q0;
        case CycleLabel::C1: return QClass::Q1;
        default:
            throw std::runtime_error("classify_Q: orbit of " + rational_str(x) +
                                     " undecided within budget");
    }
}

Rational S_section(const Rational& y) {
    if (y < 0 || y > 1) throw std::invalid_argument("S_section: y must be in [0,1]");
    if (y == 0) return xi(sigma_ep(beta_prime(y)));
    if (y == 1 || !is_dyadic(y)) return xi(sigma_ep(beta(y)));
    Rational a = xi(sigma_ep(beta(y)));
    Rational b = xi(sigma_ep(beta_prime(y)));
    return std::max(a, b);
}

FunctionalReport check_functional(const Rational& x) {
    if (x <= 0 || x > 1) throw std::invalid_argument("check_functional: x must be in (0,1]");
    FunctionalReport r{};
    Rational Rx = R_rational(x);
    r.halving = R_rational(x / 2) == 1 - Rx;
    r.shift_half = R_rational((x + 1) / 2) == (1 - Rx) / 2;
    r.doubling = x > Rational(1, 2) || Rx == 2 * R_rational(x + Rational(1, 2));
    return r;
}

bool check_word_functional(const FiniteWord& w, const Rational& x) {
    if (w.empty()) throw std::invalid_argument("check_word_functional: w must be non-empty");
    if (x <= 0 || x > 1) throw std::invalid_argument("check_word_functional: x must be in (0,1]");
    const FiniteWord v = rho(w);
    const long n = static_cast<long>(w.size());
    const long m = static_cast<long>(v.size());
    Rational lhs = R_rational(x * pow2(-n) + w.dyadic_value());
    Rational tail = (n % 2 == 0) ? R_rational(x) : 1 - R_rational(x);
    Rational rhs = v.dyadic_value() + pow2(-m) * tail;
    return lhs == rhs;
}

CylinderImage image_of_cylinder(const FiniteWord& x) {
    if (x.empty()) throw std::invalid_argument("image_of_cylinder: empty word");
    CylinderImage img;
    if (x.ones_count() == 0) {
        img.full_interval = true;
        img.cylinder = {Rational(0), Rational(1)};
        img.diameter = 1;
        img.oscillation_bound = 1;
        return img;
    }
    const std::size_t k = x.position_of_one(x.ones_count());  // last 1 of x
    FiniteWord head = x.prefix(k - 1);
    head.push_back(0);
    img.isolated = xi(rho_ep(EPWord(head, FiniteWord("1"))));
    img.cylinder = cylinder_interval(rho(x));
    Rational lo = std::min(img.isolated, img.cylinder.lo);
    Rational hi = std::max(img.isolated, img.cylinder.hi);
    img.diameter = hi - lo;
    img.oscillation_bound = pow2(1 - static_cast<long>(x.ones_count()));
    return img;
}

}  // namespace rhomap
