#include "rhomap/geometry.hpp"

#include <ostream>

namespace rhomap {

Interval I_interval(const FiniteWord& x) { return cylinder_interval(rho(x)); }

RectSet K_level(int n) {
    if (n < 0 || n > 24) throw std::invalid_argument("K_level: level must be in [0,24]");
    RectSet K;
    K.level = n;
    K.rects.reserve(std::size_t(1) << n);
    const Rational w = pow2(-n);
    for (std::uint64_t k = 0; k < (std::uint64_t(1) << n); ++k) {
        FiniteWord word = FiniteWord::from_index(k, static_cast<unsigned>(n));
        Interval I = I_interval(word);
        Rational x_lo = Rational(static_cast<unsigned long>(k)) * w;
        K.rects.push_back({x_lo, x_lo + w, I.lo, I.hi});
    }
    return K;
}

RectSet apply_T(const RectSet& K) {
    RectSet out;
    out.level = K.level + 1;
    out.rects.reserve(K.rects.size() * 2);
    for (const DyadicRect& r : K.rects)  // T0: left half, y flipped
        out.rects.push_back({r.x_lo / 2, r.x_hi / 2, 1 - r.y_hi, 1 - r.y_lo});
    for (const DyadicRect& r : K.rects)  // T1: right half, y flipped and halved
        out.rects.push_back({(r.x_lo + 1) / 2, (r.x_hi + 1) / 2, (1 - r.y_hi) / 2, (1 - r.y_lo) / 2});
    return out;
}

Rational area(const RectSet& K) {
    Rational a = 0;
    for (const DyadicRect& r : K.rects) a += (r.x_hi - r.x_lo) * (r.y_hi - r.y_lo);
    return a;
}

Rational integral_staircase(int n) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("integral_staircase: level must be even");
    if (n > 24) throw std::invalid_argument("integral_staircase: level must be <= 24");
    // A_n = sum_k 2^{-n} * y_lo(k) with y_lo(k) = I(rho(word_k)) / 2^{|rho(word_k)|}.
    // Accumulate sum_k I_k * 2^{n - m_k} exactly and divide once by 2^{2n}.
    Int total = 0;
    for (std::uint64_t k = 0; k < (std::uint64_t(1) << n); ++k) {
        FiniteWord img = rho(FiniteWord::from_index(k, static_cast<unsigned>(n)));
        Int v = img.integer_value();
        mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(),
                     static_cast<mp_bitcnt_t>(n - img.size()));
        total += v;
    }
    Rational A = Rational(total) * pow2(-2L * n);
    A.canonicalize();
    return A;
}

Rational integral_closed_form(int n) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("integral_closed_form: level must be even");
    Rational q(9, 16);
    Rational pw = 1;
    for (int i = 0; i < n / 2; ++i) pw *= q;
    return Rational(3, 7) * (1 - pw);
}

Int box_count(int n) {
    if (n < 0 || n > 16) throw std::invalid_argument("box_count: level must be in [0,16]");
    // Each column k holds a stack of 2^{n - |rho(word_k)|} boxes of side 2^{-n}.
    Int total = 0;
    for (std::uint64_t k = 0; k < (std::uint64_t(1) << n); ++k) {
        const std::size_t ones = FiniteWord::from_index(k, static_cast<unsigned>(n)).ones_count();
        Int boxes = 1;
        mpz_mul_2exp(boxes.get_mpz_t(), boxes.get_mpz_t(),
                     static_cast<mp_bitcnt_t>(n - ones));
        total += boxes;
    }
    return total;
}

void export_rects_csv(const RectSet& K, std::ostream& os) {
    os << "level,k,x_lo,x_hi,y_lo,y_hi\n";
    for (std::size_t k = 0; k < K.rects.size(); ++k) {
        const DyadicRect& r = K.rects[k];
        os << K.level << ',' << k << ',' << dyadic_decimal_str(r.x_lo) << ','
           << dyadic_decimal_str(r.x_hi) << ',' << dyadic_decimal_str(r.y_lo) << ','
           << dyadic_decimal_str(r.y_hi) << '\n';
    }
}

void export_graph_csv(int level, std::ostream& os) {
    if (level < 0 || level > 24) throw std::invalid_argument("export_graph_csv: level in [0,24]");
    os << "x,y\n";
    const Rational w = pow2(-level);
    for (std::uint64_t k = 0; k < (std::uint64_t(1) << level); ++k) {
        FiniteWord word = FiniteWord::from_index(k, static_cast<unsigned>(level));
        Rational x = Rational(static_cast<unsigned long>(k)) * w;
        os << dyadic_decimal_str(x) << ',' << dyadic_decimal_str(I_interval(word).lo) << '\n';
    }
}

void export_integral_csv(int max_level, std::ostream& os) {
    os << "level,A\n";
    for (int n = 0; n <= max_level; n += 2)
        os << n << ',' << dyadic_decimal_str(integral_staircase(n)) << '\n';
}

}  // namespace rhomap
