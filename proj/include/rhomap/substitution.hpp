// The erasing substitution rho (0 -> empty, 1 -> 0/1 by position parity), its
// complementary rule, block forms tau / tau-bar, the section sigma, the
// parity-indexed compositions rho_v^n, vanishing orders and preimage search.
#ifndef RHOMAP_SUBSTITUTION_HPP
#define RHOMAP_SUBSTITUTION_HPP

#include <variant>
#include <vector>

#include "rhomap/words.hpp"

namespace rhomap {

enum class Parity { even, odd };

inline Parity parity_of(std::size_t n) { return n % 2 == 0 ? Parity::even : Parity::odd; }
inline Parity opposite(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

// rho with start = even; the complementary rule (tilde rho) with start = odd.
FiniteWord rho(const FiniteWord& w, Parity start = Parity::even);

// rho on an eventually periodic word in C. The image is eventually periodic;
// if it is eventually 0 it is returned as such. Throws on eventually-0 input.
EPWord rho_ep(const EPWord& b, Parity start = Parity::even);

// rho on any eventually periodic word: the image of an eventually-0 word is
// finite (the period contributes nothing).
std::variant<FiniteWord, EPWord> rho_ep_any(const EPWord& b, Parity start = Parity::even);

// rho on a lazy word guaranteed in C by its generator contract. If the input
// runs `scan_limit` digits past the last seen 1 without producing another,
// a NotInC diagnostic is raised.
LazyWord rho_lazy(const LazyWord& b, std::size_t scan_limit = 1u << 22);

// rho_v^n(w): the composition rho_{rho^{n-1}(v)} o ... o rho_{rho(v)} o rho_v.
FiniteWord rho_v_n(const FiniteWord& v, int n, const FiniteWord& w);
std::variant<FiniteWord, EPWord> rho_v_n(const FiniteWord& v, int n, const EPWord& w);

// Parities |rho^i(v)| mod 2 for i = 0..n-1, the maps making up rho_v^n.
std::vector<Parity> rho_chain_parities(const FiniteWord& v, int n);

// Block form: 00 -> empty, 01 -> 1, 10 -> 0, 11 -> 01. Requires even length.
FiniteWord tau(const FiniteWord& w);

// Right inverse of tau: 0 -> 10, 1 -> 01.
FiniteWord tau_bar(const FiniteWord& w);

// The section sigma: each digit maps to 1 when preceded by its complement and
// to 01 when preceded by itself; the first digit is treated as preceded by
// `first_pred`. first_pred = 0 realizes the sigma' variant.
FiniteWord sigma(const FiniteWord& w, int first_pred = 1);
LazyWord sigma_lazy(const LazyWord& b, int first_pred = 1);

// sigma on an eventually periodic word, computed block-wise: with b = w per(p)
// the image is v per(q), where v = sigma(w) or sigma(wp) according to whether
// the last digits of w and p agree, and q = sigma(p) with first_pred equal to
// the last digit of p.
EPWord sigma_ep(const EPWord& b);

// n_eps(w) = min{k > 0 : rho^k(w) = empty}; the empty word returns 1 by the
// degenerate convention rho^1(empty) = empty.
int vanishing_order(const FiniteWord& w);

// The canonical (shortest, all insertion slots zero) preimage of w ending in 1
// under the single map of the given parity: sigma(w) for even, sigma(~w) for odd.
FiniteWord canonical_preimage(const FiniteWord& w, Parity p);

// All u with |u| <= max_len, last digit 1 and rho_v_n(v, n, u) = w, in
// shortest-then-lexicographic order. The head is the canonical deterministic
// choice. Empty result if max_len is too small (or w = empty, which admits no
// preimage ending in 1).
std::vector<FiniteWord> preimages(const FiniteWord& w, const FiniteWord& v, int n,
                                  std::size_t max_len);

}  // namespace rhomap

#endif  // RHOMAP_SUBSTITUTION_HPP
