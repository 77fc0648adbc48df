// Distinguished infinite words and point families: the fixed point b0 and the
// parametrization phi of Fix rho, completions, simplest odd-period points,
// the Thue-Morse 2-cycle, target-hitting schedule points, periodic points,
// DC1 scrambled families, separated sets and subword complexity.
#ifndef RHOMAP_POINTS_HPP
#define RHOMAP_POINTS_HPP

#include "rhomap/real_map.hpp"

namespace rhomap {

// b0 = 00101 prod_h 1^{3 2^h} (01)^{3 2^h}, the largest fixed point of rho.
LazyWord b0_stream();

// The unique completion b^w = w b with b in S and b^w fixed under rho.
// Requires rho(w) to be a prefix of w.
LazyWord complete_fixed(const FiniteWord& w);

// phi: A -> Fix rho. Stage n inserts 0^{2 a_n} before the n-th 1 and
// re-completes; the null sequence gives b0.
LazyWord phi_fixed_point(const NatSeqPrefix& a);

// psi: Fix rho -> A, inverse of phi. Counts the 0-pairs immediately before
// the n-th 1 (the forced leading pair of every fixed word is not counted).
// Spot-checks rho-fixedness of the materialized prefix first.
NatSeqPrefix psi(const LazyWord& b, std::size_t n_entries, std::size_t check_digits = 4096);

// The simplest periodic point of odd period 2 ell + 1.
LazyWord x_ell_stream(int ell, std::size_t budget = std::size_t(1) << 24);

// Thue-Morse word starting with the given digit; (u, ~u) is a rho 2-cycle.
LazyWord thue_morse(int start = 0);

// ---------------------------------------------------------------------------
// Target-hitting constructions (Lemma-style schedules).

struct ScheduleSpec {
    std::vector<FiniteWord> targets;  // w_0 (starting cylinder), w_1, w_2, ...
    std::vector<long> times;          // k_0 = 0, k_n >= k_{n-1} + n_eps(w_{n-1})
    long choice_index = 0;            // 0 = canonical head of the preimage order
    std::size_t budget = std::size_t(1) << 27;  // total materialization cap
};

// b in [w_0] with rho^{k_n}(b) in [w_n] for every scheduled n; the tail after
// the last stage is per(1). Stage words are the choice_index-th element of the
// shortest-then-lex preimage order.
LazyWord schedule_point(const ScheduleSpec& s);

// rho^{n_eps(w)}-fixed word in [w]: stage k maps back onto stage k-1.
// choice[i] picks the preimage for stage i+1 (cyclically; empty = canonical).
LazyWord periodic_point(const FiniteWord& w, const std::vector<long>& choice = {},
                        std::size_t budget = std::size_t(1) << 27);

// ---------------------------------------------------------------------------
// DC1 scrambled families (prime-power index spreading, doubly exponential
// stage words).

// e_1 = 1, e_n = n^2 (e_1 + ... + e_{n-1}): 1, 4, 45, 800, ...
std::vector<long> expansion_sequence(int n);

// mu(b)_n = b_k if n = p^k with p prime, else 0; entries for n = 1..depth.
std::vector<int> mu_alpha(const FiniteWord& source_bits, int depth);

// Stage targets: v_n = sigma^{2 e_n}(v_{n-1}) from v_1 = 1 (equal to a block
// of 1s), u_n = 00 sigma^{2 e_n}(u_{n-1}) from u_1 = 001. Only a prefix is
// materializable from stage 3 on.
FiniteWord scrambled_target_prefix(int stage, int alpha, std::size_t len);
// n_eps of either stage word: 2(e_1 + ... + e_n).
long scrambled_target_vanishing(int stage);

struct ScrambledParams {
    std::vector<FiniteWord> alpha_sources;  // one member per source b
    FiniteWord w0 = FiniteWord("0");
    int depth = 3;  // stages with checkpoints; at most 4
};

struct ScrambledMember {
    FiniteWord source;       // b with alpha = mu(b)
    std::vector<int> alpha;  // alpha_1..alpha_depth
    LazyWord stream;
};

struct ScrambledFamily {
    ScrambledParams params;
    std::vector<long> checkpoints;  // k_1..k_depth, shared by all members
    std::vector<ScrambledMember> members;
};

ScrambledFamily scrambled_family(const ScrambledParams& p);

// ---------------------------------------------------------------------------
// Closeness statistics along orbits, from guaranteed prefixes only.

enum class Closeness { close, far, undecided };

struct DC1Stats {
    std::vector<Closeness> ticks;          // k = 0..horizon
    std::vector<Rational> prop_close_excl; // running share of close, undecided excluded
    std::vector<Rational> prop_close_incl; // running share of close over all ticks
    long undecided = 0;
};

DC1Stats dc1_statistics(const LazyWord& x, const LazyWord& y, int horizon,
                        const Rational& delta, std::size_t prefix_len = 1 << 18);

// ---------------------------------------------------------------------------
// (n, eps)-separated sets S_{k,n}: one point per tuple in ({0,1}^k)^{n+1},
// hitting cylinder [w_i 0] at time i * ell, ell = 2 floor(log2 k) + 2.

struct SeparatedSet {
    int k = 0, n = 0;
    long ell = 0;
    std::vector<std::vector<FiniteWord>> tuples;
    std::vector<LazyWord> points;
    std::vector<long> times;  // 0, ell, ..., n*ell
};

SeparatedSet separated_set(int k, int n);  // requires k(n+1) <= 12

// Certified lower bound on the checkpoint-sampled orbit distance
// max_i |R^{i ell}(x_a) - R^{i ell}(x_b)|, from cylinder gaps alone.
Rational separation_lower_bound(const SeparatedSet& S, std::size_t a, std::size_t b);

// Exhaustive minimum gap between distinct cylinders [u 0], u in {0,1}^k.
Rational min_cylinder_gap(int k);

// Materialize one member and check rho^{i ell}(prefix) starts with w_i 0.
bool verify_member_checkpoints(const SeparatedSet& S, std::size_t idx,
                               std::size_t budget = std::size_t(1) << 27);

// ---------------------------------------------------------------------------
// Number of distinct length-n factors of the first prefix_len digits
// (a lower bound for the true complexity p(n, .)).
std::size_t subword_complexity(const LazyWord& b, std::size_t n, std::size_t prefix_len);

}  // namespace rhomap

#endif  // RHOMAP_POINTS_HPP
