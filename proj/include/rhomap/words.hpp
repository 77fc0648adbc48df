// Binary words (finite, eventually periodic, lazy infinite) and their exact
// correspondence with rationals in [0,1] via binary expansions.
#ifndef RHOMAP_WORDS_HPP
#define RHOMAP_WORDS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace rhomap {

using Int = mpz_class;
using Rational = mpq_class;

// Thrown when a lazy materialization would exceed its configured budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a stream that must not be eventually 0 produces too long a run
// of zeros without a 1.
struct NotInC : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// FiniteWord: a finite binary word, possibly empty. Digits are stored as
// '0'/'1' chars so slicing, printing and factor hashing are free.
class FiniteWord {
public:
    FiniteWord() = default;
    explicit FiniteWord(std::string_view bits);

    static FiniteWord zeros(std::size_t n) { return raw(std::string(n, '0')); }
    static FiniteWord ones(std::size_t n) { return raw(std::string(n, '1')); }
    // n as an unsigned value written in `width` binary digits, MSB first.
    static FiniteWord from_index(std::uint64_t n, unsigned width);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int operator[](std::size_t i) const { return bits_[i] - '0'; }
    int last() const { return bits_.back() - '0'; }
    std::size_t ones_count() const;

    void push_back(int bit) { bits_.push_back(static_cast<char>('0' + bit)); }
    void append(const FiniteWord& w) { bits_ += w.bits_; }
    FiniteWord operator+(const FiniteWord& w) const;

    FiniteWord prefix(std::size_t n) const { return raw(bits_.substr(0, n)); }
    FiniteWord suffix_from(std::size_t pos) const { return raw(bits_.substr(pos)); }
    FiniteWord slice(std::size_t pos, std::size_t len) const { return raw(bits_.substr(pos, len)); }
    FiniteWord complement() const;
    FiniteWord repeat(std::size_t k) const;

    bool is_prefix_of(const FiniteWord& w) const {
        return size() <= w.size() && w.bits_.compare(0, size(), bits_) == 0;
    }
    // 1-based position of the k-th occurrence of 1, or npos if fewer than k.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t position_of_one(std::size_t k) const;

    // Value of the word read as the binary digits after the point: sum b_i/2^i.
    Rational dyadic_value() const;
    // Integer value of the word read MSB-first.
    Int integer_value() const;

    const std::string& str() const { return bits_; }
    std::string_view view() const { return bits_; }

    bool operator==(const FiniteWord&) const = default;
    auto operator<=>(const FiniteWord&) const = default;  // lexicographic, then length

private:
    static FiniteWord raw(std::string s) {
        FiniteWord w;
        w.bits_ = std::move(s);
        return w;
    }
    std::string bits_;
};

std::ostream& operator<<(std::ostream& os, const FiniteWord& w);

// ---------------------------------------------------------------------------
// EPWord: eventually periodic infinite word, canonical form (primitive period,
// shortest preperiod). Exactly the expansions of rationals.
class EPWord {
public:
    EPWord(FiniteWord preperiod, FiniteWord period);
    static EPWord periodic(const FiniteWord& p) { return EPWord(FiniteWord(), p); }

    const FiniteWord& preperiod() const { return pre_; }
    const FiniteWord& period() const { return per_; }

    bool eventually_zero() const { return per_.str() == "0"; }
    bool eventually_one() const { return per_.str() == "1"; }
    bool in_C() const { return !eventually_zero(); }

    int digit(std::size_t i) const;  // 0-based
    FiniteWord prefix(std::size_t n) const;
    // The word with its first `pos` digits dropped (still eventually periodic).
    EPWord suffix_from(std::size_t pos) const;
    std::size_t position_of_one(std::size_t k) const;  // 1-based position of k-th 1

    // Literal syntax: PREFIX(PERIOD), e.g. "0(1)", "(01)".
    std::string str() const;
    static EPWord parse(std::string_view s);

    bool operator==(const EPWord&) const = default;

private:
    FiniteWord pre_, per_;
};

std::ostream& operator<<(std::ostream& os, const EPWord& w);

// Idempotent: primitive period, shortest preperiod. Exposed for tests; the
// EPWord constructor applies it.
std::pair<FiniteWord, FiniteWord> canonicalize(const FiniteWord& preperiod,
                                               const FiniteWord& period);

// ---------------------------------------------------------------------------
// LazyWord: an infinite word materialized on demand. The generator must append
// digits to the cache until it holds at least `need` of them; it must be a
// deterministic function of its own state, so repeated queries agree. Cache
// access is serialized internally.
class LazyWord {
public:
    // Generator contract: extend(cache, need) appends digits ('0'/'1') until
    // cache.size() >= need, or throws BudgetExceeded / NotInC.
    using Generator = std::function<void(std::string& cache, std::size_t need)>;

    explicit LazyWord(Generator gen);
    static LazyWord from_ep(const EPWord& w);

    int digit(std::size_t i) const;  // 0-based
    FiniteWord prefix(std::size_t n) const;
    std::size_t materialized() const;

private:
    struct State {
        std::mutex mu;
        std::string cache;
        Generator gen;
    };
    std::shared_ptr<State> st_;
};

// ---------------------------------------------------------------------------
// NatSeqPrefix: finitely many listed entries of a sequence in ℕ^ω; unlisted
// entries are 0.
struct NatSeqPrefix {
    std::vector<unsigned> entries;

    NatSeqPrefix() = default;
    NatSeqPrefix(std::initializer_list<unsigned> e) : entries(e) {}
    explicit NatSeqPrefix(std::vector<unsigned> e) : entries(std::move(e)) {}
    std::size_t size() const { return entries.size(); }
    bool operator==(const NatSeqPrefix&) const = default;
};

// ---------------------------------------------------------------------------
// Expansion maps.

// xi: exact value of an eventually periodic expansion.
Rational xi(const EPWord& b);

// beta: the expansion in C (not eventually 0) of x in (0,1].
EPWord beta(const Rational& x);
// beta': the expansion in C' (not eventually 1) of x in [0,1).
EPWord beta_prime(const Rational& x);

// eta applied to a finite prefix: 0^{a1} 1 0^{a2} 1 ... 0^{am} 1.
FiniteWord eta_prefix(const NatSeqPrefix& a);

// <a>b: insert 0^{2 a_k} immediately before the k-th occurrence of 1.
FiniteWord insert_zero_pairs(const NatSeqPrefix& a, const FiniteWord& b);
EPWord insert_zero_pairs(const NatSeqPrefix& a, const EPWord& b);
LazyWord insert_zero_pairs(const NatSeqPrefix& a, const LazyWord& b);

// Closed dyadic interval.
struct Interval {
    Rational lo, hi;
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    Rational width() const { return hi - lo; }
};

// xi([w]) = [0.w per0, 0.w per1], of width 2^{-|w|}.
Interval cylinder_interval(const FiniteWord& w);

// Relative frequency of w among the n length-|w| subwords starting at
// positions 1..n. The source must supply n + |w| - 1 digits.
Rational freq(const FiniteWord& w, const FiniteWord& b, std::size_t n);
Rational freq(const FiniteWord& w, const EPWord& b, std::size_t n);
Rational freq(const FiniteWord& w, const LazyWord& b, std::size_t n);

// ---------------------------------------------------------------------------
// Rational helpers.

Rational pow2(long k);                   // 2^k, k may be negative
Rational parse_rational(std::string_view s);  // "p/q" or integer literal
bool is_dyadic(const Rational& x);
std::string rational_str(const Rational& x);
// Exact decimal expansion; only valid for dyadic rationals.
std::string dyadic_decimal_str(const Rational& x);

}  // namespace rhomap

#endif  // RHOMAP_WORDS_HPP
