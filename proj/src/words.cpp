#include "rhomap/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <unordered_map>

namespace rhomap {

// ---------------------------------------------------------------------------
// FiniteWord

FiniteWord::FiniteWord(std::string_view bits) : bits_(bits) {
    for (char c : bits_)
        if (c != '0' && c != '1')
            throw std::invalid_argument("FiniteWord: digit not in {0,1}: '" +
                                        std::string(1, c) + "'");
}

FiniteWord FiniteWord::from_index(std::uint64_t n, unsigned width) {
    std::string s(width, '0');
    for (unsigned i = 0; i < width; ++i)
        if (n >> (width - 1 - i) & 1) s[i] = '1';
    return raw(std::move(s));
}

std::size_t FiniteWord::ones_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
}

FiniteWord FiniteWord::operator+(const FiniteWord& w) const {
    FiniteWord r = *this;
    r.append(w);
    return r;
}

FiniteWord FiniteWord::complement() const {
    FiniteWord r = *this;
    for (char& c : r.bits_) c = (c == '0') ? '1' : '0';
    return r;
}

FiniteWord FiniteWord::repeat(std::size_t k) const {
    std::string s;
    s.reserve(bits_.size() * k);
    for (std::size_t i = 0; i < k; ++i) s += bits_;
    return raw(std::move(s));
}

std::size_t FiniteWord::position_of_one(std::size_t k) const {
    std::size_t seen = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] == '1' && ++seen == k) return i + 1;
    return npos;
}

Rational FiniteWord::dyadic_value() const {
    Rational num(integer_value());
    Rational den(pow2(static_cast<long>(size())));
    return num / den;
}

Int FiniteWord::integer_value() const {
    Int v = 0;
    for (char c : bits_) {
        v <<= 1;
        if (c == '1') v += 1;
    }
    return v;
}

std::ostream& operator<<(std::ostream& os, const FiniteWord& w) {
    return os << (w.empty() ? "(empty)" : w.str());
}

// ---------------------------------------------------------------------------
// EPWord

namespace {

// Length of the shortest period of w (w itself if primitive), via the KMP
// failure function.
std::size_t primitive_period_length(const std::string& w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> fail(n + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i) {
        while (k > 0 && w[i] != w[k]) k = fail[k];
        if (w[i] == w[k]) ++k;
        fail[i + 1] = k;
    }
    const std::size_t p = n - fail[n];
    return (n % p == 0) ? p : n;
}

}  // namespace

std::pair<FiniteWord, FiniteWord> canonicalize(const FiniteWord& preperiod,
                                               const FiniteWord& period) {
    if (period.empty()) throw std::invalid_argument("EPWord: empty period");
    std::string pre = preperiod.str();
    std::string per = period.str();
    per.resize(primitive_period_length(per));
    // Absorb preperiod digits that match the rotated period end.
    while (!pre.empty() && pre.back() == per.back()) {
        pre.pop_back();
        per = per.back() + per.substr(0, per.size() - 1);
    }
    return {FiniteWord(pre), FiniteWord(per)};
}

EPWord::EPWord(FiniteWord preperiod, FiniteWord period) {
    auto [pre, per] = canonicalize(preperiod, period);
    pre_ = std::move(pre);
    per_ = std::move(per);
}

int EPWord::digit(std::size_t i) const {
    if (i < pre_.size()) return pre_[i];
    return per_[(i - pre_.size()) % per_.size()];
}

FiniteWord EPWord::prefix(std::size_t n) const {
    std::string s;
    s.reserve(n);
    s = pre_.str().substr(0, std::min(n, pre_.size()));
    while (s.size() < n) s += per_.str();
    s.resize(n);
    return FiniteWord(s);
}

EPWord EPWord::suffix_from(std::size_t pos) const {
    if (pos <= pre_.size()) return EPWord(pre_.suffix_from(pos), per_);
    const std::size_t r = (pos - pre_.size()) % per_.size();
    const std::string& p = per_.str();
    return EPWord(FiniteWord(), FiniteWord(p.substr(r) + p.substr(0, r)));
}

std::size_t EPWord::position_of_one(std::size_t k) const {
    std::size_t pos = pre_.position_of_one(k);
    if (pos != FiniteWord::npos) return pos;
    std::size_t seen = pre_.ones_count();
    const std::size_t per_ones = per_.ones_count();
    if (per_ones == 0)
        throw std::invalid_argument("EPWord::position_of_one: eventually 0 word has too few 1s");
    const std::size_t copies = (k - seen - 1) / per_ones;
    seen += copies * per_ones;
    std::size_t base = pre_.size() + copies * per_.size();
    for (std::size_t i = 0; i < per_.size(); ++i)
        if (per_[i] == 1 && ++seen == k) return base + i + 1;
    std::abort();  // unreachable: the k-th 1 lies in this period copy
}

std::string EPWord::str() const { return pre_.str() + "(" + per_.str() + ")"; }

EPWord EPWord::parse(std::string_view s) {
    const auto open = s.find('(');
    const auto close = s.find(')');
    if (open == std::string_view::npos || close != s.size() - 1 || close <= open + 1)
        throw std::invalid_argument("EPWord: expected PREFIX(PERIOD), got '" + std::string(s) + "'");
    return EPWord(FiniteWord(s.substr(0, open)),
                  FiniteWord(s.substr(open + 1, close - open - 1)));
}

std::ostream& operator<<(std::ostream& os, const EPWord& w) { return os << w.str(); }

// ---------------------------------------------------------------------------
// LazyWord

LazyWord::LazyWord(Generator gen) : st_(std::make_shared<State>()) {
    st_->gen = std::move(gen);
}

LazyWord LazyWord::from_ep(const EPWord& w) {
    return LazyWord([w](std::string& cache, std::size_t need) {
        const std::string& pre = w.preperiod().str();
        const std::string& per = w.period().str();
        if (cache.empty()) cache = pre;
        while (cache.size() < need) cache += per;
    });
}

int LazyWord::digit(std::size_t i) const {
    std::lock_guard<std::mutex> lock(st_->mu);
    if (st_->cache.size() <= i) st_->gen(st_->cache, i + 1);
    return st_->cache[i] - '0';
}

FiniteWord LazyWord::prefix(std::size_t n) const {
    std::lock_guard<std::mutex> lock(st_->mu);
    if (st_->cache.size() < n) st_->gen(st_->cache, n);
    return FiniteWord(std::string_view(st_->cache).substr(0, n));
}

std::size_t LazyWord::materialized() const {
    std::lock_guard<std::mutex> lock(st_->mu);
    return st_->cache.size();
}

// ---------------------------------------------------------------------------
// Expansion maps

Rational xi(const EPWord& b) {
    const FiniteWord& u = b.preperiod();
    const FiniteWord& p = b.period();
    // xi(u per(p)) = (I(u) + I(p)/(2^|p|-1)) / 2^|u|
    Rational per_val(p.integer_value(), Int(pow2(static_cast<long>(p.size())).get_num() - 1));
    per_val.canonicalize();
    Rational v = Rational(u.integer_value()) + per_val;
    v /= pow2(static_cast<long>(u.size())).get_num();
    v.canonicalize();
    return v;
}

namespace {

// Digits of p/q in binary by long division, stopping when the remainder
// repeats. Requires 0 <= p/q < 1.
EPWord expansion_by_division(const Rational& x) {
    const Int p = x.get_num(), q = x.get_den();
    std::string digits;
    std::unordered_map<std::string, std::size_t> seen;  // remainder -> digit index
    Int r = p;
    for (;;) {
        std::string key = r.get_str();
        auto [it, fresh] = seen.emplace(std::move(key), digits.size());
        if (!fresh) {
            const std::size_t start = it->second;
            return EPWord(FiniteWord(digits.substr(0, start)),
                          FiniteWord(digits.substr(start)));
        }
        r *= 2;
        if (r >= q) {
            digits += '1';
            r -= q;
        } else {
            digits += '0';
        }
    }
}

}  // namespace

EPWord beta(const Rational& x) {
    if (x <= 0 || x > 1) throw std::invalid_argument("beta: x must be in (0,1]");
    if (x == 1) return EPWord::periodic(FiniteWord("1"));
    EPWord e = expansion_by_division(x);
    if (!e.eventually_zero()) return e;
    // Dyadic: x = 0.x1..xk with xk = 1; the C-expansion is x1..x_{k-1} 0 per(1).
    FiniteWord fin = e.preperiod();  // canonical form ends with the last 1
    FiniteWord head = fin.prefix(fin.size() - 1);
    head.push_back(0);
    return EPWord(head, FiniteWord("1"));
}

EPWord beta_prime(const Rational& x) {
    if (x < 0 || x >= 1) throw std::invalid_argument("beta_prime: x must be in [0,1)");
    if (x == 0) return EPWord::periodic(FiniteWord("0"));
    EPWord e = expansion_by_division(x);
    // Long division of a non-dyadic never yields per(1); for dyadics it
    // terminates with per(0), which is exactly the C' form.
    return e;
}

FiniteWord eta_prefix(const NatSeqPrefix& a) {
    FiniteWord w;
    for (unsigned gap : a.entries) {
        w.append(FiniteWord::zeros(gap));
        w.push_back(1);
    }
    return w;
}

FiniteWord insert_zero_pairs(const NatSeqPrefix& a, const FiniteWord& b) {
    if (b.ones_count() < a.size())
        throw std::invalid_argument("insert_zero_pairs: word has fewer 1s than listed entries");
    FiniteWord out;
    std::size_t ones_seen = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] == 1 && ones_seen < a.size())
            out.append(FiniteWord::zeros(2 * a.entries[ones_seen++]));
        out.push_back(b[i]);
    }
    return out;
}

EPWord insert_zero_pairs(const NatSeqPrefix& a, const EPWord& b) {
    if (a.size() == 0) return b;
    if (!b.in_C())
        throw std::invalid_argument("insert_zero_pairs: infinite word must be in C");
    const std::size_t cut = b.position_of_one(a.size());  // through the m-th 1
    FiniteWord head = insert_zero_pairs(a, b.prefix(cut));
    EPWord tail = b.suffix_from(cut);
    return EPWord(head + tail.preperiod(), tail.period());
}

LazyWord insert_zero_pairs(const NatSeqPrefix& a, const LazyWord& b) {
    return LazyWord([a, b](std::string& cache, std::size_t need) {
        // State is recomputed from scratch; extensions are monotone since the
        // transformed prefix only grows with the source prefix.
        std::size_t src_len = std::max<std::size_t>(need, 16);
        for (;;) {
            FiniteWord src = b.prefix(src_len);
            FiniteWord out;
            std::size_t ones_seen = 0;
            for (std::size_t i = 0; i < src.size(); ++i) {
                if (src[i] == 1 && ones_seen < a.size())
                    out.append(FiniteWord::zeros(2 * a.entries[ones_seen++]));
                out.push_back(src[i]);
            }
            if (out.size() >= need) {
                cache = out.str();
                return;
            }
            src_len *= 2;
        }
    });
}

Interval cylinder_interval(const FiniteWord& w) {
    Rational lo = w.dyadic_value();
    return {lo, lo + pow2(-static_cast<long>(w.size()))};
}

namespace {

Rational freq_on_prefix(const FiniteWord& w, const FiniteWord& prefix, std::size_t n) {
    if (prefix.size() < n + w.size() - 1)
        throw std::invalid_argument("freq: source provides too few digits");
    std::size_t count = 0;
    std::string_view hay = prefix.view();
    std::string_view needle = w.view();
    for (std::size_t i = 0; i < n; ++i)
        if (hay.substr(i, needle.size()) == needle) ++count;
    Rational r(static_cast<unsigned long>(count), static_cast<unsigned long>(n));
    r.canonicalize();
    return r;
}

}  // namespace

Rational freq(const FiniteWord& w, const FiniteWord& b, std::size_t n) {
    if (w.empty() || n == 0) throw std::invalid_argument("freq: empty factor or n = 0");
    return freq_on_prefix(w, b, n);
}

Rational freq(const FiniteWord& w, const EPWord& b, std::size_t n) {
    if (w.empty() || n == 0) throw std::invalid_argument("freq: empty factor or n = 0");
    return freq_on_prefix(w, b.prefix(n + w.size() - 1), n);
}

Rational freq(const FiniteWord& w, const LazyWord& b, std::size_t n) {
    if (w.empty() || n == 0) throw std::invalid_argument("freq: empty factor or n = 0");
    return freq_on_prefix(w, b.prefix(n + w.size() - 1), n);
}

// ---------------------------------------------------------------------------
// Rational helpers

Rational pow2(long k) {
    Int num = 1, den = 1;
    if (k >= 0)
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    else
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
    return Rational(num, den);
}

Rational parse_rational(std::string_view s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            Rational r(std::string(s), 10);
            r.canonicalize();
            return r;
        }
        Rational r(Int(std::string(s.substr(0, slash)), 10),
                   Int(std::string(s.substr(slash + 1)), 10));
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational literal: '" + std::string(s) + "'");
    }
}

bool is_dyadic(const Rational& x) {
    Int den = x.get_den();
    return mpz_scan1(den.get_mpz_t(), 0) == mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
}

std::string rational_str(const Rational& x) {
    Rational r = x;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string dyadic_decimal_str(const Rational& x) {
    if (!is_dyadic(x)) throw std::invalid_argument("dyadic_decimal_str: not dyadic");
    if (x.get_den() == 1) return x.get_num().get_str();
    const auto k = mpz_sizeinbase(x.get_den().get_mpz_t(), 2) - 1;  // den = 2^k
    Int five;
    mpz_ui_pow_ui(five.get_mpz_t(), 5, static_cast<unsigned long>(k));
    Int scaled = x.get_num() * five;  // x = scaled / 10^k
    std::string digits = scaled.get_str();
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    if (digits.size() <= k) digits.insert(0, k - digits.size() + 1, '0');
    digits.insert(digits.size() - k, ".");
    return sign + digits;
}

}  // namespace rhomap
