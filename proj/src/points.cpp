#include "rhomap/points.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace rhomap {

namespace {

// Append up to `want` digits of (pattern repeated count times), resuming at
// digit offset `emitted`. Patterns are "1" blocks or "01" pairs.
void emit_block(std::string& cache, const std::string& pattern, const Int& count,
                Int& emitted, std::size_t want) {
    const Int total = count * static_cast<long>(pattern.size());
    while (emitted < total && want > 0) {
        const std::size_t at = static_cast<std::size_t>(
            mpz_fdiv_ui(emitted.get_mpz_t(), static_cast<unsigned long>(pattern.size())));
        cache += pattern[at];
        ++emitted;
        --want;
    }
}

std::size_t lazy_position_of_one(const LazyWord& b, std::size_t k, std::size_t cap = 1 << 24) {
    for (std::size_t len = 64; len <= cap; len *= 2) {
        std::size_t pos = b.prefix(len).position_of_one(k);
        if (pos != FiniteWord::npos) return pos;
    }
    throw BudgetExceeded("lazy_position_of_one: no " + std::to_string(k) +
                         "-th 1 within scan cap");
}

}  // namespace

LazyWord b0_stream() {
    auto h = std::make_shared<unsigned>(0);
    return LazyWord([h](std::string& cache, std::size_t need) {
        if (cache.empty()) cache = "00101";
        while (cache.size() < need) {
            const std::size_t run = std::size_t(3) << *h;
            cache.append(run, '1');
            for (std::size_t i = 0; i < run; ++i) cache += "01";
            ++*h;
        }
    });
}

LazyWord complete_fixed(const FiniteWord& w) {
    if (w.empty()) throw std::invalid_argument("complete_fixed: empty word");
    const FiniteWord image = rho(w);
    if (!image.is_prefix_of(w))
        throw std::invalid_argument("complete_fixed: rho(" + w.str() + ") = " + image.str() +
                                    " is not a prefix of the word");
    struct State {
        FiniteWord v;
        std::size_t total;
    };
    auto st = std::make_shared<State>(State{w.suffix_from(image.size()), w.size()});
    return LazyWord([w, st](std::string& cache, std::size_t need) {
        if (cache.empty()) cache = w.str();
        while (cache.size() < need) {
            st->v = (st->total % 2 == 0) ? sigma(st->v) : sigma(st->v.complement());
            cache += st->v.str();
            st->total += st->v.size();
        }
    });
}

LazyWord phi_fixed_point(const NatSeqPrefix& a) {
    LazyWord b = b0_stream();
    for (std::size_t n = 1; n <= a.size(); ++n) {
        const std::size_t k = lazy_position_of_one(b, n);
        FiniteWord w = b.prefix(k - 1) + FiniteWord::zeros(2 * a.entries[n - 1]);
        w.push_back(1);
        b = complete_fixed(w);
    }
    return b;
}

NatSeqPrefix psi(const LazyWord& b, std::size_t n_entries, std::size_t check_digits) {
    FiniteWord prefix = b.prefix(check_digits);
    FiniteWord image = rho(prefix);
    if (!(image.prefix(image.size()) == b.prefix(image.size())))
        throw std::invalid_argument("psi: materialized prefix is not rho-fixed");
    std::vector<unsigned> entries;
    std::size_t prev = 0;  // position of the previous 1 (0 before the first)
    for (std::size_t n = 1; n <= n_entries; ++n) {
        const std::size_t pos = lazy_position_of_one(b, n);
        const std::size_t run = pos - prev - 1;
        if (n == 1) {
            if (run < 2 || run % 2 != 0)
                throw std::invalid_argument("psi: leading zero run not of the fixed-point form");
            entries.push_back(static_cast<unsigned>(run / 2 - 1));
        } else {
            entries.push_back(static_cast<unsigned>(run / 2));
        }
        prev = pos;
    }
    return NatSeqPrefix(entries);
}

LazyWord x_ell_stream(int ell, std::size_t budget) {
    if (ell < 1) throw std::invalid_argument("x_ell_stream: ell must be >= 1");
    struct State {
        long h = 0;
        int blk = -1;  // -1 = leading (01)^{2^{ell-1}} block
        Int emitted = 0;
    };
    auto st = std::make_shared<State>();
    return LazyWord([ell, budget, st](std::string& cache, std::size_t need) {
        if (need > budget)
            throw BudgetExceeded("x_ell_stream: request beyond materialization budget");
        auto p2 = [](long e) {
            Int r;
            mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
            return r;
        };
        while (cache.size() < need) {
            Int count;
            std::string pattern;
            if (st->blk < 0) {
                pattern = "01";
                count = p2(ell - 1);
            } else {
                const long a = (2 * ell + 1) * st->h + ell;  // low exponent
                const long b = (2 * ell + 1) * st->h + 2 * ell;
                switch (st->blk) {
                    case 0: pattern = "1";  count = p2(a); break;
                    case 1: pattern = "01"; count = p2(a - 1); break;
                    case 2: pattern = "1";  count = (p2(ell) - 1) * p2(a); break;
                    case 3: pattern = "01"; count = p2(b); break;
                    case 4: pattern = "1";  count = p2(b); break;
                    default: pattern = "01"; count = (p2(ell) - 1) * p2(b); break;
                }
            }
            emit_block(cache, pattern, count, st->emitted, need - cache.size());
            if (st->emitted == count * static_cast<long>(pattern.size())) {
                st->emitted = 0;
                if (++st->blk == 6) {
                    st->blk = 0;
                    ++st->h;
                }
            }
        }
    });
}

LazyWord thue_morse(int start) {
    return LazyWord([start](std::string& cache, std::size_t need) {
        while (cache.size() < need) {
            const std::size_t i = cache.size();
            const int bit = __builtin_parityll(static_cast<unsigned long long>(i)) ^ start;
            cache += static_cast<char>('0' + bit);
        }
    });
}

// ---------------------------------------------------------------------------
// Schedule machinery

namespace {

// Canonical element of (rho^k_u)^{-1}(target): the backward sigma chain.
FiniteWord canonical_stage_word(const FiniteWord& target, const std::vector<Parity>& parities) {
    FiniteWord t = target;
    for (auto it = parities.rbegin(); it != parities.rend(); ++it)
        t = canonical_preimage(t, *it);
    return t;
}

FiniteWord choose_stage_word(const FiniteWord& target, const FiniteWord& u, long steps,
                             long choice_index, std::size_t budget) {
    const std::vector<Parity> parities = rho_chain_parities(u, static_cast<int>(steps));
    FiniteWord canonical = canonical_stage_word(target, parities);
    if (choice_index == 0) return canonical;
    std::size_t max_len = canonical.size() + 2 * static_cast<std::size_t>(choice_index) + 2;
    for (;;) {
        if (max_len > budget)
            throw BudgetExceeded("stage preimage search exceeded the budget");
        std::vector<FiniteWord> all = preimages(target, u, static_cast<int>(steps), max_len);
        if (all.size() > static_cast<std::size_t>(choice_index))
            return all[static_cast<std::size_t>(choice_index)];
        max_len *= 2;
    }
}

void validate_schedule(const ScheduleSpec& s) {
    if (s.targets.empty()) throw std::invalid_argument("schedule: no targets");
    if (s.targets.size() != s.times.size())
        throw std::invalid_argument("schedule: targets and times differ in length");
    if (s.times[0] != 0) throw std::invalid_argument("schedule: k_0 must be 0");
    for (std::size_t i = 0; i < s.targets.size(); ++i) {
        if (s.targets[i].empty()) throw std::invalid_argument("schedule: empty target word");
        if (i > 0 && s.times[i] < s.times[i - 1] + vanishing_order(s.targets[i - 1]))
            throw std::invalid_argument("schedule: time gap below the vanishing order of stage " +
                                        std::to_string(i - 1));
    }
}

}  // namespace

LazyWord schedule_point(const ScheduleSpec& s) {
    validate_schedule(s);
    struct State {
        std::size_t stage = 1;  // next stage to materialize
    };
    auto st = std::make_shared<State>();
    return LazyWord([s, st](std::string& cache, std::size_t need) {
        if (need > s.budget) throw BudgetExceeded("schedule_point: request beyond budget");
        if (cache.empty()) cache = s.targets[0].str();
        while (cache.size() < need && st->stage < s.targets.size()) {
            FiniteWord u(cache);
            FiniteWord v = choose_stage_word(s.targets[st->stage], u, s.times[st->stage],
                                             s.choice_index, s.budget);
            cache += v.str();
            ++st->stage;
        }
        while (cache.size() < need) cache += '1';  // tail in C after the last stage
    });
}

LazyWord periodic_point(const FiniteWord& w, const std::vector<long>& choice,
                        std::size_t budget) {
    if (w.empty()) throw std::invalid_argument("periodic_point: empty word");
    const long n = vanishing_order(w);
    struct State {
        std::size_t stage = 0;
        FiniteWord prev;  // w_{stage}
    };
    auto st = std::make_shared<State>();
    return LazyWord([w, n, choice, budget, st](std::string& cache, std::size_t need) {
        if (need > budget) throw BudgetExceeded("periodic_point: request beyond budget");
        if (cache.empty()) {
            cache = w.str();
            st->prev = w;
        }
        while (cache.size() < need) {
            const long pick = choice.empty() ? 0 : choice[st->stage % choice.size()];
            FiniteWord u(cache);
            FiniteWord next = choose_stage_word(st->prev, u, n, pick, budget);
            cache += next.str();
            st->prev = next;
            ++st->stage;
        }
    });
}

// ---------------------------------------------------------------------------
// Scrambled families

std::vector<long> expansion_sequence(int n) {
    std::vector<long> e;
    long sum = 0;
    for (int i = 1; i <= n; ++i) {
        e.push_back(i == 1 ? 1 : static_cast<long>(i) * i * sum);
        sum += e.back();
    }
    return e;
}

std::vector<int> mu_alpha(const FiniteWord& source_bits, int depth) {
    std::vector<int> alpha(static_cast<std::size_t>(depth), 0);
    for (int n = 2; n <= depth; ++n) {
        // n = p^k for prime p?
        int m = n, p = 0;
        for (int d = 2; d * d <= m; ++d)
            if (m % d == 0) { p = d; break; }
        if (p == 0) p = m;
        int k = 0;
        while (m % p == 0) { m /= p; ++k; }
        if (m != 1) continue;  // not a prime power
        if (static_cast<std::size_t>(k) <= source_bits.size())
            alpha[static_cast<std::size_t>(n - 1)] = source_bits[static_cast<std::size_t>(k - 1)];
    }
    return alpha;
}

namespace {

// sigma^times of `w`, keeping only the first `len` digits of each intermediate
// (valid since sigma is prefix-determined and never contracts).
FiniteWord iterate_sigma_prefix(FiniteWord w, long times, std::size_t len) {
    for (long i = 0; i < times; ++i) {
        w = sigma(w);
        if (w.size() > len) w = w.prefix(len);
    }
    return w;
}

// Full u_n; only valid for stage <= 2 (beyond that the words are astronomical).
FiniteWord scrambled_u_full(int stage) {
    FiniteWord u("001");
    std::vector<long> e = expansion_sequence(stage);
    for (int s = 2; s <= stage; ++s)
        u = FiniteWord("00") + iterate_sigma_prefix(u, 2 * e[static_cast<std::size_t>(s - 1)],
                                                    std::size_t(-1));
    return u;
}

}  // namespace

FiniteWord scrambled_target_prefix(int stage, int alpha, std::size_t len) {
    if (stage < 1) throw std::invalid_argument("scrambled_target_prefix: stage >= 1");
    std::vector<long> e = expansion_sequence(stage);
    if (alpha == 0) {
        if (stage == 1) return FiniteWord("1").prefix(len);
        // v_n = 1^{2^{e_2 + ... + e_n}}
        long exp = 0;
        for (int s = 2; s <= stage; ++s) exp += e[static_cast<std::size_t>(s - 1)];
        if (exp < 60 && (std::size_t(1) << exp) <= len) return FiniteWord::ones(std::size_t(1) << exp);
        return FiniteWord::ones(len);
    }
    if (stage <= 2) return scrambled_u_full(stage).prefix(len);
    FiniteWord u = scrambled_target_prefix(stage - 1, 1, len);
    return (FiniteWord("00") +
            iterate_sigma_prefix(u, 2 * e[static_cast<std::size_t>(stage - 1)], len))
        .prefix(len);
}

long scrambled_target_vanishing(int stage) {
    long total = 0;
    for (long ei : expansion_sequence(stage)) total += 2 * ei;
    return total;
}

ScrambledFamily scrambled_family(const ScrambledParams& p) {
    if (p.depth < 1 || p.depth > 4)
        throw std::invalid_argument("scrambled_family: depth must be in [1,4]");
    if (p.w0.empty()) throw std::invalid_argument("scrambled_family: empty w0");
    ScrambledFamily fam;
    fam.params = p;
    long k = vanishing_order(p.w0);
    for (int n = 1; n <= p.depth; ++n) {
        fam.checkpoints.push_back(k);
        k += scrambled_target_vanishing(n);
    }
    for (const FiniteWord& src : p.alpha_sources) {
        const int full_stages = std::min(p.depth, 2);
        const int depth = p.depth;
        const FiniteWord w0 = p.w0;
        const std::vector<long> ks = fam.checkpoints;
        const std::vector<int> alpha = mu_alpha(src, p.depth);
        struct State {
            int stage = 1;
            bool open = false;                  // stage 3 reached: prefix-only mode
            std::vector<Parity> open_parities;  // chain for the open stage
            std::size_t open_emitted = 0;
            std::size_t fixed_len = 0;
        };
        auto st = std::make_shared<State>();
        LazyWord stream([=](std::string& cache, std::size_t need) {
            if (cache.empty()) {
                cache = w0.str();
                st->fixed_len = cache.size();
            }
            while (cache.size() < need) {
                if (!st->open && st->stage <= full_stages) {
                    FiniteWord target = scrambled_target_prefix(
                        st->stage, alpha[static_cast<std::size_t>(st->stage - 1)],
                        std::size_t(-1));
                    FiniteWord u(cache);
                    FiniteWord v = canonical_stage_word(
                        target, rho_chain_parities(
                                    u, static_cast<int>(ks[static_cast<std::size_t>(st->stage - 1)])));
                    cache += v.str();
                    st->fixed_len = cache.size();
                    ++st->stage;
                    continue;
                }
                if (!st->open && st->stage <= depth) {
                    // Enter the prefix-only stage: its word is never exhausted.
                    st->open = true;
                    st->open_parities = rho_chain_parities(
                        FiniteWord(cache),
                        static_cast<int>(ks[static_cast<std::size_t>(st->stage - 1)]));
                    continue;
                }
                if (st->open) {
                    std::size_t want = std::max<std::size_t>(need - st->fixed_len, 64);
                    FiniteWord target = scrambled_target_prefix(
                        st->stage, alpha[static_cast<std::size_t>(st->stage - 1)], want);
                    FiniteWord v = canonical_stage_word(target, st->open_parities);
                    cache.resize(st->fixed_len);
                    cache += v.str();
                    if (cache.size() < need)
                        throw BudgetExceeded("scrambled stream: open stage under-produced");
                    continue;
                }
                cache += '1';  // depth <= 2: tail after the last stage
            }
        });
        fam.members.push_back(ScrambledMember{src, alpha, std::move(stream)});
    }
    return fam;
}

// ---------------------------------------------------------------------------
// DC1 statistics

DC1Stats dc1_statistics(const LazyWord& x, const LazyWord& y, int horizon,
                        const Rational& delta, std::size_t prefix_len) {
    DC1Stats out;
    FiniteWord wx = x.prefix(prefix_len);
    FiniteWord wy = y.prefix(prefix_len);
    long close = 0, decided = 0;
    for (int k = 0; k <= horizon; ++k) {
        Closeness tick = Closeness::undecided;
        if (!wx.empty() && !wy.empty()) {
            Interval ix = cylinder_interval(wx);
            Interval iy = cylinder_interval(wy);
            Rational max_diff = std::max(ix.hi, iy.hi) - std::min(ix.lo, iy.lo);
            Rational min_diff = std::max(ix.lo, iy.lo) - std::min(ix.hi, iy.hi);
            if (min_diff < 0) min_diff = 0;
            if (max_diff < delta) tick = Closeness::close;
            else if (min_diff >= delta) tick = Closeness::far;
        }
        out.ticks.push_back(tick);
        if (tick == Closeness::undecided) ++out.undecided;
        else {
            ++decided;
            if (tick == Closeness::close) ++close;
        }
        Rational excl = decided > 0 ? Rational(Int(close), Int(decided)) : Rational(0);
        excl.canonicalize();
        Rational incl(Int(close), Int(k + 1));
        incl.canonicalize();
        out.prop_close_excl.push_back(excl);
        out.prop_close_incl.push_back(incl);
        wx = rho(wx);
        wy = rho(wy);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Separated sets

SeparatedSet separated_set(int k, int n) {
    if (k < 1 || n < 1 || k * (n + 1) > 12)
        throw std::invalid_argument("separated_set: need k, n >= 1 and k(n+1) <= 12");
    SeparatedSet S;
    S.k = k;
    S.n = n;
    S.ell = 2 * static_cast<long>(std::floor(std::log2(k))) + 2;
    for (int i = 0; i <= n; ++i) S.times.push_back(i * S.ell);
    const std::uint64_t words = std::uint64_t(1) << k;
    std::uint64_t total = 1;
    for (int i = 0; i <= n; ++i) total *= words;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<FiniteWord> tuple;
        std::uint64_t rem = idx;
        for (int i = 0; i <= n; ++i) {
            std::uint64_t q = 1;
            for (int j = i + 1; j <= n; ++j) q *= words;
            tuple.push_back(FiniteWord::from_index(rem / q, static_cast<unsigned>(k)));
            rem %= q;
        }
        ScheduleSpec spec;
        for (const FiniteWord& w : tuple) spec.targets.push_back(w + FiniteWord("0"));
        spec.times = S.times;
        S.tuples.push_back(std::move(tuple));
        S.points.push_back(schedule_point(spec));
    }
    return S;
}

Rational separation_lower_bound(const SeparatedSet& S, std::size_t a, std::size_t b) {
    Rational best = 0;
    for (int i = 0; i <= S.n; ++i) {
        const FiniteWord& wa = S.tuples[a][static_cast<std::size_t>(i)];
        const FiniteWord& wb = S.tuples[b][static_cast<std::size_t>(i)];
        if (wa == wb) continue;
        Interval ia = cylinder_interval(wa + FiniteWord("0"));
        Interval ib = cylinder_interval(wb + FiniteWord("0"));
        Rational gap = std::max(ia.lo, ib.lo) - std::min(ia.hi, ib.hi);
        if (gap > best) best = gap;
    }
    return best;
}

Rational min_cylinder_gap(int k) {
    if (k < 1 || k > 16) throw std::invalid_argument("min_cylinder_gap: k in [1,16]");
    // [u0] for u with integer value a is [2a, 2a+1] / 2^{k+1}; the gap between
    // two of them is (2|b-a| - 1)/2^{k+1}.
    std::uint64_t best = std::uint64_t(-1);
    const std::uint64_t words = std::uint64_t(1) << k;
    for (std::uint64_t a = 0; a < words; ++a)
        for (std::uint64_t b = a + 1; b < words; ++b) best = std::min(best, 2 * (b - a) - 1);
    return Rational(static_cast<unsigned long>(best)) * pow2(-(k + 1));
}

bool verify_member_checkpoints(const SeparatedSet& S, std::size_t idx, std::size_t budget) {
    for (std::size_t len = 4096;; len *= 4) {
        if (len > budget)
            throw BudgetExceeded("verify_member_checkpoints: prefix budget exhausted");
        FiniteWord cur = S.points[idx].prefix(len);
        bool enough = true, ok = true;
        long step = 0;
        for (int i = 0; i <= S.n && ok; ++i) {
            while (step < S.times[static_cast<std::size_t>(i)]) {
                cur = rho(cur);
                ++step;
            }
            const FiniteWord want = S.tuples[idx][static_cast<std::size_t>(i)] + FiniteWord("0");
            if (cur.size() < want.size()) {
                enough = false;
                break;
            }
            ok = want.is_prefix_of(cur);
        }
        if (enough) return ok;
    }
}

// ---------------------------------------------------------------------------

std::size_t subword_complexity(const LazyWord& b, std::size_t n, std::size_t prefix_len) {
    if (n == 0 || prefix_len < n)
        throw std::invalid_argument("subword_complexity: need prefix_len >= n >= 1");
    const FiniteWord prefix = b.prefix(prefix_len);
    std::string_view s = prefix.view();
    std::unordered_set<std::string_view> factors;
    for (std::size_t i = 0; i + n <= s.size(); ++i) factors.insert(s.substr(i, n));
    return factors.size();
}

}  // namespace rhomap
