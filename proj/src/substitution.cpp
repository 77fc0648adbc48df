#include "rhomap/substitution.hpp"

#include <algorithm>

namespace rhomap {

FiniteWord rho(const FiniteWord& w, Parity start) {
    FiniteWord out;
    // Position parity of digit i (1-based): odd positions map 1 -> 0 under rho.
    bool odd_pos = (start == Parity::even);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 1) out.push_back(odd_pos ? 0 : 1);
        odd_pos = !odd_pos;
    }
    return out;
}

std::variant<FiniteWord, EPWord> rho_ep_any(const EPWord& b, Parity start) {
    const FiniteWord& u = b.preperiod();
    const FiniteWord& p = b.period();
    const FiniteWord head = rho(u, start);
    if (b.eventually_zero()) return head;
    const Parity after_u = parity_of((start == Parity::odd ? 1 : 0) + u.size());
    const FiniteWord block0 = rho(p, after_u);
    if (p.size() % 2 == 0) return EPWord(head, block0);
    // Odd period: blocks alternate between the two parities.
    const FiniteWord block1 = rho(p, opposite(after_u));
    return EPWord(head, block0 + block1);
}

EPWord rho_ep(const EPWord& b, Parity start) {
    if (b.eventually_zero()) throw std::invalid_argument("rho_ep: input is eventually 0");
    return std::get<EPWord>(rho_ep_any(b, start));
}

LazyWord rho_lazy(const LazyWord& b, std::size_t scan_limit) {
    return LazyWord([b, scan_limit](std::string& cache, std::size_t need) {
        std::size_t src_len = std::max<std::size_t>(4 * need + 4, 64);
        for (;;) {
            FiniteWord src = b.prefix(src_len);
            if (src.ones_count() >= need) {
                cache = rho(src).str();
                return;
            }
            std::size_t last_one = src.str().find_last_of('1');
            std::size_t zero_run =
                (last_one == std::string::npos) ? src.size() : src.size() - last_one - 1;
            if (zero_run > scan_limit)
                throw NotInC("rho_lazy: " + std::to_string(zero_run) +
                             " zeros past the last 1; input not in C?");
            src_len *= 2;
        }
    });
}

std::vector<Parity> rho_chain_parities(const FiniteWord& v, int n) {
    std::vector<Parity> ps;
    ps.reserve(static_cast<std::size_t>(n));
    FiniteWord cur = v;
    for (int i = 0; i < n; ++i) {
        ps.push_back(parity_of(cur.size()));
        cur = rho(cur);
    }
    return ps;
}

FiniteWord rho_v_n(const FiniteWord& v, int n, const FiniteWord& w) {
    if (n < 1) throw std::invalid_argument("rho_v_n: n must be >= 1");
    FiniteWord cur = w;
    for (Parity p : rho_chain_parities(v, n)) cur = rho(cur, p);
    return cur;
}

std::variant<FiniteWord, EPWord> rho_v_n(const FiniteWord& v, int n, const EPWord& w) {
    if (n < 1) throw std::invalid_argument("rho_v_n: n must be >= 1");
    std::variant<FiniteWord, EPWord> cur = w;
    for (Parity p : rho_chain_parities(v, n)) {
        if (std::holds_alternative<FiniteWord>(cur))
            cur = rho(std::get<FiniteWord>(cur), p);
        else
            cur = rho_ep_any(std::get<EPWord>(cur), p);
    }
    return cur;
}

FiniteWord tau(const FiniteWord& w) {
    if (w.size() % 2 != 0) throw std::invalid_argument("tau: word length must be even");
    FiniteWord out;
    for (std::size_t i = 0; i < w.size(); i += 2) {
        const int a = w[i], b = w[i + 1];
        if (a == 0 && b == 1) out.push_back(1);
        else if (a == 1 && b == 0) out.push_back(0);
        else if (a == 1 && b == 1) { out.push_back(0); out.push_back(1); }
        // 00 -> empty
    }
    return out;
}

FiniteWord tau_bar(const FiniteWord& w) {
    FiniteWord out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) { out.push_back(1); out.push_back(0); }
        else           { out.push_back(0); out.push_back(1); }
    }
    return out;
}

FiniteWord sigma(const FiniteWord& w, int first_pred) {
    FiniteWord out;
    int pred = first_pred;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == pred) out.push_back(0);  // block 01
        out.push_back(1);
        pred = w[i];
    }
    return out;
}

LazyWord sigma_lazy(const LazyWord& b, int first_pred) {
    return LazyWord([b, first_pred](std::string& cache, std::size_t need) {
        std::size_t src_len = std::max<std::size_t>(need, 16);
        FiniteWord out = sigma(b.prefix(src_len), first_pred);
        while (out.size() < need) {
            src_len *= 2;
            out = sigma(b.prefix(src_len), first_pred);
        }
        cache = out.str();
    });
}

EPWord sigma_ep(const EPWord& b) {
    const FiniteWord& w = b.preperiod();
    const FiniteWord& p = b.period();
    const int w_last = w.empty() ? 1 : w.last();
    const int p_last = p.last();
    FiniteWord v = (w_last == p_last) ? sigma(w) : sigma(w + p);
    FiniteWord q = sigma(p, p_last);
    return EPWord(v, q);
}

int vanishing_order(const FiniteWord& w) {
    FiniteWord cur = rho(w);
    int k = 1;
    while (!cur.empty()) {
        cur = rho(cur);
        ++k;
    }
    return k;
}

FiniteWord canonical_preimage(const FiniteWord& w, Parity p) {
    return p == Parity::even ? sigma(w) : sigma(w.complement());
}

namespace {

// Preimages of w under the single map of parity p with length at most max_len.
// Every preimage of a non-empty w is <a>sigma_p(w) followed by j trailing
// zeros; the ones ending in 1 are exactly those with j = 0. Trailing zeros
// matter at intermediate levels of a composition, where they are erased by the
// next map but shift the parity structure below.
void one_level_preimages(const FiniteWord& w, Parity p, std::size_t max_len,
                         bool allow_trailing_zeros, std::vector<FiniteWord>& out) {
    if (w.empty()) return;  // rho(u) = empty forces u all zeros: cannot end in 1
    const FiniteWord base = canonical_preimage(w, p);
    if (base.size() > max_len) return;
    const std::size_t slots = w.size();
    const unsigned max_total = static_cast<unsigned>((max_len - base.size()) / 2);
    std::vector<unsigned> a(slots, 0);
    auto rec = [&](auto&& self, std::size_t slot, unsigned used) -> void {
        if (slot == slots) {
            FiniteWord u = insert_zero_pairs(NatSeqPrefix(std::vector<unsigned>(a)), base);
            out.push_back(u);
            if (allow_trailing_zeros)
                for (std::size_t j = 1; u.size() + j <= max_len; ++j)
                    out.push_back(u + FiniteWord::zeros(j));
            return;
        }
        for (unsigned g = 0; used + g <= max_total; ++g) {
            a[slot] = g;
            self(self, slot + 1, used + g);
        }
        a[slot] = 0;
    };
    rec(rec, 0, 0);
}

}  // namespace

std::vector<FiniteWord> preimages(const FiniteWord& w, const FiniteWord& v, int n,
                                  std::size_t max_len) {
    if (n < 1) throw std::invalid_argument("preimages: n must be >= 1");
    if (w.empty()) return {};
    const std::vector<Parity> chain = rho_chain_parities(v, n);
    // Invert map by map, outermost (applied last) first. Only the innermost
    // level, which produces u itself, is restricted to end in 1.
    std::vector<FiniteWord> targets{w};
    for (int level = n - 1; level >= 0; --level) {
        std::vector<FiniteWord> next;
        for (const FiniteWord& t : targets)
            one_level_preimages(t, chain[level], max_len, /*allow_trailing_zeros=*/level > 0,
                                next);
        targets = std::move(next);
        if (targets.empty()) return {};
    }
    std::sort(targets.begin(), targets.end(), [](const FiniteWord& a, const FiniteWord& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.str() < b.str();
    });
    return targets;
}

}  // namespace rhomap
