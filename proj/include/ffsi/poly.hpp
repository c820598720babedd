/*
   Copyright 2026 the ffsi authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFSI_POLY_HPP
#define FFSI_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "ffsi/errors.hpp"
#include "ffsi/gf.hpp"
#include "ffsi/rational.hpp"

namespace ffsi {

// Dense univariate polynomial over a field level. Coefficients are stored
// low degree first with trailing zeros stripped; the zero polynomial has an
// empty coefficient vector and degree -1.
template <class F>
struct Poly {
    std::vector<typename F::Elem> c;

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    bool operator==(const Poly&) const = default;
};

template <class F>
Poly<F> poly_zero(const F&) {
    return {};
}

template <class F>
Poly<F> poly_const(const F& K, typename F::Elem a) {
    Poly<F> f{{std::move(a)}};
    detail::pv_trim(K, f.c);
    return f;
}

template <class F>
Poly<F> poly_x(const F& K) {
    return {{K.zero(), K.one()}};
}

// f from coefficients low degree first (trailing zeros allowed)
template <class F>
Poly<F> poly_from_coeffs(const F& K, std::vector<typename F::Elem> cs) {
    Poly<F> f{std::move(cs)};
    detail::pv_trim(K, f.c);
    return f;
}

template <class F>
bool is_monic(const F& K, const Poly<F>& f) {
    return !f.is_zero() && K.eq(f.c.back(), K.one());
}

template <class F>
Poly<F> poly_add(const F& K, const Poly<F>& a, const Poly<F>& b) {
    return {detail::pv_add(K, a.c, b.c)};
}

template <class F>
Poly<F> poly_sub(const F& K, const Poly<F>& a, const Poly<F>& b) {
    return {detail::pv_sub(K, a.c, b.c)};
}

template <class F>
Poly<F> poly_mul(const F& K, const Poly<F>& a, const Poly<F>& b) {
    return {detail::pv_mul(K, a.c, b.c)};
}

template <class F>
Poly<F> poly_scale(const F& K, const Poly<F>& a, const typename F::Elem& s) {
    Poly<F> r = a;
    for (auto& x : r.c) x = K.mul(x, s);
    detail::pv_trim(K, r.c);
    return r;
}

template <class F>
std::pair<Poly<F>, Poly<F>> poly_divrem(const F& K, const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw DivisionByZero();
    auto [q, r] = detail::pv_divrem(K, a.c, b.c);
    return {Poly<F>{std::move(q)}, Poly<F>{std::move(r)}};
}

template <class F>
Poly<F> poly_mod(const F& K, Poly<F> a, const Poly<F>& b) {
    if (b.is_zero()) throw DivisionByZero();
    detail::pv_mod_inplace(K, a.c, b.c);
    return a;
}

// monic gcd; gcd(0, 0) = 0
template <class F>
Poly<F> poly_gcd(const F& K, const Poly<F>& a, const Poly<F>& b) {
    return {detail::pv_gcd(K, a.c, b.c)};
}

template <class F>
Poly<F> poly_derivative(const F& K, const Poly<F>& f) {
    if (f.deg() < 1) return {};
    std::int64_t p = K.characteristic();
    std::vector<typename F::Elem> d(f.c.size() - 1, K.zero());
    for (std::size_t i = 1; i < f.c.size(); ++i) {
        std::int64_t m = static_cast<std::int64_t>(i % p);
        auto term = f.c[i];
        auto acc = K.zero();
        for (std::int64_t j = 0; j < m; ++j) acc = K.add(acc, term);
        d[i - 1] = acc;
    }
    Poly<F> r{std::move(d)};
    detail::pv_trim(K, r.c);
    return r;
}

template <class F>
typename F::Elem poly_eval(const F& K, const Poly<F>& f, const typename F::Elem& x) {
    auto acc = K.zero();
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = K.add(K.mul(acc, x), *it);
    return acc;
}

template <class F>
Poly<F> poly_make_monic(const F& K, Poly<F> f) {
    if (f.is_zero()) return f;
    auto li = K.inv(f.c.back());
    for (auto& x : f.c) x = K.mul(x, li);
    return f;
}

template <class F>
Poly<F> poly_powmod(const F& K, Poly<F> base, Int e, const Poly<F>& mod) {
    Poly<F> acc = poly_const(K, K.one());
    base = poly_mod(K, std::move(base), mod);
    while (e > 0) {
        if (bit_test(e, 0)) acc = poly_mod(K, poly_mul(K, acc, base), mod);
        base = poly_mod(K, poly_mul(K, base, base), mod);
        e >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Enumeration of M_n(F_q)

// Monic degree-n polynomial number `idx` in [0, q^n), canonical order:
// idx = sum_i index(c_i) * q^i, so the low coefficient varies fastest and an
// interval (fixed coefficients above degree h) is a contiguous index block.
template <class F>
Poly<F> monic_from_index(const F& K, int n, Int idx) {
    std::vector<typename F::Elem> cs(n + 1, K.zero());
    cs[n] = K.one();
    Int radix = K.size();
    for (int i = 0; i < n; ++i) {
        cs[i] = K.from_index(static_cast<std::uint64_t>(idx % radix));
        idx /= radix;
    }
    return Poly<F>{std::move(cs)};
}

template <class F>
Int monic_to_index(const F& K, const Poly<F>& f) {
    Int idx = 0;
    Int radix = K.size();
    for (int i = f.deg() - 1; i >= 0; --i) idx = idx * radix + K.index(f.c[i]);
    return idx;
}

template <class F>
std::vector<Poly<F>> enumerate_monic(const F& K, int n, Int budget = Int(50000000)) {
    Int total = ipow(K.size(), static_cast<unsigned>(n));
    if (total > budget) throw BudgetExceeded("q^n exceeds enumeration budget");
    std::vector<Poly<F>> out;
    out.reserve(static_cast<std::size_t>(total));
    for (Int i = 0; i < total; ++i) out.push_back(monic_from_index(K, n, i));
    return out;
}

// ---------------------------------------------------------------------------
// Factorization: squarefree + distinct-degree + equal-degree pipeline

template <class F>
struct Factorization {
    typename F::Elem unit;
    std::vector<std::pair<Poly<F>, int>> factors;  // (monic irreducible, multiplicity)
};

using FactorizationType = std::vector<std::pair<int, int>>;  // sorted (degree, multiplicity)

namespace detail {

template <class F>
std::vector<std::uint64_t> poly_sort_key(const F& K, const Poly<F>& f) {
    std::vector<std::uint64_t> key;
    key.reserve(f.c.size());
    for (auto& c : f.c) key.push_back(K.index(c));
    return key;
}

// ordering: by degree, then coefficient-lexicographic (canonical index)
template <class F>
void sort_factors(const F& K, std::vector<std::pair<Poly<F>, int>>& fs) {
    std::sort(fs.begin(), fs.end(), [&](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        auto ka = poly_sort_key(K, a.first), kb = poly_sort_key(K, b.first);
        return std::lexicographical_compare(ka.rbegin(), ka.rend(), kb.rbegin(), kb.rend());
    });
}

// p-th root of f, assuming f = g(x^p): coefficient a -> a^{|F|/p}
template <class F>
Poly<F> poly_pth_root(const F& K, const Poly<F>& f) {
    std::int64_t p = K.characteristic();
    Int e = K.size() / p;
    std::vector<typename F::Elem> cs;
    for (std::size_t i = 0; i < f.c.size(); i += static_cast<std::size_t>(p)) {
        auto a = f.c[i];
        // a^{|F|/p} inverts x -> x^p on F
        auto acc = K.one();
        auto b = a;
        Int ee = e;
        while (ee > 0) {
            if (bit_test(ee, 0)) acc = K.mul(acc, b);
            b = K.mul(b, b);
            ee >>= 1;
        }
        cs.push_back(acc);
    }
    Poly<F> r{std::move(cs)};
    pv_trim(K, r.c);
    return r;
}

// f monic; appends (squarefree part, multiplicity) pieces with mult scaled
// by `scale`. Handles f' = 0 via p-th-root extraction.
template <class F>
void squarefree_decompose(const F& K, Poly<F> f, int scale,
                          std::vector<std::pair<Poly<F>, int>>& out) {
    if (f.deg() < 1) return;
    Poly<F> fd = poly_derivative(K, f);
    if (fd.is_zero()) {
        squarefree_decompose(K, poly_pth_root(K, f), scale * static_cast<int>(K.characteristic()), out);
        return;
    }
    Poly<F> g = poly_gcd(K, f, fd);
    Poly<F> w = poly_divrem(K, f, g).first;
    int i = 1;
    while (w.deg() > 0) {
        Poly<F> y = poly_gcd(K, w, g);
        Poly<F> z = poly_divrem(K, w, y).first;
        if (z.deg() > 0) out.emplace_back(z, i * scale);
        w = std::move(y);
        g = poly_divrem(K, g, w).first;
        ++i;
    }
    if (g.deg() > 0) squarefree_decompose(K, poly_pth_root(K, g), scale * static_cast<int>(K.characteristic()), out);
}

// Distinct-degree factorization of a monic squarefree f: (product of all
// irreducible factors of degree k, k) pieces.
template <class F>
std::vector<std::pair<Poly<F>, int>> distinct_degree(const F& K, Poly<F> f) {
    std::vector<std::pair<Poly<F>, int>> out;
    Int q = K.size();
    Poly<F> x = poly_x(K);
    Poly<F> h = poly_powmod(K, x, q, f);
    int k = 1;
    while (f.deg() >= 2 * k) {
        Poly<F> g = poly_gcd(K, poly_sub(K, h, x), f);
        if (g.deg() > 0) {
            out.emplace_back(g, k);
            f = poly_divrem(K, f, g).first;
            h = poly_mod(K, std::move(h), f);
        }
        ++k;
        if (f.deg() < 2 * k) break;
        h = poly_powmod(K, h, q, f);
    }
    if (f.deg() > 0) out.emplace_back(f, f.deg());
    return out;
}

// Split monic g, a product of distinct irreducibles all of degree k, into
// those irreducibles (Cantor-Zassenhaus; trace-map variant in char 2).
template <class F, class Rng>
void equal_degree_split(const F& K, const Poly<F>& g, int k, Rng& rng,
                        std::vector<Poly<F>>& out) {
    if (g.deg() == k) {
        out.push_back(g);
        return;
    }
    Int q = K.size();
    for (;;) {
        // random monic-ish poly of degree < deg g
        std::vector<typename F::Elem> cs(g.deg(), K.zero());
        for (auto& c : cs) c = K.random(rng);
        Poly<F> a = poly_from_coeffs(K, std::move(cs));
        if (a.deg() < 1) continue;
        Poly<F> t;
        if (K.characteristic() == 2) {
            // trace map: sum_{i<log2(q^k)} a^{2^i} mod g
            unsigned bits = static_cast<unsigned>(msb(q) ) * static_cast<unsigned>(k);
            // q = 2^m exactly, so msb(q) = m
            Poly<F> term = poly_mod(K, a, g);
            t = term;
            for (unsigned i = 1; i < bits; ++i) {
                term = poly_mod(K, poly_mul(K, term, term), g);
                t = poly_add(K, t, term);
            }
        } else {
            Int e = (ipow(q, static_cast<unsigned>(k)) - 1) / 2;
            Poly<F> b = poly_powmod(K, a, e, g);
            t = poly_sub(K, b, poly_const(K, K.one()));
        }
        Poly<F> d = poly_gcd(K, t, g);
        if (d.deg() > 0 && d.deg() < g.deg()) {
            equal_degree_split(K, d, k, rng, out);
            equal_degree_split(K, poly_divrem(K, g, d).first, k, rng, out);
            return;
        }
    }
}

}  // namespace detail

// Complete factorization into monic irreducibles. Deterministic in value;
// the seed only drives internal equal-degree splitting choices.
template <class F>
Factorization<F> factor(const F& K, const Poly<F>& f, std::uint64_t rng_seed = 0) {
    if (f.is_zero()) throw ZeroPolynomial();
    Factorization<F> out;
    out.unit = f.c.back();
    Poly<F> g = poly_make_monic(K, f);
    if (g.deg() == 0) return out;

    std::vector<std::pair<Poly<F>, int>> sqfree;
    detail::squarefree_decompose(K, std::move(g), 1, sqfree);

    std::mt19937_64 rng(rng_seed);
    for (auto& [part, mult] : sqfree) {
        for (auto& [prod, k] : detail::distinct_degree(K, part)) {
            std::vector<Poly<F>> irr;
            detail::equal_degree_split(K, prod, k, rng, irr);
            for (auto& p : irr) out.factors.emplace_back(std::move(p), mult);
        }
    }
    detail::sort_factors(K, out.factors);
    return out;
}

// Multiset of (degree, multiplicity), one entry per distinct irreducible
// factor. Avoids equal-degree splitting: distinct-degree counts suffice.
template <class F>
FactorizationType factorization_type(const F& K, const Poly<F>& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.deg() == 0) return {};
    Poly<F> g = poly_make_monic(K, f);
    std::vector<std::pair<Poly<F>, int>> sqfree;
    detail::squarefree_decompose(K, std::move(g), 1, sqfree);
    FactorizationType type;
    for (auto& [part, mult] : sqfree) {
        for (auto& [prod, k] : detail::distinct_degree(K, part)) {
            int count = prod.deg() / k;
            for (int i = 0; i < count; ++i) type.emplace_back(k, mult);
        }
    }
    std::sort(type.begin(), type.end());
    return type;
}

// Reassemble unit * prod factors^mult (test helper, also used by oracles).
template <class F>
Poly<F> factorization_product(const F& K, const Factorization<F>& fa) {
    Poly<F> acc = poly_const(K, fa.unit);
    for (auto& [p, m] : fa.factors)
        for (int i = 0; i < m; ++i) acc = poly_mul(K, acc, p);
    return acc;
}

// ---------------------------------------------------------------------------
// Roots in the top level of the tower

inline Poly<TopField> lift_poly(const FieldTower& t, const Poly<BaseField>& f) {
    Poly<TopField> g;
    g.c.reserve(f.c.size());
    for (auto& c : f.c) g.c.push_back(t.top.embed(c));
    return g;
}

// All roots of f in F_{q^d} with multiplicities. Requires every irreducible
// factor degree to divide d. Sum of multiplicities = deg f; the root set is
// closed under the q-power Frobenius.
inline std::vector<std::pair<TopElem, int>> roots_with_multiplicity(
    const FieldTower& t, const Poly<BaseField>& f, std::uint64_t rng_seed = 0) {
    auto fa = factor(t.base, f, rng_seed);
    std::vector<std::pair<TopElem, int>> roots;
    std::mt19937_64 rng(rng_seed ^ 0x9e3779b97f4a7c15ull);
    for (auto& [P, mult] : fa.factors) {
        int e = P.deg();
        if (t.d % e != 0)
            throw ExtensionTooSmall("factor of degree " + std::to_string(e) +
                                    " does not split in F_{q^" + std::to_string(t.d) + "}");
        Poly<TopField> Pt = lift_poly(t, P);
        if (e == 1) {
            roots.emplace_back(t.top.neg(Pt.c[0]), mult);
            continue;
        }
        // P splits into linears over the top level; extract them.
        std::vector<Poly<TopField>> linears;
        detail::equal_degree_split(t.top, Pt, 1, rng, linears);
        for (auto& l : linears) roots.emplace_back(t.top.neg(l.c[0]), mult);
    }
    return roots;
}

// ---------------------------------------------------------------------------

inline int lcm_of_factor_degrees(const FactorizationType& type) {
    long long l = 1;
    for (auto& [d, m] : type) l = std::lcm(l, static_cast<long long>(d));
    return static_cast<int>(l);
}

}  // namespace ffsi

#endif  // FFSI_POLY_HPP
