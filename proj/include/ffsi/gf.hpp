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

#ifndef FFSI_GF_HPP
#define FFSI_GF_HPP

#include <cstdint>
#include <vector>

#include "ffsi/errors.hpp"
#include "ffsi/rational.hpp"

namespace ffsi {

// Exact arithmetic in a two-level tower F_p < F_q = F_{p^r} < F_{q^d}.
//
// A field type F provides:
//   using Elem;            value-semantic element
//   Elem zero/one() const; add/sub/mul/neg/inv, is_zero, eq
//   Int  size() const;     cardinality
//   std::uint64_t index(const Elem&) const;       canonical position
//   Elem from_index(std::uint64_t) const;         inverse of index
// Elements are canonical; equality is representation equality.
// Canonical index convention throughout: low-degree coefficient is the
// least significant digit, so F_4 enumerates as 0, 1, t, t+1.

struct PrimeField {
    std::int64_t p;

    using Elem = std::int64_t;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const {
        Elem s = a - b;
        return s < 0 ? s + p : s;
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((__int128)a * b % p); }
    Elem inv(Elem a) const {
        if (a == 0) throw DivisionByZero();
        // extended euclid
        std::int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            std::int64_t quo = r / nr;
            std::int64_t tmp = t - quo * nt;
            t = nt;
            nt = tmp;
            tmp = r - quo * nr;
            r = nr;
            nr = tmp;
        }
        return t < 0 ? t + p : t;
    }
    Elem from_int(std::int64_t v) const {
        v %= p;
        return v < 0 ? v + p : v;
    }
    std::int64_t characteristic() const { return p; }
    template <class Rng>
    Elem random(Rng& rng) const {
        return static_cast<Elem>(rng() % static_cast<std::uint64_t>(p));
    }
    Int size() const { return Int(p); }
    std::uint64_t index(Elem a) const { return static_cast<std::uint64_t>(a); }
    Elem from_index(std::uint64_t i) const { return static_cast<Elem>(i); }
};

namespace detail {

// Coefficient-vector polynomial helpers used for extension-field moduli.
// Vectors are low degree first; trimmed means no trailing zeros.

template <class F>
using Coeffs = std::vector<typename F::Elem>;

template <class F>
void pv_trim(const F& K, Coeffs<F>& a) {
    while (!a.empty() && K.is_zero(a.back())) a.pop_back();
}

template <class F>
Coeffs<F> pv_mul(const F& K, const Coeffs<F>& a, const Coeffs<F>& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs<F> c(a.size() + b.size() - 1, K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (K.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = K.add(c[i + j], K.mul(a[i], b[j]));
    }
    pv_trim(K, c);
    return c;
}

template <class F>
Coeffs<F> pv_add(const F& K, const Coeffs<F>& a, const Coeffs<F>& b) {
    Coeffs<F> c(std::max(a.size(), b.size()), K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = K.add(c[i], b[i]);
    pv_trim(K, c);
    return c;
}

template <class F>
Coeffs<F> pv_sub(const F& K, const Coeffs<F>& a, const Coeffs<F>& b) {
    Coeffs<F> c(std::max(a.size(), b.size()), K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = K.sub(c[i], b[i]);
    pv_trim(K, c);
    return c;
}

// in-place remainder of a modulo trimmed nonzero b
template <class F>
void pv_mod_inplace(const F& K, Coeffs<F>& a, const Coeffs<F>& b) {
    if (b.empty()) throw DivisionByZero();
    auto lead_inv = K.inv(b.back());
    while (a.size() >= b.size()) {
        auto c = K.mul(a.back(), lead_inv);
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[off + i] = K.sub(a[off + i], K.mul(c, b[i]));
        pv_trim(K, a);
        if (a.empty()) break;
    }
}

template <class F>
std::pair<Coeffs<F>, Coeffs<F>> pv_divrem(const F& K, Coeffs<F> a, const Coeffs<F>& b) {
    if (b.empty()) throw DivisionByZero();
    if (a.size() < b.size()) return {Coeffs<F>{}, std::move(a)};
    Coeffs<F> q(a.size() - b.size() + 1, K.zero());
    auto lead_inv = K.inv(b.back());
    while (a.size() >= b.size()) {
        auto c = K.mul(a.back(), lead_inv);
        std::size_t off = a.size() - b.size();
        q[off] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[off + i] = K.sub(a[off + i], K.mul(c, b[i]));
        pv_trim(K, a);
        if (a.empty()) break;
    }
    pv_trim(K, q);
    return {std::move(q), std::move(a)};
}

template <class F>
Coeffs<F> pv_mulmod(const F& K, const Coeffs<F>& a, const Coeffs<F>& b, const Coeffs<F>& mod) {
    auto c = pv_mul(K, a, b);
    pv_mod_inplace(K, c, mod);
    return c;
}

// monic gcd
template <class F>
Coeffs<F> pv_gcd(const F& K, Coeffs<F> a, Coeffs<F> b) {
    while (!b.empty()) {
        pv_mod_inplace(K, a, b);
        std::swap(a, b);
    }
    if (!a.empty()) {
        auto li = K.inv(a.back());
        for (auto& c : a) c = K.mul(c, li);
    }
    return a;
}

// inverse of a modulo mod (mod irreducible, a nonzero mod mod)
template <class F>
Coeffs<F> pv_invmod(const F& K, const Coeffs<F>& a, const Coeffs<F>& mod) {
    Coeffs<F> r0 = mod, r1 = a, s0{}, s1{K.one()};
    pv_trim(K, r1);
    if (r1.empty()) throw DivisionByZero();
    while (!r1.empty()) {
        auto [q, r2] = pv_divrem(K, r0, r1);
        auto s2 = pv_sub(K, s0, pv_mul(K, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd, a constant since mod is irreducible
    auto li = K.inv(r0.back());
    for (auto& c : s0) c = K.mul(c, li);
    pv_mod_inplace(K, s0, mod);
    return s0;
}

}  // namespace detail

// Extension of F by a monic irreducible modulus. Elements are coefficient
// vectors of fixed length deg(modulus), low degree first.
template <class F>
struct ExtField {
    F subfield;
    std::vector<typename F::Elem> modulus;  // monic, length deg+1

    using SubElem = typename F::Elem;
    using Elem = std::vector<SubElem>;

    int degree() const { return static_cast<int>(modulus.size()) - 1; }

    Elem zero() const { return Elem(degree(), subfield.zero()); }
    Elem one() const {
        Elem e = zero();
        e[0] = subfield.one();
        return e;
    }
    Elem embed(const SubElem& a) const {
        Elem e = zero();
        e[0] = a;
        return e;
    }
    bool is_zero(const Elem& a) const {
        for (auto& c : a)
            if (!subfield.is_zero(c)) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        for (int i = 0; i < degree(); ++i)
            if (!subfield.eq(a[i], b[i])) return false;
        return true;
    }
    Elem add(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        Elem c(degree());
        for (int i = 0; i < degree(); ++i) c[i] = subfield.add(a[i], b[i]);
        return c;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        Elem c(degree());
        for (int i = 0; i < degree(); ++i) c[i] = subfield.sub(a[i], b[i]);
        return c;
    }
    Elem neg(const Elem& a) const {
        check(a);
        Elem c(degree());
        for (int i = 0; i < degree(); ++i) c[i] = subfield.neg(a[i]);
        return c;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        auto prod = detail::pv_mul(subfield, a, b);
        detail::pv_mod_inplace(subfield, prod, modulus);
        return pad(std::move(prod));
    }
    Elem inv(const Elem& a) const {
        check(a);
        if (is_zero(a)) throw DivisionByZero();
        auto v = a;
        detail::pv_trim(subfield, v);
        return pad(detail::pv_invmod(subfield, v, modulus));
    }
    Elem pow(Elem base, Int e) const {
        Elem acc = one();
        while (e > 0) {
            if (bit_test(e, 0)) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
    Int size() const { return ipow(subfield.size(), static_cast<unsigned>(degree())); }
    std::int64_t characteristic() const { return subfield.characteristic(); }
    template <class Rng>
    Elem random(Rng& rng) const {
        Elem e(degree());
        for (auto& c : e) c = subfield.random(rng);
        return e;
    }

    std::uint64_t index(const Elem& a) const {
        check(a);
        std::uint64_t radix = static_cast<std::uint64_t>(subfield.size());
        std::uint64_t idx = 0;
        for (int i = degree() - 1; i >= 0; --i) idx = idx * radix + subfield.index(a[i]);
        return idx;
    }
    Elem from_index(std::uint64_t i) const {
        std::uint64_t radix = static_cast<std::uint64_t>(subfield.size());
        Elem e(degree());
        for (int k = 0; k < degree(); ++k) {
            e[k] = subfield.from_index(i % radix);
            i /= radix;
        }
        return e;
    }

private:
    void check(const Elem& a) const {
        if (static_cast<int>(a.size()) != degree())
            throw LevelMismatch("element length does not match extension degree");
    }
    Elem pad(std::vector<SubElem> v) const {
        v.resize(degree(), subfield.zero());
        return v;
    }
};

using BaseField = ExtField<PrimeField>;       // F_q = F_{p^r}
using TopField = ExtField<BaseField>;         // F_{q^d}
using BaseElem = BaseField::Elem;
using TopElem = TopField::Elem;

namespace detail {

inline bool is_prime64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Irreducibility over F for a monic polynomial of degree k >= 1:
// x^{|F|^k} = x mod f, and gcd(x^{|F|^{k/l}} - x, f) = 1 for primes l | k.
template <class F>
bool pv_is_irreducible(const F& K, const Coeffs<F>& f) {
    int k = static_cast<int>(f.size()) - 1;
    if (k < 1) return false;
    Int q = K.size();
    Coeffs<F> x{K.zero(), K.one()};
    if (k == 1) return true;

    auto frob_step = [&](Coeffs<F> g) {
        // g -> g^{|F|} mod f
        Coeffs<F> acc{K.one()};
        Int e = q;
        Coeffs<F> b = std::move(g);
        while (e > 0) {
            if (bit_test(e, 0)) acc = pv_mulmod(K, acc, b, f);
            b = pv_mulmod(K, b, b, f);
            e >>= 1;
        }
        return acc;
    };

    std::vector<Coeffs<F>> powers(k + 1);  // powers[j] = x^{|F|^j} mod f
    powers[0] = x;
    for (int j = 1; j <= k; ++j) powers[j] = frob_step(powers[j - 1]);

    if (!pv_sub(K, powers[k], x).empty()) return false;
    int kk = k;
    for (int l = 2; l <= kk; ++l) {
        if (kk % l) continue;
        while (kk % l == 0) kk /= l;
        auto diff = pv_sub(K, powers[k / l], x);
        auto g = pv_gcd(K, f, diff);
        if (static_cast<int>(g.size()) - 1 != 0) return false;
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree k over F, where
// candidates are ordered by the canonical index of their coefficient vector
// (low-degree coefficient = least significant digit).
template <class F>
Coeffs<F> smallest_irreducible(const F& K, int k) {
    if (k == 1) {
        // x itself
        return Coeffs<F>{K.zero(), K.one()};
    }
    Int total = ipow(K.size(), static_cast<unsigned>(k));
    for (Int idx = 0; idx < total; ++idx) {
        Coeffs<F> f(k + 1, K.zero());
        f[k] = K.one();
        Int rest = idx;
        std::uint64_t radix = static_cast<std::uint64_t>(K.size());
        for (int i = 0; i < k; ++i) {
            f[i] = K.from_index(static_cast<std::uint64_t>(rest % radix));
            rest /= radix;
        }
        if (pv_is_irreducible(K, f)) return f;
    }
    throw Error("no irreducible polynomial found (unreachable)");
}

}  // namespace detail

// Two-level tower. Immutable after construction; all element operations on
// the contained fields are pure.
struct FieldTower {
    std::int64_t p = 0;
    int r = 0;
    int d = 0;
    PrimeField fp;
    BaseField base;  // F_q = F_p[t]/(modulus1)
    TopField top;    // F_{q^d} = F_q[u]/(modulus2)

    Int q() const { return ipow(Int(p), static_cast<unsigned>(r)); }
    std::int64_t q_i64() const { return static_cast<std::int64_t>(q()); }

    TopElem lift(const BaseElem& a) const { return top.embed(a); }

    // a -> a^q, the geometric Frobenius generating Gal(F_{q^d}/F_q)
    TopElem frobenius_q(const TopElem& a) const { return top.pow(a, q()); }
    BaseElem frobenius_q(const BaseElem& a) const { return a; }  // F_q is the fixed field
};

inline FieldTower build_tower(std::int64_t p, int r, int d) {
    if (!detail::is_prime64(p)) throw NotPrime(p);
    if (r < 1 || d < 1) throw InvalidConfig("extension degrees must be positive");
    FieldTower t;
    t.p = p;
    t.r = r;
    t.d = d;
    t.fp = PrimeField{p};
    t.base = BaseField{t.fp, detail::smallest_irreducible(t.fp, r)};
    t.top = TopField{t.base, detail::smallest_irreducible(t.base, d)};
    return t;
}

// All elements of a field level in canonical index order.
template <class F>
std::vector<typename F::Elem> enumerate_field(const F& K, Int budget = Int(100000)) {
    if (K.size() > budget) throw BudgetExceeded("field too large to enumerate");
    std::uint64_t n = static_cast<std::uint64_t>(K.size());
    std::vector<typename F::Elem> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(K.from_index(i));
    return out;
}

}  // namespace ffsi

#endif  // FFSI_GF_HPP
