// Copyright 2026 The ffsi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FFSI_ARITHFUN_HPP
#define FFSI_ARITHFUN_HPP

// Arithmetic functions on monic polynomials: Lambda, mu, the character
// functions X^lambda, and the von-Mangoldt-type family with per-class
// rational coefficients, evaluated through the tuple counts delta_sigma.

#include <map>
#include <utility>
#include <vector>

#include "ffsi/gf.hpp"
#include "ffsi/poly.hpp"
#include "ffsi/rational.hpp"
#include "ffsi/symgroup.hpp"

namespace ffsi {

// Lambda(f) = deg g if f = g^k with g irreducible, else 0.
template <class F>
int lambda_fn(const F& K, const Poly<F>& f) {
    auto type = factorization_type(K, f);
    return type.size() == 1 ? type[0].first : 0;
}

// mu(f) = (-1)^{#factors} on squarefree f, else 0.
template <class F>
int mu_fn(const F& K, const Poly<F>& f) {
    auto type = factorization_type(K, f);
    for (auto& [d, m] : type)
        if (m > 1) return 0;
    return type.size() % 2 == 0 ? 1 : -1;
}

// X^lambda(f): character of lambda at the factor-degree cycle type, zero on
// non-squarefree f.
template <class F>
long long x_lambda_fn(const F& K, const Partition& lambda, const Poly<F>& f) {
    if (f.deg() != partition_sum(lambda))
        throw SizeMismatch("x_lambda_fn: deg f != |lambda|");
    auto type = factorization_type(K, f);
    Partition tau;
    for (auto& [d, m] : type) {
        if (m > 1) return 0;
        tau.push_back(d);
    }
    std::sort(tau.begin(), tau.end(), std::greater<int>());
    return character(lambda, tau);
}

// ---------------------------------------------------------------------------
// delta_sigma tuple counts

namespace detail {

// Assign each cycle of sigma a Frobenius orbit (one per distinct factor,
// orbit size = factor degree, budget = multiplicity). A cycle of length l
// fits an orbit of size e iff e | l, consumes l/e budget units, and admits
// e starting roots. Budgets must be exhausted exactly.
inline Int delta_assign(const std::vector<int>& cycles, std::size_t i,
                        const FactorizationType& factors, std::vector<int>& budget) {
    if (i == cycles.size()) {
        for (int b : budget)
            if (b != 0) return 0;
        return 1;
    }
    int l = cycles[i];
    Int total = 0;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        auto [e, m] = factors[j];
        if (l % e != 0 || budget[j] < l / e) continue;
        budget[j] -= l / e;
        total += e * delta_assign(cycles, i + 1, factors, budget);
        budget[j] += l / e;
    }
    return total;
}

}  // namespace detail

// #{(z_1..z_n) : f = prod (x - z_i), Frob_q(z_j) = z_{sigma(j)}}, computed
// combinatorially from the factorization type and the cycle type of sigma.
inline Int delta_count_from_type(const FactorizationType& type, const Partition& sigma_type) {
    int n = 0;
    for (auto& [d, m] : type) n += d * m;
    if (n != partition_sum(sigma_type))
        throw SizeMismatch("delta_count: deg f != permutation size");
    std::vector<int> budget;
    budget.reserve(type.size());
    for (auto& [d, m] : type) budget.push_back(m);
    return detail::delta_assign(sigma_type, 0, type, budget);
}

template <class F>
Int delta_count(const F& K, const Poly<F>& f, const Permutation& sigma) {
    return delta_count_from_type(factorization_type(K, f), cycle_type(sigma));
}

// Brute-force verifier: enumerate all n-tuples over F_{q^d}, d = lcm of
// factor degrees, and test both conditions directly. Tiny instances only.
inline Int delta_count_oracle(const BaseField& Kq, const Poly<BaseField>& f,
                              const Permutation& sigma) {
    int n = f.deg();
    if (n != static_cast<int>(sigma.size()))
        throw SizeMismatch("delta_count_oracle: deg f != permutation size");
    int d = lcm_of_factor_degrees(factorization_type(Kq, f));
    FieldTower t = build_tower(Kq.characteristic(), Kq.degree(), d);
    Int Q = t.top.size();
    if (ipow(Q, static_cast<unsigned>(n)) > 1000000)
        throw BudgetExceeded("delta_count_oracle: q^{dn} > 10^6");
    Poly<TopField> target = lift_poly(t, f);
    std::int64_t Qi = static_cast<std::int64_t>(Q);
    std::vector<TopElem> elems(Qi);
    std::vector<std::int64_t> frob(Qi);
    for (std::int64_t i = 0; i < Qi; ++i) {
        elems[i] = t.top.from_index(i);
        frob[i] = static_cast<std::int64_t>(t.top.index(t.frobenius_q(elems[i])));
    }
    Int count = 0;
    std::vector<std::int64_t> z(n, 0);
    while (true) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (frob[z[i]] != z[sigma[i]]) ok = false;
        if (ok) {
            Poly<TopField> prod = poly_const(t.top, t.top.one());
            for (int i = 0; i < n; ++i) {
                Poly<TopField> lin =
                    poly_from_coeffs(t.top, {t.top.neg(elems[z[i]]), t.top.one()});
                prod = poly_mul(t.top, prod, lin);
            }
            if (prod == target) count += 1;
        }
        int pos = 0;
        while (pos < n && ++z[pos] == Qi) z[pos++] = 0;
        if (pos == n) break;
    }
    return count;
}

// D_C(f) for every class C of S_n.
template <class F>
std::map<Partition, Int> delta_profile(const F& K, const Poly<F>& f) {
    auto type = factorization_type(K, f);
    std::map<Partition, Int> out;
    for (auto& C : partitions(f.deg())) out[C] = delta_count_from_type(type, C);
    return out;
}

// ---------------------------------------------------------------------------
// Von-Mangoldt-type functions

// The coefficient family (c_sigma) collapsed to one exact rational per class:
// the tuple sums are conjugation-invariant, so only w_C = sum over the class
// matters.
struct VonMangoldtType {
    int n = 0;
    std::map<Partition, Rat> weights;
};

template <class F>
Rat evaluate_vmt(const F& K, const VonMangoldtType& phi, const Poly<F>& f) {
    if (f.deg() != phi.n) throw SizeMismatch("evaluate_vmt: deg f != phi.n");
    auto type = factorization_type(K, f);
    Rat total = 0;
    for (auto& [C, w] : phi.weights) {
        if (w == 0) continue;
        total += w * Rat(delta_count_from_type(type, C));
    }
    return total;
}

inline VonMangoldtType vmt_add(const VonMangoldtType& a, const VonMangoldtType& b) {
    if (a.n != b.n) throw SizeMismatch("vmt_add: mismatched degrees");
    VonMangoldtType c = a;
    for (auto& [C, w] : b.weights) c.weights[C] += w;
    return c;
}

inline VonMangoldtType vmt_scale(const Rat& s, const VonMangoldtType& a) {
    VonMangoldtType c = a;
    for (auto& [C, w] : c.weights) w *= s;
    return c;
}

// On squarefree f of cycle type C, D_C(f) is the centralizer size, so
// w_C = values(C) / centralizer realizes phi(f) = values(cycle type of f).
inline VonMangoldtType vmt_from_squarefree_values(int n,
                                                  const std::map<Partition, Rat>& values) {
    VonMangoldtType phi;
    phi.n = n;
    for (auto& C : partitions(n)) {
        auto it = values.find(C);
        Rat v = it == values.end() ? Rat(0) : it->second;
        phi.weights[C] = v / Rat(centralizer_size(C));
    }
    return phi;
}

// The constant function 1: c_sigma = 1/n! for every sigma.
inline VonMangoldtType one_vmt(int n) {
    VonMangoldtType phi;
    phi.n = n;
    Rat nf(factorial(static_cast<unsigned>(n)));
    for (auto& C : partitions(n)) phi.weights[C] = Rat(class_size(C)) / nf;
    return phi;
}

// Lambda: unit weight on the n-cycle class.
inline VonMangoldtType lambda_vmt(int n) {
    VonMangoldtType phi;
    phi.n = n;
    for (auto& C : partitions(n)) phi.weights[C] = 0;
    phi.weights[Partition{n}] = 1;
    return phi;
}

// mu: w_C = (-1)^n eps(C) |C| / n!.
inline VonMangoldtType mu_vmt(int n) {
    VonMangoldtType phi;
    phi.n = n;
    Rat nf(factorial(static_cast<unsigned>(n)));
    int sn = n % 2 == 0 ? 1 : -1;
    for (auto& C : partitions(n))
        phi.weights[C] = Rat(sn * sign_of_class(C)) * Rat(class_size(C)) / nf;
    return phi;
}

inline VonMangoldtType lambda_minus_one_vmt(int n) {
    return vmt_add(lambda_vmt(n), vmt_scale(Rat(-1), one_vmt(n)));
}

// X^lambda as a von-Mangoldt-type function (matches x_lambda_fn on
// squarefree inputs).
inline VonMangoldtType x_lambda_vmt(const Partition& lambda) {
    int n = partition_sum(lambda);
    std::map<Partition, Rat> values;
    for (auto& C : partitions(n)) values[C] = Rat(character(lambda, C));
    return vmt_from_squarefree_values(n, values);
}

// phi_sigma: d_sigma on squarefree f of cycle type C0, i.e. unit class
// weight on C0.
inline VonMangoldtType phi_sigma_vmt(const Partition& C0) {
    if (!is_partition(C0)) throw InvalidConfig("phi_sigma_vmt: not a partition");
    int n = partition_sum(C0);
    std::map<Partition, Rat> values;
    values[C0] = Rat(centralizer_size(C0));
    return vmt_from_squarefree_values(n, values);
}

}  // namespace ffsi

#endif  // FFSI_ARITHFUN_HPP
