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

#ifndef FFSI_INTERVALS_HPP
#define FFSI_INTERVALS_HPP

// Short intervals on M_n(F_q): f ~ g iff deg(f - g) <= h. Each class has
// q^{h+1} members and is a contiguous block of q^{h+1} canonical indices,
// which the sweep engine exploits. Statistics (psi, moments, variance,
// covariance) are exact rationals throughout.

#include <cmath>
#include <thread>
#include <vector>

#include "ffsi/arithfun.hpp"
#include "ffsi/packed.hpp"
#include "ffsi/poly.hpp"
#include "ffsi/rational.hpp"

namespace ffsi {

constexpr std::uint64_t kDefaultBudget = 50000000;

struct IntervalKey {
    int n = 0;
    int h = 0;
    std::vector<BaseElem> high_coeffs;  // x^{n-1} down to x^{h+1}
};

inline IntervalKey interval_of(const BaseField& K, const Poly<BaseField>& f, int h) {
    int n = f.deg();
    if (h < 0 || h > n - 1) throw InvalidConfig("interval_of: need 0 <= h <= n-1");
    IntervalKey key{n, h, {}};
    for (int i = n - 1; i >= h + 1; --i) key.high_coeffs.push_back(f.c[i]);
    (void)K;
    return key;
}

inline std::vector<Poly<BaseField>> members(const BaseField& K, const IntervalKey& key,
                                            std::uint64_t budget = kDefaultBudget) {
    Int count = ipow(K.size(), static_cast<unsigned>(key.h + 1));
    if (count > budget) throw BudgetExceeded("members: q^{h+1} over budget");
    std::vector<Poly<BaseField>> out;
    for (Int i = 0; i < count; ++i) {
        Poly<BaseField> f;
        f.c.assign(key.n + 1, K.zero());
        f.c[key.n] = K.one();
        for (int j = 0; j < static_cast<int>(key.high_coeffs.size()); ++j)
            f.c[key.n - 1 - j] = key.high_coeffs[j];
        Int rem = i;
        for (int j = 0; j <= key.h; ++j) {
            f.c[j] = K.from_index(static_cast<std::uint64_t>(rem % K.size()));
            rem /= K.size();
        }
        out.push_back(std::move(f));
    }
    return out;
}

// psi_phi(g; h) = sum of phi over the interval of g.
inline Rat psi(const BaseField& K, const VonMangoldtType& phi, const IntervalKey& key,
               std::uint64_t budget = kDefaultBudget) {
    Rat total = 0;
    for (auto& f : members(K, key, budget)) total += evaluate_vmt(K, phi, f);
    return total;
}

// ---------------------------------------------------------------------------
// Sweep engine: per-interval sums of factorization functions

// A factorization function reduced to one scaled integer per factorization
// type; true value = scaled/denom. Scaling keeps inner loops in int64.
struct SweepValues {
    std::vector<std::int64_t> scaled;
    Int denom = 1;
};

inline SweepValues sweep_values(const VonMangoldtType& phi,
                                const std::vector<FactorizationType>& types) {
    std::vector<Rat> vals;
    Int denom = 1;
    for (auto& t : types) {
        Rat v = 0;
        for (auto& [C, w] : phi.weights)
            if (w != 0) v += w * Rat(delta_count_from_type(t, C));
        denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(v));
        vals.push_back(v);
    }
    SweepValues out;
    out.denom = denom;
    for (auto& v : vals) {
        Int s = boost::multiprecision::numerator(v) *
                (denom / boost::multiprecision::denominator(v));
        if (s > Int(std::int64_t(1) << 40) || s < -Int(std::int64_t(1) << 40))
            throw InvalidConfig("sweep_values: scaled weight too large");
        out.scaled.push_back(static_cast<std::int64_t>(s));
    }
    return out;
}

namespace detail {

inline int find_type(const std::vector<FactorizationType>& types,
                     const FactorizationType& t) {
    auto it = std::lower_bound(types.begin(), types.end(), t);
    if (it == types.end() || *it != t) throw IndexOutOfRange();
    return static_cast<int>(it - types.begin());
}

}  // namespace detail

// Per-interval scaled sums psi[fi][key] for a list of factorization
// functions, in one sweep over M_n(F_q). Uses the packed sieve when the
// field fits in tables, otherwise per-polynomial factorization partitioned
// across threads on interval boundaries (merge order is fixed either way,
// so results are deterministic).
inline std::vector<std::vector<std::int64_t>> interval_psis(
    const BaseField& K, int n, int h, const std::vector<SweepValues>& vals,
    std::uint64_t budget = kDefaultBudget, int threads = 1) {
    if (h < 0 || h > n - 1 || n < 1) throw InvalidConfig("interval_psis: bad n/h");
    Int total = ipow(K.size(), static_cast<unsigned>(n));
    if (total > budget) throw BudgetExceeded("interval_psis: q^n over budget");
    std::uint64_t q = static_cast<std::uint64_t>(K.size());
    std::uint64_t blk = 1, nkeys = 1;
    for (int i = 0; i <= h; ++i) blk *= q;
    for (int i = 0; i < n - 1 - h; ++i) nkeys *= q;
    auto types = all_factorization_types(n);
    for (auto& v : vals) {
        if (v.scaled.size() != types.size())
            throw SizeMismatch("interval_psis: value table size");
        std::int64_t mx = 0;
        for (auto s : v.scaled) mx = std::max(mx, s < 0 ? -s : s);
        if (mx != 0 && blk > (std::uint64_t(1) << 62) / static_cast<std::uint64_t>(mx))
            throw InvalidConfig("interval_psis: scaled psi would overflow");
    }
    std::vector<std::vector<std::int64_t>> psis(vals.size());

    if (K.size() <= 1024 && n >= 2 && n <= 6) {
        int irr_id = detail::find_type(types, {{n, 1}});
        for (std::size_t fi = 0; fi < vals.size(); ++fi)
            psis[fi].assign(nkeys, static_cast<std::int64_t>(blk) * vals[fi].scaled[irr_id]);
        PackedSieve sieve(K, n - 1);
        sieve.composites(n, [&](std::uint64_t idx, int tid) {
            std::uint64_t key = idx / blk;
            for (std::size_t fi = 0; fi < vals.size(); ++fi)
                psis[fi][key] += vals[fi].scaled[tid] - vals[fi].scaled[irr_id];
        });
        return psis;
    }

    for (auto& p : psis) p.assign(nkeys, 0);
    int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(nkeys)));
    auto work = [&](std::uint64_t key_lo, std::uint64_t key_hi) {
        for (std::uint64_t key = key_lo; key < key_hi; ++key)
            for (std::uint64_t off = 0; off < blk; ++off) {
                auto f = monic_from_index(K, n, Int(key * blk + off));
                int tid = detail::find_type(types, factorization_type(K, f));
                for (std::size_t fi = 0; fi < vals.size(); ++fi)
                    psis[fi][key] += vals[fi].scaled[tid];
            }
    };
    if (nthreads == 1) {
        work(0, nkeys);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = (nkeys + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(work, std::min<std::uint64_t>(t * chunk, nkeys),
                              std::min<std::uint64_t>((t + 1) * chunk, nkeys));
        for (auto& th : pool) th.join();
    }
    return psis;
}

// ---------------------------------------------------------------------------
// Statistics

struct MomentReport {
    std::int64_t q = 0;
    int n = 0, h = 0, m = 0;
    Rat raw_sum;               // (1/q^n) sum_f prod_i psi_i(f)
    Rat main_term;             // prod_i [ (sum_C w_C) * q^{h+1} ]
    Rat normalized_deviation;  // (raw - main) / q^{(h+1)(m-1)}
};

inline Rat weight_total(const VonMangoldtType& phi) {
    Rat s = 0;
    for (auto& [C, w] : phi.weights) s += w;
    return s;
}

inline Rat global_sum(const BaseField& K, const VonMangoldtType& phi, int n,
                      std::uint64_t budget = kDefaultBudget, int threads = 1) {
    if (ipow(K.size(), static_cast<unsigned>(n)) > budget)
        throw BudgetExceeded("global_sum: q^n over budget");
    auto vals = sweep_values(phi, all_factorization_types(n));
    auto psis = interval_psis(K, n, n - 1, {vals}, budget, threads);
    return Rat(psis[0][0]) / Rat(vals.denom);
}

inline MomentReport moment(const BaseField& K, const std::vector<VonMangoldtType>& phis,
                           int n, int h, std::uint64_t budget = kDefaultBudget,
                           int threads = 1) {
    if (phis.empty()) throw InvalidConfig("moment: need m >= 1 functions");
    if (ipow(K.size(), static_cast<unsigned>(n)) > budget)
        throw BudgetExceeded("moment: q^n over budget");
    auto types = all_factorization_types(n);
    std::vector<SweepValues> vals;
    for (auto& phi : phis) vals.push_back(sweep_values(phi, types));
    auto psis = interval_psis(K, n, h, vals, budget, threads);
    Int scaled_sum = 0;
    for (std::uint64_t key = 0; key < psis[0].size(); ++key) {
        Int prod = psis[0][key];
        for (std::size_t fi = 1; fi < psis.size(); ++fi) prod *= psis[fi][key];
        scaled_sum += prod;
    }
    Int denom_prod = 1;
    for (auto& v : vals) denom_prod *= v.denom;
    int m = static_cast<int>(phis.size());
    Rat qh1 = Rat(ipow(K.size(), static_cast<unsigned>(h + 1)));
    Rat qn = Rat(ipow(K.size(), static_cast<unsigned>(n)));
    MomentReport rep;
    rep.q = static_cast<std::int64_t>(K.size());
    rep.n = n;
    rep.h = h;
    rep.m = m;
    rep.raw_sum = Rat(scaled_sum) / Rat(denom_prod) * qh1 / qn;
    rep.main_term = 1;
    for (auto& phi : phis) rep.main_term *= weight_total(phi) * qh1;
    Rat norm = 1;
    for (int i = 0; i < m - 1; ++i) norm *= qh1;
    rep.normalized_deviation = (rep.raw_sum - rep.main_term) / norm;
    return rep;
}

// Direct m-tuple form of the moment: enumerate pairwise-equivalent tuples
// outright. Tiny instances only; moment() must agree exactly.
inline Rat moment_direct(const BaseField& K, const std::vector<VonMangoldtType>& phis,
                         int n, int h, std::uint64_t budget = 1000000) {
    Int blk = ipow(K.size(), static_cast<unsigned>(h + 1));
    Int nkeys = ipow(K.size(), static_cast<unsigned>(n - 1 - h));
    Int tuples = nkeys;
    for (std::size_t i = 0; i < phis.size(); ++i) tuples *= blk;
    if (tuples > budget) throw BudgetExceeded("moment_direct: tuple count over budget");
    Rat total = 0;
    for (Int key = 0; key < nkeys; ++key) {
        Int combos = 1;
        for (std::size_t i = 0; i < phis.size(); ++i) combos *= blk;
        for (Int c = 0; c < combos; ++c) {
            Int rem = c;
            Rat prod = 1;
            for (auto& phi : phis) {
                auto f = monic_from_index(K, n, key * blk + rem % blk);
                rem /= blk;
                prod *= evaluate_vmt(K, phi, f);
            }
            total += prod;
        }
    }
    return total * Rat(blk) / Rat(ipow(K.size(), static_cast<unsigned>(n)));
}

// Population variance/covariance of psi over the q^{n-1-h} intervals.
inline Rat covariance(const BaseField& K, const VonMangoldtType& phi1,
                      const VonMangoldtType& phi2, int n, int h,
                      std::uint64_t budget = kDefaultBudget, int threads = 1) {
    if (ipow(K.size(), static_cast<unsigned>(n)) > budget)
        throw BudgetExceeded("covariance: q^n over budget");
    auto types = all_factorization_types(n);
    auto v1 = sweep_values(phi1, types);
    auto v2 = sweep_values(phi2, types);
    auto psis = interval_psis(K, n, h, {v1, v2}, budget, threads);
    Int s1 = 0, s2 = 0, s12 = 0;
    for (std::uint64_t key = 0; key < psis[0].size(); ++key) {
        s1 += psis[0][key];
        s2 += psis[1][key];
        s12 += Int(psis[0][key]) * psis[1][key];
    }
    Rat N = Rat(Int(psis[0].size()));
    Rat m1 = Rat(s1) / Rat(v1.denom) / N;
    Rat m2 = Rat(s2) / Rat(v2.denom) / N;
    return Rat(s12) / Rat(v1.denom * v2.denom) / N - m1 * m2;
}

inline Rat variance(const BaseField& K, const VonMangoldtType& phi, int n, int h,
                    std::uint64_t budget = kDefaultBudget, int threads = 1) {
    return covariance(K, phi, phi, n, h, budget, threads);
}

// Fourier coefficient of phi against X^lambda on squarefree inputs:
// phi-hat(lambda) = sum_C w_C X^lambda(C).
inline Rat vmt_hat(const VonMangoldtType& phi, const Partition& lambda) {
    Rat s = 0;
    for (auto& [C, w] : phi.weights)
        if (w != 0) s += w * Rat(character(lambda, C));
    return s;
}

// Predicted covariance of psi_phi1, psi_phi2 over short intervals:
// q^{h+1} * sum over lambda with lambda_1 <= n-h-2 of phi1-hat * phi2-hat.
inline Rat predicted_covariance(const VonMangoldtType& phi1, const VonMangoldtType& phi2,
                                int n, int h, const Int& q) {
    Rat s = 0;
    for (auto& lam : partitions(n))
        if (lam[0] <= n - h - 2) s += vmt_hat(phi1, lam) * vmt_hat(phi2, lam);
    return s * Rat(ipow(q, static_cast<unsigned>(h + 1)));
}

struct CovarianceCharReport {
    Rat empirical;
    Rat predicted;        // q^{h+1} * restricted character sum
    double residual = 0;  // (empirical - predicted) / q^{h+1/2}
};

inline CovarianceCharReport covariance_vs_character_sum(const BaseField& K,
                                                        const Partition& sigma1,
                                                        const Partition& sigma2, int n, int h,
                                                        std::uint64_t budget = kDefaultBudget,
                                                        int threads = 1) {
    CovarianceCharReport rep;
    rep.empirical =
        covariance(K, phi_sigma_vmt(sigma1), phi_sigma_vmt(sigma2), n, h, budget, threads);
    rep.predicted = Rat(ipow(K.size(), static_cast<unsigned>(h + 1))) *
                    Rat(rodgers_main_term(n, h, sigma1, sigma2));
    double qd = K.size().convert_to<double>();
    rep.residual = (rep.empirical - rep.predicted).convert_to<double>() /
                   (std::pow(qd, h) * std::sqrt(qd));
    return rep;
}

}  // namespace ffsi

#endif  // FFSI_INTERVALS_HPP
