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

#ifndef FFSI_GEOMETRY_HPP
#define FFSI_GEOMETRY_HPP

// The cone Y_{m,n,h} of m root-rows whose attached monic polynomials agree
// above degree h: elementary-symmetric equations, the block Jacobian and its
// rank criteria, and point counts constrained by a Frobenius action per row.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "ffsi/gf.hpp"
#include "ffsi/intervals.hpp"
#include "ffsi/poly.hpp"
#include "ffsi/rational.hpp"
#include "ffsi/symgroup.hpp"

namespace ffsi {

// Exact rationals presented through the same field concept as gf.hpp, for
// characteristic-zero probes.
struct RationalField {
    using Elem = Rat;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw DivisionByZero();
        return 1 / a;
    }
};

template <class F>
using Matrix = std::vector<std::vector<typename F::Elem>>;

template <class F>
struct ConePointT {
    int m = 0, n = 0;
    std::vector<std::vector<typename F::Elem>> coords;  // m rows of n values
};

using ConePoint = ConePointT<TopField>;

// Elementary symmetric polynomial e^j of the inputs.
template <class F>
typename F::Elem esp(const F& K, int j, const std::vector<typename F::Elem>& xs) {
    if (j < 0 || j > static_cast<int>(xs.size())) throw IndexOutOfRange();
    std::vector<typename F::Elem> e(j + 1, K.zero());
    e[0] = K.one();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (int d = std::min<int>(j, static_cast<int>(i) + 1); d >= 1; --d)
            e[d] = K.add(e[d], K.mul(e[d - 1], xs[i]));
    return e[j];
}

template <class F>
bool is_on_cone(const F& K, const ConePointT<F>& pt, int h) {
    for (int i = 1; i < pt.m; ++i)
        for (int j = 1; j <= pt.n - h - 1; ++j)
            if (!K.eq(esp(K, j, pt.coords[0]), esp(K, j, pt.coords[i]))) return false;
    return true;
}

// A_n^s(x_1..x_n): entry (d, j) = e^d of all values except x_j, d = 0..s-1.
template <class F>
Matrix<F> a_matrix(const F& K, const std::vector<typename F::Elem>& xs, int s) {
    int n = static_cast<int>(xs.size());
    Matrix<F> A(s, std::vector<typename F::Elem>(n, K.zero()));
    for (int j = 0; j < n; ++j) {
        std::vector<typename F::Elem> rest;
        for (int k = 0; k < n; ++k)
            if (k != j) rest.push_back(xs[k]);
        for (int d = 0; d < s; ++d) A[d][j] = esp(K, d, rest);
    }
    return A;
}

template <class F>
typename F::Elem det(const F& K, Matrix<F> mat) {
    int n = static_cast<int>(mat.size());
    typename F::Elem d = K.one();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!K.is_zero(mat[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0) return K.zero();
        if (piv != col) {
            std::swap(mat[piv], mat[col]);
            d = K.neg(d);
        }
        d = K.mul(d, mat[col][col]);
        auto pinv = K.inv(mat[col][col]);
        for (int r = col + 1; r < n; ++r) {
            auto factor = K.mul(mat[r][col], pinv);
            for (int c = col; c < n; ++c)
                mat[r][c] = K.sub(mat[r][c], K.mul(factor, mat[col][c]));
        }
    }
    return d;
}

// det of the s x s minor of A_n^s on columns cols (0-based, increasing);
// equals prod_{a<b} (x_{cols[a]} - x_{cols[b]}).
template <class F>
typename F::Elem b_det(const F& K, const std::vector<typename F::Elem>& xs,
                       const std::vector<int>& cols) {
    int s = static_cast<int>(cols.size());
    auto A = a_matrix(K, xs, s);
    Matrix<F> B(s, std::vector<typename F::Elem>(s, K.zero()));
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) B[r][c] = A[r][cols[c]];
    return det(K, B);
}

template <class F>
int rank(const F& K, Matrix<F> mat) {
    if (mat.empty()) return 0;
    int rows = static_cast<int>(mat.size()), cols = static_cast<int>(mat[0].size());
    int rk = 0;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int piv = -1;
        for (int r = rk; r < rows; ++r)
            if (!K.is_zero(mat[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(mat[piv], mat[rk]);
        auto pinv = K.inv(mat[rk][col]);
        for (int r = rk + 1; r < rows; ++r) {
            auto factor = K.mul(mat[r][col], pinv);
            for (int c = col; c < cols; ++c)
                mat[r][c] = K.sub(mat[r][c], K.mul(factor, mat[rk][c]));
        }
        ++rk;
    }
    return rk;
}

// Block Jacobian of the cone equations: row-block i-1 (for i = 2..m) holds
// A_1 in the first column block and -A_i in the i-th.
template <class F>
Matrix<F> jacobian(const F& K, const ConePointT<F>& pt, int h) {
    if (!is_on_cone(K, pt, h)) throw NotOnVariety();
    int s = pt.n - h - 1;
    Matrix<F> J((pt.m - 1) * s, std::vector<typename F::Elem>(pt.m * pt.n, K.zero()));
    auto A1 = a_matrix(K, pt.coords[0], s);
    for (int i = 1; i < pt.m; ++i) {
        auto Ai = a_matrix(K, pt.coords[i], s);
        for (int r = 0; r < s; ++r)
            for (int c = 0; c < pt.n; ++c) {
                J[(i - 1) * s + r][c] = A1[r][c];
                J[(i - 1) * s + r][i * pt.n + c] = K.neg(Ai[r][c]);
            }
    }
    return J;
}

template <class F>
int count_distinct(const F& K, const ConePointT<F>& pt) {
    std::vector<typename F::Elem> seen;
    for (auto& row : pt.coords)
        for (auto& z : row) {
            bool found = false;
            for (auto& s : seen)
                if (K.eq(s, z)) {
                    found = true;
                    break;
                }
            if (!found) seen.push_back(z);
        }
    return static_cast<int>(seen.size());
}

// The two sides of the m=2 singularity criterion: Jacobian rank deficiency,
// and "few distinct coordinate values" (at most n-h-2).
template <class F>
std::pair<bool, bool> singular_criterion_m2(const F& K, const ConePointT<F>& pt, int h) {
    if (pt.m != 2) throw InvalidConfig("singular_criterion_m2: need m = 2");
    auto J = jacobian(K, pt, h);
    bool rank_deficient = rank(K, J) < pt.n - h - 1;
    bool few_values = count_distinct(K, pt) <= pt.n - h - 2;
    return {rank_deficient, few_values};
}

// ---------------------------------------------------------------------------
// Point counts

struct ConstrainedCount {
    Int count;
    Rat normalized;  // count / q^{n + (m-1)(h+1)}
};

// #{(z_{i,j}) on the cone : Frob_q acts as sigma_i on row i}, via the
// interval sweep: sum over keys of prod_i (sum of delta_count over members).
inline ConstrainedCount constrained_count(const BaseField& K,
                                          const std::vector<Permutation>& sigmas, int n,
                                          int h, std::uint64_t budget = kDefaultBudget,
                                          int threads = 1) {
    if (sigmas.empty()) throw InvalidConfig("constrained_count: need m >= 1");
    auto types = all_factorization_types(n);
    std::vector<SweepValues> vals;
    for (auto& s : sigmas) {
        SweepValues v;
        v.denom = 1;
        Partition ct = cycle_type(s);
        for (auto& t : types)
            v.scaled.push_back(
                static_cast<std::int64_t>(delta_count_from_type(t, ct)));
        vals.push_back(std::move(v));
    }
    auto psis = interval_psis(K, n, h, vals, budget, threads);
    Int total = 0;
    for (std::uint64_t key = 0; key < psis[0].size(); ++key) {
        Int prod = psis[0][key];
        for (std::size_t i = 1; i < psis.size(); ++i) prod *= psis[i][key];
        total += prod;
    }
    int m = static_cast<int>(sigmas.size());
    Int norm = ipow(K.size(), static_cast<unsigned>(n + (m - 1) * (h + 1)));
    return {total, Rat(total) / Rat(norm)};
}

// Brute-force verifier: build the degree-L tower (L = lcm of all cycle
// lengths), list every coordinate row compatible with its sigma, and filter
// row combinations by the cone equations. The budget counts enumerated
// arrays, q^{mn} of them (one free subfield choice per cycle).
inline Int direct_count_oracle(const BaseField& K, const std::vector<Permutation>& sigmas,
                               int n, int h) {
    int m = static_cast<int>(sigmas.size());
    long long L = 1;
    for (auto& s : sigmas)
        for (int l : cycle_type(s)) L = std::lcm(L, static_cast<long long>(l));
    Int arrays = ipow(ipow(K.size(), static_cast<unsigned>(n)), static_cast<unsigned>(m));
    if (arrays > 10000000) throw BudgetExceeded("direct_count_oracle: q^{mn} > 10^7");
    FieldTower t = build_tower(K.characteristic(), K.degree(), static_cast<int>(L));

    // all rows z with Frob(z_j) = z_{sigma(j)}: one free element of F_{q^l}
    // per cycle of length l, the rest forced by Frobenius.
    auto rows_for = [&](const Permutation& sig) {
        std::vector<std::vector<int>> cycles;
        std::vector<bool> used(n, false);
        for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            std::vector<int> cyc;
            for (int j = i; !used[j]; j = sig[j]) {
                used[j] = true;
                cyc.push_back(j);
            }
            cycles.push_back(std::move(cyc));
        }
        std::vector<std::vector<TopElem>> rows;
        std::vector<TopElem> row(n, t.top.zero());
        auto rec = [&](auto&& self, std::size_t ci) -> void {
            if (ci == cycles.size()) {
                rows.push_back(row);
                return;
            }
            int l = static_cast<int>(cycles[ci].size());
            for (Int e = 0; e < t.top.size(); ++e) {
                TopElem z = t.top.from_index(static_cast<std::uint64_t>(e));
                // z must generate a Frobenius orbit of size dividing l
                TopElem w = z;
                for (int k = 0; k < l; ++k) w = t.frobenius_q(w);
                if (!t.top.eq(w, z)) continue;
                TopElem cur = z;
                for (int j : cycles[ci]) {
                    // Frob(row[j]) = row[sig(j)]: walking the cycle applies Frob
                    row[j] = cur;
                    cur = t.frobenius_q(cur);
                }
                self(self, ci + 1);
            }
        };
        rec(rec, 0);
        return rows;
    };

    std::vector<std::vector<std::vector<TopElem>>> all_rows;
    for (auto& s : sigmas) all_rows.push_back(rows_for(s));

    Int count = 0;
    ConePointT<TopField> pt;
    pt.m = m;
    pt.n = n;
    pt.coords.resize(m);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == m) {
            if (is_on_cone(t.top, pt, h)) count += 1;
            return;
        }
        for (auto& row : all_rows[i]) {
            pt.coords[i] = row;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return count;
}

struct DimensionProbeRow {
    Int q;
    Int count;
    double ratio;  // count / q^{n + (m-1)(h+1)}
};

inline std::vector<DimensionProbeRow> dimension_probe(
    int m, int n, int h, const std::vector<std::pair<std::int64_t, int>>& prime_powers,
    std::uint64_t budget = kDefaultBudget, int threads = 1) {
    std::vector<DimensionProbeRow> out;
    for (auto& [p, r] : prime_powers) {
        FieldTower t = build_tower(p, r, 1);
        std::vector<Permutation> ids(m);
        Permutation id(n);
        std::iota(id.begin(), id.end(), 0);
        for (auto& s : ids) s = id;
        auto cc = constrained_count(t.base, ids, n, h, budget, threads);
        out.push_back({t.base.size(), cc.count, cc.normalized.convert_to<double>()});
    }
    return out;
}

// ---------------------------------------------------------------------------
// On-cone sampling (m = 2): enumerate all n-multisets over the top field,
// bucket them by the constrained elementary-symmetric values, and draw the
// two rows from a common bucket. Every m=2 cone point with coordinates in
// the top field arises this way up to coordinate order, and the criteria
// are order-invariant.
inline std::vector<ConePoint> sample_on_cone_points(const FieldTower& t, int n, int h,
                                                    int count, std::uint64_t seed) {
    if (t.top.size() > 4096) throw BudgetExceeded("sample_on_cone_points: field too large");
    std::int64_t Q = static_cast<std::int64_t>(t.top.size());
    Int nmulti = 1;
    for (int i = 0; i < n; ++i) nmulti = nmulti * (Q + i) / (i + 1);
    if (nmulti > 2000000) throw BudgetExceeded("sample_on_cone_points: too many multisets");
    std::vector<TopElem> elems(Q);
    for (std::int64_t i = 0; i < Q; ++i) elems[i] = t.top.from_index(i);

    std::vector<std::vector<std::uint16_t>> multisets;
    std::vector<std::uint16_t> cur;
    auto gen = [&](auto&& self, std::int64_t lo, int left) -> void {
        if (left == 0) {
            multisets.push_back(cur);
            return;
        }
        for (std::int64_t i = lo; i < Q; ++i) {
            cur.push_back(static_cast<std::uint16_t>(i));
            self(self, i, left - 1);
            cur.pop_back();
        }
    };
    gen(gen, 0, n);

    std::map<std::vector<std::uint64_t>, std::vector<std::uint32_t>> buckets;
    for (std::uint32_t id = 0; id < multisets.size(); ++id) {
        std::vector<TopElem> xs;
        for (auto i : multisets[id]) xs.push_back(elems[i]);
        std::vector<std::uint64_t> key;
        for (int j = 1; j <= n - h - 1; ++j) key.push_back(t.top.index(esp(t.top, j, xs)));
        buckets[key].push_back(id);
    }
    std::vector<const std::vector<std::uint32_t>*> bucket_list;
    for (auto& [k, v] : buckets) bucket_list.push_back(&v);

    std::mt19937_64 rng(seed);
    std::vector<ConePoint> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        auto& b = *bucket_list[rng() % bucket_list.size()];
        ConePoint pt;
        pt.m = 2;
        pt.n = n;
        for (int rep = 0; rep < 2; ++rep) {
            std::vector<TopElem> row;
            for (auto idx : multisets[b[rng() % b.size()]]) row.push_back(elems[idx]);
            std::shuffle(row.begin(), row.end(), rng);
            pt.coords.push_back(std::move(row));
        }
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace ffsi

#endif  // FFSI_GEOMETRY_HPP
