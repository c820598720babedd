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

#ifndef FFSI_PACKED_HPP
#define FFSI_PACKED_HPP

// Table-backed field arithmetic and a product sieve over M_n(F_q). The
// generic tower types are flexible but allocate; large enumeration sweeps
// (10^8 polynomials and up) need flat integer arithmetic instead. Elements
// are carried as canonical indices 0..q-1, so polynomial indices agree with
// monic_to_index.

#include <cstdint>
#include <utility>
#include <vector>

#include "ffsi/gf.hpp"
#include "ffsi/poly.hpp"

namespace ffsi {

struct PackedField {
    std::int64_t q = 0;
    std::vector<std::uint16_t> add_t, mul_t;

    std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_t[a * q + b]; }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return mul_t[a * q + b]; }
};

inline PackedField pack_field(const BaseField& K) {
    if (K.size() > 1024) throw InvalidConfig("pack_field: q > 1024");
    PackedField P;
    P.q = static_cast<std::int64_t>(K.size());
    std::vector<BaseElem> elems(P.q);
    for (std::int64_t i = 0; i < P.q; ++i) elems[i] = K.from_index(i);
    P.add_t.resize(P.q * P.q);
    P.mul_t.resize(P.q * P.q);
    for (std::int64_t a = 0; a < P.q; ++a)
        for (std::int64_t b = 0; b < P.q; ++b) {
            P.add_t[a * P.q + b] =
                static_cast<std::uint16_t>(K.index(K.add(elems[a], elems[b])));
            P.mul_t[a * P.q + b] =
                static_cast<std::uint16_t>(K.index(K.mul(elems[a], elems[b])));
        }
    return P;
}

// All factorization types of degree n: sorted multisets of (degree,
// multiplicity) pairs with sum(d*m) = n.
inline std::vector<FactorizationType> all_factorization_types(int n) {
    std::vector<FactorizationType> out;
    FactorizationType cur;
    auto rec = [&](auto&& self, int remaining, std::pair<int, int> floor_pair) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int d = floor_pair.first; d <= remaining; ++d)
            for (int m = d == floor_pair.first ? floor_pair.second : 1; d * m <= remaining;
                 ++m) {
                cur.emplace_back(d, m);
                self(self, remaining - d * m, {d, m});
                cur.pop_back();
            }
    };
    rec(rec, n, {1, 1});
    return out;
}

namespace detail {

// Monic polynomials as flat coefficient-index arrays, constant term first.
struct PackedPoly {
    std::uint16_t c[8] = {};
    int deg = 0;
};

inline void packed_mul(const PackedField& P, const PackedPoly& a, const PackedPoly& b,
                       PackedPoly& out) {
    out.deg = a.deg + b.deg;
    for (int k = 0; k <= out.deg; ++k) out.c[k] = 0;
    for (int i = 0; i <= a.deg; ++i)
        for (int j = 0; j <= b.deg; ++j)
            out.c[i + j] = P.add(out.c[i + j], P.mul(a.c[i], b.c[j]));
}

inline std::uint64_t packed_index(const PackedPoly& a, std::int64_t q) {
    std::uint64_t idx = 0;
    for (int i = a.deg - 1; i >= 0; --i) idx = idx * static_cast<std::uint64_t>(q) + a.c[i];
    return idx;
}

inline void packed_decode(std::uint64_t idx, int deg, std::int64_t q, PackedPoly& out) {
    out.deg = deg;
    for (int i = 0; i < deg; ++i) {
        out.c[i] = static_cast<std::uint16_t>(idx % static_cast<std::uint64_t>(q));
        idx /= static_cast<std::uint64_t>(q);
    }
    out.c[deg] = 1;
}

// 3-bit multiplicity-count fields, one per admissible (degree, multiplicity)
// pair with d*m <= 6. Keys identify factorization types order-independently.
inline int type_slot(int d, int m) {
    static constexpr int table[6][7] = {
        {-1, 0, 1, 2, 3, 4, 5},    // d = 1
        {-1, 6, 7, 8, -1, -1, -1}, // d = 2
        {-1, 9, 10, -1, -1, -1, -1},
        {-1, 11, -1, -1, -1, -1, -1},
        {-1, 12, -1, -1, -1, -1, -1},
        {-1, -1, -1, -1, -1, -1, -1},
    };
    return table[d - 1][m];
}

inline std::uint64_t type_key(const FactorizationType& t) {
    std::uint64_t key = 0;
    for (auto& [d, m] : t) key += std::uint64_t(1) << (3 * type_slot(d, m));
    return key;
}

}  // namespace detail

// Irreducibility sieve: lists of monic irreducibles per degree, plus an
// enumeration of every composite (reducible) monic of a given degree that
// visits each exactly once, tagged with its factorization type. Degree-n
// polynomials not visited are irreducible, i.e. of type {(n,1)}.
struct PackedSieve {
    PackedField P;
    std::vector<std::vector<std::uint64_t>> irr;  // irr[d]: canonical indices

    PackedSieve(const BaseField& K, int max_degree) : P(pack_field(K)) {
        if (max_degree > 6) throw InvalidConfig("PackedSieve: degree > 6");
        irr.resize(max_degree + 1);
        if (max_degree >= 1) {
            irr[1].resize(P.q);
            for (std::int64_t a = 0; a < P.q; ++a) irr[1][a] = static_cast<std::uint64_t>(a);
        }
        for (int d = 2; d <= max_degree; ++d) {
            std::uint64_t total = 1;
            for (int i = 0; i < d; ++i) total *= static_cast<std::uint64_t>(P.q);
            std::vector<bool> mark(total, false);
            composites(d, [&](std::uint64_t idx, int) { mark[idx] = true; });
            for (std::uint64_t i = 0; i < total; ++i)
                if (!mark[i]) irr[d].push_back(i);
        }
    }

    // visit(index, type_id) for every reducible monic of degree n, with
    // type_id indexing all_factorization_types(n).
    template <class Visit>
    void composites(int n, Visit&& visit) const {
        auto types = all_factorization_types(n);
        std::vector<std::pair<std::uint64_t, int>> keymap;
        for (std::size_t i = 0; i < types.size(); ++i)
            keymap.emplace_back(detail::type_key(types[i]), static_cast<int>(i));

        detail::PackedPoly acc[8], fac;
        acc[0].deg = 0;
        acc[0].c[0] = 1;
        // Factors chosen with degree non-increasing and, within a degree,
        // index non-decreasing; an immediately repeated index raises the
        // current multiplicity. Top level caps degree at n-1, so single
        // irreducibles are never produced.
        auto rec = [&](auto&& self, int level, int remaining, int last_deg,
                       std::size_t last_ii, int run_mult, std::uint64_t key) -> void {
            int dmax = std::min(last_deg, remaining);
            for (int d = dmax; d >= 1; --d) {
                std::size_t start = d == last_deg ? last_ii : 0;
                for (std::size_t ii = start; ii < irr[d].size(); ++ii) {
                    int m = (d == last_deg && ii == last_ii) ? run_mult + 1 : 1;
                    std::uint64_t k2 = key + (std::uint64_t(1) << (3 * detail::type_slot(d, m)));
                    if (m > 1) k2 -= std::uint64_t(1) << (3 * detail::type_slot(d, m - 1));
                    detail::packed_decode(irr[d][ii], d, P.q, fac);
                    detail::packed_mul(P, acc[level], fac, acc[level + 1]);
                    if (remaining == d) {
                        int tid = -1;
                        for (auto& [kk, id] : keymap)
                            if (kk == k2) {
                                tid = id;
                                break;
                            }
                        visit(detail::packed_index(acc[level + 1], P.q), tid);
                    } else {
                        self(self, level + 1, remaining - d, d, ii, m, k2);
                    }
                }
            }
        };
        rec(rec, 0, n, n - 1, 0, 0, 0);
    }
};

}  // namespace ffsi

#endif  // FFSI_PACKED_HPP
