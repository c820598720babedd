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

#ifndef FFSI_SYMGROUP_HPP
#define FFSI_SYMGROUP_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "ffsi/errors.hpp"
#include "ffsi/rational.hpp"

namespace ffsi {

// Nonincreasing sequence of positive integers; doubles as a conjugacy-class
// label (cycle type) of S_n.
using Partition = std::vector<int>;

// Bijection on {0, .., n-1}, stored as the image sequence.
using Permutation = std::vector<int>;

inline int partition_sum(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline Partition identity_type(int n) { return Partition(n, 1); }

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline bool is_permutation(const Permutation& s) {
    std::vector<char> seen(s.size(), 0);
    for (int v : s) {
        if (v < 0 || v >= static_cast<int>(s.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline Partition cycle_type(const Permutation& s) {
    std::vector<char> seen(s.size(), 0);
    Partition type;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(s[j])) {
            seen[j] = 1;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

// A permutation with the given cycle type (cycles laid out consecutively).
inline Permutation representative(const Partition& type) {
    Permutation s;
    int start = 0;
    for (int len : type) {
        for (int i = 0; i < len; ++i) s.push_back(start + (i + 1) % len);
        start += len;
    }
    return s;
}

// centralizer order z_mu = prod_i i^{m_i} m_i!  (the paper's d_sigma)
inline Int centralizer_size(const Partition& mu) {
    Int z = 1;
    int i = 0;
    while (i < static_cast<int>(mu.size())) {
        int j = i;
        while (j < static_cast<int>(mu.size()) && mu[j] == mu[i]) ++j;
        int mult = j - i;
        z *= ipow(Int(mu[i]), static_cast<unsigned>(mult)) * factorial(static_cast<unsigned>(mult));
        i = j;
    }
    return z;
}

inline Int class_size(const Partition& mu) {
    return factorial(static_cast<unsigned>(partition_sum(mu))) / centralizer_size(mu);
}

inline int sign_of_class(const Partition& mu) {
    // (-1)^{n - #cycles}
    return ((partition_sum(mu) - static_cast<int>(mu.size())) % 2 == 0) ? 1 : -1;
}

// Number of standard Young tableaux of shape lambda (hook-length formula).
inline Int dim_irrep(const Partition& lambda) {
    int n = partition_sum(lambda);
    Int num = factorial(static_cast<unsigned>(n));
    Int den = 1;
    int rows = static_cast<int>(lambda.size());
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            int arm = lambda[i] - j - 1;
            int leg = 0;
            for (int k = i + 1; k < rows && lambda[k] > j; ++k) ++leg;
            den *= (arm + leg + 1);
        }
    }
    return num / den;
}

namespace detail {

// Murnaghan-Nakayama on beta-sets. B is a strictly decreasing set of beta
// numbers; removing a border strip of length l replaces b by b-l with sign
// (-1)^{#elements strictly between}.
inline long long mn_character(std::vector<int> beta, std::vector<int> cycles,
                              std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& memo) {
    // drop trailing normalization: canonical beta-set has no 0 at the "end"
    // we keep fixed size; base case when no cycles remain
    if (cycles.empty()) return 1;
    auto key = std::make_pair(beta, cycles);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int l = cycles.back();  // consume cycles largest-first or arbitrary; use back
    std::vector<int> rest(cycles.begin(), cycles.end() - 1);
    long long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - l;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++between;
        }
        if (occupied) continue;
        auto next = beta;
        next[i] = target;
        std::sort(next.rbegin(), next.rend());
        long long sub = mn_character(next, rest, memo);
        total += (between % 2 ? -sub : sub);
    }
    memo[key] = total;
    return total;
}

}  // namespace detail

// Irreducible character X^lambda evaluated at the class mu.
inline long long character(const Partition& lambda, const Partition& mu) {
    if (partition_sum(lambda) != partition_sum(mu))
        throw SizeMismatch("character: |lambda| != |mu|");
    int k = static_cast<int>(lambda.size());
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = lambda[i] + (k - 1 - i);
    std::vector<int> cycles = mu;  // consumed from the back (smallest first)
    std::sort(cycles.rbegin(), cycles.rend());
    static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);
    return detail::mn_character(beta, cycles, memo);
}

// Full character table of S_n, rows and columns indexed by partitions(n).
// Built once per n; immutable afterwards.
struct CharacterTable {
    int n;
    std::vector<Partition> parts;                 // row = lambda, col = mu
    std::vector<std::vector<long long>> values;   // values[row][col]

    long long at(std::size_t lambda_idx, std::size_t mu_idx) const {
        return values[lambda_idx][mu_idx];
    }
};

inline const CharacterTable& character_table(int n) {
    static std::map<int, CharacterTable> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    CharacterTable t;
    t.n = n;
    t.parts = partitions(n);
    t.values.resize(t.parts.size());
    for (std::size_t i = 0; i < t.parts.size(); ++i) {
        t.values[i].resize(t.parts.size());
        for (std::size_t j = 0; j < t.parts.size(); ++j)
            t.values[i][j] = character(t.parts[i], t.parts[j]);
    }
    return cache.emplace(n, std::move(t)).first->second;
}

// sum over lambda |- n with lambda_1 <= n-h-2 of X^lambda(mu1) X^lambda(mu2)
inline Int rodgers_main_term(int n, int h, const Partition& mu1, const Partition& mu2) {
    if (partition_sum(mu1) != n || partition_sum(mu2) != n)
        throw SizeMismatch("rodgers_main_term: cycle types must partition n");
    Int total = 0;
    const auto& tab = character_table(n);
    auto find_col = [&](const Partition& mu) {
        for (std::size_t j = 0; j < tab.parts.size(); ++j)
            if (tab.parts[j] == mu) return j;
        throw SizeMismatch("cycle type not found");
    };
    std::size_t c1 = find_col(mu1), c2 = find_col(mu2);
    for (std::size_t i = 0; i < tab.parts.size(); ++i) {
        if (tab.parts[i][0] > n - h - 2) continue;
        total += Int(tab.at(i, c1)) * tab.at(i, c2);
    }
    return total;
}

// dim of the top-weight cohomology piece: sum of dim(V_lambda)^2 over
// lambda_1 <= n-h-2, via the hook-length route (independent of characters).
inline Int dim_H(int n, int h) {
    Int total = 0;
    for (const auto& lambda : partitions(n)) {
        if (lambda[0] > n - h - 2) continue;
        Int d = dim_irrep(lambda);
        total += d * d;
    }
    return total;
}

}  // namespace ffsi

#endif  // FFSI_SYMGROUP_HPP
