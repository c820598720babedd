// Acceptance suite: run as `acceptance <criterion>` with criterion in
// A1..A15. Prints one "<criterion> PASS|FAIL" line and exits nonzero on
// failure. Diagnostic values for the trend criteria are printed first.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ffsi/arithfun.hpp"
#include "ffsi/geometry.hpp"
#include "ffsi/gf.hpp"
#include "ffsi/intervals.hpp"
#include "ffsi/poly.hpp"
#include "ffsi/symgroup.hpp"

using namespace ffsi;

namespace {

Permutation idperm(int n) {
    Permutation s(n);
    for (int i = 0; i < n; ++i) s[i] = i;
    return s;
}

// One-line permutation with the given cycle type, cycles laid out in order.
Permutation perm_of_type(const Partition& ct) {
    Permutation s;
    int base = 0;
    for (int len : ct) {
        for (int i = 0; i < len; ++i) s.push_back(base + (i + 1) % len);
        base += len;
    }
    return s;
}

bool is_squarefree_type(const FactorizationType& t) {
    for (auto& [d, m] : t)
        if (m > 1) return false;
    return true;
}

double to_d(const Rat& r) { return r.convert_to<double>(); }

// The (p, r) towers realizing the small prime-power grid.
const std::vector<std::pair<std::int64_t, int>> kSmallGrid = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}};

bool a1() {
    for (auto [p, r] : kSmallGrid) {
        auto t = build_tower(p, r, 1);
        for (int n = 2; n <= 6; ++n) {
            Int qn = ipow(t.base.size(), static_cast<unsigned>(n));
            if (qn > 1000000) continue;
            if (global_sum(t.base, lambda_vmt(n), n) != Rat(qn)) return false;
        }
    }
    return true;
}

bool a2() {
    for (auto [p, r] : kSmallGrid) {
        auto t = build_tower(p, r, 1);
        for (int n = 2; n <= 6; ++n) {
            if (ipow(t.base.size(), static_cast<unsigned>(n)) > 1000000) continue;
            if (global_sum(t.base, mu_vmt(n), n) != 0) return false;
        }
    }
    return true;
}

bool a3() {
    std::mt19937_64 rng(20260826);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    int n = 4;
    auto parts = partitions(n);
    for (int trial = 0; trial < 20; ++trial) {
        VonMangoldtType phi;
        phi.n = n;
        Rat total = 0;
        for (auto& C : parts) {
            Rat w(num(rng), den(rng));
            phi.weights[C] = w;
            total += w;
        }
        for (std::int64_t p : {2, 3, 5}) {
            auto t = build_tower(p, 1, 1);
            Rat expect = total * Rat(ipow(t.base.size(), static_cast<unsigned>(n)));
            if (global_sum(t.base, phi, n) != expect) return false;
        }
    }
    return true;
}

template <class F, class Draw>
bool det_trials(const F& K, Draw draw, int trials) {
    std::mt19937_64 rng(97);
    for (int s = 1; s <= 6; ++s)
        for (int r = s; r <= 6; ++r)
            for (int t = 0; t < trials; ++t) {
                std::vector<typename F::Elem> xs;
                for (int i = 0; i < r; ++i) xs.push_back(draw(rng));
                std::vector<int> all(r);
                for (int i = 0; i < r; ++i) all[i] = i;
                std::shuffle(all.begin(), all.end(), rng);
                std::vector<int> cols(all.begin(), all.begin() + s);
                std::sort(cols.begin(), cols.end());
                auto lhs = b_det(K, xs, cols);
                auto rhs = K.one();
                for (int a = 0; a < s; ++a)
                    for (int b = a + 1; b < s; ++b)
                        rhs = K.mul(rhs, K.sub(xs[cols[a]], xs[cols[b]]));
                if (!K.eq(lhs, rhs)) return false;
            }
    return true;
}

bool a4() {
    auto t101 = build_tower(101, 1, 1);
    auto t10007 = build_tower(10007, 1, 1);
    RationalField Q;
    std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
    bool ok = det_trials(t101.base, [&](std::mt19937_64& rng) { return t101.base.random(rng); }, 500);
    ok = ok && det_trials(t10007.base,
                          [&](std::mt19937_64& rng) { return t10007.base.random(rng); }, 500);
    ok = ok && det_trials(Q, [&](std::mt19937_64& rng) { return Rat(num(rng), den(rng)); }, 500);
    return ok;
}

bool a5() {
    RationalField Q;
    std::vector<Rat> pool = {0, 1, Rat(-2), Rat(1, 3)};
    for (int r = 1; r <= 5; ++r) {
        std::vector<int> pick(r, 0);
        while (true) {
            std::vector<Rat> xs;
            for (int i = 0; i < r; ++i) xs.push_back(pool[pick[i]]);
            int distinct = 0;
            {
                auto sorted = xs;
                std::sort(sorted.begin(), sorted.end());
                sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                distinct = static_cast<int>(sorted.size());
            }
            for (int s = 1; s <= r; ++s) {
                bool full = rank(Q, a_matrix(Q, xs, s)) == s;
                if (full != (distinct >= s)) return false;
            }
            int i = r - 1;
            while (i >= 0 && pick[i] == 3) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < r; ++j) pick[j] = pick[i];
        }
    }
    return true;
}

bool a6() {
    const std::vector<std::pair<std::int64_t, int>> grid = {
        {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
    for (auto [q, n] : grid) {
        auto t = build_tower(q, 1, 1);
        auto& K = t.base;
        Int total = ipow(K.size(), static_cast<unsigned>(n));
        for (Int i = 0; i < total; ++i) {
            auto f = monic_from_index(K, n, i);
            Permutation s = idperm(n);
            std::sort(s.begin(), s.end());
            do {
                if (delta_count(K, f, s) != delta_count_oracle(K, f, s)) return false;
            } while (std::next_permutation(s.begin(), s.end()));
        }
    }
    return true;
}

bool a7() {
    {
        auto t = build_tower(2, 2, 1);
        int n = 4, h = 1;
        std::int64_t Q = 4, rows = 256;
        std::vector<std::vector<TopElem>> row(rows);
        std::vector<std::vector<std::uint64_t>> key(rows);
        for (std::int64_t i = 0; i < rows; ++i) {
            std::int64_t rem = i;
            for (int j = 0; j < n; ++j) {
                row[i].push_back(t.top.from_index(rem % Q));
                rem /= Q;
            }
            for (int j = 1; j <= n - h - 1; ++j)
                key[i].push_back(t.top.index(esp(t.top, j, row[i])));
        }
        for (std::int64_t a = 0; a < rows; ++a)
            for (std::int64_t b = 0; b < rows; ++b) {
                if (key[a] != key[b]) continue;
                ConePoint pt;
                pt.m = 2;
                pt.n = n;
                pt.coords = {row[a], row[b]};
                auto [rank_def, few] = singular_criterion_m2(t.top, pt, h);
                if (rank_def != few) return false;
            }
    }
    auto t = build_tower(5, 1, 2);
    const std::vector<std::pair<int, int>> cases = {{5, 1}, {5, 2}, {6, 1}};
    for (auto [n, h] : cases) {
        auto pts = sample_on_cone_points(t, n, h, 100000, 40 + n * 10 + h);
        for (auto& pt : pts) {
            auto [rank_def, few] = singular_criterion_m2(t.top, pt, h);
            if (rank_def != few) return false;
        }
    }
    return true;
}

bool a8() {
    auto t = build_tower(2, 1, 1);
    auto& K = t.base;
    const std::vector<std::pair<Partition, Partition>> pairs = {
        {{1, 1, 1, 1}, {1, 1, 1, 1}},
        {{1, 1, 1, 1}, {2, 1, 1}},
        {{4}, {4}},
        {{2, 1, 1}, {3, 1}},
        {{3, 1}, {4}},
    };
    for (auto& [c1, c2] : pairs) {
        std::vector<Permutation> sig = {perm_of_type(c1), perm_of_type(c2)};
        if (constrained_count(K, sig, 4, 1).count != direct_count_oracle(K, sig, 4, 1))
            return false;
    }
    return true;
}

bool a9() {
    const std::vector<std::pair<std::int64_t, int>> grid = {
        {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}};
    const std::vector<std::pair<Partition, Partition>> pairs = {
        {{1, 1, 1, 1}, {1, 1, 1, 1}},
        {{2, 1, 1}, {2, 1, 1}},
        {{4}, {4}},
        {{3, 1}, {2, 2}},
        {{2, 2}, {4}},
    };
    bool ok = true;
    for (auto [p, r] : grid) {
        auto t = build_tower(p, r, 1);
        auto& K = t.base;
        double q = K.size().convert_to<double>();
        std::vector<Permutation> ids = {idperm(4), idperm(4)};
        double ratio = to_d(constrained_count(K, ids, 4, 1).normalized);
        double lo = 1e300, hi = -1e300;
        for (auto& [c1, c2] : pairs) {
            std::vector<Permutation> sig = {perm_of_type(c1), perm_of_type(c2)};
            double v = to_d(constrained_count(K, sig, 4, 1).normalized);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        std::printf("A9 q=%g |ratio-1|=%.4f spread=%.4f tol=%.4f\n", q,
                    std::abs(ratio - 1), hi - lo, 5 / q);
        if (std::abs(ratio - 1) > 5 / q) ok = false;
        if (hi - lo > 5 / q) ok = false;
    }
    return ok;
}

bool variance_trend(const VonMangoldtType& phi, int n, int h, double target,
                    const char* tag) {
    const std::vector<std::pair<std::int64_t, int>> grid = {{3, 2}, {5, 2}, {7, 2}};
    bool ok = true;
    for (auto [p, r] : grid) {
        auto t = build_tower(p, r, 1);
        double q = t.base.size().convert_to<double>();
        Rat var = variance(t.base, phi, n, h, 300000000);
        double dev = std::abs(to_d(var) / std::pow(q, h + 1) - target);
        double tol = 5 / std::sqrt(q);
        std::printf("%s q=%g deviation=%.4f tol=%.4f\n", tag, q, dev, tol);
        if (dev > tol) ok = false;
    }
    return ok;
}

bool a10() { return variance_trend(lambda_vmt(5), 5, 1, 2.0, "A10"); }
bool a11() { return variance_trend(mu_vmt(5), 5, 0, 1.0, "A11"); }

bool a12() {
    const std::vector<std::pair<Partition, Partition>> pairs = {
        {{1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}},
        {{5}, {5}},
        {{2, 1, 1, 1}, {2, 1, 1, 1}},
        {{3, 2}, {5}},
    };
    const std::vector<std::pair<std::int64_t, int>> grid = {{3, 2}, {5, 2}, {7, 2}};
    bool ok = true;
    for (auto [p, r] : grid) {
        auto t = build_tower(p, r, 1);
        for (auto& [c1, c2] : pairs) {
            auto rep = covariance_vs_character_sum(t.base, c1, c2, 5, 0, 300000000);
            std::printf("A12 q=%lld pair=(%d..,%d..) residual=%.4f\n",
                        static_cast<long long>(p * (r == 2 ? p : 1)), c1[0], c2[0],
                        rep.residual);
            if (std::abs(rep.residual) > 10) ok = false;
        }
    }
    return ok;
}

bool a13() {
    const std::vector<std::int64_t> ps = {5, 7, 11, 13};
    bool ok = true;
    for (std::int64_t p : ps) {
        auto t = build_tower(p, 1, 1);
        double q = static_cast<double>(p);
        double norm = std::pow(q, 4.0);
        auto lm1 = lambda_minus_one_vmt(4);
        auto mu = mu_vmt(4);
        double m1 = std::abs(to_d(moment(t.base, {lm1, lm1, lm1}, 4, 1).raw_sum)) / norm;
        double m2 = std::abs(to_d(moment(t.base, {mu, mu, mu}, 4, 1).raw_sum)) / norm;
        std::printf("A13 q=%g |moment(lambda-1)|/q^4=%.5f |moment(mu)|/q^4=%.5f\n", q, m1,
                    m2);
        if (m1 > 10 || m2 > 10) ok = false;
    }
    return ok;
}

bool a14() {
    for (int n = 2; n <= 8; ++n) {
        Partition id(n, 1);
        for (int h = 0; h <= n - 2; ++h)
            if (dim_H(n, h) != rodgers_main_term(n, h, id, id)) return false;
    }
    for (int n = 1; n <= 8; ++n) {
        auto parts = partitions(n);
        Int nf = factorial(static_cast<unsigned>(n));
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = a; b < parts.size(); ++b) {
                Int row = 0;
                for (auto& mu : parts)
                    row += class_size(mu) * Int(character(parts[a], mu)) *
                           Int(character(parts[b], mu));
                if (row != (a == b ? nf : Int(0))) return false;
                Int col = 0;
                for (auto& lam : parts)
                    col += Int(character(lam, parts[a])) * Int(character(lam, parts[b]));
                if (col != (a == b ? centralizer_size(parts[a]) : Int(0))) return false;
            }
    }
    return true;
}

bool a15() {
    for (std::int64_t p : {2, 3}) {
        auto t = build_tower(p, 1, 1);
        auto& K = t.base;
        for (int n = 1; n <= 4; ++n) {
            auto lam = lambda_vmt(n);
            auto mu = mu_vmt(n);
            auto one = one_vmt(n);
            auto parts = partitions(n);
            std::vector<VonMangoldtType> phis;
            for (auto& C : parts) phis.push_back(phi_sigma_vmt(C));
            Int total = ipow(K.size(), static_cast<unsigned>(n));
            for (Int i = 0; i < total; ++i) {
                auto f = monic_from_index(K, n, i);
                auto type = factorization_type(K, f);
                if (!is_squarefree_type(type)) {
                    if (evaluate_vmt(K, mu, f) != 0) return false;
                    continue;
                }
                if (evaluate_vmt(K, lam, f) != Rat(lambda_fn(K, f))) return false;
                if (evaluate_vmt(K, mu, f) != Rat(mu_fn(K, f))) return false;
                if (evaluate_vmt(K, one, f) != 1) return false;
                for (std::size_t ci = 0; ci < parts.size(); ++ci)
                    if (evaluate_vmt(K, phis[ci], f) !=
                        Rat(delta_count_from_type(type, parts[ci])))
                        return false;
            }
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <A1..A15>\n";
        return 2;
    }
    std::map<std::string, std::function<bool()>> crits = {
        {"A1", a1},   {"A2", a2},   {"A3", a3},   {"A4", a4},   {"A5", a5},
        {"A6", a6},   {"A7", a7},   {"A8", a8},   {"A9", a9},   {"A10", a10},
        {"A11", a11}, {"A12", a12}, {"A13", a13}, {"A14", a14}, {"A15", a15},
    };
    std::string name = argv[1];
    auto it = crits.find(name);
    if (it == crits.end()) {
        std::cerr << "unknown criterion: " << name << "\n";
        return 2;
    }
    bool pass = false;
    try {
        pass = it->second();
    } catch (const std::exception& e) {
        std::cout << name << " exception: " << e.what() << "\n";
    }
    std::cout << name << (pass ? " PASS" : " FAIL") << std::endl;
    return pass ? 0 : 1;
}
