#include "doctest.h"

#include <random>

#include "ffsi/arithfun.hpp"

using namespace ffsi;

namespace {

Poly<BaseField> P(const FieldTower& t, std::vector<std::int64_t> ints) {
    std::vector<BaseElem> cs;
    for (auto v : ints) cs.push_back(t.base.embed(t.fp.from_int(v)));
    return poly_from_coeffs(t.base, std::move(cs));
}

std::vector<Permutation> all_permutations(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool is_squarefree_type(const FactorizationType& type) {
    for (auto& [d, m] : type)
        if (m > 1) return false;
    return true;
}

}  // namespace

TEST_CASE("lambda_fn") {
    auto t2 = build_tower(2, 1, 1);
    auto t5 = build_tower(5, 1, 1);
    CHECK(lambda_fn(t2.base, P(t2, {1, 1, 1})) == 2);          // irreducible
    CHECK(lambda_fn(t5.base, P(t5, {0, 0, 0, 0, 1})) == 1);    // x^4
    CHECK(lambda_fn(t2.base, P(t2, {0, 1, 1})) == 0);          // x(x+1)
    CHECK(lambda_fn(t2.base, P(t2, {1, 0, 0, 1, 1})) == 4);    // irreducible quartic
    CHECK(lambda_fn(t2.base, P(t2, {1, 0, 0, 0, 1})) == 1);    // (x+1)^4
}

TEST_CASE("mu_fn") {
    auto t2 = build_tower(2, 1, 1);
    auto t5 = build_tower(5, 1, 1);
    CHECK(mu_fn(t2.base, P(t2, {1, 1, 1})) == -1);
    CHECK(mu_fn(t5.base, P(t5, {9, 6, 1})) == 0);  // (x+3)^2
    // x(x+1)(x^2+x+1) = x^4 + x over F_2: three irreducible factors
    CHECK(mu_fn(t2.base, P(t2, {0, 1, 0, 0, 1})) == -1);
    CHECK(mu_fn(t2.base, P(t2, {0, 1, 1})) == 1);
}

TEST_CASE("x_lambda_fn") {
    auto t3 = build_tower(3, 1, 1);
    auto& K = t3.base;
    for (Int i = 0; i < 27; ++i) {
        auto f = monic_from_index(K, 3, i);
        auto type = factorization_type(K, f);
        if (!is_squarefree_type(type)) {
            for (auto& lam : partitions(3)) CHECK(x_lambda_fn(K, lam, f) == 0);
            continue;
        }
        Partition tau;
        for (auto& [d, m] : type) tau.push_back(d);
        std::sort(tau.begin(), tau.end(), std::greater<int>());
        CHECK(x_lambda_fn(K, {3}, f) == 1);
        CHECK(x_lambda_fn(K, {1, 1, 1}, f) == sign_of_class(tau));
        CHECK(x_lambda_fn(K, {2, 1}, f) == character({2, 1}, tau));
    }
    CHECK_THROWS_AS(x_lambda_fn(K, Partition{2}, P(t3, {0, 0, 0, 1})), SizeMismatch);
}

TEST_CASE("delta_count: closed-form rows") {
    auto t5 = build_tower(5, 1, 1);
    auto t2 = build_tower(2, 1, 1);
    // squarefree fully split, sigma = id: x(x-1)(x+1)
    CHECK(delta_count(t5.base, P(t5, {0, -1, 0, 1}), Permutation{0, 1, 2}) == 6);
    // irreducible degree n, sigma an n-cycle
    CHECK(delta_count(t2.base, P(t2, {1, 0, 0, 1, 1}), Permutation{1, 2, 3, 0}) == 4);
    // (x-a)^2, sigma = id or (12)
    CHECK(delta_count(t5.base, P(t5, {9, 6, 1}), Permutation{0, 1}) == 1);
    CHECK(delta_count(t5.base, P(t5, {9, 6, 1}), Permutation{1, 0}) == 1);
    // mismatched sizes
    CHECK_THROWS_AS(delta_count(t5.base, P(t5, {9, 6, 1}), Permutation{0, 1, 2}), SizeMismatch);
    // roots outside F_q, sigma = id
    CHECK(delta_count(t2.base, P(t2, {1, 1, 1}), Permutation{0, 1}) == 0);
}

TEST_CASE("delta_count vs brute-force oracle, exhaustive small cases") {
    long long skipped = 0;
    for (std::int64_t p : {2, 3}) {
        auto t = build_tower(p, 1, 1);
        auto& K = t.base;
        for (int n = 2; n <= 4; ++n) {
            auto perms = all_permutations(n);
            Int total = ipow(K.size(), static_cast<unsigned>(n));
            for (Int i = 0; i < total; ++i) {
                auto f = monic_from_index(K, n, i);
                auto type = factorization_type(K, f);
                for (auto& s : perms) {
                    Int fast = delta_count(K, f, s);
                    CHECK(fast == delta_count_from_type(type, cycle_type(s)));
                    // squarefree closed form
                    if (is_squarefree_type(type)) {
                        Partition tau;
                        for (auto& [d, m] : type) tau.push_back(d);
                        std::sort(tau.begin(), tau.end(), std::greater<int>());
                        CHECK(fast == (cycle_type(s) == tau ? centralizer_size(tau) : Int(0)));
                    }
                    try {
                        Int slow = delta_count_oracle(K, f, s);
                        CHECK(fast == slow);
                    } catch (const BudgetExceeded&) {
                        ++skipped;  // q^{dn} > 10^6 (irreducible quartics over F_3)
                    }
                }
            }
        }
    }
    CHECK(skipped == 18 * 24);  // the 18 monic irreducible quartics over F_3
}

TEST_CASE("delta_profile: weighted class sum counts all valid tuples") {
    auto t2 = build_tower(2, 1, 1);
    auto& K = t2.base;
    for (int n = 2; n <= 4; ++n) {
        Int total = ipow(K.size(), static_cast<unsigned>(n));
        auto perms = all_permutations(n);
        for (Int i = 0; i < total; ++i) {
            auto f = monic_from_index(K, n, i);
            auto prof = delta_profile(K, f);
            Int lhs = 0;
            for (auto& [C, D] : prof) lhs += class_size(C) * D;
            Int rhs = 0;
            for (auto& s : perms) rhs += delta_count(K, f, s);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("evaluate_vmt: the standard family") {
    for (std::int64_t p : {2, 3}) {
        auto t = build_tower(p, 1, 1);
        auto& K = t.base;
        for (int n = 2; n <= 4; ++n) {
            auto one = one_vmt(n);
            auto lam = lambda_vmt(n);
            auto mu = mu_vmt(n);
            auto lm1 = lambda_minus_one_vmt(n);
            Int total = ipow(K.size(), static_cast<unsigned>(n));
            for (Int i = 0; i < total; ++i) {
                auto f = monic_from_index(K, n, i);
                CHECK(evaluate_vmt(K, one, f) == 1);
                CHECK(evaluate_vmt(K, lam, f) == Rat(lambda_fn(K, f)));
                CHECK(evaluate_vmt(K, mu, f) == Rat(mu_fn(K, f)));
                CHECK(evaluate_vmt(K, lm1, f) == Rat(lambda_fn(K, f)) - 1);
            }
        }
    }
    // (x-a)^2: the even/odd pairing kills mu exactly
    auto t5 = build_tower(5, 1, 1);
    CHECK(evaluate_vmt(t5.base, mu_vmt(2), P(t5, {9, 6, 1})) == 0);
}

TEST_CASE("vmt_from_squarefree_values, x_lambda_vmt, phi_sigma_vmt") {
    auto t3 = build_tower(3, 1, 1);
    auto& K = t3.base;
    int n = 3;
    std::map<Partition, Rat> ones;
    for (auto& C : partitions(n)) ones[C] = 1;
    auto phi1 = vmt_from_squarefree_values(n, ones);
    for (Int i = 0; i < 27; ++i) {
        auto f = monic_from_index(K, n, i);
        auto type = factorization_type(K, f);
        if (!is_squarefree_type(type)) continue;
        Partition tau;
        for (auto& [d, m] : type) tau.push_back(d);
        std::sort(tau.begin(), tau.end(), std::greater<int>());
        CHECK(evaluate_vmt(K, phi1, f) == 1);
        for (auto& lam : partitions(n))
            CHECK(evaluate_vmt(K, x_lambda_vmt(lam), f) == Rat(x_lambda_fn(K, lam, f)));
        for (auto& C : partitions(n)) {
            Rat expect = C == tau ? Rat(centralizer_size(C)) : Rat(0);
            CHECK(evaluate_vmt(K, phi_sigma_vmt(C), f) == expect);
        }
    }
}

TEST_CASE("vector-space structure") {
    auto t2 = build_tower(2, 1, 1);
    auto& K = t2.base;
    int n = 4;
    Rat a(3, 7), b(-5, 2);
    auto combo = vmt_add(vmt_scale(a, lambda_vmt(n)), vmt_scale(b, mu_vmt(n)));
    for (Int i = 0; i < 16; ++i) {
        auto f = monic_from_index(K, n, i);
        CHECK(evaluate_vmt(K, combo, f) ==
              a * evaluate_vmt(K, lambda_vmt(n), f) + b * evaluate_vmt(K, mu_vmt(n), f));
    }
}
