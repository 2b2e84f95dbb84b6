#include <doctest.h>

#include <random>

#include "realog/smith.hpp"
#include "support/oracles.hpp"

using realog::ExecPolicy;
using realog::IntegerMatrix;
using realog::SmithForm;
using realog::smith_normal_form;

namespace {

std::vector<mpz_class> factors_of(const IntegerMatrix& m) {
    return smith_normal_form(m).invariant_factors;
}

void check_transforms(const IntegerMatrix& m) {
    SmithForm s = smith_normal_form(m, true);
    REQUIRE(s.left_transform.has_value());
    REQUIRE(s.right_transform.has_value());
    IntegerMatrix d = (*s.left_transform) * m * (*s.right_transform);
    CHECK(d == s.diagonal(m.rows(), m.cols()));
    CHECK(abs(realog::determinant(*s.left_transform)) == 1);
    CHECK(abs(realog::determinant(*s.right_transform)) == 1);
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
    CHECK(factors_of(IntegerMatrix::from_rows({{2, 4}, {6, 8}})) ==
          std::vector<mpz_class>{2, 4});
    CHECK(factors_of(IntegerMatrix::identity(3)) == std::vector<mpz_class>{1, 1, 1});
    CHECK(factors_of(IntegerMatrix(2, 3)) == std::vector<mpz_class>{});
    CHECK(factors_of(IntegerMatrix::from_rows({{6}})) == std::vector<mpz_class>{6});
    CHECK(factors_of(IntegerMatrix::from_rows({{2, 0}, {0, 3}})) ==
          std::vector<mpz_class>{1, 6});
    CHECK(factors_of(IntegerMatrix::from_rows({{0, 0}, {0, 0}})) == std::vector<mpz_class>{});
}

TEST_CASE("smith normal form of empty shapes") {
    CHECK(factors_of(IntegerMatrix(0, 0)).empty());
    CHECK(factors_of(IntegerMatrix(0, 5)).empty());
    CHECK(factors_of(IntegerMatrix(4, 0)).empty());
    SmithForm s = smith_normal_form(IntegerMatrix(0, 3), true);
    CHECK(s.rank == 0);
    CHECK(s.right_transform->rows() == 3);
}

TEST_CASE("smith normal form divisibility chain and sign normalization") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
        IntegerMatrix m = oracles::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, -9, 9);
        SmithForm s = smith_normal_form(m);
        for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) {
            CHECK(s.invariant_factors[i] > 0);
            if (i > 0)
                CHECK(mpz_divisible_p(s.invariant_factors[i].get_mpz_t(),
                                      s.invariant_factors[i - 1].get_mpz_t()));
        }
    }
}

TEST_CASE("smith normal form matches naive reduction and minor-gcd oracles") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 200; ++it) {
        std::size_t r = 1 + rng() % 6;
        std::size_t c = 1 + rng() % 6;
        IntegerMatrix m = oracles::random_matrix(rng, r, c, -9, 9);
        std::vector<mpz_class> got = factors_of(m);
        CHECK(got == oracles::naive_invariant_factors(m));
        CHECK(got == oracles::minor_gcd_factors(m));
    }
}

TEST_CASE("smith normal form is deterministic and policy independent") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 20; ++it) {
        IntegerMatrix m = oracles::random_matrix(rng, 8, 7, -20, 20);
        SmithForm a = smith_normal_form(m, true, ExecPolicy::Parallel);
        SmithForm b = smith_normal_form(m, true, ExecPolicy::Parallel);
        SmithForm c = smith_normal_form(m, true, ExecPolicy::Serial);
        CHECK(a.invariant_factors == b.invariant_factors);
        CHECK(*a.left_transform == *b.left_transform);
        CHECK(*a.right_transform == *b.right_transform);
        CHECK(a.invariant_factors == c.invariant_factors);
        CHECK(*a.left_transform == *c.left_transform);
        CHECK(*a.right_transform == *c.right_transform);
    }
}

TEST_CASE("unimodular transforms reconstruct the diagonal") {
    check_transforms(IntegerMatrix::from_rows({{2, 4}, {6, 8}}));
    check_transforms(IntegerMatrix::from_rows({{0, 0, 0}, {0, 5, 0}}));
    std::mt19937_64 rng(1234);
    for (int it = 0; it < 40; ++it)
        check_transforms(oracles::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, -9, 9));
    check_transforms(oracles::random_matrix(rng, 12, 9, -30, 30));
}

TEST_CASE("determinant magnitude equals product of invariant factors") {
    std::mt19937_64 rng(5);
    int seen = 0;
    while (seen < 40) {
        std::size_t n = 2 + rng() % 4;
        IntegerMatrix m = oracles::random_matrix(rng, n, n, -9, 9);
        mpz_class det = realog::determinant(m);
        if (det == 0) continue;
        ++seen;
        CHECK(det == oracles::laplace_det(m, [&] {
                  std::vector<std::size_t> v(n);
                  for (std::size_t i = 0; i < n; ++i) v[i] = i;
                  return v;
              }(),
                                          [&] {
                                              std::vector<std::size_t> v(n);
                                              for (std::size_t i = 0; i < n; ++i) v[i] = i;
                                              return v;
                                          }()));
        mpz_class prod = 1;
        for (const auto& f : factors_of(m)) prod *= f;
        CHECK(abs(det) == prod);
    }
}

TEST_CASE("rank over Q and rank mod 2 relate through the invariant factors") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 60; ++it) {
        IntegerMatrix m = oracles::random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, -9, 9);
        SmithForm s = smith_normal_form(m);
        CHECK(realog::rank_q(m) == s.rank);
        std::size_t odd = 0;
        for (const auto& f : s.invariant_factors)
            if (mpz_odd_p(f.get_mpz_t())) ++odd;
        CHECK(realog::rank_mod2(m) == odd);
    }
}
