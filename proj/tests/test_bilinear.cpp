#include <doctest.h>

#include <random>

#include "gtmm/bilinear.hpp"
#include "gtmm/io.hpp"

using namespace gtmm;

TEST_CASE("the trivial computation multiplies scalars") {
  const auto comp = naive_computation({1, 1, 1});
  CHECK(comp.length() == 1);
  RationalMatrix a(1, 1), b(1, 1);
  a.at(0, 0) = 2;
  b.at(0, 0) = 3;
  CHECK(evaluate_bilinear(comp, a, b).at(0, 0) == 6);
}

TEST_CASE("naive computations exist for every shape, with length m*p*q") {
  const MatMulTensor shapes[] = {{2, 3, 4}, {3, 4, 2}, {4, 2, 3}, {1, 5, 1}};
  std::mt19937_64 rng(41);
  for (const MatMulTensor& s : shapes) {
    const auto comp = naive_computation(s);
    CHECK(comp.length() == s.size());
    const auto a = random_integer_matrix(s.m, s.p, -9, 9, rng);
    const auto b = random_integer_matrix(s.p, s.q, -9, 9, rng);
    CHECK(evaluate_bilinear(comp, a, b) == naive_product(a, b));
  }
  // Permuted shapes build naive computations of the same length.
  CHECK(naive_computation({2, 3, 4}).length() ==
        naive_computation({4, 3, 2}).length());
}

TEST_CASE("the seven-product scheme") {
  const BilinearComputation& s = strassen_222();
  CHECK(s.length() == 7);

  SUBCASE("hand-multiplied example") {
    RationalMatrix a(2, 2), b(2, 2);
    a.at(0, 0) = 1; a.at(0, 1) = 1; a.at(1, 0) = 0; a.at(1, 1) = 1;
    b.at(0, 0) = 1; b.at(0, 1) = 0; b.at(1, 0) = 1; b.at(1, 1) = 1;
    const auto c = evaluate_bilinear(s, a, b);
    CHECK(c.at(0, 0) == 2);
    CHECK(c.at(0, 1) == 1);
    CHECK(c.at(1, 0) == 1);
    CHECK(c.at(1, 1) == 1);
  }

  SUBCASE("random verification against the naive product") {
    CHECK(verify_computation(s, 200, 1234));
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_integer_matrix(2, 2, -9, 9, rng);
      const auto b = random_integer_matrix(2, 2, -9, 9, rng);
      CHECK(evaluate_bilinear(s, a, b) == naive_product(a, b));
    }
  }

  SUBCASE("exactly seven counted multiplications per evaluation") {
    std::mt19937_64 rng(56);
    OpCount ops;
    (void)evaluate_bilinear(s, random_integer_matrix(2, 2, -9, 9, rng),
                            random_integer_matrix(2, 2, -9, 9, rng), &ops);
    CHECK(ops.scalar_mults == 7);
  }
}

TEST_CASE("verification catches a corrupted coefficient") {
  io::json j = io::computation_to_json(strassen_222());
  j["terms"][3]["w"][0][0] = 2;  // was 1
  const auto corrupted = io::computation_from_json(j);
  CHECK_FALSE(verify_computation(corrupted, 100, 7));
  CHECK_THROWS_AS((void)io::computation_from_json(j, /*verify_trials=*/32),
                  ParseError);
}

TEST_CASE("verification is deterministic under a fixed seed") {
  const BilinearComputation& s = strassen_222();
  CHECK(verify_computation(s, 50, 99) == verify_computation(s, 50, 99));
  CHECK_THROWS_AS((void)verify_computation(s, 0, 1), DomainError);
}

TEST_CASE("evaluation rejects mismatched shapes") {
  const BilinearComputation& s = strassen_222();
  CHECK_THROWS_AS(
      (void)evaluate_bilinear(s, RationalMatrix(2, 3), RationalMatrix(3, 2)),
      DomainError);
}

TEST_CASE("rank power bounds are exact big integers") {
  CHECK(rank_power_bound(7, 2, 1) == 7);
  CHECK(rank_power_bound(7, 2, 3) == 343);
  // 7^40 does not fit 64 bits; the value must not wrap.
  const BigInt big = rank_power_bound(7, 2, 40);
  CHECK(big.get_str() == "6366805760909027985741435139224001");
  CHECK_THROWS_AS((void)rank_power_bound(7, 2, 0), DomainError);
  CHECK_THROWS_AS((void)rank_power_bound(0, 2, 1), DomainError);
  CHECK_THROWS_AS((void)rank_power_bound(7, 1, 1), DomainError);
}
