#include "doctest.h"

#include <random>
#include <set>

#include "descent/linalg.hpp"

using namespace descent::linalg;

namespace {

using ModVec = std::vector<std::int64_t>;

std::set<ModVec> brute_span(const std::vector<ModVec>& vectors, std::size_t dim, std::int64_t p) {
  std::set<ModVec> out;
  std::vector<std::int64_t> coeff(vectors.size(), 0);
  while (true) {
    ModVec v(dim, 0);
    for (std::size_t k = 0; k < vectors.size(); ++k) {
      for (std::size_t i = 0; i < dim; ++i) v[i] = (v[i] + coeff[k] * vectors[k][i]) % p;
    }
    out.insert(v);
    std::size_t k = 0;
    while (k < coeff.size() && ++coeff[k] == p) coeff[k++] = 0;
    if (k == coeff.size()) break;
  }
  return out;
}

std::vector<ModVec> all_vectors(std::size_t dim, std::int64_t p) {
  std::vector<ModVec> out;
  ModVec v(dim, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < dim && ++v[i] == p) v[i++] = 0;
    if (i == dim) break;
  }
  return out;
}

BigInt det(const std::vector<std::vector<BigInt>>& m) {
  if (m.size() == 1) return m[0][0];
  BigInt sum = 0;
  for (std::size_t c = 0; c < m.size(); ++c) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < m.size(); ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    sum += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return sum;
}

std::size_t rank_by_minors(const std::vector<std::vector<BigInt>>& vectors, std::size_t dim) {
  const std::size_t rows = vectors.size();
  for (std::size_t k = std::min(rows, dim); k > 0; --k) {
    for (unsigned rmask = 0; rmask < (1U << rows); ++rmask) {
      if (static_cast<std::size_t>(__builtin_popcount(rmask)) != k) continue;
      for (unsigned cmask = 0; cmask < (1U << dim); ++cmask) {
        if (static_cast<std::size_t>(__builtin_popcount(cmask)) != k) continue;
        std::vector<std::vector<BigInt>> m;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!((rmask >> r) & 1U)) continue;
          std::vector<BigInt> row;
          for (std::size_t c = 0; c < dim; ++c) {
            if ((cmask >> c) & 1U) row.push_back(vectors[r][c]);
          }
          m.push_back(row);
        }
        if (det(m) != 0) return k;
      }
    }
  }
  return 0;
}

}  // namespace

TEST_CASE("integer echelon basics") {
  const std::vector<std::vector<BigInt>> unit = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(rank<IntegerArithmetic>(unit, 3) == 3);
  CHECK(in_span<IntegerArithmetic>({0, 0, 0}, {}, 3));
  CHECK(in_span<IntegerArithmetic>({0, 0, 0}, unit, 3));
  const std::vector<std::vector<BigInt>> a = {{2, 4, 6}, {1, 1, 1}};
  CHECK(rank<IntegerArithmetic>(a, 3) == 2);
  CHECK(in_span<IntegerArithmetic>({1, 3, 5}, a, 3));
  CHECK_FALSE(in_span<IntegerArithmetic>({1, 3, 6}, a, 3));
  CHECK(span_equal<IntegerArithmetic>(a, {{1, 2, 3}, {0, 1, 2}}, 3));
  CHECK_FALSE(span_equal<IntegerArithmetic>(a, {{1, 2, 3}}, 3));
}

TEST_CASE("rational rank equals the largest non-vanishing minor") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    const std::size_t count = rng() % 4;
    std::vector<std::vector<BigInt>> vectors(count, std::vector<BigInt>(dim));
    for (auto& v : vectors) {
      for (auto& x : v) x = entry(rng);
    }
    if (count >= 2 && trial % 4 == 0) {
      for (std::size_t i = 0; i < dim; ++i) vectors[1][i] = 2 * vectors[0][i];
    }
    CHECK(rank<IntegerArithmetic>(vectors, dim) == rank_by_minors(vectors, dim));
  }
}

TEST_CASE("modular span against exhaustive enumeration") {
  std::mt19937 rng(5);
  for (std::int64_t p : {2, 3, 5}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t dim = 1 + trial % 3;
      const std::size_t count = rng() % 4;
      std::uniform_int_distribution<std::int64_t> entry(0, p - 1);
      std::vector<ModVec> vectors(count, ModVec(dim));
      for (auto& v : vectors) {
        for (auto& x : v) x = entry(rng);
      }
      const ModularArithmetic arith{p};
      const auto span = brute_span(vectors, dim, p);
      std::size_t expected_rank = 0;
      for (std::size_t size = 1; size < span.size(); size *= static_cast<std::size_t>(p)) ++expected_rank;
      CHECK(rank(vectors, dim, arith) == expected_rank);
      for (const auto& v : all_vectors(dim, p)) CHECK(in_span(v, vectors, dim, arith) == (span.count(v) == 1));
      std::vector<ModVec> listed(span.begin(), span.end());
      CHECK(span_equal(vectors, listed, dim, arith));
    }
  }
}

TEST_CASE("modular reduction of negative entries") {
  const ModularArithmetic arith{3};
  CHECK(in_span<ModularArithmetic>({-1, -2}, {{1, 2}}, 2, arith));
  CHECK(rank<ModularArithmetic>({{3, 6}, {9, 12}}, 2, arith) == 0);
}
