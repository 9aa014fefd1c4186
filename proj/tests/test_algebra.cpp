#include "doctest.h"

#include <random>

#include "descent/algebra.hpp"
#include "descent/characters.hpp"

using namespace descent;

namespace {

std::shared_ptr<const StructureTable> table_of(GroupType type, int n) {
  return std::make_shared<const StructureTable>(build_table(n, type));
}

AlgebraElement B(const std::shared_ptr<const StructureTable>& t, const std::string& label,
                 std::optional<int> p = {}) {
  return AlgebraElement::basis(t, parse_label(label, t->type(), t->rank()), p);
}

}  // namespace

TEST_CASE("coset representatives") {
  const CoxeterGroup d3(CoxeterSystem(GroupType::D, 3));
  const GeneratorSet S = d3.system().generators();
  CHECK(coset_reps(d3, S) == std::vector<std::size_t>{d3.identity_index()});
  CHECK(coset_reps(d3, GeneratorSet{}).size() == 24);
  CHECK(coset_reps(d3, GeneratorSet{1}).size() == 12);
  CHECK(coset_reps(d3, GeneratorSet{1}).size() * parabolic_subgroup(d3, GeneratorSet{1}).size() == d3.size());
  for (const auto& w : coset_reps(3, GeneratorSet{0, 2})) CHECK((right_descent_set(w) & GeneratorSet{0, 2}).empty());
}

TEST_CASE("direct structure constants") {
  const CoxeterGroup d4(CoxeterSystem(GroupType::D, 4));
  const GeneratorSet S = d4.system().generators();
  CHECK(structure_constant_direct(d4, {}, {}, {}) == 192);
  CHECK(structure_constant_direct(d4, S, S, S) == 1);
  for (std::size_t d = 0; d < d4.system().subset_count(); ++d) {
    const GeneratorSet J = d4.system().subset_at(d);
    const auto square = extract_coefficients(d4, multiply_in_group_algebra(d4, J, J));
    CHECK(square[d] == structure_constant_direct(d4, J, J, J));
  }
}

TEST_CASE("group algebra products and extraction") {
  const CoxeterGroup d3(CoxeterSystem(GroupType::D, 3));
  const CoxeterSystem& system = d3.system();
  const GeneratorSet S = system.generators();

  const auto ee = multiply_in_group_algebra(d3, S, S);
  for (std::size_t w = 0; w < d3.size(); ++w) CHECK(ee.coefficients[w] == (w == d3.identity_index() ? 1 : 0));

  for (std::size_t d = 0; d < system.subset_count(); ++d) {
    const GeneratorSet K = system.subset_at(d);
    CHECK(multiply_in_group_algebra(d3, S, K) == coset_sum(d3, K));
  }

  GroupAlgebraElement ones{std::vector<std::int64_t>(d3.size(), 1)};
  auto c = extract_coefficients(d3, ones);
  CHECK(c[system.dense_index(GeneratorSet{})] == 1);
  CHECK(std::count(c.begin(), c.end(), 0) == static_cast<std::ptrdiff_t>(c.size()) - 1);
  c = extract_coefficients(d3, coset_sum(d3, S));
  CHECK(c[system.dense_index(S)] == 1);

  for (std::size_t j = 0; j < system.subset_count(); ++j) {
    for (std::size_t k = 0; k < system.subset_count(); ++k) {
      const auto got = extract_coefficients(d3, multiply_in_group_algebra(d3, system.subset_at(j), system.subset_at(k)));
      CHECK(got == structure_constants_direct(d3, system.subset_at(j), system.subset_at(k)));
    }
  }

  GroupAlgebraElement bad{std::vector<std::int64_t>(d3.size(), 0)};
  bad.coefficients[d3.index_of(generator(3, 1))] = 1;
  CHECK_THROWS_AS(extract_coefficients(d3, bad), SpanError);
}

TEST_CASE("table constructions agree") {
  for (int n = 2; n <= 4; ++n) {
    const CoxeterGroup group(CoxeterSystem(GroupType::D, n));
    const auto sweep = solomon_constants_by_sweep(group);
    CHECK(sweep == solomon_constants_by_definition(group));
    CHECK(sweep == solomon_constants_by_group_algebra(group));
    CHECK(sweep == solomon_constants_by_sweep(group, 3));
  }
}

TEST_CASE("identity, counting identity, associativity") {
  for (int n = 2; n <= 4; ++n) {
    const CoxeterGroup group(CoxeterSystem(GroupType::D, n));
    const auto t = std::make_shared<const StructureTable>(make_table(solomon_constants_by_sweep(group), TableMethod::Sweep));
    CHECK(t->label(t->identity_index()).parts.empty());
    std::vector<std::int64_t> size(t->dimension());
    for (std::size_t i = 0; i < t->dimension(); ++i) {
      size[i] = static_cast<std::int64_t>(coset_reps(group, coset_subset(t->label(i), group.system())).size());
    }
    const auto e = AlgebraElement::basis(t, t->identity_index());
    for (std::size_t i = 0; i < t->dimension(); ++i) {
      const auto b = AlgebraElement::basis(t, i);
      CHECK(e * b == b);
      CHECK(b * e == b);
      for (std::size_t j = 0; j < t->dimension(); ++j) {
        std::int64_t total = 0;
        for (const auto& term : t->product(i, j)) total += term.value * size[term.index];
        CHECK(total == size[i] * size[j]);
        const auto bj = AlgebraElement::basis(t, j);
        for (std::size_t k = 0; k < t->dimension(); ++k) {
          const auto bk = AlgebraElement::basis(t, k);
          CHECK((b * bj) * bk == b * (bj * bk));
        }
      }
    }
  }
}

TEST_CASE("associativity on random triples in D_5 and D_6") {
  std::mt19937 rng(17);
  for (int n : {5, 6}) {
    const auto t = table_of(GroupType::D, n);
    std::uniform_int_distribution<std::size_t> pick(0, t->dimension() - 1);
    for (int trial = 0; trial < 150; ++trial) {
      const auto a = AlgebraElement::basis(t, pick(rng));
      const auto b = AlgebraElement::basis(t, pick(rng));
      const auto c = AlgebraElement::basis(t, pick(rng));
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("the worked type-A product") {
  const auto t = table_of(GroupType::A, 4);
  const auto product = B(t, "[2,1,1]") * B(t, "[2,2]");
  auto expected = B(t, "[2,1,1]") + B(t, "[1,1,2]");
  expected += B(t, "[1,1,1,1]");
  expected += B(t, "[1,1,1,1]");
  CHECK(product == expected);
  CHECK(product.to_string() == "2*B[1,1,1,1] + B[1,1,2] + B[2,1,1]");
  CHECK(B(t, "[4]") * B(t, "[2,2]") == B(t, "[2,2]"));
}

TEST_CASE("element arithmetic") {
  const auto t = table_of(GroupType::D, 3);
  const auto zero = AlgebraElement(t);
  CHECK((zero * B(t, "[2,1]@Main")).is_zero());
  CHECK((B(t, "[]") * B(t, "[3]@MainPrime")) == B(t, "[3]@MainPrime"));
  auto x = B(t, "[1]") - B(t, "[1]");
  CHECK(x.is_zero());

  const auto a = B(t, "[1,1,1]", 2) * B(t, "[1,1,1]", 2);
  for (const auto& [i, c] : a.coefficients()) {
    CHECK(c > 0);
    CHECK(c < 2);
  }
  CHECK(a == (B(t, "[1,1,1]") * B(t, "[1,1,1]")).reduced(2));
  CHECK_THROWS(B(t, "[1,1,1]", 2) * B(t, "[1,1,1]", 3));
  CHECK_THROWS(B(t, "[1,1,1]") * B(table_of(GroupType::D, 4), "[]"));
}

TEST_CASE("table JSON round trip is byte-identical") {
  for (auto [type, n] : {std::pair{GroupType::D, 3}, std::pair{GroupType::D, 4}, std::pair{GroupType::A, 4}}) {
    const auto t = build_table(n, type);
    const std::string text = serialize_table(t);
    const auto back = table_from_json(nlohmann::json::parse(text));
    CHECK(back.same_constants(t));
    CHECK(serialize_table(back) == text);
  }
}

TEST_CASE("malformed table documents are rejected") {
  auto doc = table_to_json(build_table(3, GroupType::D));
  auto wrong_version = doc;
  wrong_version["schema_version"] = kTableSchemaVersion + 1;
  CHECK_THROWS_AS(table_from_json(wrong_version), std::invalid_argument);
  auto negative = doc;
  negative["constants"][0][3] = -1;
  CHECK_THROWS(table_from_json(negative));
  auto bad_index = doc;
  bad_index["constants"][0][2] = 999;
  CHECK_THROWS(table_from_json(bad_index));
  auto bad_label = doc;
  bad_label["basis"][1] = "[7]@Small";
  CHECK_THROWS(table_from_json(bad_label));
}
