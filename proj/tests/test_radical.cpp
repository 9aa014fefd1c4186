#include "doctest.h"

#include "descent/characters.hpp"
#include "descent/radical.hpp"

using namespace descent;

namespace {

std::shared_ptr<const StructureTable> table_of(int n, GroupType type = GroupType::D) {
  return std::make_shared<const StructureTable>(build_table(n, type));
}

AlgebraElement B(const std::shared_ptr<const StructureTable>& t, const std::string& label) {
  return AlgebraElement::basis(t, parse_label(label, t->type(), t->rank()));
}

}  // namespace

TEST_CASE("char 0 spanning sets") {
  CHECK(radical_char0(table_of(2)).spanning_set.empty());
  CHECK(radical_char0(table_of(4)).spanning_set.size() == 5);

  const auto t6 = table_of(6);
  const auto r6 = radical_char0(t6);
  CHECK(in_span(B(t6, "[2,1,2,1]@Main") - B(t6, "[2,1,1,2]@MainPrime"), r6));
  CHECK(in_span(B(t6, "[2,1,2,1]@Main") - B(t6, "[1,2,2,1]@One"), r6));
  CHECK_FALSE(in_span(B(t6, "[4,2]@Main") - B(t6, "[2,4]@MainPrime"), r6));
}

TEST_CASE("char 0 radical is a nilpotent ideal of the expected codimension") {
  for (int n = 2; n <= 5; ++n) {
    const auto report = verify_ideal(radical_char0(table_of(n)));
    CHECK(report.is_left_ideal);
    CHECK(report.is_right_ideal);
    REQUIRE(report.nilpotency_index.has_value());
    CHECK(report.quotient_dim == class_representatives(n).size());
  }
  const auto empty = verify_ideal(radical_char0(table_of(2)));
  CHECK(empty.nilpotency_index == 1);
  CHECK(empty.quotient_dim == 4);
  CHECK(verify_ideal(radical_char0(table_of(4, GroupType::A))).quotient_dim == 5);
}

TEST_CASE("a span that is not an ideal is reported") {
  const auto t = table_of(3);
  RadicalBasis basis{t, std::nullopt, {B(t, "[3]@Main")}, {}};
  const auto report = verify_ideal(basis);
  CHECK_FALSE(report.is_ideal());
  CHECK_FALSE(report.failures.empty());
  RadicalBasis all{t, std::nullopt, {}, {}};
  for (std::size_t i = 0; i < t->dimension(); ++i) all.spanning_set.push_back(AlgebraElement::basis(t, i));
  const auto whole = verify_ideal(all);
  CHECK(whole.is_ideal());
  CHECK_FALSE(whole.nilpotency_index.has_value());
  CHECK(whole.quotient_dim == 0);
}

TEST_CASE("modular spanning sets") {
  const auto t4 = table_of(4);
  const auto two = radical_mod_p(t4, 2);
  CHECK(two.spanning_set.size() == 15);
  CHECK(verify_ideal(two).quotient_dim == 1);

  const auto t5 = table_of(5);
  const auto odd = radical_mod_p(t5, 2);
  CHECK(odd.spanning_set.size() == 30);
  CHECK(verify_ideal(odd).quotient_dim == 2);

  const auto three = radical_mod_p(t4, 3);
  CHECK(three.spanning_set.size() == 6);
  CHECK(in_span(B(t4, "[1,1,1,1]").reduced(3), three));
  CHECK(verify_ideal(three).quotient_dim == 10);

  CHECK_THROWS_AS(radical_mod_p(t4, 4), std::invalid_argument);
  CHECK_THROWS(radical_mod_p(table_of(4, GroupType::A), 3));
}

TEST_CASE("combinatorial and diagonal spans agree") {
  for (int n = 2; n <= 5; ++n) {
    const auto t = table_of(n);
    for (int p : {2, 3, 5}) {
      CAPTURE(n);
      CAPTURE(p);
      const auto a = radical_mod_p(t, p);
      const auto b = radical_mod_p_via_aJJJ(t, p);
      CHECK(span_equal(a, b));
      const auto report = verify_ideal(a);
      CHECK(report.ok());
      CHECK(report.quotient_dim == p_modular_representatives(*t, p).size());
    }
  }
}

TEST_CASE("large p leaves only the differences") {
  const auto t = table_of(4);
  std::int64_t largest = 0;
  for (std::size_t i = 0; i < t->dimension(); ++i) largest = std::max(largest, diagonal_constant(*t, i));
  int p = static_cast<int>(largest) + 1;
  while (!is_prime(p)) ++p;
  CHECK(radical_mod_p_via_aJJJ(t, p).spanning_set.size() == radical_char0(t).spanning_set.size());
  CHECK(diagonal_constant(*t, t->index_of(parse_label("[]", GroupType::D, 4))) == 1);
}

TEST_CASE("modular representatives from the table") {
  const auto t4 = table_of(4);
  auto reps = p_modular_representatives(*t4, 3);
  CHECK(reps.size() == 10);
  CHECK(std::find(reps.begin(), reps.end(), parse_label("[1,1,1,1]", GroupType::D, 4)) == reps.end());
  CHECK(p_modular_representatives(*t4, 2).size() == 1);
  CHECK(p_modular_representatives(*table_of(5), 2).size() == 2);
  CHECK(representatives_by_diagonal(*t4, 3) == reps);
}
