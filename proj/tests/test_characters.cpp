#include "doctest.h"

#include <algorithm>
#include <random>

#include "descent/characters.hpp"
#include "descent/radical.hpp"

using namespace descent;

TEST_CASE("parabolic subgroups") {
  const CoxeterGroup d3(CoxeterSystem(GroupType::D, 3));
  CHECK(parabolic_subgroup(d3, {}) == std::vector<std::size_t>{d3.identity_index()});
  CHECK(parabolic_subgroup(d3, d3.system().generators()).size() == d3.size());
  CHECK(parabolic_subgroup(d3, GeneratorSet{0, 1}).size() == 4);
  CHECK(parabolic_subgroup(d3, GeneratorSet{1, 2}).size() == 6);
}

TEST_CASE("Coxeter elements") {
  CHECK(coxeter_element(4, {}) == SignedPermutation::identity(4));
  CHECK(coxeter_element(4, GeneratorSet{2}) == generator(4, 2));
  CHECK(coxeter_element(3, GeneratorSet{1, 2}, std::vector<Generator>{2, 1}) ==
        compose(generator(3, 2), generator(3, 1)));
  CHECK_THROWS_AS(coxeter_element(3, GeneratorSet{1, 2}, std::vector<Generator>{1}), std::invalid_argument);
  CHECK_THROWS_AS(coxeter_element(3, GeneratorSet{1, 2}, std::vector<Generator>{1, 1}), std::invalid_argument);
}

TEST_CASE("values do not depend on the ordering of a Coxeter element") {
  for (int n = 2; n <= 4; ++n) {
    const CoxeterGroup group(CoxeterSystem(GroupType::D, n));
    const CoxeterSystem& system = group.system();
    for (std::size_t dj = 0; dj < system.subset_count(); ++dj) {
      const PermutationCharacter phi(group, system.subset_at(dj));
      for (std::size_t dk = 0; dk < system.subset_count(); ++dk) {
        const GeneratorSet K = system.subset_at(dk);
        std::vector<Generator> order = K.members();
        const std::int64_t first = phi(coxeter_element(n, K, order));
        while (std::next_permutation(order.begin(), order.end())) CHECK(phi(coxeter_element(n, K, order)) == first);
      }
    }
  }
}

TEST_CASE("permutation character basics") {
  const CoxeterGroup d4(CoxeterSystem(GroupType::D, 4));
  const CoxeterSystem& system = d4.system();
  const PermutationCharacter regular(d4, {});
  const PermutationCharacter trivial(d4, system.generators());
  for (std::size_t w = 0; w < d4.size(); ++w) {
    CHECK(trivial(d4.element(w)) == 1);
    CHECK(regular(d4.element(w)) == (w == d4.identity_index() ? 192 : 0));
  }
  for (std::size_t d = 0; d < system.subset_count(); ++d) {
    const GeneratorSet J = system.subset_at(d);
    const PermutationCharacter phi(d4, J);
    CHECK(phi(SignedPermutation::identity(4)) == phi.degree());
    CHECK(phi.degree() * static_cast<std::int64_t>(parabolic_subgroup(d4, J).size()) == 192);
    std::int64_t sum = 0;
    for (const auto& w : d4.elements()) sum += phi(w);
    CHECK(sum == 192);
  }
}

TEST_CASE("permutation characters are class functions") {
  const CoxeterGroup d4(CoxeterSystem(GroupType::D, 4));
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::size_t> pick(0, d4.size() - 1);
  const PermutationCharacter phi(d4, GeneratorSet{0, 2});
  for (int i = 0; i < 200; ++i) {
    const auto& w = d4.element(pick(rng));
    const auto& g = d4.element(pick(rng));
    CHECK(phi(w) == phi(compose(inverse(g), compose(w, g))));
  }
}

TEST_CASE("character matrix") {
  for (int n = 2; n <= 5; ++n) {
    const CoxeterGroup group(CoxeterSystem(GroupType::D, n));
    const CharacterMatrix R = character_matrix(group);
    CHECK(R.distinct_column_count() == R.representatives.size());
  }
  const CoxeterGroup d4(CoxeterSystem(GroupType::D, 4));
  const CharacterMatrix R = character_matrix(d4);
  const auto& reps = R.representatives;
  const std::size_t ones = std::find(reps.begin(), reps.end(), parse_label("[1,1,1,1]", GroupType::D, 4)) - reps.begin();
  const std::size_t empty = std::find(reps.begin(), reps.end(), parse_label("[]", GroupType::D, 4)) - reps.begin();
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const auto J = coset_subset(reps[r], d4.system());
    CHECK(R.entries[r][ones] * static_cast<std::int64_t>(parabolic_subgroup(d4, J).size()) == 192);
    CHECK(R.entries[empty][r] == 1);
  }
}

TEST_CASE("irreducible maps are algebra homomorphisms vanishing on the radical") {
  for (int n = 3; n <= 4; ++n) {
    const CoxeterGroup group(CoxeterSystem(GroupType::D, n));
    const auto t = std::make_shared<const StructureTable>(build_table(n, GroupType::D));
    const auto maps = irreducible_maps(group, *t);
    CHECK(maps.size() == class_representatives(n).size());
    const auto radical = radical_char0(t);
    for (const auto& theta : maps) {
      CHECK(theta(AlgebraElement::basis(t, t->identity_index())) == 1);
      for (std::size_t i = 0; i < t->dimension(); ++i) {
        const auto bi = AlgebraElement::basis(t, i);
        for (std::size_t j = 0; j < t->dimension(); ++j) {
          const auto bj = AlgebraElement::basis(t, j);
          CHECK(theta(bi * bj) == theta(bi) * theta(bj));
        }
      }
      for (const auto& e : radical.spanning_set) CHECK(theta(e) == 0);
      CHECK(irreducible_map(group, *t, theta.label()).values() == theta.values());
    }
  }
  const CoxeterGroup d3(CoxeterSystem(GroupType::D, 3));
  const auto t3 = build_table(3, GroupType::D);
  CHECK_THROWS(irreducible_map(d3, t3, parse_label("[1,2]", GroupType::D, 3)));
}

TEST_CASE("irreducibles mod p") {
  const CoxeterGroup d4(CoxeterSystem(GroupType::D, 4));
  const CoxeterGroup d5(CoxeterSystem(GroupType::D, 5));
  const auto R4 = character_matrix(d4);
  CHECK(irreducibles_mod_p(R4, 2).size() == 1);
  CHECK(irreducibles_mod_p(character_matrix(d5), 2).size() == 2);
  const auto three = irreducibles_mod_p(R4, 3);
  CHECK(three.size() == 10);
  std::size_t labelled = 0;
  for (const auto& g : three.labels) labelled += g.size();
  CHECK(labelled == R4.representatives.size());
  CHECK_THROWS(irreducibles_mod_p(R4, 9));
}
