#include "doctest.h"

#include <deque>
#include <random>
#include <set>

#include "descent/coxeter.hpp"

using namespace descent;

namespace {

std::vector<int> bfs_lengths(const CoxeterGroup& group) {
  std::vector<int> dist(group.size(), -1);
  std::deque<std::size_t> queue{group.identity_index()};
  dist[group.identity_index()] = 0;
  while (!queue.empty()) {
    const std::size_t w = queue.front();
    queue.pop_front();
    for (Generator g : group.system().generator_list()) {
      const std::size_t v = group.index_of(compose(group.element(w), generator(group.system().rank(), g)));
      if (dist[v] < 0) {
        dist[v] = dist[w] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("generators in one-line notation") {
  CHECK(generator(3, 1) == SignedPermutation{2, 1, 3});
  CHECK(generator(3, kPrimeGenerator) == SignedPermutation{-2, -1, 3});
  CHECK(compose(generator(2, 1), generator(2, 1)) == SignedPermutation::identity(2));
  for (int n = 2; n <= 5; ++n) {
    for (Generator g : CoxeterSystem(GroupType::D, n).generator_list()) {
      CHECK(compose(generator(n, g), generator(n, g)) == SignedPermutation::identity(n));
      CHECK(inverse(generator(n, g)) == generator(n, g));
      CHECK(length(generator(n, g)) == 1);
      CHECK(right_multiply_generator(SignedPermutation::identity(n), g) == generator(n, g));
    }
  }
}

TEST_CASE("compose and inverse") {
  const auto e3 = SignedPermutation::identity(3);
  const SignedPermutation w{3, -1, -2};
  CHECK(compose(e3, w) == w);
  CHECK(compose(w, e3) == w);
  CHECK(compose(generator(3, 1), generator(3, 1)) == e3);
  CHECK(compose(generator(2, kPrimeGenerator), generator(2, 1)) == SignedPermutation{-1, -2});
  CHECK(inverse(e3) == e3);
  CHECK(compose(w, inverse(w)) == e3);
  CHECK(w(-2) == 1);

  std::mt19937 rng(7);
  const auto elements = enumerate_group(5, GroupType::D);
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const auto& x = elements[pick(rng)];
    CHECK(compose(x, inverse(x)) == SignedPermutation::identity(5));
    CHECK(compose(inverse(x), x) == SignedPermutation::identity(5));
  }
}

TEST_CASE("invalid one-line images are rejected") {
  CHECK_THROWS_AS((SignedPermutation{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS((SignedPermutation{1, 3}), std::invalid_argument);
  CHECK_THROWS_AS((SignedPermutation{0, 1}), std::invalid_argument);
  CHECK_NOTHROW((SignedPermutation{-1, 2}));
  CHECK_FALSE((SignedPermutation{-1, 2}).is_even());
}

TEST_CASE("group orders") {
  CHECK(enumerate_group(2, GroupType::D).size() == 4);
  CHECK(enumerate_group(4, GroupType::D).size() == 192);
  CHECK(enumerate_group(4, GroupType::A).size() == 24);
  CHECK(enumerate_group(1, GroupType::A).size() == 1);
  for (int n = 2; n <= 6; ++n) {
    const auto elements = enumerate_group(n, GroupType::D);
    CHECK(elements.size() == CoxeterSystem(GroupType::D, n).order());
    CHECK(std::set<SignedPermutation>(elements.begin(), elements.end()).size() == elements.size());
    CHECK(std::is_sorted(elements.begin(), elements.end()));
    for (const auto& w : elements) CHECK(w.is_even());
  }
}

TEST_CASE("rank bound raises a resource error") {
  CHECK_THROWS_AS(enumerate_group(9, GroupType::D), ResourceError);
  CHECK_THROWS_AS(CoxeterGroup(CoxeterSystem(GroupType::D, 5), 4), ResourceError);
  CHECK_NOTHROW(CoxeterGroup(CoxeterSystem(GroupType::D, 5), 5));
}

TEST_CASE("length formula equals word length") {
  for (int n : {3, 4}) {
    const CoxeterGroup group(CoxeterSystem(GroupType::D, n));
    const auto dist = bfs_lengths(group);
    for (std::size_t i = 0; i < group.size(); ++i) CHECK(dist[i] == length(group.element(i)));
  }
  const CoxeterGroup a4(CoxeterSystem(GroupType::A, 4));
  const auto dist = bfs_lengths(a4);
  for (std::size_t i = 0; i < a4.size(); ++i) CHECK(dist[i] == length(a4.element(i)));
  CHECK(length(SignedPermutation::identity(4)) == 0);
}

TEST_CASE("descent sets") {
  CHECK(right_descent_set(SignedPermutation::identity(3)).empty());
  CHECK(right_descent_set(generator(3, 1)) == GeneratorSet{1});
  CHECK(left_descent_set(SignedPermutation::identity(3)).empty());
  for (Generator g : {0, 1, 2}) CHECK(left_descent_set(generator(3, g)) == GeneratorSet{g});

  const CoxeterSystem d4(GroupType::D, 4);
  const auto elements = enumerate_group(4, GroupType::D);
  REQUIRE(elements.size() == 192);
  for (const auto& w : elements) {
    for (Generator g : d4.generator_list()) {
      const SignedPermutation s = generator(4, g);
      CHECK((length(compose(w, s)) < length(w)) == right_descent_set(w).contains(g));
      CHECK((length(compose(s, w)) < length(w)) == left_descent_set(w).contains(g));
    }
    CHECK(left_descent_set(w) == right_descent_set(inverse(w)));
  }
}

TEST_CASE("type A descents ignore s_1'") {
  const CoxeterSystem a3(GroupType::A, 3);
  const SignedPermutation w{3, 2, 1};
  CHECK(right_descent_set(w, a3) == GeneratorSet{1, 2});
  CHECK_FALSE(right_descent_set(w, a3).contains(kPrimeGenerator));
}

TEST_CASE("conjugate generators") {
  for (Generator s : {0, 1, 2}) CHECK(conjugate_generator(SignedPermutation::identity(3), s) == s);
  CHECK_FALSE(conjugate_generator(generator(3, 2), 1).has_value());
  const CoxeterGroup group(CoxeterSystem(GroupType::D, 4));
  for (std::size_t x = 0; x < group.size(); ++x) {
    std::set<Generator> images;
    std::size_t defined = 0;
    for (Generator s : group.system().generator_list()) {
      if (auto t = conjugate_generator(group.element(x), s)) {
        ++defined;
        images.insert(*t);
        const SignedPermutation& w = group.element(x);
        CHECK(compose(inverse(w), compose(generator(4, s), w)) == generator(4, *t));
      }
    }
    CHECK(images.size() == defined);
  }
}

TEST_CASE("generator subsets") {
  const CoxeterSystem d4(GroupType::D, 4);
  CHECK(d4.subset_count() == 16);
  CHECK(GeneratorSet{0, 1, 3}.to_string() == "{1',1,3}");
  for (std::size_t i = 0; i < d4.subset_count(); ++i) CHECK(d4.dense_index(d4.subset_at(i)) == i);
  const CoxeterSystem a4(GroupType::A, 4);
  CHECK(a4.subset_count() == 8);
  CHECK_FALSE(a4.contains(GeneratorSet{0}));
}

TEST_CASE("group axioms on random triples") {
  const CoxeterGroup group(CoxeterSystem(GroupType::D, 5));
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  for (int i = 0; i < 300; ++i) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(group.product_index(group.product_index(a, b), c) == group.product_index(a, group.product_index(b, c)));
    CHECK(group.product_index(a, group.inverse_index(a)) == group.identity_index());
  }
}

TEST_CASE("subset conjugacy in D_4") {
  const CoxeterGroup group(CoxeterSystem(GroupType::D, 4));
  const auto classes = subset_conjugacy_classes(group);
  const CoxeterSystem& s = group.system();
  CHECK(classes[s.dense_index(GeneratorSet{1})] == classes[s.dense_index(GeneratorSet{3})]);
  CHECK(classes[s.dense_index(GeneratorSet{0})] == classes[s.dense_index(GeneratorSet{1})]);
  CHECK(std::set<std::size_t>(classes.begin(), classes.end()).size() == 11);
}
