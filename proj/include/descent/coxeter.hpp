#pragma once

// Coxeter groups of type D (even signed permutations) and type A (plain
// permutations), stored in one-line notation.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace descent {

inline constexpr int kMaxRank = 10;

enum class GroupType { A, D };

std::string to_string(GroupType type);
GroupType parse_group_type(const std::string& text);

/// Raised when a computation would exceed the configured rank bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generator index. 0 names s_1' (type D only); i >= 1 names s_i.
using Generator = int;
inline constexpr Generator kPrimeGenerator = 0;

/// A subset of the Coxeter generators as a bit set; bit g is generator g.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint32_t bits) : bits_(bits) {}
  GeneratorSet(std::initializer_list<Generator> members);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(Generator g) const { return (bits_ >> g) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;
  std::vector<Generator> members() const;

  void insert(Generator g) { bits_ |= 1U << g; }
  void erase(Generator g) { bits_ &= ~(1U << g); }

  constexpr bool is_subset_of(GeneratorSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr GeneratorSet operator&(GeneratorSet o) const { return GeneratorSet(bits_ & o.bits_); }
  constexpr GeneratorSet operator|(GeneratorSet o) const { return GeneratorSet(bits_ | o.bits_); }
  /// Set difference.
  constexpr GeneratorSet operator-(GeneratorSet o) const { return GeneratorSet(bits_ & ~o.bits_); }

  constexpr auto operator<=>(const GeneratorSet&) const = default;

  /// e.g. "{1',1,3}"
  std::string to_string() const;

 private:
  std::uint32_t bits_ = 0;
};

/// (type, rank) pair; knows its generating set S.
class CoxeterSystem {
 public:
  CoxeterSystem(GroupType type, int n);

  GroupType type() const { return type_; }
  int rank() const { return n_; }

  /// The full generating set S.
  GeneratorSet generators() const { return all_; }
  /// Generators in canonical order (1', 1, 2, ..., n-1 for D; 1, ..., n-1 for A).
  std::vector<Generator> generator_list() const { return all_.members(); }
  bool is_generator(Generator g) const;
  bool contains(GeneratorSet J) const { return J.is_subset_of(all_); }

  /// |W|: 2^(n-1) n! for D, n! for A.
  std::uint64_t order() const;

  /// Number of subsets of S.
  std::size_t subset_count() const { return std::size_t{1} << all_.size(); }
  /// Bijection between subsets of S and 0 .. subset_count()-1.
  std::size_t dense_index(GeneratorSet J) const;
  GeneratorSet subset_at(std::size_t index) const;

  bool operator==(const CoxeterSystem&) const = default;

 private:
  GroupType type_;
  int n_;
  GeneratorSet all_;
};

/// Signed permutation of {-n..-1, 1..n} with w(-i) = -w(i). Only the images
/// of 1..n are stored. Plain permutations are the all-positive ones.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// image[i-1] = w(i). Throws std::invalid_argument unless {|w(i)|} = {1..n}.
  explicit SignedPermutation(std::span<const int> image);
  SignedPermutation(std::initializer_list<int> image);

  static SignedPermutation identity(int n);

  int rank() const { return n_; }
  /// w(i) for i in +-1..+-n.
  int operator()(int i) const { return i > 0 ? image_[i - 1] : -image_[-i - 1]; }
  std::vector<int> image() const;

  int negative_count() const;
  bool is_even() const { return negative_count() % 2 == 0; }
  bool is_positive() const { return negative_count() == 0; }

  bool operator==(const SignedPermutation& o) const = default;
  /// Lexicographic on one-line notation (ranks compared first).
  std::strong_ordering operator<=>(const SignedPermutation& o) const;

  std::string to_string() const;

 private:
  friend SignedPermutation compose(const SignedPermutation&, const SignedPermutation&);
  friend SignedPermutation inverse(const SignedPermutation&);
  friend SignedPermutation right_multiply_generator(const SignedPermutation&, Generator);

  int n_ = 0;
  std::array<std::int8_t, kMaxRank> image_{};
};

/// The generator s_g of D_n (s_1' included). For type A the s_i coincide.
SignedPermutation generator(int n, Generator g);

/// (a o b)(i) = a(b(i)).
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation inverse(const SignedPermutation& w);
/// w o s_g, computed by a position swap.
SignedPermutation right_multiply_generator(const SignedPermutation& w, Generator g);

/// #{i<j : w(i) > w(j)} + #{i<j : w(i) + w(j) < 0}. For plain permutations
/// the second term vanishes and this is the inversion count.
int length(const SignedPermutation& w);

/// Right descents restricted to the generators of `system`.
GeneratorSet right_descent_set(const SignedPermutation& w, const CoxeterSystem& system);
GeneratorSet left_descent_set(const SignedPermutation& w, const CoxeterSystem& system);
/// Type-D convenience overloads.
GeneratorSet right_descent_set(const SignedPermutation& w);
GeneratorSet left_descent_set(const SignedPermutation& w);

/// If x^-1 s x is a generator t (of D_n), returns t.
std::optional<Generator> conjugate_generator(const SignedPermutation& x, Generator s);

/// Default rank limits: n <= 8 for D, n <= 10 for A.
int default_rank_bound(GroupType type);

/// Per-element generator conjugation table: target[s] = t if x^-1 s x = t.
struct ConjugationMap {
  std::array<std::int8_t, kMaxRank> target{};

  /// {t : x^-1 s x = t for some s in J}; non-generator conjugates dropped.
  GeneratorSet image(GeneratorSet J) const;
};

/// Fully enumerated group with cached descents. Elements are in
/// lexicographic order of one-line notation; every index refers to it.
class CoxeterGroup {
 public:
  /// Throws ResourceError if n exceeds `rank_bound` (default_rank_bound when 0).
  explicit CoxeterGroup(CoxeterSystem system, int rank_bound = 0);

  const CoxeterSystem& system() const { return system_; }
  std::size_t size() const { return elements_.size(); }
  const SignedPermutation& element(std::size_t i) const { return elements_[i]; }
  std::span<const SignedPermutation> elements() const { return elements_; }

  /// Throws std::invalid_argument for non-members.
  std::size_t index_of(const SignedPermutation& w) const;
  std::optional<std::size_t> find(const SignedPermutation& w) const;
  std::size_t identity_index() const { return identity_; }

  GeneratorSet right_descents(std::size_t i) const { return GeneratorSet(right_descents_[i]); }
  GeneratorSet left_descents(std::size_t i) const { return GeneratorSet(left_descents_[i]); }
  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }
  std::size_t product_index(std::size_t i, std::size_t j) const;

  ConjugationMap conjugation_map(std::size_t i) const;

 private:
  std::uint64_t code(const SignedPermutation& w) const;

  CoxeterSystem system_;
  std::vector<SignedPermutation> elements_;
  std::vector<std::int32_t> index_by_code_;
  std::vector<std::uint32_t> right_descents_;
  std::vector<std::uint32_t> left_descents_;
  std::vector<std::uint32_t> inverse_;
  std::size_t identity_ = 0;
};

/// Conjugacy classes of subsets of S (J ~ K iff x^-1 J x = K for some x).
/// Entry d is the least dense index in the class of subset_at(d).
std::vector<std::size_t> subset_conjugacy_classes(const CoxeterGroup& group);

/// All elements of the group, lexicographically ordered.
std::vector<SignedPermutation> enumerate_group(int n, GroupType type, int rank_bound = 0);

}  // namespace descent
