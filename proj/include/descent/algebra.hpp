#pragma once

// Solomon's descent algebra of a finite Coxeter group.
//
// X_J is the set of minimal length representatives of the left cosets
// w W_J, i.e. the elements without right descents in J, and 𝒳_J is its
// formal sum. Products expand as 𝒳_J 𝒳_K = sum_L a_{JKL} 𝒳_L with
//   a_{JKL} = #{x : Des_L(x) ∩ J = Des_R(x) ∩ K = ∅, x^-1 J x ∩ K = L}.
// The basis used downstream is B_kappa = 𝒳_{S \ J(kappa)}.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "descent/coxeter.hpp"
#include "descent/labels.hpp"
#include "descent/linalg.hpp"

#include <json.hpp>

namespace descent {

using linalg::BigInt;

/// The product does not lie in the span of the coset sums.
class SpanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// X_J as indices into the group's element order.
std::vector<std::size_t> coset_reps(const CoxeterGroup& group, GeneratorSet J);
/// X_J for D_n.
std::vector<SignedPermutation> coset_reps(int n, GeneratorSet J);

/// a_{JKL} by the defining count over all of W.
std::int64_t structure_constant_direct(const CoxeterGroup& group, GeneratorSet J, GeneratorSet K,
                                       GeneratorSet L);
/// a_{JKL} for every L at once; indexed by the system's dense subset index.
std::vector<std::int64_t> structure_constants_direct(const CoxeterGroup& group, GeneratorSet J,
                                                     GeneratorSet K);

/// Element of the integral group algebra, dense over the group's element order.
struct GroupAlgebraElement {
  std::vector<std::int64_t> coefficients;

  bool operator==(const GroupAlgebraElement&) const = default;
};

GroupAlgebraElement coset_sum(const CoxeterGroup& group, GeneratorSet J);
GroupAlgebraElement multiply_in_group_algebra(const CoxeterGroup& group, const GroupAlgebraElement& a,
                                              const GroupAlgebraElement& b);
/// 𝒳_J 𝒳_K computed in the group algebra.
GroupAlgebraElement multiply_in_group_algebra(const CoxeterGroup& group, GeneratorSet J,
                                              GeneratorSet K);

/// Writes `product` as sum_L c_L 𝒳_L (dense subset index). Throws SpanError
/// if the coefficient is not constant on some descent class.
std::vector<std::int64_t> extract_coefficients(const CoxeterGroup& group,
                                               const GroupAlgebraElement& product);

enum class TableMethod { Sweep, Definition, GroupAlgebra, MatrixRule, Cache };
std::string to_string(TableMethod method);

/// a_{JKL} keyed by subsets (dense indices), sparse in L.
class SolomonConstants {
 public:
  struct Term {
    std::uint32_t index;
    std::int64_t value;
    bool operator==(const Term&) const = default;
  };

  explicit SolomonConstants(CoxeterSystem system);

  const CoxeterSystem& system() const { return system_; }
  std::span<const Term> terms(std::size_t J, std::size_t K) const;
  std::int64_t at(GeneratorSet J, GeneratorSet K, GeneratorSet L) const;
  void set(std::size_t J, std::size_t K, std::vector<Term> terms);

  bool operator==(const SolomonConstants& other) const;

 private:
  CoxeterSystem system_;
  std::vector<std::vector<Term>> terms_;
};

/// One sweep over W: for each x, every J avoiding Des_L(x) and K avoiding
/// Des_R(x) gets L = x^-1 J x ∩ K incremented. Work is split over `threads`.
SolomonConstants solomon_constants_by_sweep(const CoxeterGroup& group, int threads = 1);
/// structure_constants_direct for every (J, K).
SolomonConstants solomon_constants_by_definition(const CoxeterGroup& group);
/// Group-algebra products followed by extract_coefficients, for every (J, K).
SolomonConstants solomon_constants_by_group_algebra(const CoxeterGroup& group);

/// Multiplication table of the descent algebra in a labeled basis:
/// B_i B_j = sum_k c_{ij}^k B_k.
class StructureTable {
 public:
  using Term = SolomonConstants::Term;

  StructureTable(GroupType type, int n, std::vector<Composition> basis,
                 std::vector<std::vector<Term>> products, TableMethod provenance);

  GroupType type() const { return type_; }
  int rank() const { return n_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Composition>& basis() const { return basis_; }
  const Composition& label(std::size_t i) const { return basis_[i]; }
  std::size_t index_of(const Composition& label) const;
  TableMethod provenance() const { return provenance_; }

  /// Non-zero terms of B_i B_j, sorted by index.
  std::span<const Term> product(std::size_t i, std::size_t j) const;
  std::int64_t constant(std::size_t i, std::size_t j, std::size_t k) const;
  std::size_t term_count() const { return entries_.size(); }

  /// Index of the multiplicative identity B_[] (type D) / B_[n] (type A).
  std::size_t identity_index() const;

  /// Same type, rank, basis and constants (provenance ignored).
  bool same_constants(const StructureTable& other) const;

 private:
  GroupType type_;
  int n_;
  std::vector<Composition> basis_;
  std::vector<std::size_t> offsets_;
  std::vector<Term> entries_;
  TableMethod provenance_;
};

/// The subset whose coset sum is B_kappa: S \ J(kappa).
GeneratorSet coset_subset(const Composition& label, const CoxeterSystem& system);

/// Relabels subset constants into the basis `labels`, where label i stands
/// for the coset sum of `subset_for_label(label i)`.
StructureTable relabel(const SolomonConstants& constants, std::vector<Composition> labels,
                       const std::function<GeneratorSet(const Composition&)>& subset_for_label,
                       TableMethod provenance);

/// Table in the canonical label basis with B_kappa = 𝒳_{S \ J(kappa)}.
StructureTable make_table(const SolomonConstants& constants, TableMethod provenance);

struct BuildOptions {
  int threads = 1;
  /// 0 selects default_rank_bound.
  int rank_bound = 0;
};

/// Enumerates the group and builds the canonical table by the sweep.
StructureTable build_table(int n, GroupType type, BuildOptions options = {});

// ------------------------------------------------------------------ elements

/// Finitely supported combination of basis elements with integer
/// coefficients, or residues mod p when a modulus is set.
class AlgebraElement {
 public:
  AlgebraElement(std::shared_ptr<const StructureTable> table, std::optional<int> modulus = {});

  static AlgebraElement basis(std::shared_ptr<const StructureTable> table, std::size_t index,
                              std::optional<int> modulus = {});
  static AlgebraElement basis(std::shared_ptr<const StructureTable> table, const Composition& label,
                              std::optional<int> modulus = {});

  const StructureTable& table() const { return *table_; }
  const std::shared_ptr<const StructureTable>& table_ptr() const { return table_; }
  std::optional<int> modulus() const { return modulus_; }
  const std::map<std::size_t, BigInt>& coefficients() const { return coefficients_; }
  BigInt coefficient(std::size_t index) const;
  bool is_zero() const { return coefficients_.empty(); }

  void add_term(std::size_t index, const BigInt& value);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const BigInt& scalar);

  /// Reduces every coefficient mod p.
  AlgebraElement reduced(int p) const;

  bool operator==(const AlgebraElement& other) const;

  /// e.g. "B[2,1]@Main - B[1,2]@One"
  std::string to_string() const;
  /// [[label, coefficient], ...] in basis order.
  nlohmann::json to_json() const;

 private:
  friend AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
  void check_compatible(const AlgebraElement& other) const;
  BigInt normalize(BigInt value) const;

  std::shared_ptr<const StructureTable> table_;
  std::optional<int> modulus_;
  std::map<std::size_t, BigInt> coefficients_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b);
}

// ------------------------------------------------------------------ cache

inline constexpr int kTableSchemaVersion = 1;

/// {schema_version, group_type, n, basis: [labels], constants: [[i, j, k, value], ...]}
nlohmann::json table_to_json(const StructureTable& table);
/// Throws std::invalid_argument on schema mismatch or malformed data.
StructureTable table_from_json(const nlohmann::json& doc);
/// Deterministic text form of table_to_json.
std::string serialize_table(const StructureTable& table);

}  // namespace descent
