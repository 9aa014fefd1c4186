#pragma once

// Permutation characters phi_J of W on the right cosets of W_J, evaluated at
// Coxeter elements, and the one-dimensional representations of the descent
// algebra they induce.

#include <cstdint>
#include <optional>
#include <vector>

#include "descent/algebra.hpp"

namespace descent {

/// W_J as sorted element indices, by closure from the identity.
std::vector<std::size_t> parabolic_subgroup(const CoxeterGroup& group, GeneratorSet J);

/// Product of the generators of J in `ordering` (canonical order by default).
/// Throws std::invalid_argument if `ordering` is not an arrangement of J.
SignedPermutation coxeter_element(int n, GeneratorSet J,
                                  const std::optional<std::vector<Generator>>& ordering = std::nullopt);

/// phi_J with the data for repeated evaluation: the minimal right coset
/// representatives and a membership bitmap of W_J.
class PermutationCharacter {
 public:
  PermutationCharacter(const CoxeterGroup& group, GeneratorSet J);

  /// #{x in X_J^-1 : x w x^-1 in W_J}.
  std::int64_t operator()(const SignedPermutation& w) const;
  /// [W : W_J]
  std::int64_t degree() const { return static_cast<std::int64_t>(right_reps_.size()); }

 private:
  const CoxeterGroup* group_;
  std::vector<SignedPermutation> right_reps_;
  std::vector<SignedPermutation> right_reps_inverse_;
  std::vector<bool> in_subgroup_;
};

std::int64_t perm_character(const CoxeterGroup& group, GeneratorSet J, const SignedPermutation& w);

/// R = [phi_{J(row)^c}(c_{J(col)^c})] over the class representatives.
struct CharacterMatrix {
  GroupType type;
  int n;
  std::vector<Composition> representatives;
  /// entries[row][col]
  std::vector<std::vector<std::int64_t>> entries;

  std::vector<std::int64_t> column(std::size_t col) const;
  std::size_t distinct_column_count() const;
};

CharacterMatrix character_matrix(const CoxeterGroup& group);

/// theta_K : B_kappa -> phi_{S \ J(kappa)}(c_{S \ J(K)}), extended linearly.
class IrreducibleMap {
 public:
  IrreducibleMap(Composition label, std::vector<std::int64_t> values)
      : label_(std::move(label)), values_(std::move(values)) {}

  const Composition& label() const { return label_; }
  /// theta_K(B_i) for every basis index i.
  const std::vector<std::int64_t>& values() const { return values_; }
  /// Reduced mod p when the element carries a modulus.
  BigInt operator()(const AlgebraElement& element) const;

 private:
  Composition label_;
  std::vector<std::int64_t> values_;
};

IrreducibleMap irreducible_map(const CoxeterGroup& group, const StructureTable& table,
                               const Composition& K);
/// theta_K for every class representative K, sharing the character data.
std::vector<IrreducibleMap> irreducible_maps(const CoxeterGroup& group, const StructureTable& table);

/// Distinct columns of R mod p in order of first appearance, each with every
/// representative label whose column reduces to it.
struct ModularColumns {
  int p;
  std::vector<std::vector<std::int64_t>> columns;
  std::vector<std::vector<Composition>> labels;

  std::size_t size() const { return columns.size(); }
};

ModularColumns irreducibles_mod_p(const CharacterMatrix& matrix, int p);

}  // namespace descent
