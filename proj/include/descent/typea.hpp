#pragma once

// Descent algebra of S_n through non-negative integer matrices with
// prescribed row and column sums: B_kappa B_nu = sum_z B_{r(z)} over the
// matrices z with column sums kappa and row sums nu, r(z) being the
// row-major reading of the non-zero entries. Restricting to matrices with
// one non-zero entry per column gives the action on Lie monomials, which
// are represented only by their degree compositions.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "descent/algebra.hpp"

namespace descent {

struct FlowMatrix {
  std::vector<std::vector<int>> rows;

  std::vector<int> row_sums() const;
  std::vector<int> column_sums() const;
  bool operator==(const FlowMatrix&) const = default;
};

/// Non-zero entries read row by row.
std::vector<int> reading_word(const FlowMatrix& z);

/// Every matrix with the given column sums (kappa) and row sums (nu). With
/// `single_entry_columns`, each column holds exactly one non-zero entry.
std::vector<FlowMatrix> flow_matrices(std::span<const int> column_sums, std::span<const int> row_sums,
                                      bool single_entry_columns = false);

/// Formal sum of compositions with multiplicities.
using CompositionCounts = std::map<std::vector<int>, std::int64_t>;

/// B_kappa B_nu by the matrix rule. Throws if the totals differ.
CompositionCounts multiply_sn(std::span<const int> kappa, std::span<const int> nu);

/// P^(kappa) B_nu: the multiset {r(z)} over single-entry-column matrices.
CompositionCounts lie_action(std::span<const int> kappa, std::span<const int> nu);

/// Whether summing runs of adjacent components of kappa yields nu.
bool has_adjacent_coarsening(std::span<const int> kappa, std::span<const int> nu);

/// Whether the components of kappa can be split into groups, in any
/// arrangement, whose sums are nu_1, nu_2, ... in order.
bool has_grouping(std::span<const int> kappa, std::span<const int> nu);

/// The type-A table in canonical label order, built from the matrix rule.
StructureTable build_table_by_matrix_rule(int n);

}  // namespace descent
