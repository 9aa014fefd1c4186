#pragma once

// Composition labels for the descent-algebra basis.
//
// For D_n the labels form the multiset C(n), the union of four regions:
//   Small     compositions of m <= n-2 (including [] for m = 0)
//   One       compositions of n with first part 1
//   Main      compositions of n with first part >= 2
//   MainPrime a second copy of Main
// Each label kappa addresses a subset J(kappa) of S, and the basis element
// B_kappa is the coset sum X_{S \ J(kappa)}. For S_n the labels are the
// compositions of n (region Plain) with the usual partial-sum subsets.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "descent/coxeter.hpp"

namespace descent {

enum class Region { Small, One, Main, MainPrime, Plain };

std::string to_string(Region region);

struct Composition {
  std::vector<int> parts;
  Region region = Region::Plain;
  /// The n of C(n) (or of S_n for Plain labels).
  int ambient = 0;

  int sum() const;
  bool is_partition() const;
  bool all_even() const;

  /// Canonical text: "[2,4]@Main", "[]@Small"; Plain labels carry no tag.
  std::string to_string() const;

  bool operator==(const Composition&) const = default;
};

/// Throws std::invalid_argument unless the label satisfies its region's rule.
void validate(const Composition& label);

/// Parses the canonical text form. A missing tag is accepted when the region
/// is unambiguous (Small, One, or any type-A label).
Composition parse_label(std::string_view text, GroupType type, int n);

/// Compositions of m in lexicographic order; {[]} for m = 0.
std::vector<std::vector<int>> compositions_of(int m);
/// Partitions of m (non-increasing), in lexicographic order.
std::vector<std::vector<int>> partitions_of(int m);

/// Every label exactly once in canonical order: Small by (sum, lex), then One,
/// Main, MainPrime each lexicographic. Type A: compositions of n, lexicographic.
std::vector<Composition> all_labels(GroupType type, int n);
inline std::vector<Composition> all_labels(int n) { return all_labels(GroupType::D, n); }

/// The subset J(kappa) of S given by the four-case rule (partial sums for type A).
GeneratorSet subset_of(const Composition& label);
/// Inverse of subset_of.
Composition composition_of(GeneratorSet J, const CoxeterSystem& system);
inline Composition composition_of(GeneratorSet J, int n) {
  return composition_of(J, CoxeterSystem(GroupType::D, n));
}

/// kappa ~ nu: same multiset of components, except the Main/MainPrime pairs
/// whose components are all even. Plain labels: same multiset.
bool equivalent(const Composition& a, const Composition& b);

/// The canonical partition representing the class of `label`.
Composition class_representative(const Composition& label);

/// One representative per class, in canonical label order.
std::vector<Composition> class_representatives(GroupType type, int n);
inline std::vector<Composition> class_representatives(int n) {
  return class_representatives(GroupType::D, n);
}

/// Largest number of equal components; 0 for [].
int max_multiplicity(const Composition& label);

bool is_prime(long long p);

/// Class representatives indexing the irreducibles of the mod-p algebra.
/// For p = 2: [[]] (n even) or [[], [n]] (n odd). Otherwise the
/// representatives kappa whose diagonal constant a_{JJJ}, J = S \ J(kappa),
/// is not divisible by p; `diagonal_constant` supplies that number.
std::vector<Composition> p_modular_representatives(
    int n, int p, const std::function<std::int64_t(const Composition&)>& diagonal_constant);

/// Representatives with no component of multiplicity p or more.
std::vector<Composition> multiplicity_restricted_representatives(int n, int p);
/// Representatives in which no part is divisible by p.
std::vector<Composition> divisibility_regular_representatives(int n, int p);

}  // namespace descent
