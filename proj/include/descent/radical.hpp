#pragma once

// Radical spanning sets of the descent algebra over Q and over F_p, and an
// exact check that a given span is a nilpotent two-sided ideal.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "descent/algebra.hpp"

namespace descent {

struct RadicalBasis {
  std::shared_ptr<const StructureTable> table;
  std::optional<int> modulus;
  /// Differences B_kappa - B_rho and (mod p) single basis elements, as given.
  std::vector<AlgebraElement> spanning_set;
  /// class_map[i] = basis index of the class representative of label i.
  std::vector<std::size_t> class_map;
};

/// All B_kappa - B_rho with rho the representative of kappa's class.
RadicalBasis radical_char0(std::shared_ptr<const StructureTable> table);

/// The combinatorial spanning set over F_p (type D only):
///   p odd: the class differences plus every B_kappa with a component of
///          multiplicity >= p;
///   p = 2, n even: every B_kappa except B_[];
///   p = 2, n odd: every B_kappa except B_[], B_[n], B_[n]^v, plus B_[n] - B_[n]^v.
RadicalBasis radical_mod_p(std::shared_ptr<const StructureTable> table, int p);

/// The class differences plus every B_kappa whose diagonal constant
/// c_{kappa kappa}^{kappa} (= a_{JJJ}) is divisible by p.
RadicalBasis radical_mod_p_via_aJJJ(std::shared_ptr<const StructureTable> table, int p);

/// Coefficient of B_i in B_i B_i.
std::int64_t diagonal_constant(const StructureTable& table, std::size_t i);

/// Class representatives whose diagonal constant is prime to p.
std::vector<Composition> representatives_by_diagonal(const StructureTable& table, int p);
/// labels::p_modular_representatives with the table supplying a_{JJJ}.
std::vector<Composition> p_modular_representatives(const StructureTable& table, int p);

struct IdealReport {
  bool is_left_ideal = true;
  bool is_right_ideal = true;
  /// Least k with (span)^k = 0; empty if the powers stabilise above zero.
  std::optional<int> nilpotency_index;
  std::size_t span_rank = 0;
  std::size_t quotient_dim = 0;
  /// Human-readable failure coordinates, first few only.
  std::vector<std::string> failures;

  bool is_ideal() const { return is_left_ideal && is_right_ideal; }
  bool ok() const { return is_ideal() && nilpotency_index.has_value(); }
};

IdealReport verify_ideal(const RadicalBasis& basis);

/// Whether two spanning sets over the same table and field have equal spans.
bool span_equal(const RadicalBasis& a, const RadicalBasis& b);
/// Rank of the spanning set.
std::size_t span_rank(const RadicalBasis& basis);
/// Whether `element` lies in the span.
bool in_span(const AlgebraElement& element, const RadicalBasis& basis);

}  // namespace descent
