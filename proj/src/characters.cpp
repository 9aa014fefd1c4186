#include "descent/characters.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace descent {

std::vector<std::size_t> parabolic_subgroup(const CoxeterGroup& group, GeneratorSet J) {
  if (!group.system().contains(J)) throw std::invalid_argument("parabolic_subgroup: subset not in S");
  std::vector<bool> seen(group.size(), false);
  std::deque<std::size_t> queue{group.identity_index()};
  seen[group.identity_index()] = true;
  const auto gens = J.members();
  while (!queue.empty()) {
    const std::size_t w = queue.front();
    queue.pop_front();
    for (Generator g : gens) {
      const std::size_t v = group.index_of(right_multiply_generator(group.element(w), g));
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

SignedPermutation coxeter_element(int n, GeneratorSet J, const std::optional<std::vector<Generator>>& ordering) {
  const std::vector<Generator> order = ordering ? *ordering : J.members();
  std::vector<Generator> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != J.members()) throw std::invalid_argument("coxeter_element: ordering is not an arrangement of J");
  SignedPermutation c = SignedPermutation::identity(n);
  for (Generator g : order) c = right_multiply_generator(c, g);
  return c;
}

PermutationCharacter::PermutationCharacter(const CoxeterGroup& group, GeneratorSet J)
    : group_(&group), in_subgroup_(group.size(), false) {
  for (std::size_t i : parabolic_subgroup(group, J)) in_subgroup_[i] = true;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if ((group.left_descents(i) & J).empty()) {
      right_reps_.push_back(group.element(i));
      right_reps_inverse_.push_back(group.element(group.inverse_index(i)));
    }
  }
}

std::int64_t PermutationCharacter::operator()(const SignedPermutation& w) const {
  std::int64_t fixed = 0;
  for (std::size_t i = 0; i < right_reps_.size(); ++i) {
    const SignedPermutation y = compose(right_reps_[i], compose(w, right_reps_inverse_[i]));
    fixed += in_subgroup_[group_->index_of(y)];
  }
  return fixed;
}

std::int64_t perm_character(const CoxeterGroup& group, GeneratorSet J, const SignedPermutation& w) {
  return PermutationCharacter(group, J)(w);
}

std::vector<std::int64_t> CharacterMatrix::column(std::size_t col) const {
  std::vector<std::int64_t> out;
  out.reserve(entries.size());
  for (const auto& row : entries) out.push_back(row.at(col));
  return out;
}

std::size_t CharacterMatrix::distinct_column_count() const {
  std::set<std::vector<std::int64_t>> distinct;
  for (std::size_t c = 0; c < representatives.size(); ++c) distinct.insert(column(c));
  return distinct.size();
}

namespace {

std::vector<SignedPermutation> coxeter_elements_of(const CoxeterGroup& group,
                                                   const std::vector<Composition>& labels) {
  std::vector<SignedPermutation> out;
  for (const auto& label : labels) {
    out.push_back(coxeter_element(group.system().rank(), coset_subset(label, group.system())));
  }
  return out;
}

}  // namespace

CharacterMatrix character_matrix(const CoxeterGroup& group) {
  const CoxeterSystem& system = group.system();
  CharacterMatrix m{system.type(), system.rank(), class_representatives(system.type(), system.rank()), {}};
  const auto elements = coxeter_elements_of(group, m.representatives);
  for (const auto& row : m.representatives) {
    const PermutationCharacter phi(group, coset_subset(row, system));
    std::vector<std::int64_t> values;
    for (const auto& c : elements) values.push_back(phi(c));
    m.entries.push_back(std::move(values));
  }
  return m;
}

BigInt IrreducibleMap::operator()(const AlgebraElement& element) const {
  if (element.table().dimension() != values_.size()) throw std::invalid_argument("irreducible map: table mismatch");
  BigInt sum = 0;
  for (const auto& [i, c] : element.coefficients()) sum += c * values_[i];
  if (const auto p = element.modulus()) {
    sum %= *p;
    if (sgn(sum) < 0) sum += *p;
  }
  return sum;
}

std::vector<IrreducibleMap> irreducible_maps(const CoxeterGroup& group, const StructureTable& table) {
  const CoxeterSystem& system = group.system();
  if (system.type() != table.type() || system.rank() != table.rank()) {
    throw std::invalid_argument("irreducible maps: group and table disagree");
  }
  const auto reps = class_representatives(system.type(), system.rank());
  const auto elements = coxeter_elements_of(group, reps);
  std::vector<std::vector<std::int64_t>> values(reps.size(), std::vector<std::int64_t>(table.dimension()));
  for (std::size_t i = 0; i < table.dimension(); ++i) {
    const PermutationCharacter phi(group, coset_subset(table.label(i), system));
    for (std::size_t k = 0; k < reps.size(); ++k) values[k][i] = phi(elements[k]);
  }
  std::vector<IrreducibleMap> out;
  for (std::size_t k = 0; k < reps.size(); ++k) out.emplace_back(reps[k], std::move(values[k]));
  return out;
}

IrreducibleMap irreducible_map(const CoxeterGroup& group, const StructureTable& table, const Composition& K) {
  const CoxeterSystem& system = group.system();
  if (class_representative(K) != K) throw std::invalid_argument("irreducible_map: " + K.to_string() + " is not a class representative");
  const SignedPermutation c = coxeter_element(system.rank(), coset_subset(K, system));
  std::vector<std::int64_t> values(table.dimension());
  for (std::size_t i = 0; i < table.dimension(); ++i) {
    values[i] = perm_character(group, coset_subset(table.label(i), system), c);
  }
  return IrreducibleMap(K, std::move(values));
}

ModularColumns irreducibles_mod_p(const CharacterMatrix& matrix, int p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  ModularColumns out{p, {}, {}};
  for (std::size_t c = 0; c < matrix.representatives.size(); ++c) {
    auto column = matrix.column(c);
    for (auto& x : column) x = ((x % p) + p) % p;
    const auto it = std::find(out.columns.begin(), out.columns.end(), column);
    if (it == out.columns.end()) {
      out.columns.push_back(std::move(column));
      out.labels.push_back({matrix.representatives[c]});
    } else {
      out.labels[static_cast<std::size_t>(it - out.columns.begin())].push_back(matrix.representatives[c]);
    }
  }
  return out;
}

}  // namespace descent
