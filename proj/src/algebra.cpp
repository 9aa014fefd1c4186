#include "descent/algebra.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace descent {

// ---------------------------------------------------------------- coset sums

std::vector<std::size_t> coset_reps(const CoxeterGroup& group, GeneratorSet J) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if ((group.right_descents(i) & J).empty()) out.push_back(i);
  }
  return out;
}

std::vector<SignedPermutation> coset_reps(int n, GeneratorSet J) {
  std::vector<SignedPermutation> out;
  for (const auto& w : enumerate_group(n, GroupType::D)) {
    if ((right_descent_set(w) & J).empty()) out.push_back(w);
  }
  return out;
}

std::vector<std::int64_t> structure_constants_direct(const CoxeterGroup& group, GeneratorSet J,
                                                     GeneratorSet K) {
  const CoxeterSystem& system = group.system();
  if (!system.contains(J) || !system.contains(K)) {
    throw std::invalid_argument("structure constant: subset not contained in S");
  }
  std::vector<std::int64_t> counts(system.subset_count(), 0);
  for (std::size_t x = 0; x < group.size(); ++x) {
    if (!(group.left_descents(x) & J).empty() || !(group.right_descents(x) & K).empty()) continue;
    const GeneratorSet L = group.conjugation_map(x).image(J) & K;
    ++counts[system.dense_index(L)];
  }
  return counts;
}

std::int64_t structure_constant_direct(const CoxeterGroup& group, GeneratorSet J, GeneratorSet K,
                                       GeneratorSet L) {
  if (!group.system().contains(L)) throw std::invalid_argument("structure constant: L not in S");
  return structure_constants_direct(group, J, K)[group.system().dense_index(L)];
}

GroupAlgebraElement coset_sum(const CoxeterGroup& group, GeneratorSet J) {
  GroupAlgebraElement e{std::vector<std::int64_t>(group.size(), 0)};
  for (std::size_t i : coset_reps(group, J)) e.coefficients[i] = 1;
  return e;
}

GroupAlgebraElement multiply_in_group_algebra(const CoxeterGroup& group, const GroupAlgebraElement& a,
                                              const GroupAlgebraElement& b) {
  if (a.coefficients.size() != group.size() || b.coefficients.size() != group.size()) {
    throw std::invalid_argument("group algebra element size mismatch");
  }
  std::vector<std::size_t> support_b;
  for (std::size_t j = 0; j < group.size(); ++j) {
    if (b.coefficients[j] != 0) support_b.push_back(j);
  }
  GroupAlgebraElement out{std::vector<std::int64_t>(group.size(), 0)};
  for (std::size_t i = 0; i < group.size(); ++i) {
    const std::int64_t ai = a.coefficients[i];
    if (ai == 0) continue;
    const SignedPermutation& x = group.element(i);
    for (std::size_t j : support_b) {
      std::int64_t term = 0;
      std::int64_t& slot = out.coefficients[group.index_of(compose(x, group.element(j)))];
      if (__builtin_mul_overflow(ai, b.coefficients[j], &term) ||
          __builtin_add_overflow(slot, term, &slot)) {
        throw std::overflow_error("group algebra coefficient overflow");
      }
    }
  }
  return out;
}

GroupAlgebraElement multiply_in_group_algebra(const CoxeterGroup& group, GeneratorSet J,
                                              GeneratorSet K) {
  return multiply_in_group_algebra(group, coset_sum(group, J), coset_sum(group, K));
}

std::vector<std::int64_t> extract_coefficients(const CoxeterGroup& group,
                                               const GroupAlgebraElement& product) {
  const CoxeterSystem& system = group.system();
  const std::size_t count = system.subset_count();
  if (product.coefficients.size() != group.size()) {
    throw std::invalid_argument("group algebra element size mismatch");
  }
  // value[T] = common coefficient on {w : Des_R(w) = T}
  std::vector<std::int64_t> value(count, 0);
  std::vector<bool> seen(count, false);
  for (std::size_t w = 0; w < group.size(); ++w) {
    const std::size_t t = system.dense_index(group.right_descents(w));
    if (!seen[t]) {
      seen[t] = true;
      value[t] = product.coefficients[w];
    } else if (value[t] != product.coefficients[w]) {
      throw SpanError("not in descent-algebra span: coefficient of " + group.element(w).to_string() +
                      " differs from the rest of descent class " +
                      group.right_descents(w).to_string());
    }
  }
  // u(M) = value[S \ M] = sum_{L ⊆ M} c_L; invert over the subset lattice.
  const std::size_t full = count - 1;
  std::vector<std::int64_t> c(count);
  for (std::size_t m = 0; m < count; ++m) c[m] = value[full & ~m];
  for (std::size_t bit = 1; bit < count; bit <<= 1) {
    for (std::size_t m = 0; m < count; ++m) {
      if (m & bit) c[m] -= c[m ^ bit];
    }
  }
  return c;
}

// ---------------------------------------------------------------- constants

std::string to_string(TableMethod method) {
  switch (method) {
    case TableMethod::Sweep: return "sweep";
    case TableMethod::Definition: return "definition";
    case TableMethod::GroupAlgebra: return "group-algebra";
    case TableMethod::MatrixRule: return "matrix-rule";
    case TableMethod::Cache: return "cache";
  }
  return "?";
}

SolomonConstants::SolomonConstants(CoxeterSystem system)
    : system_(system), terms_(system.subset_count() * system.subset_count()) {}

std::span<const SolomonConstants::Term> SolomonConstants::terms(std::size_t J, std::size_t K) const {
  return terms_.at(J * system_.subset_count() + K);
}

std::int64_t SolomonConstants::at(GeneratorSet J, GeneratorSet K, GeneratorSet L) const {
  const auto l = static_cast<std::uint32_t>(system_.dense_index(L));
  for (const Term& t : terms(system_.dense_index(J), system_.dense_index(K))) {
    if (t.index == l) return t.value;
  }
  return 0;
}

void SolomonConstants::set(std::size_t J, std::size_t K, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  terms_.at(J * system_.subset_count() + K) = std::move(terms);
}

bool SolomonConstants::operator==(const SolomonConstants& other) const {
  return system_ == other.system_ && terms_ == other.terms_;
}

namespace {

std::vector<SolomonConstants::Term> nonzero_terms(std::span<const std::int64_t> dense) {
  std::vector<SolomonConstants::Term> out;
  for (std::size_t l = 0; l < dense.size(); ++l) {
    if (dense[l] != 0) out.push_back({static_cast<std::uint32_t>(l), dense[l]});
  }
  return out;
}

void sweep_range(const CoxeterGroup& group, std::size_t begin, std::size_t end,
                 std::vector<std::uint32_t>& acc) {
  const CoxeterSystem& system = group.system();
  const std::size_t count = system.subset_count();
  const std::uint32_t full = static_cast<std::uint32_t>(count - 1);
  const int shift = system.type() == GroupType::A ? 1 : 0;
  std::vector<std::uint32_t> image(count);

  for (std::size_t x = begin; x < end; ++x) {
    const ConjugationMap conj = group.conjugation_map(x);
    std::array<std::uint32_t, kMaxRank> dense_target{};
    for (int b = 0; b < std::countr_zero(count); ++b) {
      const int t = conj.target[b + shift];
      dense_target[b] = t >= 0 ? 1U << (t - shift) : 0U;
    }
    const auto free_j = full & ~static_cast<std::uint32_t>(system.dense_index(group.left_descents(x)));
    const auto free_k = full & ~static_cast<std::uint32_t>(system.dense_index(group.right_descents(x)));

    // Submasks of free_j in increasing order, so J & (J-1) is always ready.
    std::uint32_t J = 0;
    image[0] = 0;
    while (true) {
      if (J != 0) image[J] = image[J & (J - 1)] | dense_target[std::countr_zero(J)];
      const std::uint32_t conj_j = image[J];
      const std::size_t row = static_cast<std::size_t>(J) * count;
      std::uint32_t K = free_k;
      while (true) {
        ++acc[(row + K) * count + (conj_j & K)];
        if (K == 0) break;
        K = (K - 1) & free_k;
      }
      if (J == free_j) break;
      J = (J - free_j) & free_j;
    }
  }
}

}  // namespace

SolomonConstants solomon_constants_by_sweep(const CoxeterGroup& group, int threads) {
  const CoxeterSystem& system = group.system();
  const std::size_t count = system.subset_count();
  const std::size_t cells = count * count * count;
  const std::size_t workers = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::max(threads, 1)), 1, std::max<std::size_t>(group.size(), 1));

  std::vector<std::vector<std::uint32_t>> partial(workers);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (group.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(group.size(), w * chunk);
      const std::size_t end = std::min(group.size(), begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        partial[w].assign(cells, 0);
        sweep_range(group, begin, end, partial[w]);
      });
    }
  }
  SolomonConstants out(system);
  std::vector<std::int64_t> dense(count);
  for (std::size_t J = 0; J < count; ++J) {
    for (std::size_t K = 0; K < count; ++K) {
      std::fill(dense.begin(), dense.end(), 0);
      for (const auto& acc : partial) {
        for (std::size_t L = 0; L < count; ++L) dense[L] += acc[(J * count + K) * count + L];
      }
      out.set(J, K, nonzero_terms(dense));
    }
  }
  return out;
}

SolomonConstants solomon_constants_by_definition(const CoxeterGroup& group) {
  const CoxeterSystem& system = group.system();
  const std::size_t count = system.subset_count();
  std::vector<ConjugationMap> maps;
  maps.reserve(group.size());
  for (std::size_t x = 0; x < group.size(); ++x) maps.push_back(group.conjugation_map(x));
  SolomonConstants out(system);
  std::vector<std::int64_t> counts(count);
  for (std::size_t dj = 0; dj < count; ++dj) {
    const GeneratorSet J = system.subset_at(dj);
    for (std::size_t dk = 0; dk < count; ++dk) {
      const GeneratorSet K = system.subset_at(dk);
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t x = 0; x < group.size(); ++x) {
        if (!(group.left_descents(x) & J).empty() || !(group.right_descents(x) & K).empty()) continue;
        ++counts[system.dense_index(maps[x].image(J) & K)];
      }
      out.set(dj, dk, nonzero_terms(counts));
    }
  }
  return out;
}

SolomonConstants solomon_constants_by_group_algebra(const CoxeterGroup& group) {
  const CoxeterSystem& system = group.system();
  const std::size_t count = system.subset_count();
  std::vector<GroupAlgebraElement> sums;
  for (std::size_t J = 0; J < count; ++J) sums.push_back(coset_sum(group, system.subset_at(J)));
  SolomonConstants out(system);
  for (std::size_t J = 0; J < count; ++J) {
    for (std::size_t K = 0; K < count; ++K) {
      const auto product = multiply_in_group_algebra(group, sums[J], sums[K]);
      out.set(J, K, nonzero_terms(extract_coefficients(group, product)));
    }
  }
  return out;
}

// ---------------------------------------------------------------- table

StructureTable::StructureTable(GroupType type, int n, std::vector<Composition> basis,
                               std::vector<std::vector<Term>> products, TableMethod provenance)
    : type_(type), n_(n), basis_(std::move(basis)), provenance_(provenance) {
  const std::size_t dim = basis_.size();
  if (products.size() != dim * dim) throw std::invalid_argument("structure table: wrong number of products");
  offsets_.reserve(dim * dim + 1);
  offsets_.push_back(0);
  for (auto& terms : products) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    for (const Term& t : terms) {
      if (t.index >= dim) throw std::invalid_argument("structure table: basis index out of range");
      if (t.value < 0) throw std::invalid_argument("structure table: negative structure constant");
      if (t.value != 0) entries_.push_back(t);
    }
    offsets_.push_back(entries_.size());
  }
}

std::size_t StructureTable::index_of(const Composition& label) const {
  const auto it = std::find(basis_.begin(), basis_.end(), label);
  if (it == basis_.end()) throw std::invalid_argument("label " + label.to_string() + " not in basis");
  return static_cast<std::size_t>(it - basis_.begin());
}

std::span<const StructureTable::Term> StructureTable::product(std::size_t i, std::size_t j) const {
  const std::size_t cell = i * basis_.size() + j;
  return {entries_.data() + offsets_.at(cell), entries_.data() + offsets_.at(cell + 1)};
}

std::int64_t StructureTable::constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const Term& t : product(i, j)) {
    if (t.index == k) return t.value;
  }
  return 0;
}

std::size_t StructureTable::identity_index() const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (subset_of(basis_[i]).empty()) return i;
  }
  throw std::logic_error("structure table has no identity label");
}

bool StructureTable::same_constants(const StructureTable& other) const {
  return type_ == other.type_ && n_ == other.n_ && basis_ == other.basis_ &&
         offsets_ == other.offsets_ && entries_ == other.entries_;
}

GeneratorSet coset_subset(const Composition& label, const CoxeterSystem& system) {
  return system.generators() - subset_of(label);
}

StructureTable relabel(const SolomonConstants& constants, std::vector<Composition> labels,
                       const std::function<GeneratorSet(const Composition&)>& subset_for_label,
                       TableMethod provenance) {
  const CoxeterSystem& system = constants.system();
  const std::size_t dim = labels.size();
  if (dim != system.subset_count()) throw std::invalid_argument("relabel: basis size mismatch");
  std::vector<std::size_t> dense_of_label(dim);
  std::vector<std::int64_t> label_of_dense(dim, -1);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t d = system.dense_index(subset_for_label(labels[i]));
    if (d >= dim || label_of_dense[d] >= 0) throw std::invalid_argument("relabel: labeling is not a bijection");
    dense_of_label[i] = d;
    label_of_dense[d] = static_cast<std::int64_t>(i);
  }
  std::vector<std::vector<StructureTable::Term>> products(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      auto& out = products[i * dim + j];
      for (const auto& t : constants.terms(dense_of_label[i], dense_of_label[j])) {
        out.push_back({static_cast<std::uint32_t>(label_of_dense[t.index]), t.value});
      }
    }
  }
  const int n = system.rank();
  return StructureTable(system.type(), n, std::move(labels), std::move(products), provenance);
}

StructureTable make_table(const SolomonConstants& constants, TableMethod provenance) {
  const CoxeterSystem system = constants.system();
  return relabel(constants, all_labels(system.type(), system.rank()),
                 [&](const Composition& c) { return coset_subset(c, system); }, provenance);
}

StructureTable build_table(int n, GroupType type, BuildOptions options) {
  const CoxeterGroup group(CoxeterSystem(type, n), options.rank_bound);
  return make_table(solomon_constants_by_sweep(group, options.threads), TableMethod::Sweep);
}

// ---------------------------------------------------------------- elements

AlgebraElement::AlgebraElement(std::shared_ptr<const StructureTable> table, std::optional<int> modulus)
    : table_(std::move(table)), modulus_(modulus) {
  if (!table_) throw std::invalid_argument("algebra element needs a table");
  if (modulus_ && !is_prime(*modulus_)) throw std::invalid_argument("modulus must be prime");
}

AlgebraElement AlgebraElement::basis(std::shared_ptr<const StructureTable> table, std::size_t index,
                                     std::optional<int> modulus) {
  AlgebraElement e(std::move(table), modulus);
  if (index >= e.table_->dimension()) throw std::invalid_argument("basis index out of range");
  e.add_term(index, 1);
  return e;
}

AlgebraElement AlgebraElement::basis(std::shared_ptr<const StructureTable> table, const Composition& label,
                                     std::optional<int> modulus) {
  const std::size_t index = table->index_of(label);
  return basis(std::move(table), index, modulus);
}

BigInt AlgebraElement::coefficient(std::size_t index) const {
  const auto it = coefficients_.find(index);
  return it == coefficients_.end() ? BigInt(0) : it->second;
}

BigInt AlgebraElement::normalize(BigInt value) const {
  if (modulus_) {
    value %= *modulus_;
    if (sgn(value) < 0) value += *modulus_;
  }
  return value;
}

void AlgebraElement::add_term(std::size_t index, const BigInt& value) {
  if (index >= table_->dimension()) throw std::invalid_argument("basis index out of range");
  BigInt sum = normalize(coefficient(index) + value);
  if (sgn(sum) == 0) {
    coefficients_.erase(index);
  } else {
    coefficients_[index] = std::move(sum);
  }
}

void AlgebraElement::check_compatible(const AlgebraElement& other) const {
  if (table_ != other.table_ && !table_->same_constants(*other.table_)) {
    throw std::invalid_argument("algebra elements belong to different tables");
  }
  if (modulus_ != other.modulus_) throw std::invalid_argument("algebra elements have different scalar modes");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  check_compatible(other);
  for (const auto& [i, c] : other.coefficients_) add_term(i, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  check_compatible(other);
  for (const auto& [i, c] : other.coefficients_) add_term(i, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const BigInt& scalar) {
  std::map<std::size_t, BigInt> scaled;
  for (const auto& [i, c] : coefficients_) {
    BigInt v = normalize(c * scalar);
    if (sgn(v) != 0) scaled.emplace(i, std::move(v));
  }
  coefficients_ = std::move(scaled);
  return *this;
}

AlgebraElement AlgebraElement::reduced(int p) const {
  AlgebraElement out(table_, p);
  for (const auto& [i, c] : coefficients_) out.add_term(i, c);
  return out;
}

bool AlgebraElement::operator==(const AlgebraElement& other) const {
  return (table_ == other.table_ || table_->same_constants(*other.table_)) &&
         modulus_ == other.modulus_ && coefficients_ == other.coefficients_;
}

std::string AlgebraElement::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : coefficients_) {
    const bool negative = sgn(c) < 0;
    const BigInt magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "B" + table_->label(i).to_string();
  }
  return out;
}

namespace {

nlohmann::json integer_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

nlohmann::json AlgebraElement::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [i, c] : coefficients_) out.push_back({table_->label(i).to_string(), integer_json(c)});
  return out;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_compatible(b);
  const StructureTable& table = a.table();
  std::vector<BigInt> acc(table.dimension());
  BigInt ab;
  for (const auto& [i, ca] : a.coefficients()) {
    for (const auto& [j, cb] : b.coefficients()) {
      ab = ca * cb;
      for (const auto& term : table.product(i, j)) acc[term.index] += ab * term.value;
    }
  }
  AlgebraElement out(a.table_ptr(), a.modulus());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (sgn(acc[k]) != 0) out.add_term(k, acc[k]);
  }
  return out;
}

// ---------------------------------------------------------------- cache

nlohmann::json table_to_json(const StructureTable& table) {
  nlohmann::json doc;
  doc["schema_version"] = kTableSchemaVersion;
  doc["group_type"] = to_string(table.type());
  doc["n"] = table.rank();
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& label : table.basis()) basis.push_back(label.to_string());
  doc["basis"] = std::move(basis);
  nlohmann::json constants = nlohmann::json::array();
  const std::size_t dim = table.dimension();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (const auto& t : table.product(i, j)) constants.push_back({i, j, t.index, t.value});
    }
  }
  doc["constants"] = std::move(constants);
  return doc;
}

StructureTable table_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("schema_version").get<int>() != kTableSchemaVersion) {
      throw std::invalid_argument("schema_version mismatch");
    }
    const GroupType type = parse_group_type(doc.at("group_type").get<std::string>());
    const int n = doc.at("n").get<int>();
    std::vector<Composition> basis;
    for (const auto& text : doc.at("basis")) basis.push_back(parse_label(text.get<std::string>(), type, n));
    if (basis != all_labels(type, n)) throw std::invalid_argument("basis is not in canonical order");
    const std::size_t dim = basis.size();
    std::vector<std::vector<StructureTable::Term>> products(dim * dim);
    for (const auto& row : doc.at("constants")) {
      if (!row.is_array() || row.size() != 4) throw std::invalid_argument("malformed constant entry");
      const auto i = row[0].get<std::size_t>();
      const auto j = row[1].get<std::size_t>();
      const auto k = row[2].get<std::size_t>();
      const auto v = row[3].get<std::int64_t>();
      if (i >= dim || j >= dim || k >= dim) throw std::invalid_argument("constant index out of range");
      products[i * dim + j].push_back({static_cast<std::uint32_t>(k), v});
    }
    return StructureTable(type, n, std::move(basis), std::move(products), TableMethod::Cache);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed table document: ") + e.what());
  }
}

std::string serialize_table(const StructureTable& table) { return table_to_json(table).dump() + "\n"; }

}  // namespace descent
