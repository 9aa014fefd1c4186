#include "descent/radical.hpp"

#include <algorithm>

namespace descent {

namespace {

using linalg::EchelonBasis;
using linalg::IntegerArithmetic;
using linalg::ModularArithmetic;

RadicalBasis empty_basis(std::shared_ptr<const StructureTable> table, std::optional<int> modulus) {
  RadicalBasis out{std::move(table), modulus, {}, {}};
  const StructureTable& t = *out.table;
  for (std::size_t i = 0; i < t.dimension(); ++i) {
    out.class_map.push_back(t.index_of(class_representative(t.label(i))));
  }
  return out;
}

void add_class_differences(RadicalBasis& out) {
  for (std::size_t i = 0; i < out.class_map.size(); ++i) {
    if (out.class_map[i] == i) continue;
    AlgebraElement e = AlgebraElement::basis(out.table, i, out.modulus);
    e -= AlgebraElement::basis(out.table, out.class_map[i], out.modulus);
    out.spanning_set.push_back(std::move(e));
  }
}

void require_type_d(const StructureTable& table) {
  if (table.type() != GroupType::D) throw std::invalid_argument("mod-p radical description is for type D");
}

void require_prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

// Dense coordinate vectors in the chosen arithmetic.

std::vector<BigInt> dense(const AlgebraElement& e, const IntegerArithmetic&) {
  std::vector<BigInt> v(e.table().dimension());
  for (const auto& [i, c] : e.coefficients()) v[i] = c;
  return v;
}

std::vector<std::int64_t> dense(const AlgebraElement& e, const ModularArithmetic& arith) {
  std::vector<std::int64_t> v(e.table().dimension(), 0);
  for (const auto& [i, c] : e.coefficients()) {
    BigInt r = c % arith.p;
    v[i] = arith.reduce(r.get_si());
  }
  return v;
}

std::vector<BigInt> multiply_dense(const StructureTable& table, const std::vector<BigInt>& a,
                                   const std::vector<BigInt>& b, const IntegerArithmetic&) {
  std::vector<BigInt> out(table.dimension());
  BigInt ab;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      ab = a[i] * b[j];
      for (const auto& t : table.product(i, j)) out[t.index] += ab * t.value;
    }
  }
  IntegerArithmetic::make_primitive(out);
  return out;
}

std::vector<std::int64_t> multiply_dense(const StructureTable& table, const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b,
                                         const ModularArithmetic& arith) {
  std::vector<std::int64_t> out(table.dimension(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      const std::int64_t ab = a[i] * b[j] % arith.p;
      for (const auto& t : table.product(i, j)) {
        out[t.index] = (out[t.index] + ab * (t.value % arith.p)) % arith.p;
      }
    }
  }
  return out;
}

template <class Arith>
std::vector<typename Arith::value_type> unit_vector(std::size_t dim, std::size_t i) {
  std::vector<typename Arith::value_type> v(dim);
  for (auto& x : v) x = 0;
  v[i] = 1;
  return v;
}

template <class Arith>
EchelonBasis<Arith> echelon_of(const RadicalBasis& basis, const Arith& arith) {
  EchelonBasis<Arith> e(basis.table->dimension(), arith);
  for (const auto& element : basis.spanning_set) e.add(dense(element, arith));
  return e;
}

template <class Arith>
IdealReport verify_with(const RadicalBasis& basis, const Arith& arith) {
  const StructureTable& table = *basis.table;
  const std::size_t dim = table.dimension();
  IdealReport report;
  const EchelonBasis<Arith> span = echelon_of(basis, arith);
  report.span_rank = span.rank();
  report.quotient_dim = dim - span.rank();

  constexpr std::size_t kMaxFailures = 5;
  for (const auto& element : basis.spanning_set) {
    const auto r = dense(element, arith);
    for (std::size_t b = 0; b < dim; ++b) {
      const auto e = unit_vector<Arith>(dim, b);
      if (!span.contains(multiply_dense(table, e, r, arith))) {
        report.is_left_ideal = false;
        if (report.failures.size() < kMaxFailures) {
          report.failures.push_back("B" + table.label(b).to_string() + " * (" + element.to_string() +
                                    ") escapes the span");
        }
      }
      if (!span.contains(multiply_dense(table, r, e, arith))) {
        report.is_right_ideal = false;
        if (report.failures.size() < kMaxFailures) {
          report.failures.push_back("(" + element.to_string() + ") * B" + table.label(b).to_string() +
                                    " escapes the span");
        }
      }
    }
  }

  // power = span^k, tracked by an echelon basis; stop at 0 or when stable.
  if (span.rank() == 0) {
    report.nilpotency_index = 1;
    return report;
  }
  EchelonBasis<Arith> power = span;
  for (int k = 2; k <= static_cast<int>(dim) + 1; ++k) {
    EchelonBasis<Arith> next(dim, arith);
    for (const auto& p : power.rows()) {
      for (const auto& r : span.rows()) next.add(multiply_dense(table, p, r, arith));
    }
    if (next.rank() == 0) {
      report.nilpotency_index = k;
      return report;
    }
    bool contained = next.rank() == power.rank();
    for (std::size_t i = 0; contained && i < next.rows().size(); ++i) contained = power.contains(next.rows()[i]);
    if (contained) break;
    power = std::move(next);
  }
  report.failures.push_back("powers of the span do not reach zero");
  return report;
}

template <class Arith>
bool span_equal_with(const RadicalBasis& a, const RadicalBasis& b, const Arith& arith) {
  const auto ea = echelon_of(a, arith);
  const auto eb = echelon_of(b, arith);
  if (ea.rank() != eb.rank()) return false;
  for (const auto& row : eb.rows()) {
    if (!ea.contains(row)) return false;
  }
  return true;
}

}  // namespace

RadicalBasis radical_char0(std::shared_ptr<const StructureTable> table) {
  RadicalBasis out = empty_basis(std::move(table), std::nullopt);
  add_class_differences(out);
  return out;
}

RadicalBasis radical_mod_p(std::shared_ptr<const StructureTable> table, int p) {
  require_prime(p);
  require_type_d(*table);
  RadicalBasis out = empty_basis(std::move(table), p);
  const StructureTable& t = *out.table;
  const int n = t.rank();
  if (p != 2) {
    add_class_differences(out);
    for (std::size_t i = 0; i < t.dimension(); ++i) {
      if (max_multiplicity(t.label(i)) >= p) out.spanning_set.push_back(AlgebraElement::basis(out.table, i, p));
    }
    return out;
  }
  const Composition empty{{}, Region::Small, n};
  const Composition top{{n}, Region::Main, n};
  const Composition top_prime{{n}, Region::MainPrime, n};
  for (std::size_t i = 0; i < t.dimension(); ++i) {
    const Composition& label = t.label(i);
    if (label == empty) continue;
    if (n % 2 == 1 && (label == top || label == top_prime)) continue;
    out.spanning_set.push_back(AlgebraElement::basis(out.table, i, p));
  }
  if (n % 2 == 1) {
    AlgebraElement d = AlgebraElement::basis(out.table, top, p);
    d -= AlgebraElement::basis(out.table, top_prime, p);
    out.spanning_set.push_back(std::move(d));
  }
  return out;
}

std::int64_t diagonal_constant(const StructureTable& table, std::size_t i) { return table.constant(i, i, i); }

RadicalBasis radical_mod_p_via_aJJJ(std::shared_ptr<const StructureTable> table, int p) {
  require_prime(p);
  RadicalBasis out = empty_basis(std::move(table), p);
  add_class_differences(out);
  const StructureTable& t = *out.table;
  for (std::size_t i = 0; i < t.dimension(); ++i) {
    if (diagonal_constant(t, i) % p == 0) out.spanning_set.push_back(AlgebraElement::basis(out.table, i, p));
  }
  return out;
}

std::vector<Composition> representatives_by_diagonal(const StructureTable& table, int p) {
  require_prime(p);
  std::vector<Composition> out;
  for (auto& rep : class_representatives(table.type(), table.rank())) {
    if (diagonal_constant(table, table.index_of(rep)) % p != 0) out.push_back(std::move(rep));
  }
  return out;
}

std::vector<Composition> p_modular_representatives(const StructureTable& table, int p) {
  require_type_d(table);
  return p_modular_representatives(table.rank(), p, [&](const Composition& c) {
    return diagonal_constant(table, table.index_of(c));
  });
}

IdealReport verify_ideal(const RadicalBasis& basis) {
  if (basis.modulus) return verify_with(basis, ModularArithmetic{*basis.modulus});
  return verify_with(basis, IntegerArithmetic{});
}

bool span_equal(const RadicalBasis& a, const RadicalBasis& b) {
  if (a.modulus != b.modulus) throw std::invalid_argument("span_equal: different scalar modes");
  if (a.modulus) return span_equal_with(a, b, ModularArithmetic{*a.modulus});
  return span_equal_with(a, b, IntegerArithmetic{});
}

std::size_t span_rank(const RadicalBasis& basis) {
  if (basis.modulus) return echelon_of(basis, ModularArithmetic{*basis.modulus}).rank();
  return echelon_of(basis, IntegerArithmetic{}).rank();
}

bool in_span(const AlgebraElement& element, const RadicalBasis& basis) {
  if (basis.modulus) {
    const ModularArithmetic arith{*basis.modulus};
    return echelon_of(basis, arith).contains(dense(element, arith));
  }
  const IntegerArithmetic arith;
  return echelon_of(basis, arith).contains(dense(element, arith));
}

}  // namespace descent
