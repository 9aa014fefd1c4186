#pragma once

// Exact incremental row echelon forms over Q (fraction-free, integer rows
// kept primitive) and over F_p. No floating point.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace descent::linalg {

using BigInt = mpz_class;

/// Rational rank/span via integer rows.
struct IntegerArithmetic {
  using value_type = BigInt;

  bool is_zero(const BigInt& x) const { return sgn(x) == 0; }

  // v <- a*v - b*row with a = row[c]/g, b = v[c]/g, then strip the content.
  void eliminate(std::vector<BigInt>& v, const std::vector<BigInt>& row, std::size_t c) const {
    BigInt g = gcd(row[c], v[c]);
    const BigInt a = row[c] / g;
    const BigInt b = v[c] / g;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (sgn(row[k]) == 0) {
        if (sgn(v[k]) != 0 && a != 1) v[k] *= a;
        continue;
      }
      v[k] = a * v[k] - b * row[k];
    }
    make_primitive(v);
  }

  void normalize(std::vector<BigInt>& v, std::size_t /*pivot*/) const { make_primitive(v); }

  static void make_primitive(std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& x : v) {
      if (sgn(x) != 0) g = gcd(g, x);
      if (g == 1) return;
    }
    if (g > 1) {
      for (auto& x : v) x /= g;
    }
  }
};

/// Arithmetic in F_p with residues in [0, p).
struct ModularArithmetic {
  using value_type = std::int64_t;
  std::int64_t p = 2;

  bool is_zero(std::int64_t x) const { return x % p == 0; }

  std::int64_t reduce(std::int64_t x) const {
    x %= p;
    return x < 0 ? x + p : x;
  }

  std::int64_t inverse(std::int64_t a) const {
    // Fermat; p is prime and small.
    std::int64_t result = 1;
    std::int64_t base = reduce(a);
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return result;
  }

  void eliminate(std::vector<std::int64_t>& v, const std::vector<std::int64_t>& row,
                 std::size_t c) const {
    const std::int64_t f = reduce(v[c]);  // row[c] == 1
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (row[k] != 0) v[k] = reduce(v[k] - f * row[k]);
    }
  }

  void normalize(std::vector<std::int64_t>& v, std::size_t pivot) const {
    const std::int64_t inv = inverse(v[pivot]);
    for (auto& x : v) x = reduce(x) * inv % p;
  }
};

template <class Arith>
class EchelonBasis {
 public:
  using value_type = typename Arith::value_type;

  explicit EchelonBasis(std::size_t dimension, Arith arith = {})
      : dimension_(dimension), arith_(arith) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<value_type>>& rows() const { return rows_; }
  const Arith& arithmetic() const { return arith_; }

  /// Reduces `v` against the basis; returns the residual.
  std::vector<value_type> residual(std::vector<value_type> v) const {
    check(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!arith_.is_zero(v[pivots_[r]])) arith_.eliminate(v, rows_[r], pivots_[r]);
    }
    return v;
  }

  bool contains(std::vector<value_type> v) const {
    v = residual(std::move(v));
    for (const auto& x : v) {
      if (!arith_.is_zero(x)) return false;
    }
    return true;
  }

  /// Adds `v` if independent of the current rows; returns whether it was.
  bool add(std::vector<value_type> v) {
    v = residual(std::move(v));
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (!arith_.is_zero(v[c])) {
        arith_.normalize(v, c);
        rows_.push_back(std::move(v));
        pivots_.push_back(c);
        return true;
      }
    }
    return false;
  }

 private:
  void check(const std::vector<value_type>& v) const {
    if (v.size() != dimension_) throw std::invalid_argument("vector dimension mismatch");
  }

  std::size_t dimension_;
  Arith arith_;
  std::vector<std::vector<value_type>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class Arith>
std::size_t rank(const std::vector<std::vector<typename Arith::value_type>>& vectors,
                 std::size_t dimension, Arith arith = {}) {
  EchelonBasis<Arith> basis(dimension, arith);
  for (const auto& v : vectors) basis.add(v);
  return basis.rank();
}

template <class Arith>
bool in_span(const std::vector<typename Arith::value_type>& v,
             const std::vector<std::vector<typename Arith::value_type>>& vectors,
             std::size_t dimension, Arith arith = {}) {
  EchelonBasis<Arith> basis(dimension, arith);
  for (const auto& w : vectors) basis.add(w);
  return basis.contains(v);
}

template <class Arith>
bool span_equal(const std::vector<std::vector<typename Arith::value_type>>& a,
                const std::vector<std::vector<typename Arith::value_type>>& b,
                std::size_t dimension, Arith arith = {}) {
  EchelonBasis<Arith> ea(dimension, arith);
  EchelonBasis<Arith> eb(dimension, arith);
  for (const auto& v : a) ea.add(v);
  for (const auto& v : b) eb.add(v);
  if (ea.rank() != eb.rank()) return false;
  for (const auto& v : b) {
    if (!ea.contains(v)) return false;
  }
  return true;
}

}  // namespace descent::linalg
