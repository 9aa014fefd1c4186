#include "descent/typea.hpp"

#include <numeric>

namespace descent {

std::vector<int> FlowMatrix::row_sums() const {
  std::vector<int> out;
  for (const auto& row : rows) out.push_back(std::accumulate(row.begin(), row.end(), 0));
  return out;
}

std::vector<int> FlowMatrix::column_sums() const {
  std::vector<int> out(rows.empty() ? 0 : rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out[j] += row[j];
  }
  return out;
}

std::vector<int> reading_word(const FlowMatrix& z) {
  std::vector<int> out;
  for (const auto& row : z.rows) {
    for (int x : row) {
      if (x != 0) out.push_back(x);
    }
  }
  return out;
}

namespace {

void check_totals(std::span<const int> kappa, std::span<const int> nu) {
  for (int x : kappa) {
    if (x <= 0) throw std::invalid_argument("composition components must be positive");
  }
  for (int x : nu) {
    if (x <= 0) throw std::invalid_argument("composition components must be positive");
  }
  if (std::accumulate(kappa.begin(), kappa.end(), 0) != std::accumulate(nu.begin(), nu.end(), 0)) {
    throw std::invalid_argument("compositions of different integers");
  }
}

struct Filler {
  std::span<const int> column_sums;
  std::span<const int> row_sums;
  bool single_entry_columns;
  std::vector<int> remaining;  // per column
  FlowMatrix current;
  std::vector<FlowMatrix> out;

  void fill_row(std::size_t i, std::size_t j, int left) {
    if (j == column_sums.size()) {
      if (left == 0) next_row(i + 1);
      return;
    }
    // Later columns can absorb at most their remaining sums.
    int capacity = 0;
    for (std::size_t k = j + 1; k < column_sums.size(); ++k) capacity += remaining[k];
    const int lo = std::max(0, left - capacity);
    const int hi = std::min(left, remaining[j]);
    for (int v = lo; v <= hi; ++v) {
      if (single_entry_columns && v != 0 && v != column_sums[j]) continue;
      current.rows[i][j] = v;
      remaining[j] -= v;
      fill_row(i, j + 1, left - v);
      remaining[j] += v;
    }
    current.rows[i][j] = 0;
  }

  void next_row(std::size_t i) {
    if (i == row_sums.size()) {
      out.push_back(current);
      return;
    }
    fill_row(i, 0, row_sums[i]);
  }
};

CompositionCounts reading_words(const std::vector<FlowMatrix>& matrices) {
  CompositionCounts out;
  for (const auto& z : matrices) ++out[reading_word(z)];
  return out;
}

}  // namespace

std::vector<FlowMatrix> flow_matrices(std::span<const int> column_sums, std::span<const int> row_sums,
                                      bool single_entry_columns) {
  check_totals(column_sums, row_sums);
  Filler f{column_sums, row_sums, single_entry_columns,
           std::vector<int>(column_sums.begin(), column_sums.end()),
           FlowMatrix{std::vector<std::vector<int>>(row_sums.size(), std::vector<int>(column_sums.size(), 0))},
           {}};
  f.next_row(0);
  return std::move(f.out);
}

CompositionCounts multiply_sn(std::span<const int> kappa, std::span<const int> nu) {
  return reading_words(flow_matrices(kappa, nu));
}

CompositionCounts lie_action(std::span<const int> kappa, std::span<const int> nu) {
  return reading_words(flow_matrices(kappa, nu, true));
}

bool has_adjacent_coarsening(std::span<const int> kappa, std::span<const int> nu) {
  check_totals(kappa, nu);
  std::size_t j = 0;
  for (int target : nu) {
    int run = 0;
    while (run < target && j < kappa.size()) run += kappa[j++];
    if (run != target) return false;
  }
  return j == kappa.size();
}

namespace {

bool assign(std::span<const int> kappa, std::size_t j, std::vector<int>& room) {
  if (j == kappa.size()) return true;
  for (auto& r : room) {
    if (r >= kappa[j]) {
      r -= kappa[j];
      const bool ok = assign(kappa, j + 1, room);
      r += kappa[j];
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

bool has_grouping(std::span<const int> kappa, std::span<const int> nu) {
  check_totals(kappa, nu);
  std::vector<int> room(nu.begin(), nu.end());
  return assign(kappa, 0, room);
}

StructureTable build_table_by_matrix_rule(int n) {
  auto basis = all_labels(GroupType::A, n);
  const std::size_t dim = basis.size();
  std::map<std::vector<int>, std::uint32_t> index;
  for (std::size_t i = 0; i < dim; ++i) index[basis[i].parts] = static_cast<std::uint32_t>(i);
  std::vector<std::vector<StructureTable::Term>> products(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (const auto& [word, count] : multiply_sn(basis[i].parts, basis[j].parts)) {
        products[i * dim + j].push_back({index.at(word), count});
      }
    }
  }
  return StructureTable(GroupType::A, n, std::move(basis), std::move(products), TableMethod::MatrixRule);
}

}  // namespace descent
