#include "descent/verify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "descent/algebra.hpp"
#include "descent/characters.hpp"
#include "descent/labels.hpp"
#include "descent/radical.hpp"
#include "descent/typea.hpp"

namespace descent {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

namespace {

/// A check returns an empty string on success, else the counterexample.
using Check = std::function<std::string()>;

std::string join(const std::vector<Composition>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? " " : "") + labels[i].to_string();
  return out + "}";
}

std::string parts_string(const std::vector<int>& parts) {
  return Composition{parts, Region::Plain, 0}.to_string();
}

class Suite {
 public:
  explicit Suite(VerifyReport& report) : report_(report) {}

  void run(const std::string& name, const Check& check, const std::string& summary = "") {
    const auto start = std::chrono::steady_clock::now();
    CheckResult result{name, true, summary, 0};
    try {
      if (std::string failure = check(); !failure.empty()) {
        result.passed = false;
        result.detail = std::move(failure);
      }
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(result));
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

 private:
  VerifyReport& report_;
};

// ------------------------------------------------------------------ group

std::vector<int> word_lengths(const CoxeterGroup& group) {
  std::vector<int> dist(group.size(), -1);
  std::deque<std::size_t> queue{group.identity_index()};
  dist[group.identity_index()] = 0;
  const auto gens = group.system().generator_list();
  while (!queue.empty()) {
    const std::size_t w = queue.front();
    queue.pop_front();
    for (Generator g : gens) {
      const std::size_t v = group.index_of(right_multiply_generator(group.element(w), g));
      if (dist[v] < 0) {
        dist[v] = dist[w] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

void group_checks(Suite& suite, const CoxeterGroup& group, std::mt19937_64& rng) {
  const CoxeterSystem& system = group.system();
  const int n = system.rank();

  suite.run("group.order", [&]() -> std::string {
    if (group.size() != system.order()) {
      return "enumerated " + std::to_string(group.size()) + " elements, expected " + std::to_string(system.order());
    }
    return {};
  });

  suite.run("group.parity", [&]() -> std::string {
    for (const auto& w : group.elements()) {
      if (system.type() == GroupType::D ? !w.is_even() : !w.is_positive()) return w.to_string();
    }
    return {};
  });

  suite.run("group.length_is_word_length", [&]() -> std::string {
    const auto dist = word_lengths(group);
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (dist[i] != length(group.element(i))) {
        return group.element(i).to_string() + ": formula " + std::to_string(length(group.element(i))) +
               ", word length " + std::to_string(dist[i]);
      }
    }
    return {};
  });

  suite.run("group.descent_tests", [&]() -> std::string {
    for (const auto& w : group.elements()) {
      const int l = length(w);
      const GeneratorSet right = right_descent_set(w, system);
      const GeneratorSet left = left_descent_set(w, system);
      for (Generator g : system.generator_list()) {
        const SignedPermutation s = generator(n, g);
        if ((length(compose(w, s)) < l) != right.contains(g)) {
          return "right descent " + std::to_string(g) + " of " + w.to_string();
        }
        if ((length(compose(s, w)) < l) != left.contains(g)) {
          return "left descent " + std::to_string(g) + " of " + w.to_string();
        }
      }
      if (left != right_descent_set(inverse(w), system)) return "Des_L != Des_R(inverse) at " + w.to_string();
    }
    return {};
  });

  suite.run("group.axioms", [&]() -> std::string {
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    const SignedPermutation e = SignedPermutation::identity(n);
    for (int trial = 0; trial < 500; ++trial) {
      const auto& a = group.element(pick(rng));
      const auto& b = group.element(pick(rng));
      const auto& c = group.element(pick(rng));
      if (compose(compose(a, b), c) != compose(a, compose(b, c))) {
        return "associativity at " + a.to_string() + " " + b.to_string() + " " + c.to_string();
      }
      if (compose(a, e) != a || compose(e, a) != a) return "identity at " + a.to_string();
      if (compose(a, inverse(a)) != e) return "inverse at " + a.to_string();
      if (!group.find(compose(a, b))) return "closure at " + a.to_string() + " " + b.to_string();
    }
    return {};
  });
}

// ------------------------------------------------------------------ labels

void label_checks(Suite& suite, const CoxeterGroup& group) {
  const CoxeterSystem& system = group.system();
  const GroupType type = system.type();
  const int n = system.rank();
  const auto labels = all_labels(type, n);

  suite.run("labels.bijection", [&]() -> std::string {
    if (labels.size() != system.subset_count()) {
      return std::to_string(labels.size()) + " labels for " + std::to_string(system.subset_count()) + " subsets";
    }
    std::set<std::uint32_t> seen;
    for (const auto& label : labels) {
      const GeneratorSet J = subset_of(label);
      if (!system.contains(J)) return label.to_string() + " maps outside S";
      if (!seen.insert(J.bits()).second) return label.to_string() + " maps to a subset already used";
      if (composition_of(J, system) != label) return label.to_string() + " does not round-trip";
      if (parse_label(label.to_string(), type, n) != label) return label.to_string() + " does not parse back";
    }
    return {};
  });

  suite.run("labels.equivalence_relation", [&]() -> std::string {
    for (const auto& a : labels) {
      if (!equivalent(a, a)) return "not reflexive at " + a.to_string();
      for (const auto& b : labels) {
        if (equivalent(a, b) != equivalent(b, a)) return "not symmetric at " + a.to_string() + ", " + b.to_string();
        if (equivalent(a, b) != (class_representative(a) == class_representative(b))) {
          return "representatives disagree at " + a.to_string() + ", " + b.to_string();
        }
      }
    }
    const auto reps = class_representatives(type, n);
    std::set<std::string> distinct;
    for (const auto& a : labels) distinct.insert(class_representative(a).to_string());
    if (distinct.size() != reps.size()) {
      return std::to_string(distinct.size()) + " classes, " + std::to_string(reps.size()) + " representatives";
    }
    return {};
  });

  suite.run("labels.classes_are_subset_conjugacy", [&]() -> std::string {
    const auto classes = subset_conjugacy_classes(group);
    const GeneratorSet S = system.generators();
    for (std::size_t a = 0; a < classes.size(); ++a) {
      for (std::size_t b = 0; b < classes.size(); ++b) {
        const bool conjugate = classes[a] == classes[b];
        const Composition ka = composition_of(S - system.subset_at(a), system);
        const Composition kb = composition_of(S - system.subset_at(b), system);
        if (conjugate != equivalent(ka, kb)) {
          return system.subset_at(a).to_string() + " vs " + system.subset_at(b).to_string() +
                 (conjugate ? " conjugate" : " not conjugate") + " but labels " + ka.to_string() + ", " +
                 kb.to_string() + (conjugate ? " are not equivalent" : " are equivalent");
        }
      }
    }
    return {};
  });
}

// ------------------------------------------------------------------ algebra

std::string first_difference(const SolomonConstants& a, const SolomonConstants& b) {
  const CoxeterSystem& system = a.system();
  for (std::size_t J = 0; J < system.subset_count(); ++J) {
    for (std::size_t K = 0; K < system.subset_count(); ++K) {
      const auto ta = a.terms(J, K);
      const auto tb = b.terms(J, K);
      if (!std::equal(ta.begin(), ta.end(), tb.begin(), tb.end())) {
        for (std::size_t L = 0; L < system.subset_count(); ++L) {
          const GeneratorSet sJ = system.subset_at(J), sK = system.subset_at(K), sL = system.subset_at(L);
          if (a.at(sJ, sK, sL) != b.at(sJ, sK, sL)) {
            return "a(" + sJ.to_string() + "," + sK.to_string() + "," + sL.to_string() + ") = " +
                   std::to_string(a.at(sJ, sK, sL)) + " vs " + std::to_string(b.at(sJ, sK, sL));
          }
        }
      }
    }
  }
  return {};
}

std::string triple_product_failure(const std::shared_ptr<const StructureTable>& table, std::size_t i,
                                   std::size_t j, std::size_t k) {
  const auto a = AlgebraElement::basis(table, i);
  const auto b = AlgebraElement::basis(table, j);
  const auto c = AlgebraElement::basis(table, k);
  if ((a * b) * c == a * (b * c)) return {};
  return "(B" + table->label(i).to_string() + " B" + table->label(j).to_string() + ") B" +
         table->label(k).to_string() + " differs from the other bracketing";
}

void algebra_checks(Suite& suite, const CoxeterGroup& group, const SolomonConstants& sweep,
                    const std::shared_ptr<const StructureTable>& table, std::mt19937_64& rng) {
  const CoxeterSystem& system = group.system();
  const int n = system.rank();

  if (n <= 6) {
    suite.run("algebra.sweep_matches_definition",
              [&]() { return first_difference(sweep, solomon_constants_by_definition(group)); });
  }
  if (n <= 5) {
    suite.run("algebra.sweep_matches_group_algebra",
              [&]() { return first_difference(sweep, solomon_constants_by_group_algebra(group)); });
  } else {
    suite.note("group-algebra construction compared for n <= 5 only");
  }
  if (system.type() == GroupType::A && n <= 7) {
    suite.run("algebra.matches_matrix_rule", [&]() -> std::string {
      if (!table->same_constants(build_table_by_matrix_rule(n))) return "group table differs from the matrix rule";
      return {};
    });
  }

  suite.run("algebra.nonnegative_integers", [&]() -> std::string {
    for (std::size_t i = 0; i < table->dimension(); ++i) {
      for (std::size_t j = 0; j < table->dimension(); ++j) {
        for (const auto& term : table->product(i, j)) {
          if (term.value <= 0) return "non-positive stored constant at " + table->label(i).to_string();
        }
      }
    }
    return {};
  });

  suite.run("algebra.identity", [&]() -> std::string {
    const std::size_t e = table->identity_index();
    for (std::size_t i = 0; i < table->dimension(); ++i) {
      for (std::size_t side = 0; side < 2; ++side) {
        const auto terms = side ? table->product(e, i) : table->product(i, e);
        if (terms.size() != 1 || terms[0].index != i || terms[0].value != 1) {
          return "B" + table->label(e).to_string() + " is not an identity for B" + table->label(i).to_string();
        }
      }
    }
    return {};
  });

  suite.run("algebra.counting_identity", [&]() -> std::string {
    std::vector<std::int64_t> cosets(table->dimension(), 0);
    for (std::size_t d = 0; d < table->dimension(); ++d) {
      const GeneratorSet J = coset_subset(table->label(d), system);
      for (std::size_t w = 0; w < group.size(); ++w) cosets[d] += (group.right_descents(w) & J).empty();
    }
    for (std::size_t i = 0; i < table->dimension(); ++i) {
      for (std::size_t j = 0; j < table->dimension(); ++j) {
        std::int64_t total = 0;
        for (const auto& term : table->product(i, j)) total += term.value * cosets[term.index];
        if (total != cosets[i] * cosets[j]) {
          return "|X| count fails for B" + table->label(i).to_string() + " B" + table->label(j).to_string();
        }
      }
    }
    return {};
  });

  const std::size_t dim = table->dimension();
  if (dim <= 32) {
    suite.run("algebra.associativity", [&]() -> std::string {
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          for (std::size_t k = 0; k < dim; ++k) {
            if (auto f = triple_product_failure(table, i, j, k); !f.empty()) return f;
          }
        }
      }
      return {};
    }, "exhaustive");
  } else {
    suite.run("algebra.associativity", [&]() -> std::string {
      std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
      for (int trial = 0; trial < 400; ++trial) {
        if (auto f = triple_product_failure(table, pick(rng), pick(rng), pick(rng)); !f.empty()) return f;
      }
      return {};
    }, "400 random triples");
  }
}

// ------------------------------------------------------------------ radical, characters

std::string ideal_failure(const IdealReport& report, std::size_t expected_quotient) {
  if (!report.is_ideal()) {
    return std::string(report.is_left_ideal ? "" : "not a left ideal; ") +
           (report.is_right_ideal ? "" : "not a right ideal; ") +
           (report.failures.empty() ? std::string() : report.failures.front());
  }
  if (!report.nilpotency_index) return "powers of the span stabilise above zero";
  if (report.quotient_dim != expected_quotient) {
    return "quotient dimension " + std::to_string(report.quotient_dim) + ", expected " +
           std::to_string(expected_quotient);
  }
  return {};
}

std::string vanishing_failure(const std::vector<IrreducibleMap>& maps, const RadicalBasis& basis) {
  for (const auto& theta : maps) {
    for (const auto& element : basis.spanning_set) {
      if (sgn(theta(element)) != 0) {
        return "theta" + theta.label().to_string() + " is non-zero on " + element.to_string();
      }
    }
  }
  return {};
}

void radical_checks(Suite& suite, const CoxeterGroup& group, const std::shared_ptr<const StructureTable>& table) {
  const CoxeterSystem& system = group.system();
  const int n = system.rank();
  const auto reps = class_representatives(system.type(), n);
  const RadicalBasis radical = radical_char0(table);
  const auto maps = irreducible_maps(group, *table);

  suite.run("radical.char0_nilpotent_ideal", [&]() -> std::string {
    const IdealReport report = verify_ideal(radical);
    if (auto f = ideal_failure(report, reps.size()); !f.empty()) return f;
    suite.note("char 0 radical: nilpotency index " + std::to_string(*report.nilpotency_index) +
               ", quotient dimension " + std::to_string(report.quotient_dim));
    return {};
  });

  suite.run("characters.theta_unital", [&]() -> std::string {
    for (const auto& theta : maps) {
      if (theta.values()[table->identity_index()] != 1) return "theta" + theta.label().to_string() + " of identity";
    }
    return {};
  });

  suite.run("characters.theta_multiplicative", [&]() -> std::string {
    for (const auto& theta : maps) {
      const auto& v = theta.values();
      for (std::size_t i = 0; i < table->dimension(); ++i) {
        for (std::size_t j = 0; j < table->dimension(); ++j) {
          std::int64_t lhs = 0;
          for (const auto& term : table->product(i, j)) lhs += term.value * v[term.index];
          if (lhs != v[i] * v[j]) {
            return "theta" + theta.label().to_string() + " on B" + table->label(i).to_string() + " B" +
                   table->label(j).to_string();
          }
        }
      }
    }
    return {};
  });

  suite.run("characters.theta_vanishes_on_radical", [&]() { return vanishing_failure(maps, radical); });

  suite.run("characters.distinct_columns", [&]() -> std::string {
    const CharacterMatrix R = character_matrix(group);
    if (R.distinct_column_count() != reps.size()) {
      return std::to_string(R.distinct_column_count()) + " distinct columns for " + std::to_string(reps.size()) +
             " classes";
    }
    return {};
  });

  if (n <= 5) {
    suite.run("characters.coxeter_element_ordering", [&]() -> std::string {
      std::vector<std::vector<SignedPermutation>> variants;
      std::vector<GeneratorSet> subsets;
      for (std::size_t d = 0; d < system.subset_count(); ++d) {
        const GeneratorSet K = system.subset_at(d);
        if (K.size() > 4) continue;
        std::vector<Generator> order = K.members();
        std::vector<SignedPermutation> elements;
        do elements.push_back(coxeter_element(n, K, order));
        while (std::next_permutation(order.begin(), order.end()));
        variants.push_back(std::move(elements));
        subsets.push_back(K);
      }
      for (std::size_t d = 0; d < system.subset_count(); ++d) {
        const PermutationCharacter phi(group, system.subset_at(d));
        for (std::size_t v = 0; v < variants.size(); ++v) {
          const std::int64_t first = phi(variants[v].front());
          for (const auto& c : variants[v]) {
            if (phi(c) != first) {
              return "phi" + system.subset_at(d).to_string() + " depends on the ordering of " + subsets[v].to_string();
            }
          }
        }
      }
      return {};
    }, "|K| <= 4");
  } else {
    suite.note("Coxeter-element ordering invariance checked for n <= 5 only");
  }
}

void modular_checks(Suite& suite, const CoxeterGroup& group, const std::shared_ptr<const StructureTable>& table,
                    int p) {
  const int n = group.system().rank();
  const std::string tag = "[p=" + std::to_string(p) + "]";
  const RadicalBasis combinatorial = radical_mod_p(table, p);
  const RadicalBasis by_diagonal = radical_mod_p_via_aJJJ(table, p);
  const auto expected = p_modular_representatives(*table, p);

  suite.run("radical.mod_p_matches_diagonal_criterion" + tag, [&]() -> std::string {
    if (!span_equal(combinatorial, by_diagonal)) {
      for (const auto& e : combinatorial.spanning_set) {
        if (!in_span(e, by_diagonal)) return e.to_string() + " lies outside the diagonal-criterion span";
      }
      for (const auto& e : by_diagonal.spanning_set) {
        if (!in_span(e, combinatorial)) return e.to_string() + " lies outside the combinatorial span";
      }
    }
    return {};
  });

  std::size_t quotient = 0;
  suite.run("radical.mod_p_nilpotent_ideal" + tag, [&]() -> std::string {
    const IdealReport report = verify_ideal(combinatorial);
    quotient = report.quotient_dim;
    if (auto f = ideal_failure(report, expected.size()); !f.empty()) return f;
    suite.note("mod " + std::to_string(p) + " radical: nilpotency index " + std::to_string(*report.nilpotency_index) +
               ", quotient dimension " + std::to_string(report.quotient_dim));
    return {};
  });

  if (p == 2) {
    suite.run("radical.mod_2_quotient_dimension", [&]() -> std::string {
      const std::size_t want = n % 2 == 0 ? 1 : 2;
      if (quotient != want) return "quotient dimension " + std::to_string(quotient) + ", expected " + std::to_string(want);
      return {};
    });
  }

  suite.run("characters.mod_p_columns" + tag, [&]() -> std::string {
    const ModularColumns columns = irreducibles_mod_p(character_matrix(group), p);
    if (columns.size() != quotient) {
      return std::to_string(columns.size()) + " distinct columns mod p, quotient dimension " + std::to_string(quotient);
    }
    std::set<std::string> wanted;
    for (const auto& c : expected) wanted.insert(c.to_string());
    for (const auto& group_labels : columns.labels) {
      std::size_t hits = 0;
      for (const auto& c : group_labels) hits += wanted.count(c.to_string());
      if (hits != 1) return "column " + join(group_labels) + " holds " + std::to_string(hits) + " selected representatives";
    }
    return {};
  });

  suite.run("characters.mod_p_theta_vanishes" + tag, [&]() {
    return vanishing_failure(irreducible_maps(group, *table), combinatorial);
  });

  const auto diag = representatives_by_diagonal(*table, p);
  const auto mult = multiplicity_restricted_representatives(n, p);
  const auto divis = divisibility_regular_representatives(n, p);
  suite.note("p=" + std::to_string(p) + " representatives: diagonal criterion " + std::to_string(diag.size()) +
             ", multiplicity < p " + std::to_string(mult.size()) + (mult == diag ? " (matches)" : " (differs)") +
             ", no part divisible by p " + std::to_string(divis.size()) +
             (divis == diag ? " (matches)" : " (differs)"));
}

// ------------------------------------------------------------------ type A

void lie_checks(Suite& suite, int n) {
  const auto comps = compositions_of(n);
  suite.run("typea.lie_action_support", [&]() -> std::string {
    for (const auto& kappa : comps) {
      for (const auto& nu : comps) {
        if (lie_action(kappa, nu).empty() == has_grouping(kappa, nu)) {
          return "kappa " + parts_string(kappa) + ", nu " + parts_string(nu);
        }
      }
    }
    return {};
  });
  suite.run("typea.lie_action_adjacent_vanishing", [&]() -> std::string {
    for (const auto& kappa : comps) {
      for (const auto& nu : comps) {
        if (lie_action(kappa, nu).empty() == has_adjacent_coarsening(kappa, nu)) {
          return "kappa " + parts_string(kappa) + ", nu " + parts_string(nu) + ": action " +
                 (has_adjacent_coarsening(kappa, nu) ? "empty" : "non-empty") +
                 (has_adjacent_coarsening(kappa, nu) ? " despite" : " without") + " an adjacent coarsening";
        }
      }
    }
    return {};
  });
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  Suite suite(report);
  std::mt19937_64 rng(options.seed);

  const CoxeterSystem system(options.type, options.n);
  const CoxeterGroup group(system, options.rank_bound);

  group_checks(suite, group, rng);
  label_checks(suite, group);

  const SolomonConstants sweep = solomon_constants_by_sweep(group, options.threads);
  const auto table = std::make_shared<const StructureTable>(make_table(sweep, TableMethod::Sweep));
  algebra_checks(suite, group, sweep, table, rng);
  radical_checks(suite, group, table);

  if (options.p) {
    if (options.type == GroupType::D) {
      modular_checks(suite, group, table, *options.p);
    } else {
      suite.note("modular checks are defined for type D only");
    }
  }
  if (options.type == GroupType::A) lie_checks(suite, options.n);
  return report;
}

}  // namespace descent
