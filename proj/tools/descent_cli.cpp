#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "descent/algebra.hpp"
#include "descent/characters.hpp"
#include "descent/labels.hpp"
#include "descent/radical.hpp"
#include "descent/typea.hpp"
#include "descent/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace descent;

namespace {

constexpr const char* kCacheEnv = "DESCENT_CACHE_DIR";

struct RunConfig {
  std::string type = "D";
  int n = 0;
  std::optional<int> p;
  std::string format = "json";
  std::string cache_dir;
  std::string out;
  int threads = 1;
  std::optional<int> max_n_override;
  std::string a;
  std::string b;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GroupType group_type(const RunConfig& cfg) {
  const GroupType type = parse_group_type(cfg.type);
  if (type == GroupType::D && cfg.n < 2) throw UsageError("type D needs --n >= 2");
  if (type == GroupType::A && cfg.n < 1) throw UsageError("type A needs --n >= 1");
  if (cfg.p && !is_prime(*cfg.p)) throw UsageError("--p " + std::to_string(*cfg.p) + " is not prime");
  return type;
}

int rank_bound(const RunConfig& cfg) { return cfg.max_n_override.value_or(0); }

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + cfg.out);
  file << text;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// ------------------------------------------------------------------ table cache

fs::path cache_path(const RunConfig& cfg, GroupType type) {
  return fs::path(cfg.cache_dir) / ("table-" + to_string(type) + "-" + std::to_string(cfg.n) + ".json");
}

std::shared_ptr<const StructureTable> obtain_table(const RunConfig& cfg, GroupType type) {
  std::optional<fs::path> path;
  if (!cfg.cache_dir.empty()) path = cache_path(cfg, type);
  if (path && fs::exists(*path)) {
    try {
      std::ifstream in(*path, std::ios::binary);
      StructureTable table = table_from_json(json::parse(in));
      if (table.type() == type && table.rank() == cfg.n) return std::make_shared<const StructureTable>(std::move(table));
      std::cerr << "warning: cache " << path->string() << " holds another table; rebuilding\n";
    } catch (const std::exception& e) {
      std::cerr << "warning: discarding cache " << path->string() << " (" << e.what() << "); rebuilding\n";
    }
  }
  auto table = std::make_shared<const StructureTable>(
      build_table(cfg.n, type, BuildOptions{cfg.threads, rank_bound(cfg)}));
  if (path) {
    fs::create_directories(path->parent_path());
    const fs::path tmp = path->string() + ".tmp";
    {
      std::ofstream file(tmp, std::ios::binary);
      file << serialize_table(*table);
    }
    fs::rename(tmp, *path);
  }
  return table;
}

// ------------------------------------------------------------------ commands

int cmd_table(const RunConfig& cfg) {
  const auto table = obtain_table(cfg, group_type(cfg));
  if (cfg.format == "json") {
    emit(cfg, serialize_table(*table));
    return 0;
  }
  std::ostringstream out;
  out << "left,right,result,constant\n";
  for (std::size_t i = 0; i < table->dimension(); ++i) {
    for (std::size_t j = 0; j < table->dimension(); ++j) {
      for (const auto& term : table->product(i, j)) {
        out << csv_field(table->label(i).to_string()) << ',' << csv_field(table->label(j).to_string()) << ','
            << csv_field(table->label(term.index).to_string()) << ',' << term.value << '\n';
      }
    }
  }
  emit(cfg, out.str());
  return 0;
}

int cmd_multiply(const RunConfig& cfg) {
  const GroupType type = group_type(cfg);
  const Composition a = parse_label(cfg.a, type, cfg.n);
  const Composition b = parse_label(cfg.b, type, cfg.n);
  const auto table = obtain_table(cfg, type);
  const AlgebraElement product = AlgebraElement::basis(table, a, cfg.p) * AlgebraElement::basis(table, b, cfg.p);
  if (cfg.format == "json") {
    json doc = {{"type", to_string(type)},
                {"n", cfg.n},
                {"p", cfg.p ? json(*cfg.p) : json(nullptr)},
                {"a", a.to_string()},
                {"b", b.to_string()},
                {"product", product.to_json()},
                {"text", product.to_string()}};
    emit(cfg, doc.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << "label,coefficient\n";
  for (const auto& [i, c] : product.coefficients()) out << csv_field(table->label(i).to_string()) << ',' << c << '\n';
  emit(cfg, out.str());
  return 0;
}

int cmd_radical(const RunConfig& cfg) {
  const GroupType type = group_type(cfg);
  if (cfg.p && type != GroupType::D) throw UsageError("radical --p is defined for type D only");
  const auto table = obtain_table(cfg, type);
  const RadicalBasis basis = cfg.p ? radical_mod_p(table, *cfg.p) : radical_char0(table);
  const IdealReport report = verify_ideal(basis);
  std::optional<bool> matches;
  if (cfg.p) matches = span_equal(basis, radical_mod_p_via_aJJJ(table, *cfg.p));

  const bool ok = report.ok() && matches.value_or(true);
  if (cfg.format == "json") {
    json spanning = json::array();
    for (const auto& e : basis.spanning_set) spanning.push_back(e.to_json());
    json doc = {{"n", cfg.n},
                {"p", cfg.p ? json(*cfg.p) : json(nullptr)},
                {"spanning_set", spanning},
                {"is_ideal", report.is_ideal()},
                {"nilpotency_index", report.nilpotency_index ? json(*report.nilpotency_index) : json(nullptr)},
                {"quotient_dim", report.quotient_dim},
                {"matches_aJJJ_criterion", matches ? json(*matches) : json(nullptr)}};
    emit(cfg, doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "element,label,coefficient\n";
    for (std::size_t k = 0; k < basis.spanning_set.size(); ++k) {
      for (const auto& [i, c] : basis.spanning_set[k].coefficients()) {
        out << k << ',' << csv_field(table->label(i).to_string()) << ',' << c << '\n';
      }
    }
    emit(cfg, out.str());
  }
  for (const auto& f : report.failures) std::cerr << "radical: " << f << '\n';
  return ok ? 0 : 1;
}

int cmd_characters(const RunConfig& cfg) {
  const GroupType type = group_type(cfg);
  const CoxeterGroup group(CoxeterSystem(type, cfg.n), rank_bound(cfg));
  const CharacterMatrix R = character_matrix(group);
  std::vector<std::vector<std::int64_t>> entries = R.entries;
  if (cfg.p) {
    for (auto& row : entries) {
      for (auto& x : row) x = ((x % *cfg.p) + *cfg.p) % *cfg.p;
    }
  }
  std::vector<std::string> labels;
  for (const auto& r : R.representatives) labels.push_back(r.to_string());

  bool ok = R.distinct_column_count() == R.representatives.size();
  json doc = {{"type", to_string(type)},
              {"n", cfg.n},
              {"p", cfg.p ? json(*cfg.p) : json(nullptr)},
              {"representatives", labels},
              {"entries", entries}};
  if (cfg.p) {
    const ModularColumns columns = irreducibles_mod_p(R, *cfg.p);
    json groups = json::array();
    for (const auto& g : columns.labels) {
      json names = json::array();
      for (const auto& c : g) names.push_back(c.to_string());
      groups.push_back(names);
    }
    doc["distinct_columns"] = columns.size();
    doc["column_groups"] = groups;
    if (type == GroupType::D) {
      const auto table = obtain_table(cfg, type);
      const auto expected = p_modular_representatives(*table, *cfg.p);
      json names = json::array();
      for (const auto& c : expected) names.push_back(c.to_string());
      doc["p_modular_representatives"] = names;
      ok = ok && columns.size() == expected.size();
    }
  } else {
    doc["distinct_columns"] = R.distinct_column_count();
  }

  if (cfg.format == "json") {
    emit(cfg, doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "row";
    for (const auto& l : labels) out << ',' << csv_field(l);
    out << '\n';
    for (std::size_t r = 0; r < labels.size(); ++r) {
      out << csv_field(labels[r]);
      for (auto x : entries[r]) out << ',' << x;
      out << '\n';
    }
    emit(cfg, out.str());
  }
  return ok ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyOptions options;
  options.type = group_type(cfg);
  options.n = cfg.n;
  options.p = cfg.p;
  options.threads = cfg.threads;
  options.rank_bound = rank_bound(cfg);
  const VerifyReport report = run_verification(options);

  if (cfg.format == "json") {
    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    json doc = {{"type", to_string(options.type)},
                {"n", cfg.n},
                {"p", cfg.p ? json(*cfg.p) : json(nullptr)},
                {"passed", report.passed()},
                {"checks", checks},
                {"notes", report.notes}};
    emit(cfg, doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "check,passed,detail\n";
    for (const auto& c : report.checks) {
      out << csv_field(c.name) << ',' << (c.passed ? "true" : "false") << ',' << csv_field(c.detail) << '\n';
    }
    emit(cfg, out.str());
  }
  for (const auto& c : report.checks) {
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
  }
  if (const CheckResult* f = report.first_failure()) {
    std::cerr << "first counterexample (" << f->name << "): " << f->detail << '\n';
    return 1;
  }
  return 0;
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  try {
    parts = json::parse(text).get<std::vector<int>>();
  } catch (const std::exception&) {
    throw UsageError("expected a composition like [2,1,1], got " + text);
  }
  for (int x : parts) {
    if (x <= 0) throw UsageError("composition parts must be positive: " + text);
  }
  return parts;
}

json counts_to_json(const CompositionCounts& counts) {
  json out = json::array();
  for (const auto& [word, count] : counts) out.push_back({word, count});
  return out;
}

int cmd_typea(const RunConfig& cfg, bool lie) {
  const auto kappa = parse_parts(cfg.a);
  const auto nu = parse_parts(cfg.b);
  const CompositionCounts counts = lie ? lie_action(kappa, nu) : multiply_sn(kappa, nu);
  json doc = {{"kappa", kappa}, {"nu", nu}, {"terms", counts_to_json(counts)}};
  if (lie) {
    doc["empty"] = counts.empty();
    doc["adjacent_coarsening"] = has_adjacent_coarsening(kappa, nu);
  }
  if (cfg.format == "json") {
    emit(cfg, doc.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << "composition,count\n";
  for (const auto& [word, count] : counts) out << csv_field(json(word).dump()) << ',' << count << '\n';
  emit(cfg, out.str());
  return 0;
}

// ------------------------------------------------------------------ options

void add_common(CLI::App* cmd, RunConfig& cfg, bool needs_group) {
  if (needs_group) {
    cmd->add_option("--type", cfg.type, "Group type")->check(CLI::IsMember({"A", "D"}))->capture_default_str();
    cmd->add_option("--n", cfg.n, "Rank")->required();
  }
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cmd->add_option("--out", cfg.out, "Write output to this file instead of stdout");
  if (needs_group) {
    cmd->add_option("--cache-dir", cfg.cache_dir, std::string("Table cache directory (default: $") + kCacheEnv + ")");
    cmd->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--max-n-override", cfg.max_n_override, "Raise the default rank bound");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descent algebras of Coxeter groups of types D and A"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv(kCacheEnv)) cfg.cache_dir = env;

  auto* table = app.add_subcommand("table", "Build (or load) the structure table");
  add_common(table, cfg, true);

  auto* multiply = app.add_subcommand("multiply", "Multiply two basis elements");
  add_common(multiply, cfg, true);
  multiply->add_option("--a", cfg.a, "Left label, e.g. [2,1,1]")->required();
  multiply->add_option("--b", cfg.b, "Right label")->required();
  multiply->add_option("--p", cfg.p, "Reduce coefficients mod p");

  auto* radical = app.add_subcommand("radical", "Radical spanning set and ideal check");
  add_common(radical, cfg, true);
  radical->add_option("--p", cfg.p, "Work over F_p");

  auto* characters = app.add_subcommand("characters", "Character matrix at Coxeter elements");
  add_common(characters, cfg, true);
  characters->add_option("--p", cfg.p, "Reduce mod p");

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  add_common(verify, cfg, true);
  verify->add_option("--p", cfg.p, "Also run the mod-p checks");

  auto* typea = app.add_subcommand("typea", "Matrix-rule computations in the symmetric group");
  typea->require_subcommand(1);
  auto* typea_multiply = typea->add_subcommand("multiply", "B_kappa B_nu by the matrix rule");
  auto* typea_lie = typea->add_subcommand("lie-action", "Composition-level action on Lie monomials");
  for (auto* cmd : {typea_multiply, typea_lie}) {
    add_common(cmd, cfg, false);
    cmd->add_option("--a", cfg.a, "kappa, e.g. [2,1,1]")->required();
    cmd->add_option("--b", cfg.b, "nu")->required();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*table) return cmd_table(cfg);
    if (*multiply) return cmd_multiply(cfg);
    if (*radical) return cmd_radical(cfg);
    if (*characters) return cmd_characters(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*typea_multiply) return cmd_typea(cfg, false);
    if (*typea_lie) return cmd_typea(cfg, true);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << " (use --max-n-override to raise the bound)\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
