#include "descent/labels.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace descent {

std::string to_string(Region region) {
  switch (region) {
    case Region::Small: return "Small";
    case Region::One: return "One";
    case Region::Main: return "Main";
    case Region::MainPrime: return "MainPrime";
    case Region::Plain: return "Plain";
  }
  return "?";
}

int Composition::sum() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

bool Composition::is_partition() const {
  return std::is_sorted(parts.begin(), parts.end(), std::greater<>());
}

bool Composition::all_even() const {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
}

std::string Composition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  out += ']';
  if (region != Region::Plain) out += "@" + descent::to_string(region);
  return out;
}

void validate(const Composition& label) {
  const int n = label.ambient;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("label " + label.to_string() + " invalid for n=" +
                                std::to_string(n) + ": " + why);
  };
  for (int p : label.parts) {
    if (p <= 0) fail("components must be positive");
  }
  const int s = label.sum();
  switch (label.region) {
    case Region::Small:
      if (n < 2) fail("type-D labels need n >= 2");
      if (s > n - 2) fail("Small labels sum to at most n-2");
      break;
    case Region::One:
      if (n < 2) fail("type-D labels need n >= 2");
      if (s != n || label.parts.front() != 1) fail("One labels are compositions of n starting with 1");
      break;
    case Region::Main:
    case Region::MainPrime:
      if (n < 2) fail("type-D labels need n >= 2");
      if (s != n || label.parts.front() < 2) fail("Main labels are compositions of n with first part >= 2");
      break;
    case Region::Plain:
      if (n < 1) fail("type-A labels need n >= 1");
      if (s != n) fail("type-A labels are compositions of n");
      break;
  }
}

Composition parse_label(std::string_view text, GroupType type, int n) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  const auto bad = [&] { return std::invalid_argument("cannot parse label '" + std::string(text) + "'"); };
  if (text.empty() || text.front() != '[') throw bad();
  const auto close = text.find(']');
  if (close == std::string_view::npos) throw bad();

  Composition label;
  label.ambient = n;
  std::string_view body = trim(text.substr(1, close - 1));
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view piece = trim(body.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size()) throw bad();
    label.parts.push_back(value);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }

  const std::string_view tag = trim(text.substr(close + 1));
  if (type == GroupType::A) {
    if (!tag.empty() && tag != "@Plain") throw bad();
    label.region = Region::Plain;
  } else if (tag.empty()) {
    if (label.sum() <= n - 2) {
      label.region = Region::Small;
    } else if (!label.parts.empty() && label.parts.front() == 1) {
      label.region = Region::One;
    } else {
      throw std::invalid_argument("label '" + std::string(text) +
                                  "' is ambiguous; add @Main or @MainPrime");
    }
  } else {
    static const std::map<std::string_view, Region> kTags = {
        {"@Small", Region::Small}, {"@One", Region::One}, {"@Main", Region::Main},
        {"@MainPrime", Region::MainPrime}};
    const auto it = kTags.find(tag);
    if (it == kTags.end()) throw bad();
    label.region = it->second;
  }
  validate(label);
  return label;
}

namespace {

void compositions_rec(int remaining, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    compositions_rec(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = 1; part <= std::min(remaining, max_part); ++part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> compositions_of(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  compositions_rec(m, prefix, out);
  return out;
}

std::vector<std::vector<int>> partitions_of(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  partitions_rec(m, m, prefix, out);
  return out;
}

std::vector<Composition> all_labels(GroupType type, int n) {
  const CoxeterSystem system(type, n);  // validates n
  std::vector<Composition> out;
  if (type == GroupType::A) {
    for (auto& parts : compositions_of(n)) out.push_back({std::move(parts), Region::Plain, n});
    return out;
  }
  for (int m = 0; m <= n - 2; ++m) {
    for (auto& parts : compositions_of(m)) out.push_back({std::move(parts), Region::Small, n});
  }
  const auto top = compositions_of(n);
  for (const auto& parts : top) {
    if (parts.front() == 1) out.push_back({parts, Region::One, n});
  }
  for (Region r : {Region::Main, Region::MainPrime}) {
    for (const auto& parts : top) {
      if (parts.front() >= 2) out.push_back({parts, r, n});
    }
  }
  return out;
}

GeneratorSet subset_of(const Composition& label) {
  validate(label);
  GeneratorSet J;
  const auto& parts = label.parts;
  if (label.region == Region::Small) {
    if (parts.empty()) return J;
    int index = label.ambient - label.sum();
    J.insert(index);
    for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
      index += parts[j];
      J.insert(index);
    }
    return J;
  }
  int partial = 0;
  for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
    partial += parts[j];
    J.insert(partial);
  }
  switch (label.region) {
    case Region::One:
    case Region::Main: J.insert(kPrimeGenerator); break;
    case Region::MainPrime: J.insert(1); break;
    default: break;
  }
  return J;
}

namespace {

// Parts cut out of 0..n by the given cut points.
std::vector<int> parts_between(int start, const std::vector<int>& cuts, int n) {
  std::vector<int> parts;
  int previous = start;
  for (int c : cuts) {
    parts.push_back(c - previous);
    previous = c;
  }
  parts.push_back(n - previous);
  return parts;
}

}  // namespace

Composition composition_of(GeneratorSet J, const CoxeterSystem& system) {
  if (!system.contains(J)) throw std::invalid_argument("composition_of: subset not contained in S");
  const int n = system.rank();
  Composition label;
  label.ambient = n;
  std::vector<int> cuts;
  if (system.type() == GroupType::A) {
    for (Generator g : J.members()) cuts.push_back(g);
    label.region = Region::Plain;
    label.parts = parts_between(0, cuts, n);
    return label;
  }
  const bool has_prime = J.contains(kPrimeGenerator);
  const bool has_one = J.contains(1);
  if (!has_prime && !has_one) {
    label.region = Region::Small;
    if (J.empty()) return label;
    for (Generator g : J.members()) cuts.push_back(g);
    const int offset = cuts.front();
    cuts.erase(cuts.begin());
    label.parts = parts_between(offset, cuts, n);
    return label;
  }
  // In One the cut at 1 is a genuine partial sum; in MainPrime s_1 is the tag.
  const int lowest_cut = (has_prime && has_one) ? 1 : 2;
  for (Generator g : J.members()) {
    if (g >= lowest_cut) cuts.push_back(g);
  }
  label.parts = parts_between(0, cuts, n);
  label.region = has_prime && has_one ? Region::One : has_prime ? Region::Main : Region::MainPrime;
  return label;
}

namespace {

std::vector<int> sorted_parts(const Composition& c) {
  std::vector<int> p = c.parts;
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

bool is_top_split(Region r) { return r == Region::Main || r == Region::MainPrime; }

}  // namespace

bool equivalent(const Composition& a, const Composition& b) {
  if (a.ambient != b.ambient) return false;
  if ((a.region == Region::Plain) != (b.region == Region::Plain)) return false;
  if (sorted_parts(a) != sorted_parts(b)) return false;
  if (is_top_split(a.region) && is_top_split(b.region) && a.region != b.region && a.all_even()) {
    return false;
  }
  return true;
}

Composition class_representative(const Composition& label) {
  Composition rep{sorted_parts(label), label.region, label.ambient};
  if (label.region == Region::Plain || label.region == Region::Small) return rep;
  const bool all_ones = std::all_of(rep.parts.begin(), rep.parts.end(), [](int p) { return p == 1; });
  if (all_ones) {
    rep.region = Region::One;
  } else if (label.region == Region::MainPrime && label.all_even()) {
    rep.region = Region::MainPrime;
  } else {
    rep.region = Region::Main;
  }
  return rep;
}

std::vector<Composition> class_representatives(GroupType type, int n) {
  std::vector<Composition> out;
  for (const auto& label : all_labels(type, n)) {
    if (class_representative(label) == label) out.push_back(label);
  }
  return out;
}

int max_multiplicity(const Composition& label) {
  std::map<int, int> counts;
  int best = 0;
  for (int p : label.parts) best = std::max(best, ++counts[p]);
  return best;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<Composition> p_modular_representatives(
    int n, int p, const std::function<std::int64_t(const Composition&)>& diagonal_constant) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (p == 2) {
    std::vector<Composition> out{{{}, Region::Small, n}};
    if (n % 2 == 1) out.push_back({{n}, Region::Main, n});
    return out;
  }
  std::vector<Composition> out;
  for (auto& rep : class_representatives(n)) {
    if (diagonal_constant(rep) % p != 0) out.push_back(std::move(rep));
  }
  return out;
}

std::vector<Composition> multiplicity_restricted_representatives(int n, int p) {
  std::vector<Composition> out;
  for (auto& rep : class_representatives(n)) {
    if (max_multiplicity(rep) < p) out.push_back(std::move(rep));
  }
  return out;
}

std::vector<Composition> divisibility_regular_representatives(int n, int p) {
  std::vector<Composition> out;
  for (auto& rep : class_representatives(n)) {
    if (std::none_of(rep.parts.begin(), rep.parts.end(), [p](int part) { return part % p == 0; })) {
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace descent
