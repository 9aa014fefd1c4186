#include "descent/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace descent {

std::string to_string(GroupType type) { return type == GroupType::A ? "A" : "D"; }

GroupType parse_group_type(const std::string& text) {
  if (text == "A" || text == "a") return GroupType::A;
  if (text == "D" || text == "d") return GroupType::D;
  throw std::invalid_argument("unknown group type '" + text + "' (expected A or D)");
}

// ---------------------------------------------------------------- GeneratorSet

GeneratorSet::GeneratorSet(std::initializer_list<Generator> members) {
  for (Generator g : members) {
    if (g < 0 || g >= kMaxRank) throw std::invalid_argument("generator index out of range");
    insert(g);
  }
}

int GeneratorSet::size() const { return std::popcount(bits_); }

std::vector<Generator> GeneratorSet::members() const {
  std::vector<Generator> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string GeneratorSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Generator g : members()) {
    if (!first) out += ',';
    first = false;
    out += g == kPrimeGenerator ? std::string("1'") : std::to_string(g);
  }
  return out + "}";
}

// ---------------------------------------------------------------- CoxeterSystem

CoxeterSystem::CoxeterSystem(GroupType type, int n) : type_(type), n_(n) {
  const int lowest = type == GroupType::D ? 2 : 1;
  if (n < lowest || n > kMaxRank) {
    throw std::invalid_argument("rank " + std::to_string(n) + " invalid for type " +
                                descent::to_string(type));
  }
  std::uint32_t bits = (1U << n) - 1U;  // bits 0 .. n-1
  if (type == GroupType::A) bits &= ~1U;  // no s_1'
  all_ = GeneratorSet(bits);
}

bool CoxeterSystem::is_generator(Generator g) const {
  return g >= 0 && g < kMaxRank && all_.contains(g);
}

std::uint64_t CoxeterSystem::order() const {
  std::uint64_t f = 1;
  for (int i = 2; i <= n_; ++i) f *= static_cast<std::uint64_t>(i);
  return type_ == GroupType::D ? f << (n_ - 1) : f;
}

std::size_t CoxeterSystem::dense_index(GeneratorSet J) const {
  return type_ == GroupType::D ? J.bits() : J.bits() >> 1;
}

GeneratorSet CoxeterSystem::subset_at(std::size_t index) const {
  const auto bits = static_cast<std::uint32_t>(index);
  return type_ == GroupType::D ? GeneratorSet(bits) : GeneratorSet(bits << 1);
}

// ---------------------------------------------------------------- SignedPermutation

SignedPermutation::SignedPermutation(std::span<const int> image) {
  const auto n = static_cast<int>(image.size());
  if (n > kMaxRank) throw std::invalid_argument("rank exceeds kMaxRank");
  std::array<bool, kMaxRank + 1> seen{};
  for (int i = 0; i < n; ++i) {
    const int a = image[i] < 0 ? -image[i] : image[i];
    if (a < 1 || a > n || seen[a]) {
      throw std::invalid_argument("not a signed permutation: absolute values must be 1..n");
    }
    seen[a] = true;
    image_[i] = static_cast<std::int8_t>(image[i]);
  }
  n_ = n;
}

SignedPermutation::SignedPermutation(std::initializer_list<int> image)
    : SignedPermutation(std::span<const int>(image.begin(), image.size())) {}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return SignedPermutation(img);
}

std::vector<int> SignedPermutation::image() const {
  return {image_.begin(), image_.begin() + n_};
}

int SignedPermutation::negative_count() const {
  int c = 0;
  for (int i = 0; i < n_; ++i) c += image_[i] < 0;
  return c;
}

std::strong_ordering SignedPermutation::operator<=>(const SignedPermutation& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  for (int i = 0; i < n_; ++i) {
    if (auto c = image_[i] <=> o.image_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) os << (i ? "," : "") << int{image_[i]};
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- operations

SignedPermutation generator(int n, Generator g) {
  if (n < 2 || n > kMaxRank) throw std::invalid_argument("generator: rank must be 2.." + std::to_string(kMaxRank));
  if (g < 0 || g > n - 1) throw std::invalid_argument("generator: index out of range for rank");
  return right_multiply_generator(SignedPermutation::identity(n), g);
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("compose: rank mismatch");
  SignedPermutation r;
  r.n_ = a.n_;
  for (int i = 0; i < a.n_; ++i) {
    const int v = b.image_[i];
    r.image_[i] = static_cast<std::int8_t>(v > 0 ? a.image_[v - 1] : -a.image_[-v - 1]);
  }
  return r;
}

SignedPermutation inverse(const SignedPermutation& w) {
  SignedPermutation r;
  r.n_ = w.n_;
  for (int i = 0; i < w.n_; ++i) {
    const int v = w.image_[i];
    if (v > 0) {
      r.image_[v - 1] = static_cast<std::int8_t>(i + 1);
    } else {
      r.image_[-v - 1] = static_cast<std::int8_t>(-(i + 1));
    }
  }
  return r;
}

SignedPermutation right_multiply_generator(const SignedPermutation& w, Generator g) {
  if (g < 0 || g > w.n_ - 1) throw std::invalid_argument("generator index out of range for rank");
  SignedPermutation r = w;
  if (g == kPrimeGenerator) {
    r.image_[0] = static_cast<std::int8_t>(-w.image_[1]);
    r.image_[1] = static_cast<std::int8_t>(-w.image_[0]);
  } else {
    std::swap(r.image_[g - 1], r.image_[g]);
  }
  return r;
}

int length(const SignedPermutation& w) {
  const int n = w.rank();
  int len = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      len += w(i) > w(j);
      len += w(i) + w(j) < 0;
    }
  }
  return len;
}

namespace {

GeneratorSet raw_right_descents(const SignedPermutation& w) {
  GeneratorSet d;
  const int n = w.rank();
  if (n >= 2 && w(1) + w(2) < 0) d.insert(kPrimeGenerator);
  for (int i = 1; i < n; ++i) {
    if (w(i) > w(i + 1)) d.insert(i);
  }
  return d;
}

}  // namespace

GeneratorSet right_descent_set(const SignedPermutation& w, const CoxeterSystem& system) {
  return raw_right_descents(w) & system.generators();
}

GeneratorSet left_descent_set(const SignedPermutation& w, const CoxeterSystem& system) {
  return right_descent_set(inverse(w), system);
}

GeneratorSet right_descent_set(const SignedPermutation& w) { return raw_right_descents(w); }
GeneratorSet left_descent_set(const SignedPermutation& w) { return raw_right_descents(inverse(w)); }

std::optional<Generator> conjugate_generator(const SignedPermutation& x, Generator s) {
  const int n = x.rank();
  const SignedPermutation c = compose(inverse(x), compose(generator(n, s), x));
  for (Generator t = 0; t < n; ++t) {
    if (c == generator(n, t)) return t;
  }
  return std::nullopt;
}

int default_rank_bound(GroupType type) { return type == GroupType::D ? 8 : 10; }

GeneratorSet ConjugationMap::image(GeneratorSet J) const {
  std::uint32_t out = 0;
  for (std::uint32_t b = J.bits(); b != 0; b &= b - 1) {
    const int t = target[std::countr_zero(b)];
    if (t >= 0) out |= 1U << t;
  }
  return GeneratorSet(out);
}

// ---------------------------------------------------------------- enumeration

std::vector<SignedPermutation> enumerate_group(int n, GroupType type, int rank_bound) {
  const CoxeterSystem system(type, n);
  const int bound = rank_bound > 0 ? rank_bound : default_rank_bound(type);
  if (n > bound) {
    throw ResourceError("rank " + std::to_string(n) + " exceeds the resource bound " +
                        std::to_string(bound) + " for type " + to_string(type) +
                        " (use an explicit override to raise it)");
  }
  std::vector<SignedPermutation> out;
  out.reserve(system.order());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> img(perm.size());
  do {
    if (type == GroupType::A) {
      out.emplace_back(perm);
      continue;
    }
    for (std::uint32_t signs = 0; signs < (1U << n); ++signs) {
      if (std::popcount(signs) % 2 != 0) continue;
      for (int i = 0; i < n; ++i) img[i] = (signs >> i) & 1U ? -perm[i] : perm[i];
      out.emplace_back(img);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (type == GroupType::D) std::sort(out.begin(), out.end());
  return out;
}

CoxeterGroup::CoxeterGroup(CoxeterSystem system, int rank_bound)
    : system_(system), elements_(enumerate_group(system.rank(), system.type(), rank_bound)) {
  const int n = system_.rank();
  std::uint64_t codes = 1;
  for (int i = 2; i <= n; ++i) codes *= static_cast<std::uint64_t>(i);
  if (system_.type() == GroupType::D) codes <<= n;
  index_by_code_.assign(codes, -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_by_code_[code(elements_[i])] = static_cast<std::int32_t>(i);
  }
  identity_ = index_of(SignedPermutation::identity(n));

  right_descents_.resize(elements_.size());
  left_descents_.resize(elements_.size());
  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const SignedPermutation inv = inverse(elements_[i]);
    inverse_[i] = static_cast<std::uint32_t>(index_of(inv));
    right_descents_[i] = right_descent_set(elements_[i], system_).bits();
    left_descents_[i] = right_descent_set(inv, system_).bits();
  }
}

std::uint64_t CoxeterGroup::code(const SignedPermutation& w) const {
  // Lehmer code of |w| in mixed radix, then the sign pattern.
  const int n = w.rank();
  std::uint64_t lehmer = 0;
  std::uint32_t signs = 0;
  for (int i = 1; i <= n; ++i) {
    const int a = std::abs(w(i));
    int smaller_right = 0;
    for (int j = i + 1; j <= n; ++j) smaller_right += std::abs(w(j)) < a;
    lehmer = lehmer * static_cast<std::uint64_t>(n - i + 1) + static_cast<std::uint64_t>(smaller_right);
    if (w(i) < 0) signs |= 1U << (i - 1);
  }
  return system_.type() == GroupType::D ? (lehmer << n) | signs : lehmer;
}

std::optional<std::size_t> CoxeterGroup::find(const SignedPermutation& w) const {
  if (w.rank() != system_.rank()) return std::nullopt;
  if (system_.type() == GroupType::A ? !w.is_positive() : !w.is_even()) return std::nullopt;
  const std::int32_t idx = index_by_code_[code(w)];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

std::size_t CoxeterGroup::index_of(const SignedPermutation& w) const {
  if (auto idx = find(w)) return *idx;
  throw std::invalid_argument("element " + w.to_string() + " is not in the group");
}

std::size_t CoxeterGroup::product_index(std::size_t i, std::size_t j) const {
  return index_of(compose(elements_[i], elements_[j]));
}

ConjugationMap CoxeterGroup::conjugation_map(std::size_t i) const {
  // x^-1 s x = t  <=>  s = x t x^-1.
  ConjugationMap map;
  map.target.fill(-1);
  const int n = system_.rank();
  const SignedPermutation& x = elements_[i];
  const SignedPermutation x_inv = inverse(x);
  std::array<SignedPermutation, kMaxRank> gens;
  for (Generator g : system_.generator_list()) gens[g] = generator(n, g);
  for (Generator t : system_.generator_list()) {
    const SignedPermutation c = compose(x, compose(gens[t], x_inv));
    for (Generator s : system_.generator_list()) {
      if (c == gens[s]) {
        map.target[s] = static_cast<std::int8_t>(t);
        break;
      }
    }
  }
  return map;
}

std::vector<std::size_t> subset_conjugacy_classes(const CoxeterGroup& group) {
  const CoxeterSystem& system = group.system();
  const std::size_t count = system.subset_count();
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t x = 0; x < group.size(); ++x) {
    const ConjugationMap map = group.conjugation_map(x);
    for (std::size_t d = 0; d < count; ++d) {
      const GeneratorSet J = system.subset_at(d);
      const GeneratorSet image = map.image(J);
      if (image.size() != J.size()) continue;  // some conjugate is not a generator
      const std::size_t a = find(d);
      const std::size_t b = find(system.dense_index(image));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> out(count);
  for (std::size_t d = 0; d < count; ++d) out[d] = find(d);
  return out;
}

}  // namespace descent
