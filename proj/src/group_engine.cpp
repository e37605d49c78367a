#include "altpow/group_engine.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "altpow/error.hpp"
#include "altpow/parallel.hpp"

namespace altpow {

// ---------------------------------------------------------------------------
// Perm

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    require(x < images_.size() && !seen[x], "permutation images must form a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  Perm p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      require(from >= 0 && static_cast<std::size_t>(from) < degree && to >= 0 &&
                  static_cast<std::size_t>(to) < degree,
              "cycle point out of range for degree " + std::to_string(degree));
      require(!used[static_cast<std::size_t>(from)], "cycles must be disjoint");
      used[static_cast<std::size_t>(from)] = true;
      p.images_[static_cast<std::size_t>(from)] = static_cast<Point>(to);
    }
  }
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[x] = images_[rhs.images_[x]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[images_[x]] = static_cast<Point>(x);
  return out;
}

Perm Perm::conjugated_by(const Perm& g) const {
  // g x g^-1 sends g(i) to g(x(i)).
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[g.images_[i]] = g.images_[images_[i]];
  return out;
}

Perm Perm::pow(std::uint64_t e) const {
  Perm result = identity(degree());
  Perm base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

bool Perm::commutes_with(const Perm& other) const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[other.images_[x]] != other.images_[images_[x]]) return false;
  }
  return true;
}

std::uint64_t Perm::order() const {
  std::uint64_t order = 1;
  const CycleType type = cycle_type();
  for (int len : type.parts()) order = std::lcm(order, static_cast<std::uint64_t>(len));
  return order;
}

CycleType Perm::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> parts;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<std::vector<int>> out;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<int> cycle;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(static_cast<int>(x));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Perm::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i != 0) out += " ";
      out += std::to_string(cycle[i]);
    }
    out += ")";
  }
  return out;
}

std::string to_string(const Perm& p) { return p.to_cycle_string(); }

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

Perm parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_space();
  require(i < text.size(), "empty permutation");
  while (i < text.size()) {
    require(text[i] == '(', "expected '(' in cycle notation: '" + std::string(text) + "'");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
      require(i < text.size(), "unterminated cycle: '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      require(std::isdigit(static_cast<unsigned char>(text[i])) != 0,
              "bad character in cycle notation: '" + std::string(text) + "'");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) {
        value = value * 10 + (text[i] - '0');
        require(value < 65536, "point too large");
        ++i;
      }
      cycle.push_back(value);
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Perm::from_cycles(degree, cycles);
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup PermGroup::make(std::size_t degree, std::vector<Perm> elements,
                          std::vector<Perm> generators) {
  auto data = std::make_shared<Data>();
  data->degree = degree;
  std::sort(elements.begin(), elements.end());
  data->elements = std::move(elements);
  data->index.reserve(data->elements.size() * 2);
  for (std::size_t i = 0; i < data->elements.size(); ++i) {
    data->index.emplace(data->elements[i], static_cast<std::uint32_t>(i));
  }
  if (generators.empty() && data->elements.size() > 1) {
    // Greedy generating set over the sorted elements: depends only on the set.
    const std::size_t n = data->elements.size();
    std::vector<bool> member(n, false);
    std::vector<std::size_t> members{0};
    member[0] = true;
    std::vector<std::size_t> gens;
    for (std::size_t i = 1; i < n && members.size() < n; ++i) {
      if (member[i]) continue;
      gens.push_back(i);
      std::deque<std::size_t> queue(members.begin(), members.end());
      while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t g : gens) {
          const auto y = data->index.at(data->elements[x] * data->elements[g]);
          if (!member[y]) {
            member[y] = true;
            members.push_back(y);
            queue.push_back(y);
          }
        }
      }
    }
    for (std::size_t g : gens) generators.push_back(data->elements[g]);
  }
  data->generators = std::move(generators);
  PermGroup group;
  group.data_ = std::move(data);
  return group;
}

PermGroup PermGroup::closure(std::size_t degree, std::vector<Perm> generators,
                             std::uint64_t order_bound) {
  for (const auto& g : generators) require(g.degree() == degree, "generator degree mismatch");
  std::erase_if(generators, [](const Perm& g) { return g.is_identity(); });
  std::unordered_map<Perm, bool, PermHash> seen;
  std::vector<Perm> elements{Perm::identity(degree)};
  seen.emplace(elements.front(), true);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Perm next = elements[head] * g;
      if (seen.emplace(next, true).second) {
        elements.push_back(std::move(next));
        if (elements.size() > order_bound) {
          fail(ErrorCode::OrderBoundExceeded,
               "group order exceeds the bound " + std::to_string(order_bound));
        }
      }
    }
  }
  return make(degree, std::move(elements), std::move(generators));
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> elements) {
  return make(degree, std::move(elements), {});
}

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  auto it = data_->index.find(p);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::index_of_member(const Perm& p) const {
  auto it = data_->index.find(p);
  if (it == data_->index.end()) fail(ErrorCode::Internal, "element " + to_string(p) + " not in group");
  return it->second;
}

std::size_t PermGroup::mul(std::size_t a, std::size_t b) const {
  return index_of_member(element(a) * element(b));
}

std::size_t PermGroup::inv(std::size_t a) const { return index_of_member(element(a).inverse()); }

bool PermGroup::is_abelian() const {
  const auto& gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].commutes_with(gens[j])) return false;
    }
  }
  return true;
}

bool PermGroup::same_elements(const PermGroup& other) const {
  return degree() == other.degree() && elements() == other.elements();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return std::all_of(generators().begin(), generators().end(),
                     [&](const Perm& g) { return other.contains(g); });
}

PermGroup PermGroup::centralizer(const Perm& g) const {
  std::vector<Perm> members;
  for (const auto& x : elements()) {
    if (x.commutes_with(g)) members.push_back(x);
  }
  return from_elements(degree(), std::move(members));
}

PermGroup PermGroup::intersection(const PermGroup& other) const {
  std::vector<Perm> members;
  for (const auto& x : elements()) {
    if (other.contains(x)) members.push_back(x);
  }
  return from_elements(degree(), std::move(members));
}

PermGroup PermGroup::conjugated_by(const Perm& g) const {
  std::vector<Perm> members;
  members.reserve(order());
  for (const auto& x : elements()) members.push_back(x.conjugated_by(g));
  return from_elements(degree(), std::move(members));
}

std::string PermGroup::canonical_spec() const {
  // Recompute the greedy generating set so that the spec depends only on the
  // element set, not on how the group was built.
  const PermGroup canonical = from_elements(degree(), elements());
  std::string out = "deg=" + std::to_string(degree());
  for (std::size_t i = 0; i < canonical.generators().size(); ++i) {
    out += (i == 0 ? "; " : ", ");
    out += canonical.generators()[i].to_cycle_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named groups and specs

PermGroup symmetric_group(std::size_t n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    std::vector<int> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0);
    gens.push_back(Perm::from_cycles(n, {cycle}));
  }
  return PermGroup::closure(n, std::move(gens), UINT64_MAX);
}

PermGroup alternating_group(std::size_t n) {
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < n; ++i) {
    gens.push_back(Perm::from_cycles(n, {{0, 1, static_cast<int>(i)}}));
  }
  return PermGroup::closure(n, std::move(gens), UINT64_MAX);
}

PermGroup cyclic_group(std::size_t n) {
  std::vector<int> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0);
  return PermGroup::closure(n, {Perm::from_cycles(n, {cycle})}, UINT64_MAX);
}

PermGroup dihedral_group(std::size_t n) {
  std::vector<int> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0);
  std::vector<std::vector<int>> reflection;
  for (std::size_t i = 1; i < n - i; ++i) {
    reflection.push_back({static_cast<int>(i), static_cast<int>(n - i)});
  }
  return PermGroup::closure(n, {Perm::from_cycles(n, {cycle}), Perm::from_cycles(n, reflection)},
                            UINT64_MAX);
}

PermGroup trivial_group(std::size_t degree) { return PermGroup::closure(degree, {}); }

PermGroup elementary_abelian_group(int p, int rank) {
  require(is_prime(p), "p must be prime");
  require(rank >= 0, "rank must be nonnegative");
  const auto deg = static_cast<std::size_t>(p * rank);
  std::vector<Perm> gens;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> cycle;
    for (int j = 0; j < p; ++j) cycle.push_back(i * p + j);
    gens.push_back(Perm::from_cycles(deg, {cycle}));
  }
  return PermGroup::closure(std::max<std::size_t>(deg, 1), gens);
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  require(!text.empty() && std::all_of(text.begin(), text.end(),
                                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }),
          "bad " + what + ": '" + text + "'");
  require(text.size() < 6, what + " too large");
  return std::stoul(text);
}

}  // namespace

PermGroup parse_group_spec(std::string_view spec_view, std::uint64_t order_bound) {
  const std::string spec = trim(spec_view);
  const auto colon = spec.find(':');
  if (colon != std::string::npos && spec.find('=') == std::string::npos) {
    const std::string name = trim(spec.substr(0, colon));
    const std::size_t n = parse_size(trim(spec.substr(colon + 1)), "group size");
    auto check = [&](long double order) {
      if (order > static_cast<long double>(order_bound)) {
        fail(ErrorCode::OrderBoundExceeded, "group " + spec + " exceeds the order bound");
      }
    };
    if (name == "sym") {
      long double order = 1;
      for (std::size_t i = 2; i <= n; ++i) order *= static_cast<long double>(i);
      check(order);
      return symmetric_group(n);
    }
    if (name == "alt") {
      long double order = 1;
      for (std::size_t i = 3; i <= n; ++i) order *= static_cast<long double>(i);
      check(order);
      return alternating_group(n);
    }
    if (name == "cyc") {
      require(n >= 1, "cyc:n needs n >= 1");
      check(static_cast<long double>(n));
      return cyclic_group(n);
    }
    if (name == "dih") {
      require(n >= 3, "dih:n needs n >= 3");
      check(2.0L * static_cast<long double>(n));
      return dihedral_group(n);
    }
    if (name == "trivial") return trivial_group(n);
    fail(ErrorCode::InvalidArgument, "unknown named group '" + name + "'");
  }

  const auto semi = spec.find(';');
  const std::string head = trim(spec.substr(0, semi));
  require(head.rfind("deg=", 0) == 0 || head.rfind("deg =", 0) == 0,
          "group spec must start with 'deg=<n>': '" + spec + "'");
  const std::size_t degree = parse_size(trim(head.substr(head.find('=') + 1)), "degree");
  std::vector<Perm> gens;
  if (semi != std::string::npos) {
    const std::string body = spec.substr(semi + 1);
    int depth = 0;
    std::string current;
    auto flush = [&] {
      const std::string g = trim(current);
      if (!g.empty()) gens.push_back(parse_cycles(g, degree));
      current.clear();
    };
    for (char c : body) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      require(depth >= 0 && depth <= 1, "unbalanced parentheses in group spec");
      if (c == ',' && depth == 0) {
        flush();
      } else {
        current += c;
      }
    }
    require(depth == 0, "unbalanced parentheses in group spec");
    flush();
  }
  return PermGroup::closure(degree, std::move(gens), order_bound);
}

// ---------------------------------------------------------------------------
// Conjugacy

ConjugacyClasses conjugacy_classes(const PermGroup& g) {
  const std::size_t n = g.order();
  ConjugacyClasses out;
  out.class_of.assign(n, UINT32_MAX);
  std::vector<Perm> gen_inverses;
  for (const auto& s : g.generators()) gen_inverses.push_back(s.inverse());
  for (std::size_t i = 0; i < n; ++i) {
    if (out.class_of[i] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(out.classes.size());
    std::vector<std::size_t> orbit{i};
    out.class_of[i] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const Perm& x = g.element(orbit[head]);
      for (const auto& s : g.generators()) {
        const std::size_t y = g.index_of_member(x.conjugated_by(s));
        if (out.class_of[y] == UINT32_MAX) {
          out.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    // i is the smallest unvisited index, hence the minimal class member.
    out.classes.push_back({i, orbit.size(), n / orbit.size()});
  }
  return out;
}

int orbit_count(const std::vector<Perm>& tuple, std::size_t degree) {
  std::vector<std::size_t> parent(degree);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  int count = static_cast<int>(degree);
  for (const auto& g : tuple) {
    require(g.degree() == degree, "orbit_count: degree mismatch");
    for (std::size_t x = 0; x < degree; ++x) {
      const std::size_t a = find(x);
      const std::size_t b = find(g[x]);
      if (a != b) {
        parent[a] = b;
        --count;
      }
    }
  }
  return count;
}

namespace {

struct TupleSearch {
  int p;
  const std::vector<bool>& constrain;
  std::size_t degree;

  bool admissible(const Perm& x, std::size_t level) const {
    return !constrain[level] || is_p_power(x.order(), static_cast<std::uint64_t>(p));
  }

  // Classes of `group` give the next coordinate; the centralizer of each
  // representative carries the remaining coordinates.
  void extend(const PermGroup& group, std::vector<Perm>& prefix,
              std::vector<CommutingTupleClass>& out) const {
    const std::size_t level = prefix.size();
    const bool last = level + 1 == constrain.size();
    const auto classes = conjugacy_classes(group);
    for (const auto& cls : classes.classes) {
      const Perm& rep = group.element(cls.representative);
      if (!admissible(rep, level)) continue;
      prefix.push_back(rep);
      if (last) {
        out.push_back({prefix, cls.centralizer_order, orbit_count(prefix, degree), constrain});
      } else {
        extend(group.centralizer(rep), prefix, out);
      }
      prefix.pop_back();
    }
  }
};

}  // namespace

std::vector<CommutingTupleClass> commuting_tuple_classes(const PermGroup& g, int t, int p,
                                                         const std::vector<bool>& constrain,
                                                         const EngineOptions& options) {
  require(t >= 0, "tuple depth t must be nonnegative");
  require(constrain.size() == static_cast<std::size_t>(t) + 1,
          "constraint flags must have length t+1");
  if (std::find(constrain.begin(), constrain.end(), true) != constrain.end()) {
    require(is_prime(p), "p must be prime");
  }
  const TupleSearch search{p, constrain, g.degree()};

  // Split the search over the classes of the first coordinate; each subtree is
  // independent, and the merged list is sorted so the schedule is invisible.
  const auto top = conjugacy_classes(g);
  std::vector<std::vector<CommutingTupleClass>> parts(top.classes.size());
  parallel_for(top.classes.size(), options.threads, [&](std::size_t i) {
    const Perm& rep = g.element(top.classes[i].representative);
    if (!search.admissible(rep, 0)) return;
    std::vector<Perm> prefix{rep};
    if (t == 0) {
      parts[i].push_back({prefix, top.classes[i].centralizer_order, orbit_count(prefix, g.degree()),
                          constrain});
    } else {
      search.extend(g.centralizer(rep), prefix, parts[i]);
    }
  });
  std::vector<CommutingTupleClass> out;
  for (auto& part : parts) {
    for (auto& cls : part) out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.representative < b.representative;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Sylow subgroups

std::vector<PermGroup> sylow_subgroups(const PermGroup& g, int p, std::uint64_t order_bound) {
  require(is_prime(p), "p must be prime");
  const unsigned e = p_valuation(g.order(), static_cast<std::uint64_t>(p));
  std::uint64_t target = 1;
  for (unsigned i = 0; i < e; ++i) target *= static_cast<std::uint64_t>(p);
  if (target == 1) return {trivial_group(g.degree())};

  // Greedy extension: a p-element normalizing a p-subgroup P extends it to
  // the p-group P<y>. When P is not Sylow, p divides |N(P)/P|.
  PermGroup sylow = trivial_group(g.degree());
  std::vector<Perm> gens;
  while (sylow.order() < target) {
    bool extended = false;
    for (const auto& x : g.elements()) {
      if (sylow.contains(x)) continue;
      const bool normalizes = std::all_of(
          sylow.generators().begin(), sylow.generators().end(),
          [&](const Perm& h) { return sylow.contains(h.conjugated_by(x)); });
      if (!normalizes) continue;
      // The p-part of x still normalizes P, and lies outside P exactly when
      // p divides the order of xP in N(P)/P.
      std::uint64_t coprime = x.order();
      while (coprime % static_cast<std::uint64_t>(p) == 0) coprime /= static_cast<std::uint64_t>(p);
      const Perm y = x.pow(coprime);
      if (sylow.contains(y)) continue;
      gens.push_back(y);
      sylow = PermGroup::closure(g.degree(), gens, order_bound);
      extended = true;
      break;
    }
    if (!extended) fail(ErrorCode::Internal, "Sylow extension stalled");
  }

  auto key_of = [&](const PermGroup& h) {
    std::vector<std::size_t> key;
    key.reserve(h.order());
    for (const auto& x : h.elements()) key.push_back(g.index_of_member(x));
    std::sort(key.begin(), key.end());
    return key;
  };
  std::map<std::vector<std::size_t>, PermGroup> found;
  std::vector<PermGroup> frontier{sylow};
  found.emplace(key_of(sylow), sylow);
  while (!frontier.empty()) {
    PermGroup h = frontier.back();
    frontier.pop_back();
    for (const auto& s : g.generators()) {
      PermGroup c = h.conjugated_by(s);
      auto key = key_of(c);
      if (found.emplace(std::move(key), c).second) frontier.push_back(std::move(c));
    }
  }
  std::vector<PermGroup> out;
  for (auto& [key, h] : found) out.push_back(std::move(h));
  return out;
}

}  // namespace altpow
