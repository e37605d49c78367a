#include "altpow/wreath_classes.hpp"

#include <algorithm>
#include <map>

#include "altpow/error.hpp"
#include "altpow/parallel.hpp"

namespace altpow {

namespace {

void multisets(std::size_t size, std::size_t alphabet, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < alphabet; ++i) {
    cur.push_back(i);
    multisets(size, alphabet, i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

BigInt wreath_order(const PermGroup& g, int m) {
  return power(BigInt(static_cast<unsigned long>(g.order())), static_cast<unsigned>(m)) *
         factorial(static_cast<unsigned>(m));
}

std::vector<WreathClassRow> wreath_class_table(const PermGroup& g, int m, unsigned threads) {
  require(m >= 0, "m must be nonnegative");
  const auto cc = conjugacy_classes(g);
  const std::size_t r = cc.classes.size();
  const auto types = partitions(m);
  std::vector<std::vector<WreathClassRow>> parts(types.size());
  parallel_for(types.size(), threads, [&](std::size_t ti) {
    const CycleType& tau = types[ti];
    std::vector<std::pair<int, std::vector<std::vector<std::size_t>>>> per_length;
    for (const auto& [k, count] : tau.multiplicities()) {
      std::vector<std::vector<std::size_t>> choices;
      std::vector<std::size_t> cur;
      multisets(static_cast<std::size_t>(count), r, 0, cur, choices);
      per_length.emplace_back(k, std::move(choices));
    }
    std::vector<std::size_t> pick(per_length.size(), 0);
    for (;;) {
      WreathClassRow row{{tau, {}}, 1};
      for (std::size_t l = 0; l < per_length.size(); ++l) {
        const int k = per_length[l].first;
        const auto& chosen = per_length[l].second[pick[l]];
        row.label.assignments[k] = chosen;
        for (std::size_t i = 0; i < chosen.size();) {
          std::size_t j = i;
          while (j < chosen.size() && chosen[j] == chosen[i]) ++j;
          const BigInt base = BigInt(k) * BigInt(static_cast<unsigned long>(cc.classes[chosen[i]].centralizer_order));
          row.centralizer_order *= power(base, static_cast<unsigned>(j - i)) * factorial(static_cast<unsigned>(j - i));
          i = j;
        }
      }
      parts[ti].push_back(std::move(row));
      std::size_t l = 0;
      while (l < pick.size() && ++pick[l] == per_length[l].second.size()) pick[l++] = 0;
      if (l == pick.size()) break;
    }
  });
  std::vector<WreathClassRow> out;
  for (auto& part : parts) {
    for (auto& row : part) out.push_back(std::move(row));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
  return out;
}

Perm wreath_element(const PermGroup& g, const std::vector<Perm>& h, const Perm& sigma) {
  const std::size_t deg = g.degree();
  const std::size_t m = sigma.degree();
  require(h.size() == m, "need one G-coordinate per block");
  std::vector<Point> images(m * deg);
  for (std::size_t b = 0; b < m; ++b) {
    require(g.contains(h[b]), "wreath coordinate is not in G");
    for (std::size_t x = 0; x < deg; ++x) {
      images[b * deg + x] = static_cast<Point>(sigma[b] * deg + h[b][x]);
    }
  }
  return Perm(std::move(images));
}

PermGroup wreath_product_group(const PermGroup& g, int m, std::uint64_t order_bound) {
  require(m >= 1, "m must be positive");
  if (wreath_order(g, m) > BigInt(static_cast<unsigned long>(order_bound))) {
    fail(ErrorCode::OrderBoundExceeded, "|G wr S_m| = " + to_string(wreath_order(g, m)) + " exceeds the order bound");
  }
  const auto um = static_cast<std::size_t>(m);
  std::vector<Perm> gens;
  std::vector<Perm> id(um, Perm::identity(g.degree()));
  for (const auto& s : g.generators()) {
    auto h = id;
    h[0] = s;
    gens.push_back(wreath_element(g, h, Perm::identity(um)));
  }
  if (m >= 2) {
    gens.push_back(wreath_element(g, id, Perm::from_cycles(um, {{0, 1}})));
    std::vector<int> cycle;
    for (int b = 0; b < m; ++b) cycle.push_back(b);
    gens.push_back(wreath_element(g, id, Perm::from_cycles(um, {cycle})));
  }
  return PermGroup::closure(um * g.degree(), gens, order_bound);
}

WreathClassLabel classify_wreath_perm(const PermGroup& g, int m, const Perm& x) {
  const std::size_t deg = g.degree();
  const auto um = static_cast<std::size_t>(m);
  require(x.degree() == um * deg, "element has the wrong degree");
  std::vector<Point> sigma_images(um);
  for (std::size_t b = 0; b < um; ++b) sigma_images[b] = static_cast<Point>(x[b * deg] / deg);
  const Perm sigma(sigma_images);
  const auto cc = conjugacy_classes(g);

  WreathClassLabel label{sigma.cycle_type(), {}};
  std::vector<bool> seen(um, false);
  for (std::size_t b = 0; b < um; ++b) {
    if (seen[b]) continue;
    std::size_t k = 0;
    for (std::size_t c = b; !seen[c]; c = sigma[c]) {
      seen[c] = true;
      ++k;
    }
    const Perm xk = x.pow(k);
    std::vector<Point> block(deg);
    for (std::size_t i = 0; i < deg; ++i) {
      const std::size_t image = xk[b * deg + i];
      require(image / deg == b, "element does not preserve the block system");
      block[i] = static_cast<Point>(image - b * deg);
    }
    const auto idx = g.index_of(Perm(block));
    require(idx.has_value(), "block restriction is not in G");
    label.assignments[static_cast<int>(k)].push_back(cc.class_of[*idx]);
  }
  for (auto& [k, v] : label.assignments) std::sort(v.begin(), v.end());
  return label;
}

WreathClassLabel classify_element(const PermGroup& g, int m, const std::vector<Perm>& h, const Perm& sigma) {
  require(sigma.degree() == static_cast<std::size_t>(m), "sigma must act on m blocks");
  return classify_wreath_perm(g, m, wreath_element(g, h, sigma));
}

WreathVerification verify_wreath_table(const PermGroup& g, int m, std::uint64_t order_bound) {
  WreathVerification out;
  const auto table = wreath_class_table(g, m);
  out.formula_classes = table.size();
  const PermGroup w = wreath_product_group(g, m, order_bound);
  const auto brute = conjugacy_classes(w);
  out.brute_classes = brute.classes.size();

  std::map<WreathClassLabel, std::uint64_t> seen;
  for (const auto& cls : brute.classes) {
    const auto label = classify_wreath_perm(g, m, w.element(cls.representative));
    if (!seen.emplace(label, cls.centralizer_order).second) {
      out.mismatches.push_back("two classes share label " + to_string(label, g));
    }
  }
  for (const auto& row : table) {
    auto it = seen.find(row.label);
    if (it == seen.end()) {
      out.mismatches.push_back("no class with label " + to_string(row.label, g));
    } else if (BigInt(static_cast<unsigned long>(it->second)) != row.centralizer_order) {
      out.mismatches.push_back("centralizer order differs at " + to_string(row.label, g));
    }
  }
  out.ok = out.mismatches.empty() && out.formula_classes == out.brute_classes;
  return out;
}

std::string to_string(const WreathClassLabel& label, const PermGroup& g) {
  const auto cc = conjugacy_classes(g);
  std::string out = label.sigma.to_string();
  for (const auto& [k, classes] : label.assignments) {
    out += " " + std::to_string(k) + ":";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (i) out += ",";
      out += g.element(cc.classes[classes[i]].representative).to_cycle_string();
    }
  }
  return out;
}

nlohmann::json to_json(const WreathClassLabel& label, const PermGroup& g) {
  const auto cc = conjugacy_classes(g);
  nlohmann::json assignments = nlohmann::json::object();
  for (const auto& [k, classes] : label.assignments) {
    nlohmann::json reps = nlohmann::json::array();
    for (auto c : classes) reps.push_back(g.element(cc.classes[c].representative).to_cycle_string());
    assignments[std::to_string(k)] = reps;
  }
  return {{"sigma", label.sigma}, {"assignments", assignments}};
}

}  // namespace altpow
