#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the engines it is used to check, except for Perm arithmetic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "altpow/exact.hpp"
#include "altpow/group_engine.hpp"

namespace oracle {

using altpow::BigInt;
using altpow::Perm;
using altpow::Rational;

// Euler's pentagonal-number recurrence for the partition function.
inline std::vector<BigInt> partition_counts(int max_m) {
  std::vector<BigInt> p(static_cast<std::size_t>(max_m) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= max_m; ++n) {
    BigInt sum = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      sum += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) sum += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = sum;
  }
  return p;
}

// Every permutation of {0..n-1} via std::next_permutation.
inline std::vector<Perm> all_perms(std::size_t n) {
  std::vector<altpow::Point> images(n);
  std::iota(images.begin(), images.end(), altpow::Point{0});
  std::vector<Perm> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

inline std::uint64_t brute_centralizer_order(const Perm& g) {
  std::uint64_t count = 0;
  for (const auto& x : all_perms(g.degree())) {
    if (x * g == g * x) ++count;
  }
  return count;
}

inline int brute_orbits(const std::vector<Perm>& tuple, std::size_t degree) {
  std::vector<int> label(degree, -1);
  int orbits = 0;
  for (std::size_t s = 0; s < degree; ++s) {
    if (label[s] != -1) continue;
    std::vector<std::size_t> stack{s};
    label[s] = orbits;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (const auto& g : tuple) {
        for (std::size_t y : {std::size_t{g[x]}, std::size_t{g.inverse()[x]}}) {
          if (label[y] == -1) {
            label[y] = orbits;
            stack.push_back(y);
          }
        }
      }
    }
    ++orbits;
  }
  return orbits;
}

struct BruteClass {
  std::vector<Perm> canonical;
  std::uint64_t centralizer_order;
  int orbits;
};

// Enumerates every pairwise-commuting tuple of the given length (coordinate
// i restricted to p-power order when constrain[i]), then collapses tuples
// to the lexicographically least member of their conjugation orbit.
inline std::vector<BruteClass> brute_commuting_classes(const std::vector<Perm>& group,
                                                       const std::vector<bool>& constrain,
                                                       int p) {
  const std::size_t len = constrain.size();
  std::map<std::vector<Perm>, BruteClass> classes;
  std::vector<Perm> tuple;
  std::function<void()> rec = [&] {
    if (tuple.size() == len) {
      std::vector<Perm> best = tuple;
      std::uint64_t stab = 0;
      for (const auto& g : group) {
        std::vector<Perm> conj;
        for (const auto& x : tuple) conj.push_back(g * x * g.inverse());
        if (conj == tuple) ++stab;
        best = std::min(best, conj);
      }
      classes.emplace(best, BruteClass{best, stab, brute_orbits(tuple, group.front().degree())});
      return;
    }
    for (const auto& x : group) {
      if (constrain[tuple.size()] && !altpow::is_p_power(x.order(), static_cast<std::uint64_t>(p)))
        continue;
      bool ok = true;
      for (const auto& y : tuple) ok = ok && (x * y == y * x);
      if (!ok) continue;
      tuple.push_back(x);
      rec();
      tuple.pop_back();
    }
  };
  rec();
  std::vector<BruteClass> out;
  for (auto& [key, cls] : classes) out.push_back(cls);
  return out;
}

// Number of multisets of size m from d letters, by enumerating
// nondecreasing sequences.
inline std::uint64_t count_monomials(int d, int m, bool strictly_increasing) {
  std::uint64_t count = 0;
  std::function<void(int, int)> rec = [&](int remaining, int min_letter) {
    if (remaining == 0) {
      ++count;
      return;
    }
    for (int letter = min_letter; letter < d; ++letter) {
      rec(remaining - 1, strictly_increasing ? letter + 1 : letter);
    }
  };
  rec(m, 0);
  return count;
}

// Number of orbits of the group `acting` on functions {0..m-1} -> {0..d-1}
// fixed by every permutation in `fixing`, found by canonical minima.
inline std::uint64_t brute_function_orbits(const std::vector<Perm>& acting, const std::vector<Perm>& fixing,
                                           std::size_t m, int d) {
  std::set<std::vector<int>> minima;
  std::vector<int> f(m, 0);
  auto fixed = [&](const std::vector<int>& v) {
    for (const auto& g : fixing) {
      for (std::size_t i = 0; i < m; ++i) {
        if (v[g[i]] != v[i]) return false;
      }
    }
    return true;
  };
  if (d == 0) return m == 0 ? 1 : 0;
  for (;;) {
    if (fixed(f)) {
      std::vector<int> best = f;
      for (const auto& c : acting) {
        std::vector<int> moved(m);
        for (std::size_t i = 0; i < m; ++i) moved[c[i]] = f[i];
        best = std::min(best, moved);
      }
      minima.insert(best);
    }
    std::size_t i = 0;
    while (i < m && ++f[i] == d) f[i++] = 0;
    if (i == m) break;
  }
  return minima.size();
}

}  // namespace oracle
