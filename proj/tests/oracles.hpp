#pragma once

// Brute-force reference implementations used by the tests. They work on
// plain bit vectors and never call into the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace ref {

using Bits = std::vector<std::uint8_t>;
using Fn = std::function<bool(const Bits&)>;

inline Bits bits_of(std::uint64_t index, unsigned n) {
  Bits a(n);
  for (unsigned i = 0; i < n; ++i) a[i] = (index >> (n - 1 - i)) & 1u;
  return a;
}

inline std::uint64_t value_of(const Bits& a, std::size_t from, std::size_t len) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < len; ++i) v = (v << 1) | a[from + i];
  return v;
}

inline unsigned clog2(std::uint64_t m) {
  unsigned b = 0;
  while ((std::uint64_t{1} << b) < m) ++b;
  return b;
}

inline bool isa(unsigned k, unsigned l, const Bits& a) {
  const std::uint64_t alpha = value_of(a, 0, k);
  const std::uint64_t beta = value_of(a, k + l * alpha, l);
  return a[k + l * (std::size_t{1} << k) + beta];
}

inline unsigned isa_arity(unsigned k, unsigned l) { return k + (1u << k) * l + (1u << l); }

inline bool ed(unsigned N, unsigned m, const Bits& a) {
  const unsigned w = clog2(m);
  std::set<std::uint64_t> seen;
  for (unsigned i = 0; i < N; ++i) {
    const std::uint64_t v = value_of(a, i * w, w);
    if (v + 1 > m || !seen.insert(v).second) return false;
  }
  return true;
}

inline std::vector<bool> table(const Fn& f, unsigned n) {
  std::vector<bool> t(std::size_t{1} << n);
  for (std::uint64_t i = 0; i < t.size(); ++i) t[i] = f(bits_of(i, n));
  return t;
}

// Distinct restrictions of f to the variables in v (0-based).
inline std::size_t subfunctions(const Fn& f, unsigned n, const std::vector<unsigned>& v) {
  std::vector<unsigned> rest;
  for (unsigned i = 0; i < n; ++i)
    if (std::find(v.begin(), v.end(), i) == v.end()) rest.push_back(i);
  std::set<std::vector<bool>> subs;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << rest.size()); ++r) {
    std::vector<bool> sub;
    Bits a(n);
    for (std::size_t j = 0; j < rest.size(); ++j) a[rest[j]] = (r >> (rest.size() - 1 - j)) & 1u;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << v.size()); ++y) {
      for (std::size_t j = 0; j < v.size(); ++j) a[v[j]] = (y >> (v.size() - 1 - j)) & 1u;
      sub.push_back(f(a));
    }
    subs.insert(sub);
  }
  return subs.size();
}

inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All set partitions of {0..n-1} as block lists.
inline std::vector<std::vector<std::vector<unsigned>>> set_partitions(unsigned n) {
  std::vector<std::vector<std::vector<unsigned>>> out;
  std::vector<std::vector<unsigned>> cur;
  std::function<void(unsigned)> rec = [&](unsigned i) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(i);
      rec(i + 1);
      cur[b].pop_back();
    }
    cur.push_back({i});
    rec(i + 1);
    cur.pop_back();
  };
  rec(0);
  return out;
}

// A branching program as raw arc lists; vertex 0 = t0, 1 = t1.
struct Graph {
  std::size_t vertices = 2;
  unsigned start = 0;
  std::vector<int> var;  // -1 on sinks
  std::vector<std::pair<unsigned, unsigned>> a0, a1;
};

inline std::vector<std::vector<unsigned>> active(const Graph& g, const Bits& a) {
  std::vector<std::vector<unsigned>> adj(g.vertices);
  for (auto [u, w] : g.a0)
    if (!a[g.var[u]]) adj[u].push_back(w);
  for (auto [u, w] : g.a1)
    if (a[g.var[u]]) adj[u].push_back(w);
  return adj;
}

inline bool reaches(const Graph& g, const Bits& a) {
  const auto adj = active(g, a);
  std::vector<bool> seen(g.vertices);
  std::vector<unsigned> stack{g.start};
  seen[g.start] = true;
  while (!stack.empty()) {
    const unsigned u = stack.back();
    stack.pop_back();
    if (u == 1) return true;
    for (unsigned w : adj[u])
      if (!seen[w]) seen[w] = true, stack.push_back(w);
  }
  return false;
}

// Number of s -> t1 paths by plain recursion; -1 if a cycle is reachable.
inline long paths(const Graph& g, const Bits& a) {
  const auto adj = active(g, a);
  std::vector<int> state(g.vertices);
  bool cyclic = false;
  std::function<long(unsigned)> rec = [&](unsigned u) -> long {
    if (u == 1) return 1;
    if (state[u] == 1) {
      cyclic = true;
      return 0;
    }
    state[u] = 1;
    long total = 0;
    for (unsigned w : adj[u]) total += rec(w);
    state[u] = 0;
    return total;
  };
  const long r = rec(g.start);
  return cyclic ? -1 : r;
}

inline bool gate(unsigned g, bool a, bool b) { return (g >> (3 - (2 * a + b))) & 1u; }

}  // namespace ref
