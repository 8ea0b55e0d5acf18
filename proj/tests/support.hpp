#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cleangraph/graph.hpp"

// Generators and brute-force oracles shared by the test binaries. Nothing
// here calls into the code under test beyond building plain graphs.
namespace support {

using cleangraph::Graph;
using cleangraph::GraphBuilder;
using cleangraph::Vertex;

inline constexpr std::uint64_t kSeed = 20261016;

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  GraphBuilder b;
  for (std::size_t v = 0; v < n; ++v) b.add_vertex("v" + std::to_string(v));
  std::bernoulli_distribution edge(p);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (edge(rng)) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

inline std::vector<Vertex> random_permutation(std::size_t n,
                                              std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Tries every bijection; only for tiny graphs.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Vertex u = 0; u < a.order() && ok; ++u) {
      for (Vertex v = u + 1; v < a.order() && ok; ++v) {
        ok = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::uint64_t totient(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ++count;
  }
  return n == 1 ? 1 : count;
}

inline std::size_t distinct_prime_factors(std::uint64_t n) {
  std::size_t count = 0;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    ++count;
    while (n % p == 0) n /= p;
  }
  return count;
}

// Sieve of Eratosthenes, then every power of each prime.
inline std::vector<std::uint64_t> sieve_prime_powers(std::uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= bound; m += p) composite[m] = true;
    for (std::uint64_t q = p; q <= bound; q *= p) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace support
