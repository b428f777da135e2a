// Test-side oracles, deliberately independent of the library: finite groups
// as explicit multiplication tables built from the standard presentations,
// brute-force isomorphism checks, an integer-partition enumerator, and a
// direct clause-by-clause transcription of the automorphism realizability
// conditions. Nothing here includes a library header.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

// A finite group as a multiplication table over 0..size-1, identity at 0.
struct Table {
  int size = 0;
  std::vector<int> mul;  // mul[x * size + y] = x * y

  int at(int x, int y) const { return mul[x * size + y]; }
};

inline Table cyclic_table(int k) {
  Table t;
  t.size = k;
  t.mul.resize(static_cast<std::size_t>(k) * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) t.mul[x * k + y] = (x + y) % k;
  return t;
}

// D_k with elements (c, e) = rho^c phi^e at index c*2 + e and the relation
// phi rho phi = rho^-1, so (c,e)(c',e') = (c + (-1)^e c', e xor e').
inline Table dihedral_table(int k) {
  Table t;
  t.size = 2 * k;
  t.mul.resize(static_cast<std::size_t>(t.size) * t.size);
  for (int c = 0; c < k; ++c)
    for (int e = 0; e < 2; ++e)
      for (int c2 = 0; c2 < k; ++c2)
        for (int e2 = 0; e2 < 2; ++e2) {
          const int cc = ((e ? c - c2 : c + c2) % k + k) % k;
          t.mul[(c * 2 + e) * t.size + (c2 * 2 + e2)] = cc * 2 + (e ^ e2);
        }
  return t;
}

inline Table zxz_table(int r, int s) {
  Table t;
  t.size = r * s;
  t.mul.resize(static_cast<std::size_t>(t.size) * t.size);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < s; ++b)
      for (int a2 = 0; a2 < r; ++a2)
        for (int b2 = 0; b2 < s; ++b2)
          t.mul[(a * s + b) * t.size + (a2 * s + b2)] =
              ((a + a2) % r) * s + (b + b2) % s;
  return t;
}

// (Z_r x Z_s) : Z_2 from the presentation rho^a sigma^b phi^e where phi
// inverts both rotation factors: (a,b,e)(a',b',e') =
// (a + (-1)^e a', b + (-1)^e b', e xor e'). Index (a*s + b)*2 + e.
inline Table semidirect_table(int r, int s) {
  Table t;
  t.size = 2 * r * s;
  t.mul.resize(static_cast<std::size_t>(t.size) * t.size);
  const auto idx = [s](int a, int b, int e) { return (a * s + b) * 2 + e; };
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < s; ++b)
      for (int e = 0; e < 2; ++e)
        for (int a2 = 0; a2 < r; ++a2)
          for (int b2 = 0; b2 < s; ++b2)
            for (int e2 = 0; e2 < 2; ++e2) {
              const int aa = ((e ? a - a2 : a + a2) % r + r) % r;
              const int bb = ((e ? b - b2 : b + b2) % s + s) % s;
              t.mul[idx(a, b, e) * t.size + idx(a2, b2, e2)] =
                  idx(aa, bb, e ^ e2);
            }
  return t;
}

inline Table product_table(const Table& g, const Table& h) {
  Table t;
  t.size = g.size * h.size;
  t.mul.resize(static_cast<std::size_t>(t.size) * t.size);
  for (int x = 0; x < g.size; ++x)
    for (int y = 0; y < h.size; ++y)
      for (int x2 = 0; x2 < g.size; ++x2)
        for (int y2 = 0; y2 < h.size; ++y2)
          t.mul[(x * h.size + y) * t.size + (x2 * h.size + y2)] =
              g.at(x, x2) * h.size + h.at(y, y2);
  return t;
}

inline int elem_order(const Table& t, int x) {
  int acc = x, ord = 1;
  while (acc != 0) {
    acc = t.at(acc, x);
    ++ord;
  }
  return ord;
}

inline std::vector<int> order_multiset(const Table& t) {
  std::vector<int> orders;
  orders.reserve(t.size);
  for (int x = 0; x < t.size; ++x) orders.push_back(elem_order(t, x));
  std::sort(orders.begin(), orders.end());
  return orders;
}

// Exhaustive isomorphism test against Z_k: some generator must induce a full
// homomorphic bijection. A failed search is a sound negative.
inline bool isomorphic_to_cyclic(const Table& t, int k) {
  if (t.size != k) return false;
  for (int g = 0; g < k; ++g) {
    if (elem_order(t, g) != k) continue;
    std::vector<int> phi(k, -1);  // phi[element of t] = exponent
    int acc = 0;
    bool bijective = true;
    for (int i = 0; i < k; ++i) {
      if (phi[acc] != -1) bijective = false;
      phi[acc] = i;
      acc = t.at(acc, g);
    }
    if (!bijective) continue;
    bool homomorphic = true;
    for (int x = 0; x < k && homomorphic; ++x)
      for (int y = 0; y < k && homomorphic; ++y)
        if ((phi[x] + phi[y]) % k != phi[t.at(x, y)]) homomorphic = false;
    if (homomorphic) return true;
  }
  return false;
}

// Exhaustive isomorphism test against D_k: search every rotation candidate c
// of order k and every reflection candidate t outside <c> with t^2 = e and
// t c t = c^-1, then verify the induced map on the whole table.
inline bool isomorphic_to_dihedral(const Table& t, int k) {
  if (t.size != 2 * k) return false;
  const Table dk = dihedral_table(k);
  for (int c = 0; c < t.size; ++c) {
    if (elem_order(t, c) != k) continue;
    std::vector<int> pow(k);
    std::vector<char> in_c(t.size, 0);
    pow[0] = 0;
    in_c[0] = 1;
    for (int i = 1; i < k; ++i) {
      pow[i] = t.at(pow[i - 1], c);
      in_c[pow[i]] = 1;
    }
    for (int r = 0; r < t.size; ++r) {
      if (in_c[r] || t.at(r, r) != 0) continue;
      if (t.at(t.at(r, c), r) != (k == 1 ? 0 : pow[k - 1])) continue;
      std::vector<int> phi(t.size, -1);
      bool bijective = true;
      for (int i = 0; i < k; ++i) {
        const int flip = t.at(pow[i], r);
        if (phi[pow[i]] != -1 || phi[flip] != -1 || pow[i] == flip)
          bijective = false;
        else {
          phi[pow[i]] = i * 2;
          phi[flip] = i * 2 + 1;
        }
      }
      if (!bijective) continue;
      bool homomorphic = true;
      for (int x = 0; x < t.size && homomorphic; ++x)
        for (int y = 0; y < t.size && homomorphic; ++y)
          if (phi[t.at(x, y)] != dk.at(phi[x], phi[y])) homomorphic = false;
      if (homomorphic) return true;
    }
  }
  return false;
}

// All integer partitions of n, parts descending.
inline void partitions_into(std::int64_t remaining, std::int64_t max_part,
                            std::vector<std::int64_t>& cur,
                            std::vector<std::vector<std::int64_t>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_into(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::int64_t>> partitions(std::int64_t n) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  partitions_into(n, n, cur, out);
  return out;
}

// Direct transcription of the order-m realizability conditions on a cycle
// type: (1) m > 2 even, every cycle of length m, no fixed vertices;
// (2) m = 2, every cycle of length 2, at most two fixed vertices;
// (3) m odd, every cycle of length m, at most three fixed vertices;
// (4) m an odd multiple of 3, m > 3, exactly one 3-cycle, every other cycle
// of length m, no fixed vertices. Returns every matching part; callers pass
// m = lcm of the cycle lengths.
inline std::vector<int> automorphism_parts(
    const std::vector<std::int64_t>& cycles, std::int64_t fixed,
    std::int64_t m) {
  bool all_m = true;
  std::int64_t threes = 0;
  bool rest_m = true;
  for (const std::int64_t c : cycles) {
    if (c != m) all_m = false;
    if (c == 3)
      ++threes;
    else if (c != m)
      rest_m = false;
  }
  std::vector<int> parts;
  if (m > 2 && m % 2 == 0 && all_m && fixed == 0) parts.push_back(1);
  if (m == 2 && all_m && fixed <= 2) parts.push_back(2);
  if (m % 2 == 1 && all_m && fixed <= 3) parts.push_back(3);
  if (m % 2 == 1 && m % 3 == 0 && m > 3 && threes == 1 && rest_m && fixed == 0)
    parts.push_back(4);
  return parts;
}

}  // namespace oracle
