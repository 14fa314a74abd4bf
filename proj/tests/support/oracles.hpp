#pragma once

// Reference implementations used only by tests.  None of them calls into the
// library; they work on raw integers so disagreements point at real bugs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

// Free-group words over x_1..x_n as signed indices: +i is x_i, -i its inverse.
using Letters = std::vector<int>;

inline Letters reduce(const Letters& w) {
  Letters out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

inline Letters concat(const Letters& a, const Letters& b) {
  Letters out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce(out);
}

inline Letters inverse(const Letters& w) {
  Letters out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

// Image of w under the automorphism x_j -> images[j-1].
inline Letters substitute_images(const std::vector<Letters>& images, const Letters& w) {
  Letters out;
  for (int l : w) {
    const Letters& img = images[static_cast<std::size_t>(std::abs(l) - 1)];
    out = concat(out, l > 0 ? img : inverse(img));
  }
  return out;
}

// One braid letter (index i, sign) as images of x_1..x_n:
//   s_i:      x_i -> x_{i+1},               x_{i+1} -> x_{i+1} x_i x_{i+1}^-1
//   s_i^-1:   x_i -> x_i^-1 x_{i+1} x_i,    x_{i+1} -> x_i
inline std::vector<Letters> generator_images(int n, int i, int sign) {
  std::vector<Letters> img(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) img[static_cast<std::size_t>(j - 1)] = {j};
  if (sign > 0) {
    img[static_cast<std::size_t>(i - 1)] = {i + 1};
    img[static_cast<std::size_t>(i)] = {i + 1, i, -(i + 1)};
  } else {
    img[static_cast<std::size_t>(i - 1)] = {-i, i + 1, i};
    img[static_cast<std::size_t>(i)] = {i};
  }
  return img;
}

// Right action: the letters of the braid are applied to w one at a time.
inline Letters act(int n, const std::vector<std::pair<int, int>>& braid, const Letters& w) {
  Letters cur = w;
  for (auto [i, s] : braid) cur = oracle::substitute_images(generator_images(n, i, s), cur);
  return cur;
}

// ---------------------------------------------------------------------------
// Integer matrices.

using Matrix = std::vector<std::vector<std::int64_t>>;

// Smith invariants by naive elementary operations: repeatedly bring the
// smallest nonzero entry to the pivot, clear its row and column with
// division steps, and fix divisibility by adding a row.  No transforms kept.
inline std::vector<std::int64_t> smith_diagonal(Matrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t pr = rows;
      std::size_t pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a[r][c] != 0 && (pr == rows || std::llabs(a[r][c]) < std::llabs(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) break;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const std::int64_t q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const std::int64_t q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a[r][c] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[r][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  std::vector<std::int64_t> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = std::llabs(a[i][i]);
  return d;
}

inline std::int64_t determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const std::int64_t term = m[0][c] * determinant(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// d_1 * ... * d_k = gcd of all k x k minors.
inline std::vector<std::int64_t> determinantal_divisors(const Matrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::int64_t> out;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs;
    std::vector<std::vector<std::size_t>> cs;
    std::vector<std::size_t> cur;
    choose(rows, k, 0, cur, rs);
    choose(cols, k, 0, cur, cs);
    std::int64_t g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Matrix sub;
        for (auto i : r) {
          std::vector<std::int64_t> row;
          for (auto j : c) row.push_back(m[i][j]);
          sub.push_back(std::move(row));
        }
        g = std::gcd(g, std::llabs(determinant(sub)));
      }
    out.push_back(g);
  }
  return out;
}

// Invariant factors from determinantal divisors.
inline std::vector<std::int64_t> invariant_factors(const Matrix& m) {
  const auto dd = determinantal_divisors(m);
  std::vector<std::int64_t> out;
  std::int64_t prev = 1;
  for (auto d : dd) {
    if (d == 0 || prev == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, int bound) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-bound, bound);
  const std::size_t r = dim(rng);
  const std::size_t c = dim(rng);
  Matrix m(r, std::vector<std::int64_t>(c));
  for (auto& row : m)
    for (auto& x : row) x = entry(rng);
  return m;
}

// ---------------------------------------------------------------------------
// Groups given by explicit permutations, for element counting.

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {  // apply a, then b
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
  return out;
}

inline std::size_t closure_size(const std::vector<Perm>& gens) {
  std::vector<Perm> elems{Perm(gens[0].size())};
  std::iota(elems[0].begin(), elems[0].end(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Perm p = compose(elems[i], g);
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(std::move(p));
    }
  return elems.size();
}

__extension__ typedef __int128 Wide;

// Exact product a * b * c with 128-bit accumulation; false if that overflows.
inline bool triple_product(const Matrix& a, const Matrix& b, const Matrix& c, std::vector<std::vector<Wide>>& out) {
  const std::size_t n = a.size(), k = b.empty() ? 0 : b[0].size(), m = c.empty() ? 0 : c[0].size();
  std::vector<std::vector<Wide>> ab(n, std::vector<Wide>(k, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < b.size(); ++t) {
        Wide p = 0;
        if (__builtin_mul_overflow(static_cast<Wide>(a[i][t]), static_cast<Wide>(b[t][j]), &p) ||
            __builtin_add_overflow(ab[i][j], p, &ab[i][j]))
          return false;
      }
  out.assign(n, std::vector<Wide>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = 0; t < k; ++t) {
        Wide p = 0;
        if (__builtin_mul_overflow(ab[i][t], static_cast<Wide>(c[t][j]), &p) ||
            __builtin_add_overflow(out[i][j], p, &out[i][j]))
          return false;
      }
  return true;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  __extension__ typedef unsigned __int128 U;
  return static_cast<std::uint64_t>(static_cast<U>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

inline std::uint64_t determinant_mod(const Matrix& m, std::uint64_t p) {
  const std::size_t n = m.size();
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t r = m[i][j] % static_cast<std::int64_t>(p);
      a[i][j] = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    }
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = p - det;
    }
    det = mulmod(det, a[c][c], p);
    const std::uint64_t inv = powmod(a[c][c], p - 2, p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::uint64_t f = mulmod(a[r][c], inv, p);
      for (std::size_t k = c; k < n; ++k) a[r][k] = (a[r][k] + p - mulmod(f, a[c][k], p)) % p;
    }
  }
  return det;
}

// |det m| == 1, decided exactly: det is computed modulo primes whose product
// exceeds twice the Hadamard bound.
inline bool unimodular(const Matrix& m) {
  long double log_bound = 0;
  for (const auto& row : m) {
    long double norm = 0;
    for (std::int64_t v : row) norm += static_cast<long double>(v) * static_cast<long double>(v);
    log_bound += 0.5L * std::log2(norm);
  }
  const std::uint64_t primes[] = {2305843009213693951ull, 4611686018427387847ull, 4611686018427387817ull,
                                  4611686018427387787ull, 4611686018427387733ull, 4611686018427387701ull,
                                  4611686018427387631ull, 4611686018427387617ull};
  long double covered = 0;
  bool plus = true, minus = true;
  for (std::uint64_t p : primes) {
    if (covered > log_bound + 2) break;
    const std::uint64_t d = determinant_mod(m, p);
    plus = plus && d == 1;
    minus = minus && d == p - 1;
    covered += std::log2(static_cast<long double>(p)) - 1;
  }
  return covered > log_bound + 2 && (plus || minus);
}

}  // namespace oracle
