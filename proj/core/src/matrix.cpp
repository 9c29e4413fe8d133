#include "slopes/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace slopes {

RationalMatrix::RationalMatrix(long n) : n_(n) {
  if (n < 0) throw std::invalid_argument("matrix dimension must be >= 0");
  a_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rat(0));
}

RationalMatrix RationalMatrix::identity(long n) {
  RationalMatrix m(n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RationalMatrix::is_integral() const {
  for (const auto& x : a_)
    if (x.get_den() != 1) return false;
  return true;
}

Rat RationalMatrix::trace() const {
  Rat t(0);
  for (long i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

// ---------------------------------------------------------------------------
// Berkowitz. Maintains the reversed characteristic polynomial of the leading
// principal blocks; step r applies the (r+1) x r Toeplitz operator built from
// the new row/column. No divisions anywhere, so exactness is structural.
// ---------------------------------------------------------------------------

std::vector<Rat> reversed_charpoly_berkowitz(const RationalMatrix& m) {
  long n = m.size();
  std::vector<Rat> c{Rat(1)};
  for (long r = 1; r <= n; ++r) {
    // toep[t] multiplies c[i-t]: [1, -m_rr, -S_0, -S_1, ...] with
    // S_t = row_r . A_{r-1}^t . col_r.
    std::vector<Rat> toep;
    toep.reserve(static_cast<std::size_t>(r) + 1);
    toep.push_back(Rat(1));
    toep.push_back(-m.at(r - 1, r - 1));
    if (r >= 2) {
      std::vector<Rat> w(static_cast<std::size_t>(r - 1));
      for (long i = 0; i < r - 1; ++i) w[i] = m.at(i, r - 1);
      for (long t = 0; t <= r - 2; ++t) {
        Rat s(0);
        for (long i = 0; i < r - 1; ++i) s += m.at(r - 1, i) * w[i];
        toep.push_back(-s);
        if (t < r - 2) {
          std::vector<Rat> next(static_cast<std::size_t>(r - 1), Rat(0));
          for (long i = 0; i < r - 1; ++i) {
            for (long j = 0; j < r - 1; ++j) {
              const Rat& mij = m.at(i, j);
              if (mij != 0) next[i] += mij * w[j];
            }
          }
          w = std::move(next);
        }
      }
    }
    std::vector<Rat> out(static_cast<std::size_t>(r) + 1, Rat(0));
    for (long i = 0; i <= r; ++i)
      for (long t = 0; t <= std::min<long>(i, r); ++t) {
        if (i - t >= static_cast<long>(c.size())) continue;
        if (toep[static_cast<std::size_t>(t)] == 0) continue;
        out[static_cast<std::size_t>(i)] +=
            toep[static_cast<std::size_t>(t)] * c[static_cast<std::size_t>(i - t)];
      }
    c = std::move(out);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Modular path: charpoly mod word-size primes via Hessenberg reduction, then
// CRT reconstruction under a Hadamard-style coefficient bound.
// ---------------------------------------------------------------------------

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Shared, append-only pool of 61-bit primes. Returns a copy: the backing
// vector may be grown by another thread after the lock is released.
std::vector<u64> prime_pool(std::size_t need) {
  static std::vector<u64> primes;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  static Int cursor = (Int(1) << 61);
  while (primes.size() < need) {
    Int next;
    mpz_nextprime(next.get_mpz_t(), cursor.get_mpz_t());
    cursor = next;
    primes.push_back(static_cast<u64>(next.get_ui()));
  }
  return std::vector<u64>(primes.begin(), primes.begin() + static_cast<long>(need));
}

// Charpoly of an n x n matrix mod p: similarity-reduce to upper Hessenberg,
// then the standard last-column recurrence. Returns det(lambda I - A) with
// coefficients ascending in lambda.
std::vector<u64> charpoly_mod(std::vector<u64> a, long n, u64 p) {
  auto at = [&](long i, long j) -> u64& { return a[static_cast<std::size_t>(i * n + j)]; };

  for (long j = 0; j + 2 < n; ++j) {
    long piv = -1;
    for (long i = j + 1; i < n; ++i)
      if (at(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (long t = 0; t < n; ++t) std::swap(at(piv, t), at(j + 1, t));
      for (long t = 0; t < n; ++t) std::swap(at(t, piv), at(t, j + 1));
    }
    u64 inv = invmod(at(j + 1, j), p);
    for (long i = j + 2; i < n; ++i) {
      u64 factor = mulmod(at(i, j), inv, p);
      if (factor == 0) continue;
      for (long t = j; t < n; ++t)
        at(i, t) = submod(at(i, t), mulmod(factor, at(j + 1, t), p), p);
      for (long t = 0; t < n; ++t)
        at(t, j + 1) = addmod(at(t, j + 1), mulmod(factor, at(t, i), p), p);
    }
  }

  // p_m = (lambda - h_mm) p_{m-1} - sum_i h_im (prod of subdiagonals) p_{i-1}
  std::vector<std::vector<u64>> polys;
  polys.push_back({1});
  for (long mi = 1; mi <= n; ++mi) {
    const auto& prev = polys.back();
    std::vector<u64> cur(static_cast<std::size_t>(mi) + 1, 0);
    u64 diag = at(mi - 1, mi - 1);
    for (std::size_t t = 0; t < prev.size(); ++t) {
      cur[t + 1] = addmod(cur[t + 1], prev[t], p);
      cur[t] = submod(cur[t], mulmod(diag, prev[t], p), p);
    }
    u64 subprod = 1;
    for (long i = mi - 1; i >= 1; --i) {
      subprod = mulmod(subprod, at(i, i - 1), p);
      if (subprod == 0) break;
      u64 w = mulmod(at(i - 1, mi - 1), subprod, p);
      if (w == 0) continue;
      const auto& pi = polys[static_cast<std::size_t>(i - 1)];
      for (std::size_t t = 0; t < pi.size(); ++t)
        cur[t] = submod(cur[t], mulmod(w, pi[t], p), p);
    }
    polys.push_back(std::move(cur));
  }
  return polys.back();
}

// Balanced CRT merge of (residue, modulus) pairs over [lo, hi).
std::pair<Int, Int> crt_merge(const std::vector<std::vector<u64>>& residues, std::size_t coeff,
                              const std::vector<u64>& primes, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) {
    return {Int(residues[lo][coeff]), Int(primes[lo])};
  }
  std::size_t mid = lo + (hi - lo) / 2;
  auto [x1, m1] = crt_merge(residues, coeff, primes, lo, mid);
  auto [x2, m2] = crt_merge(residues, coeff, primes, mid, hi);
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0)
    throw std::logic_error("CRT moduli not coprime");
  Int t = ((x2 - x1) * inv) % m2;
  if (t < 0) t += m2;
  return {x1 + m1 * t, m1 * m2};
}

}  // namespace

std::vector<Int> reversed_charpoly_modular(const RationalMatrix& m) {
  long n = m.size();
  std::vector<Int> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  std::size_t max_bits = 1;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const Rat& x = m.at(i, j);
      if (x.get_den() != 1)
        throw std::invalid_argument("modular charpoly requires an integral matrix");
      entries.push_back(x.get_num());
      if (x != 0) max_bits = std::max(max_bits, mpz_sizeinbase(x.get_num().get_mpz_t(), 2));
    }
  if (n == 0) return {Int(1)};

  // |e_j| <= C(n,j) j^{j/2} A^j; a crude but safe bit bound, doubled for sign.
  std::size_t nb = static_cast<std::size_t>(n);
  std::size_t bound_bits = nb + nb * (max_bits + 6) + 64;
  std::size_t nprimes = bound_bits / 60 + 1;
  const auto& primes = prime_pool(nprimes);

  std::vector<std::vector<u64>> residues(nprimes);
  std::vector<u64> reduced(static_cast<std::size_t>(n) * n);
  for (std::size_t pi = 0; pi < nprimes; ++pi) {
    u64 p = primes[pi];
    for (std::size_t t = 0; t < reduced.size(); ++t)
      reduced[t] = mpz_fdiv_ui(entries[t].get_mpz_t(), p);
    std::vector<u64> cp = charpoly_mod(reduced, n, p);  // ascending in lambda
    // det(I - XM) coefficient j is the lambda^{n-j} coefficient.
    std::vector<u64> rev(static_cast<std::size_t>(n) + 1);
    for (long j = 0; j <= n; ++j) rev[static_cast<std::size_t>(j)] = cp[static_cast<std::size_t>(n - j)];
    residues[pi] = std::move(rev);
  }

  std::vector<Int> out(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j) {
    auto [x, mod] = crt_merge(residues, static_cast<std::size_t>(j), primes, 0, nprimes);
    if (x * 2 > mod) x -= mod;  // symmetric lift
    out[static_cast<std::size_t>(j)] = x;
  }
  if (out[0] != 1) throw std::logic_error("modular charpoly lost the constant term");
  return out;
}

std::vector<Rat> reversed_charpoly(const RationalMatrix& m) {
  if (m.size() > 12 && m.is_integral()) {
    auto ints = reversed_charpoly_modular(m);
    std::vector<Rat> out;
    out.reserve(ints.size());
    for (auto& x : ints) out.emplace_back(std::move(x));
    return out;
  }
  return reversed_charpoly_berkowitz(m);
}

Rat principal_minor(const RationalMatrix& m, const std::vector<long>& indices) {
  long k = static_cast<long>(indices.size());
  for (long idx : indices)
    if (idx < 0 || idx >= m.size()) throw std::invalid_argument("minor index out of range");
  // Fraction-free expansion is overkill at these sizes; recursive Laplace.
  if (k == 0) return Rat(1);
  std::vector<std::vector<Rat>> sub(static_cast<std::size_t>(k),
                                    std::vector<Rat>(static_cast<std::size_t>(k)));
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j) sub[i][j] = m.at(indices[i], indices[j]);

  // Gaussian elimination over Q with pivoting; exact, O(k^3).
  Rat det(1);
  for (long col = 0; col < k; ++col) {
    long piv = -1;
    for (long r = col; r < k; ++r)
      if (sub[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(sub[piv], sub[col]);
      det = -det;
    }
    det *= sub[col][col];
    Rat inv = Rat(1) / sub[col][col];
    for (long r = col + 1; r < k; ++r) {
      if (sub[r][col] == 0) continue;
      Rat f = sub[r][col] * inv;
      for (long c2 = col; c2 < k; ++c2) sub[r][c2] -= f * sub[col][c2];
    }
  }
  return det;
}

}  // namespace slopes
