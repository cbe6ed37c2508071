#include "clq/field.hpp"

#include <algorithm>
#include <numeric>

namespace clq {

bool factor_prime_power(long long q, int& p, int& e) {
  if (q < 2) return false;
  long long d = 2;
  while (d * d <= q) {
    if (q % d == 0) break;
    ++d;
  }
  if (d * d > q) {
    p = (int)q;
    e = 1;
    return true;
  }
  p = (int)d;
  e = 0;
  while (q % d == 0) {
    q /= d;
    ++e;
  }
  return q == 1;
}

namespace {

// multiply by x and reduce mod the candidate polynomial, digit form
void mulx_digits(std::vector<int>& v, const std::vector<int>& poly, int p) {
  int n = (int)v.size();
  int top = v[n - 1];
  for (int i = n - 1; i > 0; --i) v[i] = v[i - 1];
  v[0] = 0;
  if (top) {
    for (int i = 0; i < n; ++i) {
      v[i] -= top * poly[i];
      v[i] %= p;
      if (v[i] < 0) v[i] += p;
    }
  }
}

std::uint32_t encode(const std::vector<int>& v, int p) {
  std::uint32_t r = 0;
  for (int i = (int)v.size() - 1; i >= 0; --i) r = r * p + v[i];
  return r;
}

using Poly = std::vector<int>;  // little-endian coefficients over GF(p)

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& mod, int p) {
  // mod is monic of degree n (length n, the x^n coefficient implicit)
  const int n = (int)mod.size();
  std::vector<int> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (int d = (int)prod.size() - 1; d >= n; --d) {
    int c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (int i = 0; i < n; ++i) prod[d - n + i] = ((prod[d - n + i] - c * mod[i]) % p + p) % p;
  }
  prod.resize(n);
  ptrim(prod);
  return prod;
}

Poly ppowmod(Poly base, long long e, const Poly& mod, int p) {
  Poly r = {1};
  while (e) {
    if (e & 1) r = pmulmod(r, base, mod, p);
    base = pmulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

Poly pgcd(Poly a, Poly b, int p) {
  ptrim(a);
  ptrim(b);
  // modular inverse in GF(p) by exhaustion; p < 256 here
  auto inv = [p](int v) {
    for (int i = 1; i < p; ++i)
      if (i * v % p == 1) return i;
    return 0;
  };
  while (!b.empty()) {
    // a mod b
    int db = (int)b.size() - 1;
    int lead_inv = inv(b[db]);
    while ((int)a.size() - 1 >= db && !a.empty()) {
      int da = (int)a.size() - 1;
      int c = a[da] * lead_inv % p;
      for (int i = 0; i <= db; ++i) a[da - db + i] = ((a[da - db + i] - c * b[i]) % p + p) % p;
      ptrim(a);
    }
    std::swap(a, b);
  }
  return a;
}

std::vector<long long> prime_factors(long long m) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    out.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) out.push_back(m);
  return out;
}

// poly (monic, degree n, low coefficients given) irreducible and with x a
// generator of the multiplicative group of GF(p^n)
bool is_primitive(const Poly& mod, int p, int n, long long N,
                  const std::vector<long long>& n_factors,
                  const std::vector<long long>& order_factors) {
  const Poly x = {0, 1};
  // irreducible: x^{p^n} = x and gcd(x^{p^{n/d}} - x, mod) = 1 for prime d | n
  auto xq = [&](long long k) {  // x^{p^k} mod
    long long e = 1;
    for (long long i = 0; i < k; ++i) e *= p;
    return ppowmod(x, e, mod, p);
  };
  if (xq(n) != x) return false;
  for (long long d : n_factors) {
    Poly diff = xq(n / d);
    // diff - x
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    ptrim(diff);
    Poly g = pgcd(diff, mod, p);
    if ((int)g.size() != 1) return false;
  }
  // primitive: x^{(N-1)/r} != 1 for every prime r | N-1
  for (long long r : order_factors) {
    Poly t = ppowmod(x, (N - 1) / r, mod, p);
    if (t == Poly{1}) return false;
  }
  return true;
}

}  // namespace

FieldTable make_field(long long q) {
  int p = 0, e = 0;
  if (!factor_prime_power(q, p, e)) throw ParameterError("q is not a prime power");

  FieldTable t;
  t.p = p;
  t.e = e;
  t.q = q;
  t.deg = 3 * e;
  t.ext_order = q * q * q;
  const int n = t.deg;
  const long long N = t.ext_order;

  // lexicographically smallest primitive polynomial x^n + c_{n-1}x^{n-1} + ... + c_0,
  // tuples (c_0, ..., c_{n-1}) ordered lexicographically
  std::vector<int> poly(n, 0);
  bool found = false;
  const auto n_factors = prime_factors(n);
  const auto order_factors = prime_factors(N - 1);
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (long long m = 0; m < total && !found; ++m) {
    // decode: c_0 is the most significant digit of m
    long long mm = m;
    for (int i = 0; i < n; ++i) {
      long long div = 1;
      for (int j = i + 1; j < n; ++j) div *= p;
      poly[i] = (int)(mm / div);
      mm %= div;
    }
    if (poly[0] == 0) continue;  // x | poly, never primitive
    if (is_primitive(poly, p, n, N, n_factors, order_factors)) found = true;
  }
  if (!found) throw ParameterError("no primitive polynomial found");  // unreachable

  t.modulus.assign(poly.begin(), poly.end());
  t.modulus.push_back(1);
  t.generator = (std::uint32_t)p;  // the class of x

  t.exp_table.assign(N - 1, 0);
  {
    std::vector<int> v(n, 0);
    v[0] = 1;
    t.exp_table[0] = 1;
    for (long long i = 1; i < N - 1; ++i) {
      mulx_digits(v, poly, p);
      t.exp_table[i] = encode(v, p);
    }
  }
  t.log_table.assign(N, 0);
  for (long long i = 0; i < N - 1; ++i) t.log_table[t.exp_table[i]] = (std::uint32_t)i;

  // traces; a^q and a^{q^2} via log arithmetic
  t.trace_table.assign(N, 0);
  t.trace_zero.assign(N, 0);
  const long long M = N - 1;
  for (long long a = 1; a < N; ++a) {
    long long la = t.log_table[a];
    std::uint32_t f1 = t.exp_table[(la * q) % M];
    std::uint32_t f2 = t.exp_table[(__int128)la * q % M * q % M];
    t.trace_table[a] = t.add(t.add((std::uint32_t)a, f1), f2);
  }
  for (long long a = 0; a < N; ++a) t.trace_zero[a] = (t.trace_table[a] == 0);

  // subfield F: fixed points of a -> a^q
  t.f_index_of_code.assign(N, -1);
  t.f_elements.push_back(0);
  for (long long a = 1; a < N; ++a) {
    if (t.exp_table[(t.log_table[a] * q) % M] == (std::uint32_t)a)
      t.f_elements.push_back((std::uint32_t)a);
  }
  if ((long long)t.f_elements.size() != q) throw std::runtime_error("subfield size mismatch");
  std::sort(t.f_elements.begin(), t.f_elements.end());
  for (int i = 0; i < (int)t.f_elements.size(); ++i) t.f_index_of_code[t.f_elements[i]] = i;

  t.f_add_tab.assign(q * q, 0);
  t.f_mul_tab.assign(q * q, 0);
  t.f_inv_tab.assign(q, 0);
  t.f_neg_tab.assign(q, 0);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      t.f_add_tab[i * q + j] = t.f_index_of_code[t.add(t.f_elements[i], t.f_elements[j])];
      t.f_mul_tab[i * q + j] = t.f_index_of_code[t.mul(t.f_elements[i], t.f_elements[j])];
    }
    t.f_neg_tab[i] = t.f_index_of_code[t.neg(t.f_elements[i])];
    if (i) t.f_inv_tab[i] = t.f_index_of_code[t.inv(t.f_elements[i])];
  }
  t.f_one = t.f_index_of_code[1];

  t.basis = {1u, t.generator, t.exp_table[2]};
  t.dual = dual_basis(t, t.basis);
  return t;
}

std::array<std::uint32_t, 3> dual_basis(const FieldTable& tbl,
                                        const std::array<std::uint32_t, 3>& basis) {
  const int q = (int)tbl.q;
  // Gram matrix G[i][j] = T(b_i b_j) over F; invert it over F.
  int g[3][6];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      std::uint32_t tr = tbl.trace(tbl.mul(basis[i], basis[j]));
      g[i][j] = tbl.f_index_of_code[tr];
      g[i][j + 3] = (i == j) ? tbl.f_one : 0;
    }
  }
  (void)q;
  // Gauss-Jordan
  for (int col = 0; col < 3; ++col) {
    int piv = -1;
    for (int r = col; r < 3; ++r)
      if (g[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw RankError("input is not an F-basis of E");
    if (piv != col)
      for (int c = 0; c < 6; ++c) std::swap(g[piv][c], g[col][c]);
    int s = tbl.finv(g[col][col]);
    for (int c = 0; c < 6; ++c) g[col][c] = tbl.fmul(g[col][c], s);
    for (int r = 0; r < 3; ++r) {
      if (r == col || g[r][col] == 0) continue;
      int f = g[r][col];
      for (int c = 0; c < 6; ++c) g[r][c] = tbl.fsub(g[r][c], tbl.fmul(f, g[col][c]));
    }
  }
  // d_j = sum_k (G^{-1})[j][k] b_k satisfies T(b_i d_j) = delta_ij since G^{-1} G = I
  std::array<std::uint32_t, 3> d{};
  for (int j = 0; j < 3; ++j) {
    std::uint32_t acc = 0;
    for (int k = 0; k < 3; ++k)
      acc = tbl.add(acc, tbl.mul(tbl.f_elements[g[j][k + 3]], basis[k]));
    d[j] = acc;
  }
  // defining property, checked directly
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::uint32_t tr = tbl.trace(tbl.mul(basis[i], d[j]));
      if (tr != (i == j ? 1u : 0u)) throw RankError("dual basis check failed");
    }
  return d;
}

std::pair<std::uint32_t, std::uint32_t> canonical_generators(const FieldTable& tbl) {
  long long q = tbl.q;
  std::uint32_t omega = tbl.exp_table[q * q + q + 1];
  std::uint32_t mu = tbl.exp_table[q - 1];
  return {omega, mu};
}

long long element_order(const FieldTable& tbl, std::uint32_t a) {
  if (!a) throw ParameterError("order of zero");
  long long m = tbl.ext_order - 1;
  long long l = tbl.log_table[a];
  return m / std::gcd(m, l == 0 ? m : l);
}

}  // namespace clq
