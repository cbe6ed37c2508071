#ifndef CLQ_FIELD_HPP
#define CLQ_FIELD_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace clq {

class ParameterError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class RankError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes p, e with q = p^e; returns false if q is not a prime power.
bool factor_prime_power(long long q, int& p, int& e);

// Arithmetic tables for E = GF(q^3) built over the prime field GF(p),
// with F = GF(q) recovered as the fixed field of a -> a^q.
//
// Elements are encoded as integers in [0, q^3): the base-p digits of the
// code are the little-endian coefficients over the prime field.
struct FieldTable {
  int p = 0;
  int e = 0;
  long long q = 0;
  long long ext_order = 0;   // q^3
  int deg = 0;               // 3e
  std::vector<int> modulus;  // monic primitive polynomial, little-endian, length deg+1

  std::uint32_t generator = 0;             // Omega, the residue of x
  std::vector<std::uint32_t> exp_table;    // size ext_order-1, exp_table[i] = Omega^i
  std::vector<std::uint32_t> log_table;    // size ext_order, log of 0 undefined (=0)

  std::vector<std::uint32_t> trace_table;  // T(a) = a + a^q + a^{q^2}
  std::vector<char> trace_zero;

  // subfield F = { a : a^q = a }, codes sorted ascending
  std::vector<std::uint32_t> f_elements;
  std::vector<std::int32_t> f_index_of_code;  // -1 if not in F
  // small-index arithmetic over F (indices into f_elements)
  std::vector<int> f_add_tab, f_mul_tab;  // q*q
  std::vector<int> f_inv_tab, f_neg_tab;  // q
  int f_one = 0;                          // index of 1

  // fixed basis {1, Omega, Omega^2} of E over F and its trace-dual
  std::array<std::uint32_t, 3> basis{};
  std::array<std::uint32_t, 3> dual{};

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, pw = 1;
    while (a || b) {
      r += pw * ((a % p + b % p) % p);
      a /= p;
      b /= p;
      pw *= p;
    }
    return r;
  }

  std::uint32_t neg(std::uint32_t a) const {
    std::uint32_t r = 0, pw = 1;
    while (a) {
      std::uint32_t d = a % p;
      if (d) r += pw * (p - d);
      a /= p;
      pw *= p;
    }
    return r;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!a || !b) return 0;
    long long s = (long long)log_table[a] + log_table[b];
    long long m = ext_order - 1;
    return exp_table[s >= m ? s - m : s];
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (!a) throw ParameterError("inverse of zero");
    long long m = ext_order - 1;
    return exp_table[(m - log_table[a]) % m];
  }

  std::uint32_t pow(std::uint32_t a, long long k) const {
    long long m = ext_order - 1;
    if (!a) {
      if (k <= 0) throw ParameterError("0^k with k <= 0");
      return 0;
    }
    long long s = ((__int128)log_table[a] * k) % m;
    if (s < 0) s += m;
    return exp_table[s];
  }

  std::uint32_t frobenius(std::uint32_t a) const { return pow(a, q); }

  std::uint32_t trace(std::uint32_t a) const { return trace_table[a]; }

  bool in_subfield(std::uint32_t a) const { return f_index_of_code[a] >= 0; }

  // F-coordinates of a in the basis {1, Omega, Omega^2}, as indices into f_elements
  std::array<int, 3> f_coords(std::uint32_t a) const {
    std::array<int, 3> c;
    for (int i = 0; i < 3; ++i) c[i] = f_index_of_code[trace_table[mul(a, dual[i])]];
    return c;
  }

  std::uint32_t from_f_coords(const std::array<int, 3>& c) const {
    std::uint32_t r = 0;
    for (int i = 0; i < 3; ++i) r = add(r, mul(f_elements[c[i]], basis[i]));
    return r;
  }

  // subfield arithmetic on indices
  int fadd(int i, int j) const { return f_add_tab[i * q + j]; }
  int fsub(int i, int j) const { return f_add_tab[i * q + f_neg_tab[j]]; }
  int fmul(int i, int j) const { return f_mul_tab[i * q + j]; }
  int fneg(int i) const { return f_neg_tab[i]; }
  int finv(int i) const {
    if (i == 0) throw ParameterError("inverse of zero");
    return f_inv_tab[i];
  }

  // element code -> little-endian prime-field coefficient vector (length deg)
  std::vector<int> coeffs(std::uint32_t a) const {
    std::vector<int> c(deg);
    for (int i = 0; i < deg; ++i) {
      c[i] = a % p;
      a /= p;
    }
    return c;
  }

  std::uint32_t from_coeffs(const std::vector<int>& c) const {
    if ((int)c.size() != deg) throw ParameterError("coefficient vector has wrong length");
    std::uint32_t r = 0;
    for (int i = deg - 1; i >= 0; --i) {
      if (c[i] < 0 || c[i] >= p) throw ParameterError("coefficient out of range");
      r = r * p + c[i];
    }
    return r;
  }
};

FieldTable make_field(long long q);

// Trace-dual of an F-basis of E.  Throws RankError if the input is dependent.
std::array<std::uint32_t, 3> dual_basis(const FieldTable& tbl,
                                        const std::array<std::uint32_t, 3>& basis);

// (omega, mu): omega = Omega^{q^2+q+1} generates F*, mu = Omega^{q-1} has order q^2+q+1.
std::pair<std::uint32_t, std::uint32_t> canonical_generators(const FieldTable& tbl);

// multiplicative order of a in E*
long long element_order(const FieldTable& tbl, std::uint32_t a);

}  // namespace clq

#endif
