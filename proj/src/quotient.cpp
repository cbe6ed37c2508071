#include "clq/quotient.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include <gmpxx.h>

namespace clq {

namespace {

// Reduced row echelon form over arbitrary-precision rationals.  The final
// RREF entries are small, but intermediate fill-in during elimination can
// exceed any fixed-width type (observed already at k ~ 300), so the
// elimination itself must not use Rat.
int rref(std::vector<std::vector<mpq_class>>& m, int rows, int cols,
         std::vector<int>& pivot_col) {
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int r = row; r < rows; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[row]);
    mpq_class s = m[row][col];
    for (auto& v : m[row]) v /= s;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      mpq_class f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  return row;
}

Rat to_rat(const mpq_class& v) {
  if (!v.get_num().fits_slong_p() || !v.get_den().fits_slong_p())
    throw std::overflow_error("reduced coefficient does not fit a machine word");
  return Rat((__int128)v.get_num().get_si(), (__int128)v.get_den().get_si());
}

std::vector<long long> class_row(const Quadric& qd, const OrbitPartition& part,
                                 std::uint32_t rep, int k) {
  std::vector<long long> row(k, 0);
  const Quadric::Pt& r = qd.points[rep];
  for (std::uint32_t t = 0; t < qd.size(); ++t) {
    if (t == rep) continue;
    if (qd.perp(r, qd.points[t])) ++row[part.orbit_id[t]];
  }
  return row;
}

}  // namespace

QuotientMatrix quotient_matrix(const Quadric& qd, const OrbitPartition& part) {
  const long long q = qd.q();
  const int k = (int)part.count();
  QuotientMatrix B;
  B.k = k;
  B.label = part.group_label;
  B.sizes.assign(part.sizes.begin(), part.sizes.end());
  B.b.resize((std::size_t)k * k);

  // a second representative per class, for the equitability cross-check
  std::vector<std::int64_t> second(k, -1);
  for (std::uint32_t i = 0; i < qd.size(); ++i) {
    std::uint32_t c = part.orbit_id[i];
    if (i != part.reps[c] && second[c] < 0) second[c] = i;
  }

  for (int i = 0; i < k; ++i) {
    auto row = class_row(qd, part, part.reps[i], k);
    if (second[i] >= 0) {
      auto row2 = class_row(qd, part, (std::uint32_t)second[i], k);
      if (row != row2) throw PartitionError("partition is not equitable (class " + std::to_string(i) + ")");
    }
    std::copy(row.begin(), row.end(), B.b.begin() + (std::size_t)i * k);
  }

  const long long degree = q * (q + 1) * (q + 1);
  for (int i = 0; i < k; ++i) {
    long long s = 0;
    for (int j = 0; j < k; ++j) s += B.at(i, j);
    if (s != degree) throw PartitionError("row sum mismatch");
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (B.sizes[i] * B.at(i, j) != B.sizes[j] * B.at(j, i))
        throw PartitionError("reciprocity violated");
  return B;
}

std::vector<long long> tight_condition_residual(const QuotientMatrix& B,
                                                const std::vector<int>& sel, long long x,
                                                long long q) {
  if ((int)sel.size() != B.k) throw ParameterError("selection has wrong length");
  std::vector<long long> r(B.k);
  for (int i = 0; i < B.k; ++i) {
    long long s = 0;
    for (int j = 0; j < B.k; ++j) s += B.at(i, j) * sel[j];
    r[i] = s - (q * q - 1) * sel[i] - x * (q + 1);
  }
  return r;
}

std::vector<std::vector<int>> search_tight(const QuotientMatrix& B, long long q, long long x,
                                           const std::set<int>& forced_zero) {
  const int k = B.k;
  std::vector<int> vars;  // class indices that are free to choose
  for (int j = 0; j < k; ++j)
    if (!forced_zero.count(j)) vars.push_back(j);
  const int nv = (int)vars.size();

  // rows of (B - (q^2-1)I) sel = x(q+1) 1 restricted to the non-forced columns
  std::vector<std::vector<mpq_class>> m(k, std::vector<mpq_class>(nv + 1));
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < nv; ++c) {
      long long v = B.at(i, vars[c]);
      if (vars[c] == i) v -= q * q - 1;
      m[i][c] = (long)v;
    }
    m[i][nv] = (long)(x * (q + 1));
  }

  std::vector<int> pivot_col;
  int row = rref(m, k, nv, pivot_col);
  for (int r = row; r < k; ++r)
    if (m[r][nv] != 0) return {};  // inconsistent system

  const int np = (int)pivot_col.size();
  std::vector<char> is_pivot(nv, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<int> free_col;
  for (int c = 0; c < nv; ++c)
    if (!is_pivot[c]) free_col.push_back(c);
  const int nf = (int)free_col.size();

  // pivot value = rhs - sum_f coef[p][f] * x_f; the reduced coefficients are
  // small, so the DFS can run on machine-word fractions
  std::vector<std::vector<Rat>> coef(np, std::vector<Rat>(nf));
  std::vector<Rat> rhs(np);
  for (int p = 0; p < np; ++p) {
    rhs[p] = to_rat(m[p][nv]);
    for (int f = 0; f < nf; ++f) coef[p][f] = to_rat(m[p][free_col[f]]);
  }
  // suffix bounds on the achievable remaining contribution per pivot
  std::vector<std::vector<Rat>> lo(np, std::vector<Rat>(nf + 1)), hi(np, std::vector<Rat>(nf + 1));
  for (int p = 0; p < np; ++p) {
    for (int f = nf - 1; f >= 0; --f) {
      Rat step = -coef[p][f];
      lo[p][f] = lo[p][f + 1] + (step < Rat(0) ? step : Rat(0));
      hi[p][f] = hi[p][f + 1] + (step > Rat(0) ? step : Rat(0));
    }
  }

  std::vector<std::vector<int>> solutions;
  std::vector<int> assign(nf, 0);
  std::vector<Rat> cur(rhs);

  auto emit = [&]() {
    std::vector<int> sel(k, 0);
    for (int p = 0; p < np; ++p) {
      if (cur[p] != Rat(0) && cur[p] != Rat(1)) return;
      sel[vars[pivot_col[p]]] = (int)cur[p].num;
    }
    for (int f = 0; f < nf; ++f) sel[vars[free_col[f]]] = assign[f];
    auto r = tight_condition_residual(B, sel, x, q);
    for (long long v : r)
      if (v) throw std::runtime_error("internal: enumerated vector fails residual");
    solutions.push_back(std::move(sel));
  };

  auto viable = [&](int depth) {
    for (int p = 0; p < np; ++p) {
      Rat ub = cur[p] + hi[p][depth];
      Rat lb = cur[p] + lo[p][depth];
      if (ub < Rat(0) || lb > Rat(1)) return false;
    }
    return true;
  };

  std::function<void(int)> dfs = [&](int depth) {
    if (!viable(depth)) return;
    if (depth == nf) {
      emit();
      return;
    }
    assign[depth] = 0;
    dfs(depth + 1);
    assign[depth] = 1;
    for (int p = 0; p < np; ++p) cur[p] = cur[p] - coef[p][depth];
    dfs(depth + 1);
    for (int p = 0; p < np; ++p) cur[p] = cur[p] + coef[p][depth];
    assign[depth] = 0;
  };
  dfs(0);

  std::sort(solutions.begin(), solutions.end());
  return solutions;
}

std::vector<std::uint32_t> lift_selection(const std::vector<int>& sel,
                                          const OrbitPartition& part) {
  if (sel.size() != part.count()) throw ParameterError("selection has wrong length");
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < part.orbit_id.size(); ++i)
    if (sel[part.orbit_id[i]]) out.push_back(i);
  return out;
}

std::vector<std::vector<Rat>> eigen_kernel(const QuotientMatrix& B, long long lambda) {
  const int k = B.k;
  std::vector<std::vector<mpq_class>> m(k, std::vector<mpq_class>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = (long)(B.at(i, j) - (i == j ? lambda : 0));

  std::vector<int> pivot_col;
  rref(m, k, k, pivot_col);
  std::vector<int> pivot_of_col(k, -1);
  for (int p = 0; p < (int)pivot_col.size(); ++p) pivot_of_col[pivot_col[p]] = p;

  std::vector<std::vector<Rat>> basis;
  for (int col = 0; col < k; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<Rat> v(k, Rat(0));
    v[col] = Rat(1);
    for (int c = 0; c < k; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -to_rat(m[pivot_of_col[c]][col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool quotient_annihilated_by(const QuotientMatrix& B, const std::vector<long long>& lambdas) {
  const int k = B.k;
  // 128-bit accumulators: entries of the partial products reach ~(k q^3)^2
  std::vector<__int128> acc((std::size_t)k * k, 0);
  for (int i = 0; i < k; ++i) acc[(std::size_t)i * k + i] = 1;
  for (long long lam : lambdas) {
    std::vector<__int128> next((std::size_t)k * k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        __int128 s = 0;
        for (int l = 0; l < k; ++l)
          s += acc[(std::size_t)i * k + l] * (B.at(l, j) - (l == j ? lam : 0));
        next[(std::size_t)i * k + j] = s;
      }
    acc.swap(next);
  }
  return std::all_of(acc.begin(), acc.end(), [](__int128 v) { return v == 0; });
}

bool adjacency_annihilated_by(const Quadric& qd, const std::vector<long long>& lambdas) {
  const std::size_t n = qd.size();
  std::vector<std::uint8_t> A(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (qd.perp(qd.points[i], qd.points[j])) A[i * n + j] = A[j * n + i] = 1;

  std::vector<long long> acc(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) acc[i * n + i] = 1;
  for (long long lam : lambdas) {
    std::vector<long long> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const long long* ai = &acc[i * n];
      long long* ni = &next[i * n];
      for (std::size_t l = 0; l < n; ++l) {
        long long v = ai[l];
        if (!v) continue;
        const std::uint8_t* al = &A[l * n];
        for (std::size_t j = 0; j < n; ++j)
          if (al[j]) ni[j] += v;
        ni[l] -= v * lam;
      }
    }
    acc.swap(next);
  }
  return std::all_of(acc.begin(), acc.end(), [](long long v) { return v == 0; });
}

bool lifted_eigenvector_check(const Quadric& qd, const OrbitPartition& part,
                              const std::vector<Rat>& vec, long long lambda) {
  // scale to an integer vector
  __int128 l = 1;
  for (const Rat& r : vec) l = l / Rat::gcd128(l, r.den) * r.den;
  std::vector<long long> w(vec.size());
  for (std::size_t i = 0; i < vec.size(); ++i) w[i] = (long long)(vec[i].num * (l / vec[i].den));

  bool nonzero = std::any_of(w.begin(), w.end(), [](long long v) { return v != 0; });
  if (!nonzero) return false;
  for (std::uint32_t i = 0; i < qd.size(); ++i) {
    long long s = 0;
    for (std::uint32_t j = 0; j < qd.size(); ++j)
      if (qd.collinear(i, j)) s += w[part.orbit_id[j]];
    if (s != lambda * w[part.orbit_id[i]]) return false;
  }
  return true;
}

bool spectrum_containment_check(const QuotientMatrix& B, const Quadric& qd,
                                const OrbitPartition& part) {
  const long long q = qd.q();
  const std::vector<long long> cands = {q * (q + 1) * (q + 1), q * q - 1, -(q + 1)};
  // spec(B) is contained in the candidate set
  if (!quotient_annihilated_by(B, cands)) return false;
  // each actually occurring eigenvalue of B lifts to an exact eigenvector of A
  for (long long lam : cands) {
    auto ker = eigen_kernel(B, lam);
    for (const auto& v : ker)
      if (!lifted_eigenvector_check(qd, part, v, lam)) return false;
  }
  return true;
}

}  // namespace clq
