#include "ck/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ck/numtheory.hpp"

namespace ck {

namespace {

long long mod_norm(long long v, long long p) {
  v %= p;
  return v < 0 ? v + p : v;
}

// Column vectors over GF(p).
using Basis = std::vector<std::vector<long long>>;

std::vector<long long> mat_vec(const ModMatrix& m, const std::vector<long long>& v, long long p) {
  const size_t n = m.size();
  std::vector<long long> out(n, 0);
  for (size_t i = 0; i < n; ++i) {
    long long acc = 0;
    for (size_t k = 0; k < n; ++k) acc = (acc + m[i][k] * v[k]) % p;
    out[i] = acc;
  }
  return out;
}

// Solves B x = c for each column c of cols, where the columns of B are
// independent and every c lies in their span.
Basis solve_in_span(const Basis& b, const Basis& cols, long long p) {
  const size_t rows = b[0].size();
  const size_t dim = b.size();
  const size_t m = cols.size();
  // Augmented [B | cols], eliminated over GF(p).
  std::vector<std::vector<long long>> aug(rows, std::vector<long long>(dim + m, 0));
  for (size_t j = 0; j < dim; ++j) {
    for (size_t i = 0; i < rows; ++i) aug[i][j] = b[j][i];
  }
  for (size_t j = 0; j < m; ++j) {
    for (size_t i = 0; i < rows; ++i) aug[i][dim + j] = cols[j][i];
  }
  std::vector<int> pivot_row(dim, -1);
  size_t r = 0;
  for (size_t c = 0; c < dim && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && aug[sel][c] == 0) ++sel;
    if (sel == rows) throw std::logic_error("solve_in_span: dependent basis");
    std::swap(aug[sel], aug[r]);
    const long long inv = inv_mod(aug[r][c], p);
    for (size_t j = c; j < dim + m; ++j) aug[r][j] = aug[r][j] * inv % p;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      const long long f = aug[i][c];
      for (size_t j = c; j < dim + m; ++j) aug[i][j] = mod_norm(aug[i][j] - f * aug[r][j], p);
    }
    pivot_row[c] = static_cast<int>(r);
    ++r;
  }
  Basis x(m, std::vector<long long>(dim, 0));
  for (size_t j = 0; j < m; ++j) {
    for (size_t c = 0; c < dim; ++c) x[j][c] = aug[pivot_row[c]][dim + j];
  }
  return x;
}

// Nullspace basis of a square matrix over GF(p).
Basis nullspace(ModMatrix m, long long p) {
  const size_t n = m.size();
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < n && r < n; ++c) {
    size_t sel = r;
    while (sel < n && m[sel][c] == 0) ++sel;
    if (sel == n) continue;
    std::swap(m[sel], m[r]);
    const long long inv = inv_mod(m[r][c], p);
    for (size_t j = c; j < n; ++j) m[r][j] = m[r][j] * inv % p;
    for (size_t i = 0; i < n; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const long long f = m[i][c];
      for (size_t j = c; j < n; ++j) m[i][j] = mod_norm(m[i][j] - f * m[r][j], p);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  Basis out;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<long long> v(n, 0);
    v[free] = 1;
    for (size_t k = 0; k < pivot_col.size(); ++k)
      v[pivot_col[k]] = mod_norm(-m[k][free], p);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

CharacterTable::CharacterTable(const Group& g, const ClassData& cd, long long e, long long p,
                               std::vector<CharacterRow> rows)
    : g_(&g), cd_(&cd), e_(e), p_(p), rows_(std::move(rows)) {}

long long exponent(const Group& g) { return g.exponent(); }

long long dixon_prime(const Group& g) {
  const long long e = g.exponent();
  const long long bound = 2 * [&] {
    const long long r = isqrt(g.order());
    return r * r == g.order() ? r : r + 1;
  }();
  for (long long p = e + 1;; p += e) {
    if (p > bound && is_prime(p)) return p;
  }
}

std::vector<ModMatrix> class_matrices(const ClassData& cd, long long p) {
  const int r = cd.count();
  std::vector<ModMatrix> mats(r, ModMatrix(r, std::vector<long long>(r, 0)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      for (const auto& [k, a] : cd.coefficients(i, j).support) mats[i][j][k] = a % p;
    }
  }
  return mats;
}

std::vector<std::vector<long long>> eigensplit(const std::vector<ModMatrix>& mats, long long p) {
  const size_t r = mats.size();
  std::vector<Basis> spaces;
  {
    Basis full;
    for (size_t i = 0; i < r; ++i) {
      std::vector<long long> e(r, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }

  for (const auto& mat : mats) {
    bool all_split = true;
    for (const auto& s : spaces) {
      if (s.size() > 1) all_split = false;
    }
    if (all_split) break;

    std::vector<Basis> next;
    for (auto& space : spaces) {
      const size_t dim = space.size();
      if (dim == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // Restriction of the matrix to the invariant subspace.
      Basis images;
      for (const auto& col : space) images.push_back(mat_vec(mat, col, p));
      const Basis x_cols = solve_in_span(space, images, p);
      ModMatrix x(dim, std::vector<long long>(dim, 0));
      for (size_t j = 0; j < dim; ++j) {
        for (size_t i = 0; i < dim; ++i) x[i][j] = x_cols[j][i];
      }
      // Eigenvalue trial over GF(p); the class algebra is split semisimple
      // here, so the eigenspaces exhaust the subspace.
      size_t found = 0;
      for (long long lambda = 0; lambda < p && found < dim; ++lambda) {
        ModMatrix shifted = x;
        for (size_t i = 0; i < dim; ++i) shifted[i][i] = mod_norm(shifted[i][i] - lambda, p);
        const Basis kernel = nullspace(std::move(shifted), p);
        if (kernel.empty()) continue;
        found += kernel.size();
        Basis sub;
        for (const auto& kv : kernel) {
          std::vector<long long> v(space[0].size(), 0);
          for (size_t j = 0; j < dim; ++j) {
            for (size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + kv[j] * space[j][i]) % p;
          }
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
      if (found != dim) throw std::logic_error("eigensplit: eigenspaces do not exhaust space");
    }
    spaces = std::move(next);
  }

  std::vector<std::vector<long long>> omegas;
  for (const auto& space : spaces) {
    if (space.size() != 1) throw std::logic_error("eigensplit: split stalled");
    std::vector<long long> v = space[0];
    if (v[0] == 0) throw std::logic_error("eigensplit: identity coordinate vanishes");
    const long long scale = inv_mod(v[0], p);
    for (auto& c : v) c = c * scale % p;
    omegas.push_back(std::move(v));
  }
  if (omegas.size() != r) throw std::logic_error("eigensplit: wrong eigenspace count");
  return omegas;
}

CharacterTable lift_characters(const std::vector<std::vector<long long>>& omegas, const Group& g,
                               const ClassData& cd, long long p, long long e) {
  const int r = cd.count();
  const long long n = g.order();
  const long long z = pow_mod(primitive_root(p), (p - 1) / e, p);  // primitive e-th root

  std::vector<CharacterRow> rows;
  for (const auto& omega : omegas) {
    // Degree from the first orthogonality relation, mod p then lifted.
    long long s = 0;
    for (int i = 0; i < r; ++i) {
      const long long term = omega[i] * omega[cd.inverse_class(i)] % p;
      s = (s + term * inv_mod(cd.size(i), p)) % p;
    }
    const long long d2 = n % p * inv_mod(s, p) % p;
    long long degree = 0;
    for (long long d = 1; 2 * d < p; ++d) {
      if (d * d % p == d2 && n % d == 0) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw std::logic_error("lift_characters: no valid degree");

    std::vector<long long> chi_p(r);
    for (int i = 0; i < r; ++i)
      chi_p[i] = degree % p * omega[i] % p * inv_mod(cd.size(i), p) % p;

    CharacterRow row;
    row.degree = degree;
    row.values.reserve(r);
    for (int i = 0; i < r; ++i) {
      const int m = g.element_order(cd.rep(i));
      const long long t = pow_mod(z, e / m, p);  // primitive m-th root
      const long long t_inv = inv_mod(t, p);
      const long long m_inv = inv_mod(m, p);
      std::vector<long long> mults(m);
      long long total = 0;
      for (int k = 0; k < m; ++k) {
        long long acc = 0;
        for (int j = 0; j < m; ++j) {
          const long long tw = pow_mod(t_inv, static_cast<long long>(j) * k % (p - 1), p);
          acc = (acc + chi_p[cd.power_class(i, j)] * tw) % p;
        }
        const long long mk = acc * m_inv % p;
        if (2 * mk >= p) throw std::logic_error("lift_characters: multiplicity out of range");
        mults[k] = mk;
        total += mk;
      }
      if (total != degree)
        throw std::logic_error("lift_characters: multiplicities do not sum to the degree");
      row.values.push_back(CycValue::from_root_multiplicities(static_cast<int>(e), m, mults));
    }
    if (!row.values[0].is_integer(degree))
      throw std::logic_error("lift_characters: identity value mismatch");
    row.linear = degree == 1;
    for (int i = 0; i < r; ++i) {
      if (row.values[i].is_integer(degree)) row.kernel_classes.push_back(i);
    }
    rows.push_back(std::move(row));
  }

  // Deterministic row order: degree, then the rendered value tuple.
  std::sort(rows.begin(), rows.end(), [](const CharacterRow& a, const CharacterRow& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (size_t i = 0; i < a.values.size(); ++i) {
      const auto ca = a.values[i].to_complex();
      const auto cb = b.values[i].to_complex();
      if (ca.real() != cb.real()) return ca.real() < cb.real();
      if (ca.imag() != cb.imag()) return ca.imag() < cb.imag();
    }
    return false;
  });
  return CharacterTable(g, cd, e, p, std::move(rows));
}

CharacterTable build_character_table(const Group& g, const ClassData& cd) {
  const long long e = exponent(g);
  const long long p = dixon_prime(g);
  const auto mats = class_matrices(cd, p);
  const auto omegas = eigensplit(mats, p);
  return lift_characters(omegas, g, cd, p, e);
}

std::complex<double> render_complex(const CycValue& v, int decimals) {
  std::complex<double> c = v.to_complex();
  if (decimals >= 0) {
    const double scale = std::pow(10.0, decimals);
    c = {std::round(c.real() * scale) / scale, std::round(c.imag() * scale) / scale};
  }
  return c;
}

}  // namespace ck
