#include "liespec/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace liespec::lattice {

__extension__ typedef __int128 i128;

bool IntegerLattice::contains(const RatVec& v) const {
  if (v.size() != ambient_dim) return false;
  try {
    for (const auto& q : solve_row_combination(basis, v))
      if (!is_integer(q)) return false;
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

std::vector<Z> IntegerLattice::coords(const RatVec& v) const {
  std::vector<Z> out;
  for (const auto& q : solve_row_combination(basis, v)) {
    if (!is_integer(q)) throw DomainError("vector " + to_string(v) + " is not a lattice vector");
    out.push_back(q.get_num());
  }
  return out;
}

RatVec IntegerLattice::vector(const std::vector<std::int64_t>& x) const {
  RatVec v = zeros(ambient_dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Q c(static_cast<long>(x[i]));
    for (std::size_t k = 0; k < ambient_dim; ++k) v[k] += c * basis[i][k];
  }
  return v;
}

IntMat hermite_normal_form(IntMat m) {
  if (m.empty()) return m;
  std::size_t cols = m[0].size(), row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t r = row; r < m.size(); ++r)
        if (m[r][c] != 0 && (best == m.size() || abs(m[r][c]) < abs(m[best][c]))) best = r;
      if (best == m.size()) break;
      std::swap(m[row], m[best]);
      bool clear = true;
      for (std::size_t r = row + 1; r < m.size(); ++r) {
        if (m[r][c] == 0) continue;
        Z f;
        mpz_fdiv_q(f.get_mpz_t(), m[r][c].get_mpz_t(), m[row][c].get_mpz_t());
        for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
        if (m[r][c] != 0) clear = false;
      }
      if (clear) break;
    }
    if (m[row][c] == 0) continue;
    if (m[row][c] < 0)
      for (auto& x : m[row]) x = -x;
    for (std::size_t r = 0; r < row; ++r) {
      Z f;
      mpz_fdiv_q(f.get_mpz_t(), m[r][c].get_mpz_t(), m[row][c].get_mpz_t());
      if (f != 0)
        for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    ++row;
  }
  m.resize(row);
  return m;
}

IntegerLattice lattice_from_generators(const RatMat& gens, std::size_t ambient_dim) {
  if (gens.empty()) throw DomainError("lattice needs at least one generator");
  std::size_t n = gens[0].size();
  if (ambient_dim != 0 && n != ambient_dim) throw DomainError("generator dimension mismatch");
  Z den = 1;
  for (const auto& g : gens) {
    if (g.size() != n) throw DomainError("generators of different dimensions");
    Z l = lcm_of_denominators(g);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), l.get_mpz_t());
  }
  IntMat m;
  for (const auto& g : gens) {
    std::vector<Z> row;
    for (const auto& x : g) row.push_back(Z(x * den));
    m.push_back(row);
  }
  m = hermite_normal_form(m);
  IntegerLattice lat;
  lat.ambient_dim = n;
  for (const auto& row : m) {
    RatVec v;
    for (const auto& z : row) {
      Q q(z, den);
      q.canonicalize();
      v.push_back(q);
    }
    lat.basis.push_back(v);
  }
  if (lat.basis.empty()) throw DomainError("generators span the zero lattice");
  return lat;
}

bool is_sublattice(const IntegerLattice& sub, const IntegerLattice& super) {
  for (const auto& b : sub.basis)
    if (!super.contains(b)) return false;
  return true;
}

Z index_in(const IntegerLattice& sub, const IntegerLattice& super) {
  if (sub.rank() != super.rank()) throw DomainError("index of lattices of different rank");
  if (!is_sublattice(sub, super)) throw DomainError("index of a non-sublattice");
  Q ratio = determinant(gram(sub.basis)) / determinant(gram(super.basis));
  if (!is_integer(ratio) || !mpz_perfect_square_p(ratio.get_num_mpz_t()))
    throw std::logic_error("lattice index is not an integer");
  Z r;
  mpz_sqrt(r.get_mpz_t(), ratio.get_num_mpz_t());
  return r;
}

namespace {

// Elementary operations recorded on both sides.
void swap_rows(IntMat& a, IntMat& l, std::size_t i, std::size_t j) {
  std::swap(a[i], a[j]);
  std::swap(l[i], l[j]);
}
void swap_cols(IntMat& a, IntMat& r, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
  for (auto& row : r) std::swap(row[i], row[j]);
}
void add_row(IntMat& a, IntMat& l, std::size_t dst, std::size_t src, const Z& f) {
  for (std::size_t k = 0; k < a[dst].size(); ++k) a[dst][k] += f * a[src][k];
  for (std::size_t k = 0; k < l[dst].size(); ++k) l[dst][k] += f * l[src][k];
}
void add_col(IntMat& a, IntMat& r, std::size_t dst, std::size_t src, const Z& f) {
  for (auto& row : a) row[dst] += f * row[src];
  for (auto& row : r) row[dst] += f * row[src];
}

IntMat identity(std::size_t n) {
  IntMat m(n, std::vector<Z>(n, Z(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SmithForm smith_normal_form(const IntMat& m) {
  SmithForm f;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  f.S = m;
  f.left = identity(rows);
  f.right = identity(cols);
  IntMat& a = f.S;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block goes to the pivot
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
    if (bi == rows) break;
    swap_rows(a, f.left, t, bi);
    swap_cols(a, f.right, t, bj);
    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        add_row(a, f.left, i, t, -q);
        if (a[i][t] != 0) {
          swap_rows(a, f.left, t, i);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        add_col(a, f.right, j, t, -q);
        if (a[t][j] != 0) {
          swap_cols(a, f.right, t, j);
          changed = true;
        }
      }
      if (changed) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            add_row(a, f.left, t, i, Z(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : f.left[t]) x = -x;
    }
  }
  return f;
}

IntegerLattice coroot_lattice(const rootsys::WeightedRootSystem& rs) {
  RatMat gens;
  for (const auto& r : rs.roots) gens.push_back(r.coroot);
  return lattice_from_generators(gens);
}

IntegerLattice root_lattice(const rootsys::WeightedRootSystem& rs) {
  RatMat gens;
  for (const auto& r : rs.roots) gens.push_back(r.functional);
  return lattice_from_generators(gens);
}

IntegerLattice central_lattice(const rootsys::WeightedRootSystem& rs) {
  // dual of the root lattice inside V
  auto roots = root_lattice(rs);
  RatMat ginv = inverse(gram(roots.basis));
  RatMat dual;
  for (std::size_t i = 0; i < ginv.size(); ++i) {
    RatVec v = zeros(static_cast<std::size_t>(rs.ambient_dim));
    for (std::size_t j = 0; j < ginv.size(); ++j) v = add(v, scale(ginv[i][j], roots.basis[j]));
    dual.push_back(v);
  }
  return lattice_from_generators(dual);
}

IntegerLattice integral_lattice(const rootsys::WeightedRootSystem& rs, const RatMat& gamma) {
  auto central = central_lattice(rs);
  RatMat gens = coroot_lattice(rs).basis;
  for (const auto& g : gamma) {
    if (!rs.in_subspace(g) || !central.contains(g))
      throw DomainError("generator " + to_string(g) + " is not a center class of " + rs.name());
    gens.push_back(g);
  }
  return lattice_from_generators(gens);
}

IntegerLattice product_integral_lattice(const std::vector<const rootsys::WeightedRootSystem*>& factors,
                                        std::size_t torus_dim,
                                        const std::vector<std::vector<RatVec>>& gamma_tuples) {
  std::vector<std::size_t> offset;
  std::size_t total = torus_dim;
  for (const auto* f : factors) {
    offset.push_back(total);
    total += static_cast<std::size_t>(f->ambient_dim);
  }
  if (total == 0) throw DomainError("empty product space");
  RatMat gens;
  for (std::size_t i = 0; i < torus_dim; ++i) gens.push_back(unit(total, i));
  for (std::size_t k = 0; k < factors.size(); ++k)
    for (const auto& c : coroot_lattice(*factors[k]).basis) {
      RatVec v = zeros(total);
      std::copy(c.begin(), c.end(), v.begin() + static_cast<long>(offset[k]));
      gens.push_back(v);
    }
  std::size_t blocks = factors.size() + (torus_dim > 0 ? 1 : 0);
  for (const auto& tuple : gamma_tuples) {
    if (tuple.size() != blocks)
      throw DomainError("gamma tuple has " + std::to_string(tuple.size()) + " components, expected " +
                        std::to_string(blocks));
    RatVec v = zeros(total);
    std::size_t b = 0;
    if (torus_dim > 0) {
      if (tuple[0].size() != torus_dim) throw DomainError("torus component has wrong dimension");
      if (!is_zero(tuple[0])) throw DomainError("gamma must meet the torus trivially: torus component must be 0");
      b = 1;
    }
    for (std::size_t k = 0; k < factors.size(); ++k, ++b) {
      const auto& c = tuple[b];
      if (c.size() != static_cast<std::size_t>(factors[k]->ambient_dim) || !factors[k]->in_subspace(c) ||
          !central_lattice(*factors[k]).contains(c))
        throw DomainError("component " + to_string(c) + " is not a center class of " + factors[k]->name());
      std::copy(c.begin(), c.end(), v.begin() + static_cast<long>(offset[k]));
    }
    gens.push_back(v);
  }
  return lattice_from_generators(gens);
}

QuadraticForm::QuadraticForm(RatMat g) : gram(std::move(g)) {
  std::size_t n = gram.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw DomainError("gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram[i][j] != gram[j][i]) throw DomainError("gram matrix is not symmetric");
  }
  for (std::size_t k = 1; k <= n; ++k) {
    RatMat minor(k, RatVec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = gram[i][j];
    Q d = determinant(minor);
    if (d <= 0)
      throw DomainError("form is not positive definite: leading minor " + std::to_string(k) + " = " +
                        d.get_str());
  }
}

Q QuadraticForm::operator()(const std::vector<std::int64_t>& x) const {
  Q s = 0;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (x[i] == 0) continue;
    Q row = 0;
    for (std::size_t j = 0; j < gram.size(); ++j)
      if (x[j] != 0) row += gram[i][j] * static_cast<long>(x[j]);
    s += row * static_cast<long>(x[i]);
  }
  return s;
}

QuadraticForm restrict_form(const IntegerLattice& lat, const RatMat& metric) {
  RatMat g(lat.rank(), RatVec(lat.rank()));
  for (std::size_t i = 0; i < lat.rank(); ++i) {
    RatVec mi = zeros(lat.ambient_dim);
    for (std::size_t a = 0; a < lat.ambient_dim; ++a)
      for (std::size_t b = 0; b < lat.ambient_dim; ++b)
        if (metric[a][b] != 0) mi[a] += metric[a][b] * lat.basis[i][b];
    for (std::size_t j = 0; j < lat.rank(); ++j) g[i][j] = dot(mi, lat.basis[j]);
  }
  return QuadraticForm(g);
}

namespace {

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 isqrt(i128 v) {
  if (v <= 0) return 0;
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

const Z kLimit = Z(1) << 62;

std::int64_t guarded(const Z& z, const char* what) {
  if (abs(z) >= kLimit) throw NumericGuard(std::string("enumeration ") + what + " exceeds 62 bits");
  return z.get_si();
}

}  // namespace

Enumerator::Enumerator(const QuadraticForm& q, const Q& bound, bool dedup) : r_(q.dim()), dedup_(dedup) {
  if (bound < 0) throw DomainError("negative enumeration bound");
  if (r_ == 0 || bound == 0) {
    empty_ = true;
    return;
  }
  // q(x) = sum_i D_i (x_i + sum_{j>i} L_ji x_j)^2
  RatMat L(r_, RatVec(r_, Q(0)));
  RatVec D(r_);
  for (std::size_t i = 0; i < r_; ++i) {
    Q d = q.gram[i][i];
    for (std::size_t k = 0; k < i; ++k) d -= L[i][k] * L[i][k] * D[k];
    D[i] = d;
    for (std::size_t j = i + 1; j < r_; ++j) {
      Q s = q.gram[j][i];
      for (std::size_t k = 0; k < i; ++k) s -= L[j][k] * L[i][k] * D[k];
      L[j][i] = s / d;
    }
  }
  // integer rows y_i = den_i x_i + sum_j n_ij x_j, weights a_i / M
  den_.resize(r_);
  a_.resize(r_);
  n_.assign(r_, std::vector<std::int64_t>(r_, 0));
  RatVec w(r_);
  for (std::size_t i = 0; i < r_; ++i) {
    RatVec col;
    for (std::size_t j = i + 1; j < r_; ++j) col.push_back(L[j][i]);
    Z di = lcm_of_denominators(col);
    den_[i] = guarded(di, "denominator");
    for (std::size_t j = i + 1; j < r_; ++j) n_[i][j] = guarded(Z(L[j][i] * di), "coefficient");
    w[i] = D[i] / (di * di);
    mpz_lcm(M_.get_mpz_t(), M_.get_mpz_t(), w[i].get_den_mpz_t());
  }
  for (std::size_t i = 0; i < r_; ++i) a_[i] = guarded(Z(w[i] * M_), "weight");
  budget_ = guarded(floor_q(bound * M_), "budget");
  RatMat inv = inverse(q.gram);
  for (std::size_t i = 0; i < r_; ++i)
    if (floor_q(bound * inv[i][i]) >= Z(1) << 60) throw NumericGuard("enumeration box exceeds 30 bits");
}

void Enumerator::run(const std::function<void(const std::vector<std::int64_t>&, std::int64_t)>& visit) const {
  if (empty_) return;
  std::vector<std::int64_t> x(r_, 0);
  std::function<void(std::size_t, i128, bool)> walk = [&](std::size_t level, i128 rem, bool higher_zero) {
    i128 s = 0;
    for (std::size_t j = level + 1; j < r_; ++j) s += static_cast<i128>(n_[level][j]) * x[j];
    i128 t = isqrt(rem / a_[level]);
    i128 lo = -floor_div(t + s, den_[level]);
    i128 hi = floor_div(t - s, den_[level]);
    if (dedup_ && higher_zero && lo < 0) lo = 0;
    for (i128 xi = lo; xi <= hi; ++xi) {
      i128 yi = static_cast<i128>(den_[level]) * xi + s;
      i128 left = rem - static_cast<i128>(a_[level]) * yi * yi;
      if (left < 0) continue;
      x[level] = static_cast<std::int64_t>(xi);
      bool zero_here = higher_zero && xi == 0;
      if (level == 0) {
        if (!zero_here) visit(x, budget_ - static_cast<std::int64_t>(left));
      } else {
        walk(level - 1, left, zero_here);
      }
    }
    x[level] = 0;
  };
  walk(r_ - 1, budget_, true);
}

std::vector<EnumeratedVector> enumerate_coords(const QuadraticForm& q, const Q& bound, bool dedup) {
  Enumerator e(q, bound, dedup);
  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> raw;
  e.run([&](const std::vector<std::int64_t>& x, std::int64_t v) { raw.emplace_back(v, x); });
  std::sort(raw.begin(), raw.end());
  std::vector<EnumeratedVector> out;
  out.reserve(raw.size());
  for (auto& [v, x] : raw) {
    Q value(Z(static_cast<long>(v)), e.scale());
    value.canonicalize();
    out.push_back({std::move(x), value});
  }
  return out;
}

std::vector<RatVec> enumerate_up_to(const IntegerLattice& lat, const QuadraticForm& q, const Q& bound,
                                    bool dedup) {
  if (q.dim() != lat.rank()) throw DomainError("form dimension does not match lattice rank");
  std::vector<RatVec> out;
  for (const auto& e : enumerate_coords(q, bound, dedup)) out.push_back(lat.vector(e.coords));
  return out;
}

}  // namespace liespec::lattice
