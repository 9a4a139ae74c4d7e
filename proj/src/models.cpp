#include "models.hpp"

#include <sstream>

#include "json.hpp"

namespace prb::models {

// ---------------------------------------------------------------------------
// Poly2
// ---------------------------------------------------------------------------

Poly2 Poly2::mono(int i, int j, Rational k) {
  Poly2 p;
  if (k != 0) p.c[{i, j}] = std::move(k);
  return p;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [m, k] : o.c) {
    auto& v = r.c[m];
    v += k;
    if (v == 0) r.c.erase(m);
  }
  return r;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator-() const {
  Poly2 r;
  for (const auto& [m, k] : c) r.c[m] = -k;
  return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r;
  for (const auto& [m1, k1] : c)
    for (const auto& [m2, k2] : o.c) {
      auto m = std::make_pair(m1.first + m2.first, m1.second + m2.second);
      auto& v = r.c[m];
      v += k1 * k2;
      if (v == 0) r.c.erase(m);
    }
  return r;
}

Poly2 Poly2::scaled(const Rational& s) const {
  Poly2 r;
  if (s == 0) return r;
  for (const auto& [m, k] : c) r.c[m] = k * s;
  return r;
}

Poly2 Poly2::dx() const {
  Poly2 r;
  for (const auto& [m, k] : c)
    if (m.first > 0) r.c[{m.first - 1, m.second}] = k * m.first;
  return r;
}

Poly2 Poly2::dy() const {
  Poly2 r;
  for (const auto& [m, k] : c)
    if (m.second > 0) r.c[{m.first, m.second - 1}] = k * m.second;
  return r;
}

std::string Poly2::text() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, k] : c) {
    if (!first) os << " + ";
    os << rational_to_string(k) << "*x^" << m.first << "*y^" << m.second;
    first = false;
  }
  return os.str();
}

Poly2 poisson_closed(const Poly2& f, const Poly2& g) {
  return (f.dx() * g.dy() - f.dy() * g.dx()) * Poly2::var_y();
}

namespace {

// The bracket is a derivation in each slot; with [x, y] = y:
//   [x, x^i y^j] = j x^i y^j
//   [y, x^i y^j] = -i x^(i-1) y^(j+1)
Poly2 pl_x_mono(int i, int j) {
  return j == 0 ? Poly2::zero() : Poly2::mono(i, j, Rational(j));
}

Poly2 pl_y_mono(int i, int j) {
  return i == 0 ? Poly2::zero() : Poly2::mono(i - 1, j + 1, Rational(-i));
}

// bracket of monomials peeling one variable of the first argument at a
// time via [f g, h] = f [g, h] + [f, h] g; shares no code with the closed
// partial-derivative form
Poly2 pl_mono(int i1, int j1, int i2, int j2) {
  if (i1 + j1 == 0 || i2 + j2 == 0) return Poly2::zero();  // constants central
  if (i1 > 0)
    return Poly2::var_x() * pl_mono(i1 - 1, j1, i2, j2) +
           pl_x_mono(i2, j2) * Poly2::mono(i1 - 1, j1);
  if (j1 > 1)
    return Poly2::var_y() * pl_mono(0, j1 - 1, i2, j2) +
           pl_y_mono(i2, j2) * Poly2::mono(0, j1 - 1);
  return pl_y_mono(i2, j2);  // first argument is exactly y
}

}  // namespace

Poly1 Poly1::mono(int i, Rational k) {
  Poly1 p;
  if (k != 0) p.c[i] = std::move(k);
  return p;
}

Poly1 Poly1::operator+(const Poly1& o) const {
  Poly1 r = *this;
  for (const auto& [m, k] : o.c) {
    auto& v = r.c[m];
    v += k;
    if (v == 0) r.c.erase(m);
  }
  return r;
}

Poly1 Poly1::operator-(const Poly1& o) const {
  return *this + o.scaled(Rational(-1));
}

Poly1 Poly1::operator*(const Poly1& o) const {
  Poly1 r;
  for (const auto& [m1, k1] : c)
    for (const auto& [m2, k2] : o.c) {
      auto& v = r.c[m1 + m2];
      v += k1 * k2;
      if (v == 0) r.c.erase(m1 + m2);
    }
  return r;
}

Poly1 Poly1::scaled(const Rational& s) const {
  Poly1 r;
  if (s == 0) return r;
  for (const auto& [m, k] : c) r.c[m] = k * s;
  return r;
}

std::string Poly1::text() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, k] : c) {
    if (!first) os << " + ";
    os << rational_to_string(k) << "*t^" << m;
    first = false;
  }
  return os.str();
}

Poly1 integrate(const Poly1& f) {
  Poly1 r;
  for (const auto& [m, k] : f.c) r.c[m + 1] = k / Rational(m + 1);
  return r;
}

Poly2 poisson_leibniz(const Poly2& f, const Poly2& g) {
  Poly2 r;
  for (const auto& [m1, k1] : f.c)
    for (const auto& [m2, k2] : g.c)
      r = r +
          pl_mono(m1.first, m1.second, m2.first, m2.second).scaled(k1 * k2);
  return r;
}

Poly2 split_op(const Poly2& f) {
  Poly2 r;
  for (const auto& [m, k] : f.c)
    if (m.second > 0) r.c[m] = -k;
  return r;
}

std::string Poly2RBModel::verify(int maxdeg) {
  std::vector<Poly2> monos;
  for (int i = 0; i <= maxdeg; ++i)
    for (int j = 0; i + j <= maxdeg; ++j) monos.push_back(Poly2::mono(i, j));
  // bracket generators
  if (!(poisson_closed(Poly2::var_x(), Poly2::var_y()) == Poly2::var_y()))
    return "[x,y] != y";
  for (const auto& f : monos)
    for (const auto& g : monos) {
      if (!(poisson_closed(f, g) + poisson_closed(g, f) == Poly2::zero()))
        return "bracket anticommutativity";
      if (!(poisson_closed(f, g) == poisson_leibniz(f, g)))
        return "closed-form and Leibniz-recursive brackets disagree";
      // operator law, both products
      Poly2 pf = op(f), pg = op(g);
      Poly2 lhs = pf * pg;
      Poly2 rhs = op(pf * g + f * pg + (f * g).scaled(law.weight));
      if (!(lhs == rhs)) return "operator law on the product";
      Poly2 lhsb = poisson_closed(pf, pg);
      Poly2 rhsb = op(poisson_closed(pf, g) + poisson_closed(f, pg) +
                      poisson_closed(f, g).scaled(law.weight));
      if (!(lhsb == rhsb)) return "operator law on the bracket";
    }
  for (const auto& f : monos)
    for (const auto& g : monos)
      for (const auto& h : monos) {
        Poly2 leib = poisson_closed(f, g * h) -
                     (poisson_closed(f, g) * h + g * poisson_closed(f, h));
        if (!leib.is_zero()) return "Leibniz identity";
        Poly2 jac = poisson_closed(poisson_closed(f, g), h) +
                    poisson_closed(poisson_closed(g, h), f) +
                    poisson_closed(poisson_closed(h, f), g);
        if (!jac.is_zero()) return "Jacobi identity";
      }
  verified = true;
  return "";
}

std::string Poly1IntModel::verify(int maxdeg) {
  std::vector<Poly1> monos;
  for (int i = 0; i <= maxdeg; ++i) monos.push_back(Poly1::mono(i));
  for (const auto& f : monos)
    for (const auto& g : monos) {
      Poly1 lhs = integrate(f) * integrate(g);
      Poly1 rhs = integrate(integrate(f) * g + f * integrate(g));
      if (!(lhs == rhs)) return "integration operator law";
    }
  verified = true;
  return "";
}

std::string Poly2NijModel::verify(int maxdeg) {
  std::vector<Poly2> monos;
  for (int i = 0; i <= maxdeg; ++i)
    for (int j = 0; i + j <= maxdeg; ++j) monos.push_back(Poly2::mono(i, j));
  for (const auto& f : monos)
    for (const auto& g : monos) {
      Poly2 nf = op(f), ng = op(g);
      Poly2 lhs = nf * ng;
      Poly2 rhs = op(nf * g + f * ng - op(f * g));
      if (!(lhs == rhs)) return "Nijenhuis law on the product";
      Poly2 lhsb = poisson_closed(nf, ng);
      Poly2 rhsb = op(poisson_closed(nf, g) + poisson_closed(f, ng) -
                      op(poisson_closed(f, g)));
      if (!(lhsb == rhsb)) return "Nijenhuis law on the bracket";
    }
  verified = true;
  return "";
}

// ---------------------------------------------------------------------------
// StructAlgebra
// ---------------------------------------------------------------------------

Vec StructAlgebra::basis(std::size_t i) const {
  Vec v = zero();
  v[i] = 1;
  return v;
}

Vec StructAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec r = zero();
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      const Vec& pij = prod[i][j];
      Rational s = a[i] * b[j];
      for (std::size_t k = 0; k < dim; ++k) r[k] += s * pij[k];
    }
  }
  return r;
}

Vec StructAlgebra::bracket(const Vec& a, const Vec& b) const {
  if (!brk) return zero();
  Vec r = zero();
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      const Vec& pij = (*brk)[i][j];
      Rational s = a[i] * b[j];
      for (std::size_t k = 0; k < dim; ++k) r[k] += s * pij[k];
    }
  }
  return r;
}

namespace {

bool vec_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

std::string idx_name(const StructAlgebra& a, std::size_t i) {
  return i < a.names.size() ? a.names[i] : "e" + std::to_string(i);
}

}  // namespace

std::string StructAlgebra::validate() const {
  if (prod.size() != dim) return "product table has wrong dimension";
  for (const auto& row : prod) {
    if (row.size() != dim) return "product table has wrong dimension";
    for (const auto& v : row)
      if (v.size() != dim) return "product table has wrong dimension";
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (!vec_zero(vec_sub(prod[i][j], prod[j][i])))
        return "commutativity fails at (" + idx_name(*this, i) + "," +
               idx_name(*this, j) + ")";
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        Vec lhs = mul(prod[i][j], basis(k));
        Vec rhs = mul(basis(i), prod[j][k]);
        if (!vec_zero(vec_sub(lhs, rhs)))
          return "associativity fails at (" + idx_name(*this, i) + "," +
                 idx_name(*this, j) + "," + idx_name(*this, k) + ")";
      }
  if (brk) {
    if (brk->size() != dim) return "bracket table has wrong dimension";
    for (const auto& row : *brk) {
      if (row.size() != dim) return "bracket table has wrong dimension";
      for (const auto& v : row)
        if (v.size() != dim) return "bracket table has wrong dimension";
    }
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Vec s = (*brk)[i][j];
        for (std::size_t k = 0; k < dim; ++k) s[k] += (*brk)[j][i][k];
        if (!vec_zero(s))
          return "bracket anticommutativity fails at (" + idx_name(*this, i) +
                 "," + idx_name(*this, j) + ")";
      }
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
          Vec jac = bracket(bracket(basis(i), basis(j)), basis(k));
          Vec t = bracket(bracket(basis(j), basis(k)), basis(i));
          Vec u = bracket(bracket(basis(k), basis(i)), basis(j));
          for (std::size_t q = 0; q < dim; ++q) jac[q] += t[q] + u[q];
          if (!vec_zero(jac))
            return "Jacobi fails at (" + idx_name(*this, i) + "," +
                   idx_name(*this, j) + "," + idx_name(*this, k) + ")";
          // Leibniz: [e_i, e_j e_k] = [e_i, e_j] e_k + e_j [e_i, e_k]
          Vec lhs = bracket(basis(i), prod[j][k]);
          Vec rhs = mul(bracket(basis(i), basis(j)), basis(k));
          Vec rhs2 = mul(basis(j), bracket(basis(i), basis(k)));
          for (std::size_t q = 0; q < dim; ++q) rhs[q] += rhs2[q];
          if (!vec_zero(vec_sub(lhs, rhs)))
            return "Leibniz fails at (" + idx_name(*this, i) + "," +
                   idx_name(*this, j) + "," + idx_name(*this, k) + ")";
        }
  }
  return "";
}

std::optional<Vec> StructAlgebra::unit() const {
  // solve sum_p u_p e_p e_j = e_j for all j: dim^2 equations in dim unknowns
  std::size_t rows = dim * dim, cols = dim;
  std::vector<Vec> m(rows, Vec(cols + 1, Rational(0)));
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t p = 0; p < cols; ++p) m[j * dim + k][p] = prod[p][j][k];
      m[j * dim + k][cols] = (j == k) ? 1 : 0;
    }
  // Gaussian elimination
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t cidx = 0; cidx < cols && r < rows; ++cidx) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][cidx] != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    Rational inv = m[r][cidx];
    for (auto& x : m[r]) x /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][cidx] == 0) continue;
      Rational f = m[i][cidx];
      for (std::size_t q = 0; q <= cols; ++q) m[i][q] -= f * m[r][q];
    }
    pivot_col.push_back(cidx);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;  // inconsistent: no unit
  Vec u(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) u[pivot_col[i]] = m[i][cols];
  // confirm
  for (std::size_t j = 0; j < dim; ++j)
    if (!vec_zero(vec_sub(mul(u, basis(j)), basis(j)))) return std::nullopt;
  return u;
}

Tensor2 Tensor2::zero(std::size_t dim) {
  Tensor2 t;
  t.c.assign(dim, Vec(dim, Rational(0)));
  return t;
}

Tensor2 Tensor2::unit_unit(const StructAlgebra& a, const Rational& s) {
  auto u = a.unit();
  if (!u) throw domain_error("algebra has no unit");
  Tensor2 t = zero(a.dim);
  for (std::size_t p = 0; p < a.dim; ++p)
    for (std::size_t q = 0; q < a.dim; ++q) t.c[p][q] = s * (*u)[p] * (*u)[q];
  return t;
}

bool check_aybe(const StructAlgebra& a, const Tensor2& r,
                const Rational& lambda) {
  auto u = a.unit();
  if (!u) throw domain_error("AYBE check needs a unital algebra");
  const std::size_t d = a.dim;
  // T[p][q][s] of r13 r12 - r12 r23 + r23 r13 - lambda r13
  std::vector<std::vector<Vec>> T(d, std::vector<Vec>(d, Vec(d, Rational(0))));
  for (std::size_t al = 0; al < d; ++al)
    for (std::size_t be = 0; be < d; ++be) {
      if (r.c[al][be] == 0) continue;
      for (std::size_t ga = 0; ga < d; ++ga)
        for (std::size_t de = 0; de < d; ++de) {
          if (r.c[ga][de] == 0) continue;
          Rational s = r.c[al][be] * r.c[ga][de];
          const Vec& m_ag = a.prod[al][ga];
          const Vec& m_bg = a.prod[be][ga];
          const Vec& m_bd = a.prod[be][de];
          // r13 r12 = sum (a_i a_j) x b_j x b_i  (i=(al,be), j=(ga,de))
          for (std::size_t p = 0; p < d; ++p)
            if (m_ag[p] != 0) T[p][de][be] += s * m_ag[p];
          // r12 r23 = sum a_i x (b_i a_j) x b_j
          for (std::size_t q = 0; q < d; ++q)
            if (m_bg[q] != 0) T[al][q][de] -= s * m_bg[q];
          // r23 r13 = sum a_j x a_i x (b_i b_j)
          for (std::size_t t = 0; t < d; ++t)
            if (m_bd[t] != 0) T[ga][al][t] += s * m_bd[t];
        }
    }
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      for (std::size_t s = 0; s < d; ++s) {
        Rational rhs = lambda * r.c[p][s] * (*u)[q];
        if (T[p][q][s] != rhs) return false;
      }
  return true;
}

std::vector<Vec> principal_matrix(const StructAlgebra& a, const Tensor2& r) {
  std::vector<Vec> P(a.dim, a.zero());  // P[k] = image of e_k
  for (std::size_t k = 0; k < a.dim; ++k) {
    Vec acc = a.zero();
    for (std::size_t p = 0; p < a.dim; ++p)
      for (std::size_t q = 0; q < a.dim; ++q) {
        if (r.c[p][q] == 0) continue;
        Vec t = a.mul(a.mul(a.basis(p), a.basis(k)), a.basis(q));
        for (std::size_t s = 0; s < a.dim; ++s) acc[s] += r.c[p][q] * t[s];
      }
    P[k] = acc;
  }
  return P;
}

namespace {

Vec op_image(const std::vector<Vec>& P, const Vec& v) {
  Vec r(v.size(), Rational(0));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t s = 0; s < v.size(); ++s) r[s] += v[k] * P[k][s];
  }
  return r;
}

}  // namespace

CheckReport check_rb_operator_struct(const StructAlgebra& a,
                                     const std::vector<Vec>& P,
                                     const OpLaw& law) {
  CheckReport rep;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec x = a.basis(i), y = a.basis(j);
      Vec px = op_image(P, x), py = op_image(P, y);
      {
        Vec lhs = a.mul(px, py);
        Vec arg = a.mul(px, y);
        Vec t = a.mul(x, py);
        for (std::size_t s = 0; s < a.dim; ++s) arg[s] += t[s];
        Vec xy = a.mul(x, y);
        if (law.is_ns()) {
          Vec nxy = op_image(P, xy);
          for (std::size_t s = 0; s < a.dim; ++s) arg[s] -= nxy[s];
        } else {
          for (std::size_t s = 0; s < a.dim; ++s) arg[s] += law.weight * xy[s];
        }
        Vec rhs = op_image(P, arg);
        if (!vec_zero(vec_sub(lhs, rhs)))
          rep.fail("operator law (product) fails at basis pair (" +
                   idx_name(a, i) + "," + idx_name(a, j) + ")");
      }
      if (a.brk) {
        Vec lhs = a.bracket(px, py);
        Vec arg = a.bracket(px, y);
        Vec t = a.bracket(x, py);
        for (std::size_t s = 0; s < a.dim; ++s) arg[s] += t[s];
        Vec xy = a.bracket(x, y);
        if (law.is_ns()) {
          Vec nxy = op_image(P, xy);
          for (std::size_t s = 0; s < a.dim; ++s) arg[s] -= nxy[s];
        } else {
          for (std::size_t s = 0; s < a.dim; ++s) arg[s] += law.weight * xy[s];
        }
        Vec rhs = op_image(P, arg);
        if (!vec_zero(vec_sub(lhs, rhs)))
          rep.fail("operator law (bracket) fails at basis pair (" +
                   idx_name(a, i) + "," + idx_name(a, j) + ")");
      }
    }
  return rep;
}

CheckReport check_prop2(const StructAlgebra& a, const Tensor2& r,
                        const Rational& lambda) {
  CheckReport rep;
  if (!check_aybe(a, r, lambda)) {
    rep.fail("tensor is not a weight-" + rational_to_string(lambda) +
             " AYBE solution");
    return rep;
  }
  auto P = principal_matrix(a, r);
  OpLaw law{OpKind::RotaBaxter, -lambda};  // weight flips sign
  rep.merge(check_rb_operator_struct(a, P, law));
  // contraction: sum a_i a_j b_i b_j = lambda sum a_k b_k
  Vec lhs = a.zero(), rhs = a.zero();
  for (std::size_t al = 0; al < a.dim; ++al)
    for (std::size_t be = 0; be < a.dim; ++be) {
      if (r.c[al][be] == 0) continue;
      Vec ab = a.mul(a.basis(al), a.basis(be));
      for (std::size_t s = 0; s < a.dim; ++s)
        rhs[s] += lambda * r.c[al][be] * ab[s];
      for (std::size_t ga = 0; ga < a.dim; ++ga)
        for (std::size_t de = 0; de < a.dim; ++de) {
          if (r.c[ga][de] == 0) continue;
          Vec t = a.mul(a.mul(a.basis(al), a.basis(ga)),
                        a.mul(a.basis(be), a.basis(de)));
          Rational s = r.c[al][be] * r.c[ga][de];
          for (std::size_t q = 0; q < a.dim; ++q) lhs[q] += s * t[q];
        }
    }
  if (!vec_zero(vec_sub(lhs, rhs)))
    rep.fail("contraction identity sum a_i a_j b_i b_j = lambda sum a_k b_k fails");
  return rep;
}

// ---------------------------------------------------------------------------
// JSON loading
// ---------------------------------------------------------------------------

namespace {

Rational json_rat(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw domain_error("expected a rational as integer or \"p/q\" string");
}

std::vector<std::vector<Vec>> parse_table(const nlohmann::json& j,
                                          std::size_t dim, const char* what) {
  if (!j.is_array() || j.size() != dim)
    throw domain_error(std::string(what) + " must be a dim x dim array");
  std::vector<std::vector<Vec>> t(dim, std::vector<Vec>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    if (!j[i].is_array() || j[i].size() != dim)
      throw domain_error(std::string(what) + " must be a dim x dim array");
    for (std::size_t k = 0; k < dim; ++k) {
      Vec v(dim, Rational(0));
      for (const auto& pair : j[i][k]) {
        if (!pair.is_array() || pair.size() != 2)
          throw domain_error(std::string(what) +
                             " entries must be [index, coeff] pairs");
        std::size_t idx = pair[0].get<std::size_t>();
        if (idx >= dim)
          throw domain_error(std::string(what) + " index out of range");
        v[idx] += json_rat(pair[1]);
      }
      t[i][k] = std::move(v);
    }
  }
  return t;
}

}  // namespace

StructAlgebra StructAlgebra::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  StructAlgebra a;
  if (!j.contains("dim")) throw domain_error("model JSON needs a dim field");
  a.dim = j["dim"].get<std::size_t>();
  if (a.dim == 0 || a.dim > 16)
    throw domain_error("model dimension must be in [1, 16]");
  if (j.contains("basis_names"))
    a.names = j["basis_names"].get<std::vector<std::string>>();
  if (!j.contains("product"))
    throw domain_error("model JSON needs a product table");
  a.prod = parse_table(j["product"], a.dim, "product");
  if (j.contains("bracket") && !j["bracket"].is_null())
    a.brk = parse_table(j["bracket"], a.dim, "bracket");
  return a;
}

}  // namespace prb::models
