#include "galoisjd/oracle/bfs.hpp"

#include <numeric>
#include <string>
#include <unordered_set>

#include <omp.h>

namespace galoisjd::oracle {

namespace {

struct MatrixHash {
  std::size_t operator()(const Matrix& a) const noexcept {
    std::size_t h = a.size();
    for (auto x : a) h = h * 1000003u ^ x;
    return h;
  }
};

std::string group_name(std::string_view family, unsigned dim, std::uint64_t q) {
  return std::string(family) + std::to_string(dim) + "(" + std::to_string(q) + ")";
}

// F_p-basis of F_q: the elements 1, X, ..., X^{k-1}.
std::vector<ffield::FqElement> prime_basis(const ffield::FiniteField& F) {
  std::vector<ffield::FqElement> out;
  for (unsigned i = 0; i < F.k(); ++i) {
    std::vector<std::uint32_t> c(F.k(), 0);
    c[i] = 1;
    out.push_back(F.from_coeffs(c));
  }
  return out;
}

std::vector<std::vector<ffield::FqElement>> all_vectors(const ffield::FiniteField& F, unsigned dim,
                                                        unsigned max_support) {
  std::vector<std::vector<ffield::FqElement>> out;
  std::vector<std::uint32_t> digits(dim, 0);
  while (true) {
    unsigned support = 0;
    for (auto d : digits) support += d != 0;
    if (support > 0 && support <= max_support) {
      std::vector<ffield::FqElement> v;
      for (auto d : digits) v.push_back(F.from_code(d));
      out.push_back(std::move(v));
    }
    unsigned i = 0;
    while (i < dim && ++digits[i] == F.q()) digits[i++] = 0;
    if (i == dim) break;
  }
  return out;
}

// x -> x + lambda B(x, v) v with B(x, y) = x^T J y, J = [[0, I], [-I, 0]].
Matrix symplectic_transvection(const ffield::FiniteField& F, unsigned m, const std::vector<ffield::FqElement>& v,
                               ffield::FqElement lambda) {
  const unsigned n = 2 * m;
  // Jv: first m entries v_{m+i}, last m entries -v_i.
  std::vector<ffield::FqElement> jv(n);
  for (unsigned i = 0; i < m; ++i) {
    jv[i] = v[m + i];
    jv[m + i] = F.neg(v[i]);
  }
  Matrix a = identity_matrix(F, n);
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned c = 0; c < n; ++c) {
      const auto t = F.mul(lambda, F.mul(v[r], jv[c]));
      a[r * n + c] = F.add(ffield::FqElement{a[r * n + c]}, t).code;
    }
  }
  return a;
}

struct OddForm {
  const ffield::FiniteField& F;
  unsigned m;

  ffield::FqElement q(const std::vector<ffield::FqElement>& x) const {
    auto acc = F.mul(x[0], x[0]);
    for (unsigned i = 1; i <= m; ++i) acc = F.add(acc, F.mul(x[i], x[m + i]));
    return acc;
  }
  // B(x, y) = Q(x + y) - Q(x) - Q(y)
  ffield::FqElement b(const std::vector<ffield::FqElement>& x, const std::vector<ffield::FqElement>& y) const {
    auto acc = F.mul(F.from_int(2), F.mul(x[0], y[0]));
    for (unsigned i = 1; i <= m; ++i) {
      acc = F.add(acc, F.add(F.mul(x[i], y[m + i]), F.mul(x[m + i], y[i])));
    }
    return acc;
  }
  // x -> x - (B(x, u) / Q(u)) u
  Matrix reflection(const std::vector<ffield::FqElement>& u) const {
    const unsigned n = 2 * m + 1;
    const auto scale = F.inv(q(u));
    Matrix a(n * n);
    for (unsigned c = 0; c < n; ++c) {
      std::vector<ffield::FqElement> e(n, F.zero());
      e[c] = F.one();
      const auto coef = F.mul(b(e, u), scale);
      for (unsigned r = 0; r < n; ++r) a[r * n + c] = F.sub(e[r], F.mul(coef, u[r])).code;
    }
    return a;
  }
};

bool is_square(const ffield::FiniteField& F, ffield::FqElement a) { return F.log(a) % 2 == 0; }

MatrixGroup orthogonal_impl(unsigned m, std::uint64_t q, bool spinor_kernel) {
  const auto spec = expo::GroupSpec::make(expo::Family::SOodd, m, q);
  MatrixGroup G;
  G.name = group_name(spinor_kernel ? "Omega" : "SO", 2 * m + 1, q);
  G.dim = 2 * m + 1;
  G.field = ffield::FiniteField::of_order(q);
  const auto& F = *G.field;
  const OddForm form{F, m};
  std::vector<std::vector<ffield::FqElement>> square, nonsquare;
  for (auto& v : all_vectors(F, G.dim, 2)) {
    const auto qv = form.q(v);
    if (qv == F.zero()) continue;
    (is_square(F, qv) ? square : nonsquare).push_back(std::move(v));
  }
  // r_{u0} r_v: with the pivot u0 fixed, these reach every even product of
  // the listed reflections.
  for (auto* cls : {&square, &nonsquare}) {
    if (cls->empty()) continue;
    const Matrix pivot = form.reflection(cls->front());
    for (std::size_t i = 1; i < cls->size(); ++i) G.gens.push_back(mat_mul(F, G.dim, pivot, form.reflection((*cls)[i])));
  }
  if (!spinor_kernel && !square.empty() && !nonsquare.empty()) {
    G.gens.push_back(mat_mul(F, G.dim, form.reflection(square.front()), form.reflection(nonsquare.front())));
  }
  G.expected_order = expo::group_order(spec);
  if (spinor_kernel) *G.expected_order /= 2;
  return G;
}

bool invertible(const ffield::FiniteField& F, unsigned dim, Matrix a) {
  for (unsigned col = 0; col < dim; ++col) {
    unsigned piv = col;
    while (piv < dim && a[piv * dim + col] == 0) ++piv;
    if (piv == dim) return false;
    for (unsigned c = 0; c < dim; ++c) std::swap(a[piv * dim + c], a[col * dim + c]);
    const auto inv = F.inv({a[col * dim + col]});
    for (unsigned r = col + 1; r < dim; ++r) {
      const auto f = F.mul({a[r * dim + col]}, inv);
      for (unsigned c = col; c < dim; ++c) {
        a[r * dim + c] = F.sub({a[r * dim + c]}, F.mul(f, {a[col * dim + c]})).code;
      }
    }
  }
  return true;
}

}  // namespace

Matrix identity_matrix(const ffield::FiniteField& F, unsigned dim) {
  Matrix a(dim * dim, 0);
  for (unsigned i = 0; i < dim; ++i) a[i * dim + i] = F.one().code;
  return a;
}

Matrix mat_mul(const ffield::FiniteField& F, unsigned dim, const Matrix& a, const Matrix& b) {
  Matrix c(dim * dim, 0);
  for (unsigned i = 0; i < dim; ++i) {
    for (unsigned k = 0; k < dim; ++k) {
      const std::uint32_t x = a[i * dim + k];
      if (x == 0) continue;
      for (unsigned j = 0; j < dim; ++j) {
        const std::uint32_t y = b[k * dim + j];
        if (y == 0) continue;
        c[i * dim + j] = F.add(ffield::FqElement{c[i * dim + j]}, F.mul({x}, {y})).code;
      }
    }
  }
  return c;
}

MatrixGroup MatrixGroup::general_linear(unsigned n, std::uint64_t q) {
  const auto spec = expo::GroupSpec::make(expo::Family::GL, n, q);
  MatrixGroup G;
  G.name = group_name("GL", n, q);
  G.dim = n;
  G.field = ffield::FiniteField::of_order(q);
  const auto& F = *G.field;
  for (auto w : prime_basis(F)) {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        if (i == j) continue;
        Matrix a = identity_matrix(F, n);
        a[i * n + j] = w.code;
        G.gens.push_back(std::move(a));
      }
    }
  }
  Matrix d = identity_matrix(F, n);
  d[0] = F.generator().code;
  G.gens.push_back(std::move(d));
  G.expected_order = expo::group_order(spec);
  return G;
}

MatrixGroup MatrixGroup::symplectic(unsigned m, std::uint64_t q) {
  const auto spec = expo::GroupSpec::make(expo::Family::Sp, m, q);
  MatrixGroup G;
  G.name = group_name("Sp", 2 * m, q);
  G.dim = 2 * m;
  G.field = ffield::FiniteField::of_order(q);
  const auto& F = *G.field;
  for (const auto& v : all_vectors(F, G.dim, 2)) {
    for (auto w : prime_basis(F)) G.gens.push_back(symplectic_transvection(F, m, v, w));
  }
  G.expected_order = expo::group_order(spec);
  return G;
}

MatrixGroup MatrixGroup::orthogonal_odd(unsigned m, std::uint64_t q) { return orthogonal_impl(m, q, false); }

MatrixGroup MatrixGroup::omega_odd(unsigned m, std::uint64_t q) { return orthogonal_impl(m, q, true); }

MatrixGroup MatrixGroup::builtin(const expo::GroupSpec& spec) {
  switch (spec.family) {
    case expo::Family::GL: return general_linear(spec.rank, spec.q);
    case expo::Family::Sp: return symplectic(spec.rank, spec.q);
    case expo::Family::SOodd: return orthogonal_odd(spec.rank, spec.q);
  }
  throw Error(ErrorCode::UnsupportedFamily, "unknown family");
}

std::vector<Matrix> bfs_closure(const MatrixGroup& G, std::uint64_t max_order) {
  if (G.expected_order && *G.expected_order > max_order) {
    throw Error(ErrorCode::SizeGuard, G.name + " has order " + G.expected_order->str() + " > " +
                                          std::to_string(max_order));
  }
  const auto& F = *G.field;
  for (const auto& g : G.gens) {
    if (g.size() != G.dim * G.dim) throw Error(ErrorCode::DimensionMismatch, "generator has the wrong shape");
    if (!invertible(F, G.dim, g)) throw Error(ErrorCode::DegenerateSize, "generator is singular");
  }
  std::vector<Matrix> elements{identity_matrix(*G.field, G.dim)};
  std::unordered_set<Matrix, MatrixHash> seen(elements.begin(), elements.end());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : G.gens) {
      Matrix next = mat_mul(F, G.dim, elements[head], g);
      if (seen.insert(next).second) {
        elements.push_back(std::move(next));
        if (elements.size() > max_order) {
          throw Error(ErrorCode::SizeGuard, G.name + " closure passed " + std::to_string(max_order) + " elements");
        }
      }
    }
  }
  if (G.expected_order && *G.expected_order != elements.size()) {
    throw Error(ErrorCode::OrderMismatch, G.name + ": closure has " + std::to_string(elements.size()) +
                                              " elements, expected " + G.expected_order->str());
  }
  return elements;
}

std::uint64_t element_order(const MatrixGroup& G, const Matrix& a) {
  const Matrix id = identity_matrix(*G.field, G.dim);
  Matrix x = a;
  std::uint64_t k = 1;
  while (x != id) {
    x = mat_mul(*G.field, G.dim, x, a);
    if (++k > kBfsMaxOrder) throw Error(ErrorCode::SizeGuard, "element order passed the guard");
  }
  return k;
}

std::uint64_t exponent_of(const MatrixGroup& G, const std::vector<Matrix>& elements, Exec exec) {
  const auto count = static_cast<std::int64_t>(elements.size());
  if (exec == Exec::Serial) {
    std::uint64_t e = 1;
    for (const auto& a : elements) e = std::lcm(e, element_order(G, a));
    return e;
  }
  std::uint64_t e = 1;
  bool failed = false;
#pragma omp parallel
  {
    std::uint64_t local = 1;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        local = std::lcm(local, element_order(G, elements[static_cast<std::size_t>(i)]));
      } catch (...) {
#pragma omp atomic write
        failed = true;
      }
    }
#pragma omp critical
    e = std::lcm(e, local);
  }
  if (failed) throw Error(ErrorCode::SizeGuard, "element order passed the guard");
  return e;
}

std::uint64_t bfs_exponent(const MatrixGroup& G, Exec exec, std::uint64_t max_order) {
  return exponent_of(G, bfs_closure(G, max_order), exec);
}

}  // namespace galoisjd::oracle
