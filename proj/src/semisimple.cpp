#include "voa/semisimple.hpp"

#include <random>
#include <sstream>

namespace voa {

using Product = AssocAlgebra::Product;

AssocAlgebra::AssocAlgebra(std::size_t dim, std::vector<std::vector<Product>> mult) : dim_(dim), mult_(std::move(mult)) {
  if (mult_.size() != dim_) throw Error(ErrorKind::InvalidSpec, "structure constant table has wrong size");
  for (const auto& row : mult_) {
    if (row.size() != dim_) throw Error(ErrorKind::InvalidSpec, "structure constant table has wrong size");
    for (const auto& p : row)
      for (const auto& [k, c] : p)
        if (k >= dim_) throw Error(ErrorKind::InvalidSpec, "structure constant index out of range");
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Product lhs = multiply(mult_[i][j], Product(k));
        const Product rhs = multiply(Product(i), mult_[j][k]);
        if (lhs != rhs)
          throw Error(ErrorKind::InvalidSpec, "not associative on basis triple (" + std::to_string(i) + "," +
                                                  std::to_string(j) + "," + std::to_string(k) + ")");
      }
}

Product AssocAlgebra::multiply(const Product& x, const Product& y) const {
  Product out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) out.add_scaled(mult_[i][j], a * b);
  return out;
}

Matrix AssocAlgebra::left_matrix(const Product& x) const {
  Matrix out(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (const auto& [i, c] : multiply(x, Product(j))) out(i, j) = c;
  return out;
}

Matrix AssocAlgebra::right_matrix(const Product& x) const {
  Matrix out(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (const auto& [i, c] : multiply(Product(j), x)) out(i, j) = c;
  return out;
}

std::optional<Product> AssocAlgebra::unit() const {
  // Solve e b_j = b_j and b_j e = b_j as a linear system in the coordinates of e.
  std::vector<LinearCombination<std::size_t>> rows;
  const std::size_t rhs = dim_;
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t l = 0; l < dim_; ++l) {
      LinearCombination<std::size_t> left, right;
      for (std::size_t k = 0; k < dim_; ++k) {
        left.add(k, mult_[k][j].coefficient(l));
        right.add(k, mult_[j][k].coefficient(l));
      }
      left.add(rhs, Scalar(j == l ? -1 : 0));
      right.add(rhs, Scalar(j == l ? -1 : 0));
      rows.push_back(left);
      rows.push_back(right);
    }
  std::vector<std::size_t> columns(dim_ + 1);
  for (std::size_t i = 0; i <= dim_; ++i) columns[i] = i;
  for (const auto& v : kernel(rows, columns).vectors()) {
    const Scalar t = v.coefficient(rhs);
    if (t == 0) continue;
    Product e;
    for (const auto& [k, c] : v)
      if (k < dim_) e.add(k, c / t);
    return e;
  }
  return std::nullopt;
}

bool AssocAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (mult_[i][j] != mult_[j][i]) return false;
  return true;
}

std::vector<Product> AssocAlgebra::center() const {
  std::vector<LinearCombination<std::size_t>> rows;
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t l = 0; l < dim_; ++l) {
      LinearCombination<std::size_t> r;
      for (std::size_t k = 0; k < dim_; ++k) r.add(k, mult_[k][j].coefficient(l) - mult_[j][k].coefficient(l));
      if (!r.is_zero()) rows.push_back(r);
    }
  std::vector<std::size_t> columns(dim_);
  for (std::size_t i = 0; i < dim_; ++i) columns[i] = i;
  return kernel(rows, columns).vectors();
}

AssocAlgebra close_image(const std::vector<Matrix>& seeds) {
  std::vector<Matrix> basis;
  SubspaceBasis<std::size_t> span(true);
  auto offer = [&](const Matrix& m) {
    if (!basis.empty() && (m.rows() != basis[0].rows() || m.cols() != basis[0].cols()))
      throw Error(ErrorKind::InvalidSpec, "seed matrices differ in size");
    if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidSpec, "seed matrix is not square");
    const auto flat = m.flatten();
    if (flat.is_zero() || span.contains(flat)) return;
    span.insert(flat);
    basis.push_back(m);
  };
  for (const auto& s : seeds) offer(s);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      offer(basis[i] * basis[k]);
      if (i != k) offer(basis[k] * basis[i]);
    }

  const std::size_t d = basis.size();
  std::vector<std::vector<Product>> mult(d, std::vector<Product>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto cert = span.input_certificate((basis[i] * basis[j]).flatten());
      if (!cert) throw Error(ErrorKind::InvalidSpec, "image closure is not closed");
      mult[i][j] = *cert;
    }
  AssocAlgebra out(d, std::move(mult));
  out.realization = std::move(basis);
  return out;
}

SubspaceBasis<std::size_t> jacobson_radical(const AssocAlgebra& A) {
  const std::size_t d = A.dimension();
  std::vector<Matrix> L;
  for (std::size_t i = 0; i < d; ++i) L.push_back(A.left_matrix(Product(i)));
  std::vector<LinearCombination<std::size_t>> rows;
  for (std::size_t i = 0; i < d; ++i) {
    LinearCombination<std::size_t> r;
    for (std::size_t j = 0; j < d; ++j) {
      Scalar t = 0;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          if (L[i](a, b) != 0 && L[j](b, a) != 0) t += L[i](a, b) * L[j](b, a);
      r.add(j, t);
    }
    rows.push_back(r);
  }
  std::vector<std::size_t> columns(d);
  for (std::size_t i = 0; i < d; ++i) columns[i] = i;
  return kernel(rows, columns);
}

bool is_two_sided_ideal(const AssocAlgebra& A, const SubspaceBasis<std::size_t>& ideal) {
  for (const auto& x : ideal.vectors())
    for (std::size_t j = 0; j < A.dimension(); ++j) {
      if (!ideal.contains(A.multiply(x, Product(j)))) return false;
      if (!ideal.contains(A.multiply(Product(j), x))) return false;
    }
  return true;
}

Integer dimension_formula(const std::vector<std::vector<std::size_t>>& graded_dims, int n) {
  Integer out = 0;
  for (const auto& dims : graded_dims)
    for (int m = 0; m <= n && m < static_cast<int>(dims.size()); ++m) out += Integer(static_cast<unsigned long>(dims[m] * dims[m]));
  return out;
}

namespace {

// Coefficients c_0..c_r of det(x I - M) by the Faddeev-LeVerrier recursion.
std::vector<Scalar> char_poly(const Matrix& M) {
  const std::size_t r = M.rows();
  std::vector<Scalar> c(r + 1);
  c[r] = 1;
  Matrix Mk(r, r);
  for (std::size_t k = 1; k <= r; ++k) {
    Mk = M * Mk + Matrix::identity(r) * c[r - k + 1];
    c[r - k] = -(M * Mk).trace() / Scalar(static_cast<long>(k));
  }
  return c;
}

std::optional<std::vector<Integer>> divisors(Integer n) {
  n = abs(n);
  if (n == 0) return std::nullopt;
  if (n > Integer("100000000000000")) return std::nullopt;
  std::vector<Integer> out;
  for (Integer i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      out.push_back(i);
      if (i * i != n) out.push_back(n / i);
    }
  return out;
}

// Distinct rational roots, or nullopt when the search was not possible.
std::optional<std::vector<Scalar>> rational_roots(std::vector<Scalar> c) {
  std::vector<Scalar> roots;
  while (c.size() > 1 && c[0] == 0) {
    if (roots.empty() || roots.back() != 0) roots.push_back(0);
    c.erase(c.begin());
  }
  Integer l = 1;
  for (const auto& x : c) l = lcm(l, Integer(x.get_den()));
  std::vector<Integer> a;
  for (const auto& x : c) a.push_back(Integer(x * l));
  if (a.size() == 1) return roots;
  auto p = divisors(a.front());
  auto q = divisors(a.back());
  if (!p || !q) return std::nullopt;
  auto eval = [&](const Scalar& x) {
    Scalar v = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * x + Scalar(*it);
    return v;
  };
  std::vector<Scalar> found;
  for (const auto& pp : *p)
    for (const auto& qq : *q)
      for (int s : {1, -1}) {
        Scalar x(pp * s, qq);
        x.canonicalize();
        if (eval(x) == 0 && std::find(found.begin(), found.end(), x) == found.end()) found.push_back(x);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

}  // namespace

std::optional<std::vector<Product>> central_idempotents(const AssocAlgebra& A) {
  const auto Z = A.center();
  const std::size_t r = Z.size();
  if (r == 0) return std::nullopt;
  SubspaceBasis<std::size_t> zspan(true);
  for (const auto& z : Z) zspan.insert(z);

  std::mt19937_64 rng(20240601);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Product c;
    for (std::size_t i = 0; i < r; ++i) c.add_scaled(Z[i], Scalar(static_cast<long>(attempt == 0 ? i + 1 : rng() % 97 + 1)));
    Matrix M(r, r);
    for (std::size_t j = 0; j < r; ++j) {
      auto coords = zspan.input_certificate(A.multiply(c, Z[j]));
      if (!coords) return std::nullopt;
      for (const auto& [i, v] : *coords) M(i, j) = v;
    }
    auto roots = rational_roots(char_poly(M));
    if (!roots || roots->size() != r) continue;
    std::vector<Product> out;
    for (const auto& lambda : *roots) {
      const auto ker = (M - Matrix::identity(r) * lambda).kernel();
      if (ker.size() != 1) return std::nullopt;
      Product e;
      for (std::size_t i = 0; i < r; ++i) e.add_scaled(Z[i], ker[0][i]);
      const Product sq = A.multiply(e, e);
      if (sq.is_zero()) return std::nullopt;
      const Scalar mu = sq.leading_coefficient() / e.coefficient(sq.leading_key());
      e *= 1 / mu;
      if (A.multiply(e, e) != e) return std::nullopt;
      out.push_back(e);
    }
    return out;
  }
  return std::nullopt;
}

std::string SemisimplicityReport::verdict() const {
  std::ostringstream os;
  os << "computed image algebra: dim " << dimension << ", radical dim " << radical_dimension << ", "
     << (semisimple() ? "semisimple" : "not semisimple");
  if (expected_dimension) os << ", expected dim " << *expected_dimension << (dimension_matches ? " (match)" : " (mismatch)");
  return os.str();
}

SemisimplicityReport semisimplicity_report(const AssocAlgebra& A, std::optional<std::size_t> expected) {
  SemisimplicityReport out;
  out.dimension = A.dimension();
  const auto rad = jacobson_radical(A);
  out.radical_dimension = rad.rank();
  out.radical_basis = rad.vectors();
  out.radical_is_ideal = is_two_sided_ideal(A, rad);
  out.commutative = A.is_commutative();
  out.center_dimension = A.center().size();
  if (out.semisimple()) {
    if (auto idem = central_idempotents(A)) {
      std::vector<std::size_t> sizes;
      bool square = true;
      for (const auto& e : *idem) {
        const std::size_t d = A.left_matrix(e).rank();
        std::size_t s = 0;
        while ((s + 1) * (s + 1) <= d) ++s;
        square = square && s * s == d;
        sizes.push_back(s);
      }
      std::sort(sizes.begin(), sizes.end());
      if (square) out.block_sizes = sizes;
    }
  }
  out.expected_dimension = expected;
  out.dimension_matches = !expected || *expected == out.dimension;
  return out;
}

}  // namespace voa
