#include "hodgesplit/modrep.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "hodgesplit/errors.hpp"

namespace hodgesplit::modrep {

using linalg::EchelonBasis;

std::size_t BlockMultiset::total() const {
  std::size_t s = 0;
  for (auto b : sizes) s += b;
  return s;
}

std::string BlockMultiset::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
  os << '}';
  return os.str();
}

BlockMultiset operator+(const BlockMultiset& a, const BlockMultiset& b) {
  BlockMultiset out{a.sizes};
  out.sizes.insert(out.sizes.end(), b.sizes.begin(), b.sizes.end());
  std::sort(out.sizes.begin(), out.sizes.end(), std::greater<>());
  return out;
}

namespace {

bool is_power_of(std::size_t q, std::uint64_t p) {
  if (q == 0) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

void require_p_group(const CyclicModule& mod) {
  if (!is_power_of(mod.order, mod.field().characteristic())) {
    throw PreconditionError("group order " + std::to_string(mod.order) + " is not a power of the characteristic");
  }
}

}  // namespace

BlockMultiset block_decomposition(const CyclicModule& mod) {
  BlockMultiset out;
  if (mod.dim() == 0) return out;
  mod.validate();
  require_p_group(mod);

  const Matrix nil = mod.sigma - Matrix::identity(mod.field(), mod.dim());
  // ranks[j] = rank N^j; #blocks of size >= j is ranks[j-1] - ranks[j].
  std::vector<std::size_t> ranks{mod.dim()};
  Matrix power = Matrix::identity(mod.field(), mod.dim());
  while (ranks.back() > 0) {
    power = power * nil;
    ranks.push_back(linalg::rank(power));
  }
  ranks.push_back(0);
  for (std::size_t j = ranks.size() - 2; j >= 1; --j) {
    const std::size_t at_least_j = ranks[j - 1] - ranks[j];
    const std::size_t at_least_next = ranks[j] - ranks[j + 1];
    out.sizes.insert(out.sizes.end(), at_least_j - at_least_next, j);
  }
  return out;
}

CyclicModule block_sum(const FieldCtx& ctx, const std::vector<std::size_t>& sizes, std::size_t order) {
  std::size_t dim = 0;
  for (auto s : sizes) {
    if (s == 0 || s > order) throw PreconditionError("Jordan block size must lie in 1..q");
    dim += s;
  }
  Matrix sigma = Matrix::identity(ctx, dim);
  std::size_t at = 0;
  for (auto s : sizes) {
    for (std::size_t i = 0; i + 1 < s; ++i) sigma(at + i + 1, at + i) = ctx.one();
    at += s;
  }
  return {sigma, order};
}

Subquotient subquotient(const FieldCtx& ctx, std::size_t dim, const std::vector<Vector>& spanning) {
  EchelonBasis basis(ctx, dim);
  for (const auto& v : spanning) {
    if (v.size() != dim) throw PreconditionError("spanning vector has the wrong length");
    basis.insert(v);
  }
  std::vector<bool> is_pivot(dim, false);
  for (auto piv : basis.pivots()) is_pivot[piv] = true;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < dim; ++i)
    if (!is_pivot[i]) free.push_back(i);

  Subquotient sq;
  sq.inclusion = Matrix::from_columns(ctx, dim, basis.vectors());
  sq.projection = Matrix(ctx, free.size(), dim);
  sq.lift = Matrix(ctx, dim, free.size());
  for (std::size_t j = 0; j < dim; ++j) {
    const Vector r = basis.reduce(linalg::unit_vector(ctx, dim, j));
    for (std::size_t c = 0; c < free.size(); ++c) sq.projection(c, j) = r[free[c]];
  }
  for (std::size_t c = 0; c < free.size(); ++c) sq.lift(free[c], c) = ctx.one();
  return sq;
}

bool is_stable(const Subquotient& sq, const Matrix& rho) {
  if (sq.dim_sub() == 0 || sq.dim_quotient() == 0) return true;
  return (sq.projection * rho * sq.inclusion).is_zero();
}

Matrix restrict_to_sub(const Subquotient& sq, const Matrix& rho) {
  if (!is_stable(sq, rho)) throw PreconditionError("subspace is not stable");
  const std::size_t d = sq.dim_sub();
  Matrix out(rho.ctx(), d, d);
  if (d == 0) return out;
  const Matrix image = rho * sq.inclusion;
  // A vector w in A equals sum_i w[pivot_i] a_i; the pivot of a_i is its first nonzero entry.
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t piv = 0;
    while (sq.inclusion(piv, i).is_zero()) ++piv;
    for (std::size_t j = 0; j < d; ++j) out(i, j) = image(piv, j);
  }
  return out;
}

Matrix induce_on_quotient(const Subquotient& sq, const Matrix& rho) {
  if (!is_stable(sq, rho)) throw PreconditionError("subspace is not stable");
  if (sq.dim_quotient() == 0) return Matrix(rho.ctx(), 0, 0);
  return sq.projection * rho * sq.lift;
}

ExactTriple ExactTriple::make(const CyclicModule& B, const std::vector<Vector>& spanning) {
  B.validate();
  auto sq = subquotient(B.field(), B.dim(), spanning);
  CyclicModule A{restrict_to_sub(sq, B.sigma), B.order};
  CyclicModule C{induce_on_quotient(sq, B.sigma), B.order};
  return {B, std::move(sq), std::move(A), std::move(C)};
}

bool splits(const ExactTriple& t) {
  return block_decomposition(t.B) == block_decomposition(t.A) + block_decomposition(t.C);
}

namespace {

std::size_t fixed_dim(const CyclicModule& m) {
  if (m.dim() == 0) return 0;
  return m.dim() - linalg::rank(m.sigma - Matrix::identity(m.field(), m.dim()));
}

}  // namespace

bool invariants_additive(const ExactTriple& t) { return fixed_dim(t.A) + fixed_dim(t.C) == fixed_dim(t.B); }

std::optional<Matrix> equivariant_section(const std::vector<Matrix>& rho_B, const std::vector<Matrix>& rho_C,
                                          const Matrix& projection) {
  if (rho_B.size() != rho_C.size()) throw PreconditionError("representations have different lengths");
  const FieldCtx& k = projection.ctx();
  const std::size_t nb = projection.cols();
  const std::size_t nc = projection.rows();
  if (nc == 0) return Matrix(k, nb, 0);
  auto var = [nc](std::size_t r, std::size_t c) { return r * nc + c; };

  const std::size_t eqs = nc * nc + rho_B.size() * nb * nc;
  Matrix sys(k, eqs, nb * nc);
  Vector rhs = linalg::zero_vector(k, eqs);
  std::size_t row = 0;
  for (std::size_t i = 0; i < nc; ++i) {
    for (std::size_t c = 0; c < nc; ++c, ++row) {
      for (std::size_t r = 0; r < nb; ++r) sys(row, var(r, c)) = projection(i, r);
      if (i == c) rhs[row] = k.one();
    }
  }
  for (std::size_t g = 0; g < rho_B.size(); ++g) {
    const Matrix& b = rho_B[g];
    const Matrix& cm = rho_C[g];
    for (std::size_t r = 0; r < nb; ++r) {
      for (std::size_t c = 0; c < nc; ++c, ++row) {
        for (std::size_t x = 0; x < nb; ++x) sys(row, var(x, c)) = sys(row, var(x, c)) + b(r, x);
        for (std::size_t x = 0; x < nc; ++x) sys(row, var(r, x)) = sys(row, var(r, x)) - cm(x, c);
      }
    }
  }
  const auto sol = linalg::solve(sys, rhs);
  if (!sol) return std::nullopt;
  Matrix s(k, nb, nc);
  for (std::size_t r = 0; r < nb; ++r)
    for (std::size_t c = 0; c < nc; ++c) s(r, c) = (*sol)[var(r, c)];
  return s;
}

Matrix random_invertible(const FieldCtx& ctx, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, ctx.order() - 1);
  for (;;) {
    Matrix m(ctx, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = ctx.element(dist(rng));
    if (linalg::rank(m) == n) return m;
  }
}

ExactTriple random_exact_triple(const FieldCtx& ctx, std::size_t q, std::size_t max_dim, std::mt19937_64& rng) {
  if (max_dim == 0) throw PreconditionError("max_dim must be positive");
  const std::size_t dim = 1 + rng() % max_dim;
  std::vector<std::size_t> sizes;
  for (std::size_t left = dim; left > 0;) {
    const std::size_t s = 1 + rng() % std::min(left, q);
    sizes.push_back(s);
    left -= s;
  }
  const CyclicModule J = block_sum(ctx, sizes, q);
  const Matrix g = random_invertible(ctx, dim, rng);
  const CyclicModule B{g * J.sigma * linalg::inverse(g), q};
  const Matrix nil = B.sigma - Matrix::identity(ctx, dim);

  std::uniform_int_distribution<std::uint64_t> dist(0, ctx.order() - 1);
  const std::size_t gens = 1 + rng() % dim;
  std::deque<Vector> todo;
  for (std::size_t i = 0; i < gens; ++i) {
    Vector v(dim);
    for (auto& e : v) e = ctx.element(dist(rng));
    todo.push_back(std::move(v));
  }
  EchelonBasis span(ctx, dim);
  while (!todo.empty()) {
    Vector v = std::move(todo.front());
    todo.pop_front();
    if (span.insert(v)) todo.push_back(nil * v);
  }
  return ExactTriple::make(B, span.vectors());
}

std::size_t FiniteGroup::inverse(std::size_t g) const {
  for (std::size_t h = 0; h < order(); ++h)
    if (mul[g][h] == identity) return h;
  throw PreconditionError("element has no inverse");
}

void FiniteGroup::validate() const {
  const std::size_t n = order();
  if (identity >= n) throw PreconditionError("identity index out of range");
  for (std::size_t g = 0; g < n; ++g) {
    if (mul[g].size() != n) throw PreconditionError("multiplication table is not square");
    if (mul[g][identity] != g || mul[identity][g] != g) throw PreconditionError("identity does not act trivially");
    std::vector<bool> seen(n, false);
    for (auto h : mul[g]) {
      if (h >= n || seen[h]) throw PreconditionError("multiplication table row is not a permutation");
      seen[h] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) throw PreconditionError("multiplication is not associative");
}

void check_representation(const FiniteGroup& G, const Representation& rho) {
  if (rho.size() != G.order()) throw PreconditionError("representation needs one matrix per group element");
  if (!rho[G.identity].is_identity()) throw PreconditionError("identity is not represented by 1");
  for (std::size_t a = 0; a < G.order(); ++a)
    for (std::size_t b = 0; b < G.order(); ++b)
      if (!(rho[G.mul[a][b]] == rho[a] * rho[b])) throw PreconditionError("map is not a representation");
}

std::vector<std::size_t> right_coset_representatives(const FiniteGroup& G, const std::vector<std::size_t>& P) {
  std::vector<bool> in_p(G.order(), false);
  for (auto h : P) {
    if (h >= G.order()) throw PreconditionError("subgroup element out of range");
    in_p[h] = true;
  }
  if (!in_p[G.identity]) throw PreconditionError("subset does not contain the identity");
  for (auto a : P)
    for (auto b : P)
      if (!in_p[G.mul[a][b]]) throw PreconditionError("subset is not closed under multiplication");

  std::vector<bool> covered(G.order(), false);
  std::vector<std::size_t> reps;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (auto h : P) covered[G.mul[h][g]] = true;
  }
  return reps;
}

Matrix average_section(const FiniteGroup& G, const std::vector<std::size_t>& P, const Matrix& section,
                       const Representation& rho_B, const Representation& rho_C, const Matrix& projection) {
  G.validate();
  check_representation(G, rho_B);
  check_representation(G, rho_C);
  const FieldCtx& k = projection.ctx();
  const auto reps = right_coset_representatives(G, P);
  const auto m = k.from_int(static_cast<long long>(reps.size()));
  if (m.is_zero()) throw PreconditionError("index [G:P] = " + std::to_string(reps.size()) + " vanishes in the field");

  const std::size_t nc = projection.rows();
  const Matrix id_c = Matrix::identity(k, nc);
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (!(projection * rho_B[g] == rho_C[g] * projection)) throw PreconditionError("projection is not equivariant");
  }
  if (!(projection * section == id_c)) throw PreconditionError("input is not a section of the projection");
  for (auto h : P) {
    if (!(rho_B[h] * section == section * rho_C[h])) throw PreconditionError("input section is not P-equivariant");
  }

  Matrix sum(k, section.rows(), section.cols());
  for (auto g : reps) sum = sum + rho_B[G.inverse(g)] * section * rho_C[g];
  const Matrix avg = sum.scaled(m.inv());

  for (std::size_t g = 0; g < G.order(); ++g) {
    if (!(rho_B[g] * avg == avg * rho_C[g])) throw InconsistencyError("averaged section is not G-equivariant");
  }
  if (!(projection * avg == id_c)) throw InconsistencyError("averaged map is not a section");
  return avg;
}

}  // namespace hodgesplit::modrep
