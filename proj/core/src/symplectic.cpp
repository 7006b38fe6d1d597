#include "cobalex/symplectic.hpp"

#include <string>

#include "cobalex/error.hpp"

namespace cobalex {

IntMatrix SymplecticSpace::form() const {
  IntMatrix j(dim(), dim());
  for (unsigned i = 0; i < genus; ++i) {
    j(a(i), b(i)) = 1;
    j(b(i), a(i)) = -1;
  }
  return j;
}

MultiVector symplectic_element(const SymplecticSpace& space) {
  MultiVector omega(space.dim());
  for (unsigned i = 0; i < space.genus; ++i)
    omega.add_term((Subset{1} << space.a(i)) | (Subset{1} << space.b(i)), 1);
  return omega;
}

IntMatrix lefschetz_matrix(const SymplecticSpace& space, int i) {
  const unsigned n = space.dim();
  if (i < 0 || i > static_cast<int>(n)) throw Error(ErrorKind::OutOfRange, "Lefschetz source degree");
  const auto src = subsets_of_size(n, static_cast<unsigned>(i));
  const std::size_t target_dim = binomial(static_cast<long>(n), static_cast<long>(i) + 2);
  IntMatrix m(target_dim, src.size());
  if (target_dim == 0) return m;
  for (std::size_t c = 0; c < src.size(); ++c) {
    for (unsigned k = 0; k < space.genus; ++k) {
      const Subset pair = (Subset{1} << space.a(k)) | (Subset{1} << space.b(k));
      const int sign = wedge_sign(pair, src[c]);
      if (sign == 0) continue;
      m(subset_rank(n, pair | src[c]), c) += sign;
    }
  }
  return m;
}

RatMatrix lefschetz_power(const SymplecticSpace& space, int i, int p) {
  const long n = space.dim();
  if (i < 0 || i > n || p < 0) throw Error(ErrorKind::OutOfRange, "Lefschetz power degrees");
  RatMatrix acc = RatMatrix::identity(binomial(n, i));
  for (int step = 0; step < p; ++step) {
    const int deg = i + 2 * step;
    if (deg + 2 > n) return RatMatrix(0, binomial(n, i));
    acc = to_rational(lefschetz_matrix(space, deg)) * acc;
  }
  return acc;
}

RatMatrix primitive_basis(const SymplecticSpace& space, int i) {
  const long g = space.genus;
  if (i < 0) return RatMatrix(0, 0);
  if (i > g) return RatMatrix(binomial(static_cast<long>(space.dim()), i), 0);
  const RatMatrix power = lefschetz_power(space, i, static_cast<int>(g) - i + 1);
  if (power.rows() == 0) return RatMatrix::identity(binomial(static_cast<long>(space.dim()), i));
  return kernel_basis(power);
}

std::uint64_t primitive_dimension(unsigned genus, long i) {
  if (i < 0 || i > static_cast<long>(genus)) return 0;
  const long n = 2 * static_cast<long>(genus);
  return binomial(n, i) - binomial(n, i - 2);
}

std::uint64_t modified_primitive_dimension(unsigned genus, long j) {
  if (j < 0 || j > static_cast<long>(genus)) return 0;
  return primitive_dimension(genus, static_cast<long>(genus) - j);
}

std::uint64_t modified_exterior_dimension(unsigned genus, long i) {
  return binomial(2 * static_cast<long>(genus), static_cast<long>(genus) - i);
}

MultiVector PrimitiveDecomposition::recombine(const SymplecticSpace& space) const {
  const MultiVector omega = symplectic_element(space);
  MultiVector total(space.dim());
  MultiVector omega_power = MultiVector::scalar(space.dim(), 1);
  for (const auto& p : components) {
    total += wedge(omega_power, p);
    omega_power = wedge(omega_power, omega);
  }
  return total;
}

PrimitiveDecomposition lefschetz_decompose(const SymplecticSpace& space, const MultiVector& x, int degree) {
  if (degree < 0) throw Error(ErrorKind::OutOfRange, "negative degree");
  if (degree > static_cast<int>(space.genus)) {
    throw Error(ErrorKind::DegreeAboveMiddle,
                "degree " + std::to_string(degree) + " above genus " + std::to_string(space.genus));
  }
  if (x.ambient_dim() != space.dim()) throw Error(ErrorKind::DimensionMismatch, "multivector ambient dimension");
  if (!(x.homogeneous(static_cast<unsigned>(degree)) == x)) {
    throw Error(ErrorKind::InvalidInput, "input is not homogeneous of the stated degree");
  }

  // Columns: L^j applied to a basis of P^{i-2j}, for each j.
  std::vector<RatMatrix> bases;
  RatMatrix system(binomial(static_cast<long>(space.dim()), degree), 0);
  for (int j = 0; 2 * j <= degree; ++j) {
    const int m = degree - 2 * j;
    bases.push_back(primitive_basis(space, m));
    system = hstack(system, lefschetz_power(space, m, j) * bases.back());
  }
  const auto coords = x.coordinates(static_cast<unsigned>(degree));
  const auto solution = solve(system, coords);
  if (!solution) throw Error(ErrorKind::InvalidInput, "Lefschetz decomposition system is inconsistent");

  PrimitiveDecomposition out;
  out.source_degree = degree;
  std::size_t offset = 0;
  for (std::size_t j = 0; j < bases.size(); ++j) {
    const RatMatrix& b = bases[j];
    std::vector<mpq_class> c(solution->begin() + static_cast<long>(offset),
                             solution->begin() + static_cast<long>(offset + b.cols()));
    offset += b.cols();
    const auto p = b.apply(c);
    out.components.push_back(MultiVector::from_coordinates(space.dim(), static_cast<unsigned>(degree - 2 * static_cast<int>(j)), p));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> isotropy_defects(const IntMatrix& gamma_basis, unsigned g0,
                                                                  unsigned g1) {
  const unsigned n0 = 2 * g0, n1 = 2 * g1;
  if (gamma_basis.rows() != n0 + n1) throw Error(ErrorKind::DimensionMismatch, "lattice basis row count");
  const IntMatrix j0 = SymplecticSpace{g0}.form();
  const IntMatrix j1 = SymplecticSpace{g1}.form();
  IntMatrix form(n0 + n1, n0 + n1);
  for (unsigned r = 0; r < n0; ++r)
    for (unsigned c = 0; c < n0; ++c) form(r, c) = j0(r, c);
  for (unsigned r = 0; r < n1; ++r)
    for (unsigned c = 0; c < n1; ++c) form(n0 + r, n0 + c) = -j1(r, c);
  const IntMatrix pairing = gamma_basis.transpose() * form * gamma_basis;
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t r = 0; r < pairing.rows(); ++r)
    for (std::size_t c = r + 1; c < pairing.cols(); ++c)
      if (pairing(r, c) != 0) bad.emplace_back(r, c);
  return bad;
}

bool is_lagrangian(const IntMatrix& gamma_basis, unsigned g0, unsigned g1) {
  return gamma_basis.cols() == g0 + g1 && rank(gamma_basis) == g0 + g1 &&
         isotropy_defects(gamma_basis, g0, g1).empty();
}

RatMatrix primitive_restriction(const SymplecticSpace& space0, const SymplecticSpace& space1,
                                const IntMatrix& gamma_basis, int j) {
  if (!is_lagrangian(gamma_basis, space0.genus, space1.genus)) {
    throw Error(ErrorKind::NotLagrangian, "Γ is not Lagrangian for (ω0, -ω1)");
  }
  if (j < 0 || j > static_cast<int>(std::min(space0.genus, space1.genus))) {
    throw Error(ErrorKind::OutOfRange, "primitive index j out of range");
  }
  const int source_degree = static_cast<int>(space0.genus) - j;
  const int target_degree = static_cast<int>(space1.genus) - j;
  const GradedMap gm = correspondence_map(gamma_basis, space0.dim());
  const RatMatrix block = gm.block(static_cast<unsigned>(source_degree)).dense();
  const RatMatrix source = primitive_basis(space0, source_degree);
  const RatMatrix target = primitive_basis(space1, target_degree);
  const RatMatrix image = block * source;

  RatMatrix out(target.cols(), source.cols());
  for (std::size_t c = 0; c < image.cols(); ++c) {
    const auto y = image.column(c);
    const auto coords = solve(target, y);
    if (!coords) {
      throw Error(ErrorKind::PrimitivityViolated,
                  "image of primitive basis vector " + std::to_string(c) + " leaves P_(" + std::to_string(j) + ")");
    }
    out.set_column(c, *coords);
  }
  return out;
}

}  // namespace cobalex
