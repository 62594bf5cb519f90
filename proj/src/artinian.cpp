#include "lefkit/artinian.hpp"

namespace lefkit {

const std::vector<Monomial>& ArtinianAlgebra::basis(int d) const {
  static const std::vector<Monomial> empty;
  if (d < 0 || d > socle_degree_) return empty;
  return std_monomials_[static_cast<std::size_t>(d)];
}

std::vector<Fp> ArtinianAlgebra::coordinates(const Polynomial& f,
                                             int d) const {
  return f.coefficient_vector(basis(d));
}

Matrix ArtinianAlgebra::variable_multiplication(std::size_t k, int d) const {
  const std::vector<Monomial>& src = basis(d);
  const std::vector<Monomial>& dst = basis(d + 1);
  Matrix m(field(), dst.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    Polynomial image =
        nf(Polynomial::monomial(field(), src[col].times(Monomial::variable(n_vars(), k))));
    std::vector<Fp> coords = image.coefficient_vector(dst);
    for (std::size_t row = 0; row < dst.size(); ++row)
      m.at(row, col) = coords[row];
  }
  return m;
}

ArtinianAlgebra make_artinian_algebra(const GroebnerBasis& gb) {
  for (const Polynomial& g : gb.generators())
    if (!g.is_zero() && g.degree() == 0)
      throw Error("make_artinian_algebra: ideal contains a unit");

  for (std::size_t v = 0; v < gb.n_vars(); ++v) {
    bool has_power = false;
    for (const Polynomial& g : gb.generators()) {
      const Monomial& lt = g.leading_term().mono;
      if (lt.exponent(v) == lt.degree()) {
        has_power = true;
        break;
      }
    }
    if (!has_power)
      throw NonArtinianError(
          v, "quotient is not finite-dimensional: no pure power of variable #" +
                 std::to_string(v) + " among the leading terms");
  }

  ArtinianAlgebra A(gb);
  for (int d = 0;; ++d) {
    std::vector<Monomial> mons = standard_monomials(gb, d);
    if (mons.empty()) break;
    A.std_monomials_.push_back(std::move(mons));
    A.h_vector_.push_back(
        static_cast<long long>(A.std_monomials_.back().size()));
  }
  if (A.h_vector_.empty())
    throw Error("make_artinian_algebra: zero ring (1 lies in the ideal)");
  A.socle_degree_ = static_cast<int>(A.h_vector_.size()) - 1;
  return A;
}

std::vector<long long> socle_dimensions(const ArtinianAlgebra& A) {
  std::vector<long long> dims;
  for (int d = 0; d <= A.socle_degree(); ++d) {
    std::size_t src = A.basis(d).size();
    std::size_t dst = A.basis(d + 1).size();
    Matrix stacked(A.field(), dst * A.n_vars(), src);
    for (std::size_t k = 0; k < A.n_vars(); ++k) {
      Matrix mk = A.variable_multiplication(k, d);
      for (std::size_t i = 0; i < dst; ++i)
        for (std::size_t j = 0; j < src; ++j)
          stacked.at(k * dst + i, j) = mk.at(i, j);
    }
    dims.push_back(static_cast<long long>(src - stacked.rank()));
  }
  return dims;
}

} // namespace lefkit
