#ifndef PEIFFER_LIE_CATALOG_HPP_
#define PEIFFER_LIE_CATALOG_HPP_

// Small Lie algebras and crossed modules used as fixtures.

#include <cstddef>
#include <optional>
#include <string_view>

#include "peiffer/lie.hpp"

namespace peiffer::lie_catalog {

  inline LieAlgebra abelian(std::size_t d) {
    return LieAlgebra::abelian(d);
  }

  // Basis (x, y) with [x, y] = y.
  inline LieAlgebra affine2() {
    return LieAlgebra::from_brackets(2, {{{0, 1}, Vector{0, 1}}});
  }

  // Basis (e, f, h) with [e, f] = h, [h, e] = 2e, [h, f] = -2f.
  inline LieAlgebra sl2() {
    return LieAlgebra::from_brackets(3, {{{0, 1}, Vector{0, 0, 1}},
                                         {{2, 0}, Vector{2, 0, 0}},
                                         {{2, 1}, Vector{0, -2, 0}}});
  }

  // Basis (x, y, z) with [x, y] = z.
  inline LieAlgebra heisenberg() {
    return LieAlgebra::from_brackets(3, {{{0, 1}, Vector{0, 0, 1}}});
  }

  // "0", "ab<d>", "aff2", "sl2", "heis".
  inline std::optional<LieAlgebra> by_name(std::string_view name) {
    if (name == "0") {
      return abelian(0);
    }
    if (name == "aff2") {
      return affine2();
    }
    if (name == "sl2") {
      return sl2();
    }
    if (name == "heis") {
      return heisenberg();
    }
    if (name.size() > 2 && name.substr(0, 2) == "ab") {
      std::size_t d = 0;
      for (char c : name.substr(2)) {
        if (c < '0' || c > '9' || d > 64) {
          return std::nullopt;
        }
        d = d * 10 + static_cast<std::size_t>(c - '0');
      }
      return abelian(d);
    }
    return std::nullopt;
  }

  // Inclusion of a 1-dim subspace spanned by basis vector `k` of l, assumed
  // to be an ideal, with the adjoint action restricted to it.
  inline LieCrossedModule line_ideal_xmod(LieAlgebra const& l, std::size_t k) {
    Matrix boundary(l.dim(), 1);
    boundary(k, 0) = 1;
    std::vector<Matrix> rho;
    for (std::size_t i = 0; i < l.dim(); ++i) {
      Vector const v = l.bracket(l.basis(i), l.basis(k));
      for (std::size_t j = 0; j < l.dim(); ++j) {
        if (j != k && v[j] != 0) {
          throw PreconditionFailed("basis line is not an ideal");
        }
      }
      Matrix r(1, 1);
      r(0, 0) = v[k];
      rho.push_back(std::move(r));
    }
    return LieCrossedModule{boundary,
                            LieAction::make(l, abelian(1), std::move(rho))};
  }

  // <y> in the affine algebra.
  inline LieCrossedModule affine_ideal_xmod() {
    return line_ideal_xmod(affine2(), 1);
  }

  // Centre <z> of the Heisenberg algebra.
  inline LieCrossedModule heisenberg_centre_xmod() {
    return line_ideal_xmod(heisenberg(), 2);
  }

  // 1-dim abelian algebras acting on each other by the identity scalar.
  inline LieMutualActions scalar_pair() {
    std::vector<Matrix> one{Matrix::identity(1)};
    return LieMutualActions::make(
        LieAction::make(abelian(1), abelian(1), one),
        LieAction::make(abelian(1), abelian(1), one));
  }

}  // namespace peiffer::lie_catalog

#endif  // PEIFFER_LIE_CATALOG_HPP_
