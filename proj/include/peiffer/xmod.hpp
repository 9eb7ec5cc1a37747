#ifndef PEIFFER_XMOD_HPP_
#define PEIFFER_XMOD_HPP_

#include <optional>
#include <utility>

#include "peiffer/action.hpp"
#include "peiffer/compat.hpp"
#include "peiffer/group.hpp"

namespace peiffer {

  // Boundary d : X -> A together with an action of A on X.
  struct CrossedModule {
    Hom    boundary;
    Action action;

    static CrossedModule make(Hom boundary, Action action) {
      if (!(boundary.dom() == action.target())
          || !(boundary.cod() == action.acting())) {
        throw InvalidInput("crossed module: boundary X -> A and action of A "
                           "on X refer to different groups");
      }
      return CrossedModule{std::move(boundary), std::move(action)};
    }

    FiniteGroup const& dom() const noexcept {
      return boundary.dom();
    }

    FiniteGroup const& cod() const noexcept {
      return boundary.cod();
    }
  };

  // First failure of
  //   precrossed: d(psi(a, x)) == a d(x) a^-1   scanning (a, x)
  //   peiffer:    psi(d(x), x') == x x' x^-1     scanning (x, x')
  // Throws InvalidInput on a structural mismatch.
  inline std::optional<Violation> check_xmod(CrossedModule const& xm) {
    if (!(xm.boundary.dom() == xm.action.target())
        || !(xm.boundary.cod() == xm.action.acting())) {
      throw InvalidInput("crossed module: inconsistent groups");
    }
    FiniteGroup const& a_grp = xm.cod();
    FiniteGroup const& x_grp = xm.dom();
    for (Elem a = 0; a < a_grp.order(); ++a) {
      for (Elem x = 0; x < x_grp.order(); ++x) {
        if (xm.boundary(xm.action(a, x)) != a_grp.conj(a, xm.boundary(x))) {
          return Violation{"precrossed", {a, x}, "d(a.x) != a d(x) a^-1"};
        }
      }
    }
    for (Elem x = 0; x < x_grp.order(); ++x) {
      for (Elem y = 0; y < x_grp.order(); ++y) {
        if (xm.action(xm.boundary(x), y) != x_grp.conj(x, y)) {
          return Violation{"peiffer", {x, y}, "d(x).x' != x x' x^-1"};
        }
      }
    }
    return std::nullopt;
  }

  // Actions of M on N and N on M obtained by pulling the actions of L back
  // along the boundaries: xi_mn(m, n) = psi_N(mu(m), n) and
  // xi_nm(n, m) = psi_M(nu(n), m).
  inline MutualActions induced_mutual_actions(CrossedModule const& xm_m,
                                              CrossedModule const& xm_n) {
    if (!(xm_m.cod() == xm_n.cod())) {
      throw PreconditionFailed(
          "induced actions: the crossed modules have different codomains");
    }
    if (auto v = check_xmod(xm_m)) {
      throw PreconditionFailed("first crossed module is invalid: "
                               + v->message());
    }
    if (auto v = check_xmod(xm_n)) {
      throw PreconditionFailed("second crossed module is invalid: "
                               + v->message());
    }
    return MutualActions::make(pullback(xm_n.boundary, xm_m.action),
                               pullback(xm_m.boundary, xm_n.action));
  }

  // (G, id, conjugation)
  inline CrossedModule identity_xmod(FiniteGroup const& g) {
    return CrossedModule{Hom::identity(g), conjugation_action(g)};
  }

  // Inclusion of a normal subgroup with the conjugation action.
  inline CrossedModule normal_subgroup_xmod(ElementSet const& normal) {
    if (!normal.is_normal()) {
      throw PreconditionFailed("subset is not a normal subgroup");
    }
    auto              sub = as_group(normal);
    FiniteGroup const& g  = normal.group();
    std::vector<Elem> index(g.order(), 0);
    auto const&       incl = sub.inclusion.map();
    for (Elem i = 0; i < incl.size(); ++i) {
      index[incl[i]] = i;
    }
    Table t(g.order(), std::vector<Elem>(sub.group.order()));
    for (Elem a = 0; a < g.order(); ++a) {
      for (Elem k = 0; k < sub.group.order(); ++k) {
        t[a][k] = index[g.conj(a, incl[k])];
      }
    }
    return CrossedModule{sub.inclusion,
                         Action::unchecked(g, sub.group, t)};
  }

}  // namespace peiffer

#endif  // PEIFFER_XMOD_HPP_
