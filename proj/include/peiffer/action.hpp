#ifndef PEIFFER_ACTION_HPP_
#define PEIFFER_ACTION_HPP_

// Group actions as full tables psi(a, x), the canonical actions, the
// semidirect product, and the point <-> action correspondence.
//
// Semidirect convention used throughout the library: X x| A has elements
// (x, a), stored at index x * |A| + a, with
//
//   (x, a)(x', a') = (x psi(a, x'), a a').
//
// Hence jA(a) jX(x) jA(a)^-1 = jX(psi(a, x)).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "peiffer/group.hpp"

namespace peiffer {

  inline constexpr std::size_t default_semidirect_cap = 4096;

  // Checks that a raw table is an action of `acting` on `target`: unit,
  // composition, and each psi(a, -) an automorphism. Throws InvalidInput on
  // a dimension mismatch or out-of-range entry.
  inline std::optional<Violation> check_action(FiniteGroup const& acting,
                                               FiniteGroup const& target,
                                               Table const&       table) {
    std::size_t const na = acting.order(), nx = target.order();
    if (table.size() != na) {
      throw InvalidInput("action table has " + std::to_string(table.size())
                         + " rows, acting group has order "
                         + std::to_string(na));
    }
    for (auto const& row : table) {
      if (row.size() != nx) {
        throw InvalidInput("action table row has " + std::to_string(row.size())
                           + " entries, target group has order "
                           + std::to_string(nx));
      }
      for (Elem y : row) {
        if (y >= nx) {
          throw InvalidInput("action table entry " + std::to_string(y)
                             + " is outside the target group");
        }
      }
    }
    Elem const e = acting.identity();
    for (Elem x = 0; x < nx; ++x) {
      if (table[e][x] != x) {
        return Violation{"unit", {x}, "psi(e, x) != x"};
      }
    }
    for (Elem a = 0; a < na; ++a) {
      for (Elem b = 0; b < na; ++b) {
        for (Elem x = 0; x < nx; ++x) {
          if (table[acting.mul(a, b)][x] != table[a][table[b][x]]) {
            return Violation{
                "composition", {a, b, x}, "psi(ab, x) != psi(a, psi(b, x))"};
          }
        }
      }
    }
    for (Elem a = 0; a < na; ++a) {
      std::vector<bool> hit(nx, false);
      for (Elem x = 0; x < nx; ++x) {
        if (hit[table[a][x]]) {
          return Violation{"automorphism", {a, x}, "psi(a, -) is not injective"};
        }
        hit[table[a][x]] = true;
      }
      for (Elem x = 0; x < nx; ++x) {
        for (Elem y = 0; y < nx; ++y) {
          if (table[a][target.mul(x, y)]
              != target.mul(table[a][x], table[a][y])) {
            return Violation{"automorphism",
                             {a, x, y},
                             "psi(a, xy) != psi(a, x) psi(a, y)"};
          }
        }
      }
    }
    return std::nullopt;
  }

  class Action {
   public:
    static Action make(FiniteGroup acting, FiniteGroup target,
                       Table const& table) {
      if (auto v = check_action(acting, target, table)) {
        throw InvalidInput("not an action: " + v->message());
      }
      return unchecked(std::move(acting), std::move(target), table);
    }

    static Action unchecked(FiniteGroup acting, FiniteGroup target,
                            Table const& table) {
      std::vector<Elem> flat;
      flat.reserve(acting.order() * target.order());
      for (auto const& row : table) {
        flat.insert(flat.end(), row.begin(), row.end());
      }
      return Action(std::move(acting), std::move(target), std::move(flat));
    }

    static Action from_flat(FiniteGroup acting, FiniteGroup target,
                            std::vector<Elem> flat) {
      return Action(std::move(acting), std::move(target), std::move(flat));
    }

    Elem operator()(Elem a, Elem x) const noexcept {
      return table_[a * target_.order() + x];
    }

    FiniteGroup const& acting() const noexcept {
      return acting_;
    }

    FiniteGroup const& target() const noexcept {
      return target_;
    }

    Table table() const {
      Table t(acting_.order(), std::vector<Elem>(target_.order()));
      for (Elem a = 0; a < acting_.order(); ++a) {
        for (Elem x = 0; x < target_.order(); ++x) {
          t[a][x] = (*this)(a, x);
        }
      }
      return t;
    }

    bool is_trivial() const noexcept {
      for (Elem a = 0; a < acting_.order(); ++a) {
        for (Elem x = 0; x < target_.order(); ++x) {
          if ((*this)(a, x) != x) {
            return false;
          }
        }
      }
      return true;
    }

    friend bool operator==(Action const& p, Action const& q) {
      return p.table_ == q.table_ && p.acting_ == q.acting_
             && p.target_ == q.target_;
    }

   private:
    Action(FiniteGroup acting, FiniteGroup target, std::vector<Elem> flat)
        : acting_(std::move(acting)),
          target_(std::move(target)),
          table_(std::move(flat)) {}

    FiniteGroup       acting_;
    FiniteGroup       target_;
    std::vector<Elem> table_;
  };

  inline Action trivial_action(FiniteGroup const& acting,
                               FiniteGroup const& target) {
    std::vector<Elem> flat;
    flat.reserve(acting.order() * target.order());
    for (Elem a = 0; a < acting.order(); ++a) {
      for (Elem x = 0; x < target.order(); ++x) {
        flat.push_back(x);
      }
    }
    return Action::from_flat(acting, target, std::move(flat));
  }

  // psi(a, x) = a x a^-1
  inline Action conjugation_action(FiniteGroup const& g) {
    std::vector<Elem> flat;
    flat.reserve(g.order() * g.order());
    for (Elem a = 0; a < g.order(); ++a) {
      for (Elem x = 0; x < g.order(); ++x) {
        flat.push_back(g.conj(a, x));
      }
    }
    return Action::from_flat(g, g, std::move(flat));
  }

  // psi'(a, x) = psi(f(a), x)
  inline Action pullback(Hom const& f, Action const& psi) {
    if (!(f.cod() == psi.acting())) {
      throw PreconditionFailed(
          "pullback: codomain of the map is not the acting group");
    }
    std::vector<Elem> flat;
    flat.reserve(f.dom().order() * psi.target().order());
    for (Elem a = 0; a < f.dom().order(); ++a) {
      for (Elem x = 0; x < psi.target().order(); ++x) {
        flat.push_back(psi(f(a), x));
      }
    }
    return Action::from_flat(f.dom(), psi.target(), std::move(flat));
  }

  // Row a of the action as a map target -> target.
  inline Hom action_automorphism(Action const& psi, Elem a) {
    std::vector<Elem> m(psi.target().order());
    for (Elem x = 0; x < m.size(); ++x) {
      m[x] = psi(a, x);
    }
    return Hom::unchecked(psi.target(), psi.target(), std::move(m));
  }

  ////////////////////////////////////////////////////////////////////////
  // Semidirect product
  ////////////////////////////////////////////////////////////////////////

  struct SemidirectData {
    FiniteGroup group;
    Hom         jX;  // kernel inclusion
    Hom         jA;  // section
    Hom         pi;  // projection onto A
    std::size_t acting_order = 1;

    Elem element(Elem x, Elem a) const noexcept {
      return static_cast<Elem>(x * acting_order + a);
    }

    std::pair<Elem, Elem> components(Elem g) const noexcept {
      return {static_cast<Elem>(g / acting_order),
              static_cast<Elem>(g % acting_order)};
    }
  };

  inline SemidirectData semidirect(Action const& psi,
                                   std::size_t   cap = default_semidirect_cap) {
    FiniteGroup const& a_grp = psi.acting();
    FiniteGroup const& x_grp = psi.target();
    std::size_t const  na = a_grp.order(), nx = x_grp.order();
    std::size_t const  n = na * nx;
    if (n > cap) {
      throw CapExceeded("semidirect product of order " + std::to_string(n)
                        + " exceeds cap " + std::to_string(cap));
    }
    Table t(n, std::vector<Elem>(n));
    for (Elem g = 0; g < n; ++g) {
      Elem const x = static_cast<Elem>(g / na), a = static_cast<Elem>(g % na);
      for (Elem h = 0; h < n; ++h) {
        Elem const x2 = static_cast<Elem>(h / na), a2 = static_cast<Elem>(h % na);
        t[g][h] = static_cast<Elem>(x_grp.mul(x, psi(a, x2)) * na
                                    + a_grp.mul(a, a2));
      }
    }
    std::string name;
    if (!x_grp.name().empty() && !a_grp.name().empty()) {
      name = x_grp.name() + "x|" + a_grp.name();
    }
    auto              grp = FiniteGroup::from_table(t, std::move(name));
    std::vector<Elem> jx(nx), ja(na), pi(n);
    for (Elem x = 0; x < nx; ++x) {
      jx[x] = static_cast<Elem>(x * na + a_grp.identity());
    }
    for (Elem a = 0; a < na; ++a) {
      ja[a] = static_cast<Elem>(x_grp.identity() * na + a);
    }
    for (Elem g = 0; g < n; ++g) {
      pi[g] = static_cast<Elem>(g % na);
    }
    return SemidirectData{grp,
                          Hom::unchecked(x_grp, grp, std::move(jx)),
                          Hom::unchecked(a_grp, grp, std::move(ja)),
                          Hom::unchecked(grp, a_grp, std::move(pi)),
                          na};
  }

  ////////////////////////////////////////////////////////////////////////
  // Points
  ////////////////////////////////////////////////////////////////////////

  // A split epimorphism p : E -> B with splitting s : B -> E.
  struct Point {
    Hom p;
    Hom s;
  };

  inline Point point_of(SemidirectData const& sd) {
    return Point{sd.pi, sd.jA};
  }

  struct PointAction {
    Action action;          // B acting on the kernel of p
    Hom    kernel_inclusion;  // K_p -> E
  };

  // The action of B on K_p by conjugation through s.
  inline PointAction point_to_action(Point const& pt) {
    if (!(pt.p.cod() == pt.s.dom()) || !(pt.s.cod() == pt.p.dom())) {
      throw PreconditionFailed("point: p and s are not composable");
    }
    for (Elem b = 0; b < pt.p.cod().order(); ++b) {
      if (pt.p(pt.s(b)) != b) {
        throw PreconditionFailed("point: p o s is not the identity at "
                                 + std::to_string(b));
      }
    }
    FiniteGroup const& e_grp  = pt.p.dom();
    FiniteGroup const& b_grp  = pt.p.cod();
    auto               kernel = as_group(pt.p.kernel(), "K");
    auto const&        incl   = kernel.inclusion.map();
    std::vector<Elem>  index(e_grp.order(), 0);
    for (Elem i = 0; i < incl.size(); ++i) {
      index[incl[i]] = i;
    }
    auto const        kmask = pt.p.kernel();
    std::vector<Elem> flat;
    flat.reserve(b_grp.order() * kernel.group.order());
    for (Elem b = 0; b < b_grp.order(); ++b) {
      for (Elem k = 0; k < kernel.group.order(); ++k) {
        Elem const c = e_grp.conj(pt.s(b), incl[k]);
        if (!kmask.contains(c)) {
          throw PreconditionFailed("point: conjugate leaves the kernel");
        }
        flat.push_back(index[c]);
      }
    }
    return PointAction{
        Action::from_flat(b_grp, kernel.group, std::move(flat)),
        kernel.inclusion};
  }

  // The comparison K_p x| B -> E, (k, b) |-> k s(b). It is an isomorphism
  // over B for every point.
  inline Hom semidirect_comparison(Point const& pt, PointAction const& pa,
                                   SemidirectData const& sd) {
    FiniteGroup const& e_grp = pt.p.dom();
    std::vector<Elem>  m(sd.group.order());
    for (Elem g = 0; g < m.size(); ++g) {
      auto [k, b] = sd.components(g);
      m[g]        = e_grp.mul(pa.kernel_inclusion(k), pt.s(b));
    }
    return Hom::make(sd.group, e_grp, std::move(m));
  }

}  // namespace peiffer

#endif  // PEIFFER_ACTION_HPP_
