#ifndef PEIFFER_PEIFFER_HPP_
#define PEIFFER_PEIFFER_HPP_

// The Peiffer product of two groups acting on each other.
//
// P is built as a quotient of the finite semidirect product M x| N (N acting
// on M) rather than of the infinite free product M + N: the relators
// (n.m) n m^-1 n^-1 already vanish in M x| N, so only the normal closure of
//
//   jM(m) jN(n) jM(m)^-1 jN(m.n)^-1
//
// remains to be divided out. The construction is total; the induced actions
// of P on M and N exist exactly when the mutual actions are compatible, and
// that is checked over every preimage rather than assumed.

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "peiffer/action.hpp"
#include "peiffer/compat.hpp"
#include "peiffer/freeword.hpp"
#include "peiffer/group.hpp"
#include "peiffer/xmod.hpp"

namespace peiffer {

  struct PeifferOptions {
    std::size_t semidirect_cap    = default_semidirect_cap;
    std::size_t strong_word_bound = 2;
  };

  // Raised when the action of M + N on M or N does not descend to P. Two
  // words with the same image in P act differently on `x`.
  class NotWellDefined : public Error {
   public:
    NotWellDefined(Side side, Elem coset, std::vector<Letter> first,
                   std::vector<Letter> second, Elem x, Elem first_value,
                   Elem second_value)
        : Error(describe(side, coset, first, second, x, first_value,
                         second_value)),
          side(side),
          coset(coset),
          first(std::move(first)),
          second(std::move(second)),
          x(x),
          first_value(first_value),
          second_value(second_value) {}

    Side                side;
    Elem                coset;
    std::vector<Letter> first;
    std::vector<Letter> second;
    Elem                x;
    Elem                first_value;
    Elem                second_value;

   private:
    static std::string describe(Side side, Elem coset,
                                std::vector<Letter> const& a,
                                std::vector<Letter> const& b, Elem x, Elem va,
                                Elem vb) {
      auto word = [](std::vector<Letter> const& w) {
        std::string s;
        for (auto l : w) {
          s += (s.empty() ? "" : " ");
          s += (l.side == Side::first ? "M:" : "N:") + std::to_string(l.elem);
        }
        return s.empty() ? std::string("()") : s;
      };
      std::ostringstream os;
      os << "induced action on " << (side == Side::first ? "M" : "N")
         << " is not well defined: coset " << coset << " has preimages ["
         << word(a) << "] and [" << word(b) << "] sending " << x << " to "
         << va << " and " << vb;
      return os.str();
    }
  };

  struct PeifferProduct {
    MutualActions     source;
    SemidirectData    semidirect;       // M x| N, N acting on M
    std::vector<Elem> relators;         // in semidirect.group
    ElementSet        kernel;           // normal closure of the relators
    FiniteGroup       product;          // P
    Hom               from_semidirect;  // M x| N ->> P
    std::vector<Elem> representatives;  // minimal preimage of each element
    Hom               lM;
    Hom               lN;
    bool              compatible = false;
    // (P on M, P on N); present iff the induced actions are well defined.
    std::optional<std::pair<Action, Action>> actions;

    // Word m n in M + N lifting the semidirect element g = (m, n).
    std::vector<Letter> lift(Elem g) const {
      auto [m, n] = semidirect.components(g);
      return {{Side::first, m}, {Side::second, n}};
    }
  };

  // { jM(m) jN(n) jM(m)^-1 jN(m.n)^-1 } in M x| N, sorted, without repeats.
  inline std::vector<Elem> peiffer_relators(MutualActions const&  mut,
                                            SemidirectData const& sd) {
    FiniteGroup const& g = sd.group;
    std::vector<Elem>  out;
    for (Elem m = 0; m < mut.M().order(); ++m) {
      for (Elem n = 0; n < mut.N().order(); ++n) {
        Elem const a = sd.jX(m);
        Elem const r = g.mul(g.mul(g.mul(a, sd.jA(n)), g.inv(a)),
                             g.inv(sd.jA(mut.xi_mn()(m, n))));
        out.push_back(r);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  inline std::vector<Elem> peiffer_relators(MutualActions const& mut,
                                            std::size_t          cap
                                            = default_semidirect_cap) {
    return peiffer_relators(mut, semidirect(mut.xi_nm(), cap));
  }

  inline std::pair<Action, Action> induced_actions(PeifferProduct const& pp);

  inline PeifferProduct peiffer_product(MutualActions const&  mut,
                                        PeifferOptions const& opts = {}) {
    auto sd       = semidirect(mut.xi_nm(), opts.semidirect_cap);
    auto relators = peiffer_relators(mut, sd);
    auto kernel   = normal_closure(sd.group, relators);
    auto q        = quotient(sd.group, kernel);
    Hom  lm       = compose(q.projection, sd.jX);
    Hom  ln       = compose(q.projection, sd.jA);
    PeifferProduct pp{mut,
                      std::move(sd),
                      std::move(relators),
                      std::move(kernel),
                      q.group,
                      q.projection,
                      std::move(q.representatives),
                      std::move(lm),
                      std::move(ln),
                      check_compatible(mut).compatible,
                      std::nullopt};
    try {
      pp.actions = induced_actions(pp);
    } catch (NotWellDefined const&) {
      pp.actions.reset();
    }
    return pp;
  }

  // For each element p of P, psi_P(p, x) is the free-product action of the
  // lift m n of the minimal preimage of p. Well-definedness is checked over
  // every preimage in M x| N and over every product of two lifts, which
  // together say the M + N action factors through P.
  inline std::pair<Action, Action> induced_actions(PeifferProduct const& pp) {
    MutualActions const& mut = pp.source;
    FiniteGroup const&   P   = pp.product;
    FiniteGroup const&   S   = pp.semidirect.group;

    auto build = [&](Side side) {
      FiniteGroup const& target = mut.group(side);
      std::size_t const  nx     = target.order();
      std::vector<Elem>  flat(P.order() * nx);
      for (Elem p = 0; p < P.order(); ++p) {
        auto const w = pp.lift(pp.representatives[p]);
        for (Elem x = 0; x < nx; ++x) {
          flat[p * nx + x] = coproduct_eval(mut, w, side, x);
        }
      }
      for (Elem g = 0; g < S.order(); ++g) {
        Elem const p = pp.from_semidirect(g);
        auto const w = pp.lift(g);
        for (Elem x = 0; x < nx; ++x) {
          Elem const v = coproduct_eval(mut, w, side, x);
          if (v != flat[p * nx + x]) {
            throw NotWellDefined(side, p, pp.lift(pp.representatives[p]), w,
                                 x, flat[p * nx + x], v);
          }
        }
      }
      for (Elem p = 0; p < P.order(); ++p) {
        for (Elem p2 = 0; p2 < P.order(); ++p2) {
          auto w        = pp.lift(pp.representatives[p]);
          auto const w2 = pp.lift(pp.representatives[p2]);
          w.insert(w.end(), w2.begin(), w2.end());
          Elem const pp2 = P.mul(p, p2);
          for (Elem x = 0; x < nx; ++x) {
            Elem const v = coproduct_eval(mut, w, side, x);
            if (v != flat[pp2 * nx + x]) {
              throw NotWellDefined(side, pp2,
                                   pp.lift(pp.representatives[pp2]), w, x,
                                   flat[pp2 * nx + x], v);
            }
          }
        }
      }
      return Action::from_flat(P, target, std::move(flat));
    };
    auto on_m = build(Side::first);
    auto on_n = build(Side::second);
    return {std::move(on_m), std::move(on_n)};
  }

  // (lM : M -> P, P on M) and (lN : N -> P, P on N). Throws NotWellDefined
  // when the actions are not compatible.
  inline std::pair<CrossedModule, CrossedModule>
  peiffer_xmods(PeifferProduct const& pp) {
    auto acts = pp.actions ? *pp.actions : induced_actions(pp);
    CrossedModule xm_m{pp.lM, std::move(acts.first)};
    CrossedModule xm_n{pp.lN, std::move(acts.second)};
    if (auto v = check_xmod(xm_m)) {
      throw std::logic_error("Peiffer crossed module on M: " + v->message());
    }
    if (auto v = check_xmod(xm_n)) {
      throw std::logic_error("Peiffer crossed module on N: " + v->message());
    }
    return {std::move(xm_m), std::move(xm_n)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Strong Peiffer relation
  ////////////////////////////////////////////////////////////////////////

  struct StrongWitness {
    Side                side;
    std::vector<Letter> word;
    Elem                x;
    Elem                lhs;  // image in P of the action value
    Elem                rhs;  // conjugate in P
  };

  struct StrongVerdict {
    bool                         pass;
    std::size_t                  checked = 0;
    std::optional<StrongWitness> witness;
  };

  // Checks q(s.x) == q(s x s^-1) in P for every word s of length 1 to
  // word_bound over nonidentity letters, and every x in M and in N.
  inline StrongVerdict strong_relation_check(PeifferProduct const& pp,
                                             std::size_t word_bound = 2) {
    if (!pp.actions) {
      throw PreconditionFailed(
          "strong relation check needs well-defined induced actions");
    }
    MutualActions const& mut = pp.source;
    FiniteGroup const&   P   = pp.product;
    std::vector<Letter>  alphabet;
    for (Elem m = 0; m < mut.M().order(); ++m) {
      if (!mut.M().is_identity(m)) {
        alphabet.push_back({Side::first, m});
      }
    }
    for (Elem n = 0; n < mut.N().order(); ++n) {
      if (!mut.N().is_identity(n)) {
        alphabet.push_back({Side::second, n});
      }
    }
    auto image = [&](Letter l) {
      return l.side == Side::first ? pp.lM(l.elem) : pp.lN(l.elem);
    };
    StrongVerdict       verdict{true, 0, std::nullopt};
    std::vector<Letter> word;
    auto check_word = [&]() {
      Elem qs = P.identity();
      for (auto l : word) {
        qs = P.mul(qs, image(l));
      }
      for (Side side : {Side::first, Side::second}) {
        for (Elem x = 0; x < mut.group(side).order(); ++x) {
          Elem const v   = coproduct_eval(mut, word, side, x);
          Elem const lhs = image({side, v});
          Elem const rhs = P.conj(qs, image({side, x}));
          ++verdict.checked;
          if (lhs != rhs) {
            verdict.pass    = false;
            verdict.witness = StrongWitness{side, word, x, lhs, rhs};
            return false;
          }
        }
      }
      return true;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t len) {
      if (!word.empty() && !check_word()) {
        return false;
      }
      if (len == word_bound) {
        return true;
      }
      for (auto l : alphabet) {
        word.push_back(l);
        bool ok = rec(len + 1);
        word.pop_back();
        if (!ok) {
          return false;
        }
      }
      return true;
    };
    rec(0);
    return verdict;
  }

  ////////////////////////////////////////////////////////////////////////
  // Universal property
  ////////////////////////////////////////////////////////////////////////

  // The unique h : P -> L with h lM = mu and h lN = nu, for crossed modules
  // (M, mu, L) and (N, nu, L) inducing the source actions of pp. Built from
  // (m, n) |-> mu(m) nu(n) on M x| N; uniqueness holds because the images
  // of lM and lN generate P, which is verified.
  inline Hom universal_map(PeifferProduct const& pp, CrossedModule const& xm_m,
                           CrossedModule const& xm_n) {
    auto const induced = induced_mutual_actions(xm_m, xm_n);
    if (!(induced == pp.source)) {
      throw PreconditionFailed("universal map: the crossed modules induce "
                               "different mutual actions");
    }
    FiniteGroup const& S = pp.semidirect.group;
    FiniteGroup const& L = xm_m.cod();
    std::vector<Elem>  h(S.order());
    for (Elem g = 0; g < S.order(); ++g) {
      auto [m, n] = pp.semidirect.components(g);
      h[g]        = L.mul(xm_m.boundary(m), xm_n.boundary(n));
    }
    if (auto v = hom_violation(S, L, h)) {
      throw PreconditionFailed(
          "universal map: (m, n) |-> mu(m) nu(n) is not a homomorphism on "
          "M x| N at ("
          + std::to_string(v->first) + ", " + std::to_string(v->second) + ")");
    }
    for (Elem r : pp.relators) {
      if (!L.is_identity(h[r])) {
        throw PreconditionFailed("universal map: relator "
                                 + std::to_string(r) + " is not killed");
      }
    }
    for (Elem k : pp.kernel.elements()) {
      if (!L.is_identity(h[k])) {
        throw PreconditionFailed("universal map: kernel element "
                                 + std::to_string(k) + " is not killed");
      }
    }
    std::vector<Elem> map(pp.product.order());
    for (Elem p = 0; p < map.size(); ++p) {
      map[p] = h[pp.representatives[p]];
    }
    Hom const hp = Hom::make(pp.product, L, std::move(map));
    if (!(compose(hp, pp.lM) == xm_m.boundary)
        || !(compose(hp, pp.lN) == xm_n.boundary)) {
      throw std::logic_error("universal map: triangles do not commute");
    }
    std::vector<Elem> gens = pp.lM.map();
    gens.insert(gens.end(), pp.lN.map().begin(), pp.lN.map().end());
    if (subgroup_generated(pp.product, gens).size() != pp.product.order()) {
      throw std::logic_error("universal map: lM and lN do not generate P");
    }
    return hp;
  }

}  // namespace peiffer

#endif  // PEIFFER_PEIFFER_HPP_
