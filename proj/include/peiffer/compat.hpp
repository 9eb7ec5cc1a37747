#ifndef PEIFFER_COMPAT_HPP_
#define PEIFFER_COMPAT_HPP_

// Two groups acting on each other: the induced action of the free product
// M + N on M and on N, and the decision procedure for compatibility.

#include <optional>
#include <span>
#include <string>
#include <utility>

#include "peiffer/action.hpp"
#include "peiffer/freeword.hpp"
#include "peiffer/group.hpp"

namespace peiffer {

  // M is the first side of every word, N the second.
  class MutualActions {
   public:
    // xi_nm: N acting on M; xi_mn: M acting on N.
    static MutualActions make(Action xi_nm, Action xi_mn) {
      if (!(xi_nm.acting() == xi_mn.target())
          || !(xi_nm.target() == xi_mn.acting())) {
        throw InvalidInput(
            "mutual actions: the group references are inconsistent");
      }
      if (auto v = check_action(xi_nm.acting(), xi_nm.target(), xi_nm.table())) {
        throw InvalidInput("action of N on M: " + v->message());
      }
      if (auto v = check_action(xi_mn.acting(), xi_mn.target(), xi_mn.table())) {
        throw InvalidInput("action of M on N: " + v->message());
      }
      return MutualActions(std::move(xi_nm), std::move(xi_mn));
    }

    static MutualActions trivial(FiniteGroup const& m, FiniteGroup const& n) {
      return MutualActions(trivial_action(n, m), trivial_action(m, n));
    }

    FiniteGroup const& M() const noexcept {
      return xi_nm_.target();
    }

    FiniteGroup const& N() const noexcept {
      return xi_mn_.target();
    }

    Action const& xi_nm() const noexcept {
      return xi_nm_;
    }

    Action const& xi_mn() const noexcept {
      return xi_mn_;
    }

    FiniteGroup const& group(Side s) const noexcept {
      return s == Side::first ? M() : N();
    }

    FreeProduct free_product() const {
      return FreeProduct(M(), N());
    }

    // (N, xi_mn) <-> (M, xi_nm)
    MutualActions swapped() const {
      return MutualActions(xi_mn_, xi_nm_);
    }

    // Action of a single letter on an element of side `side`: letters from
    // the same side act by conjugation, letters from the other side by the
    // given actions.
    Elem act(Letter l, Side side, Elem x) const noexcept {
      if (l.side == side) {
        return group(side).conj(l.elem, x);
      }
      return side == Side::first ? xi_nm_(l.elem, x) : xi_mn_(l.elem, x);
    }

    friend bool operator==(MutualActions const& a, MutualActions const& b) {
      return a.xi_nm_ == b.xi_nm_ && a.xi_mn_ == b.xi_mn_;
    }

   private:
    MutualActions(Action xi_nm, Action xi_mn)
        : xi_nm_(std::move(xi_nm)), xi_mn_(std::move(xi_mn)) {}

    Action xi_nm_;
    Action xi_mn_;
  };

  // Value of the free-product action on s x s^-1 for x in the group of
  // `side`, by recursion on the last letter of s:
  //   s empty     -> x
  //   s = s' n    -> recurse on s' with xi(n, x)   (or n x n^-1 on N)
  //   s = s' m    -> recurse on s' with m x m^-1   (or xi(m, x) on N)
  // Accepts raw (unreduced) words.
  inline Elem coproduct_eval(MutualActions const& mut, std::span<Letter const> s,
                             Side side, Elem x) {
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
      x = mut.act(*it, side, x);
    }
    return x;
  }

  inline Elem coproduct_eval(MutualActions const& mut, FreeWord const& s,
                             Side side, Elem x) {
    return coproduct_eval(mut, s.letters(), side, x);
  }

  // Equation 1: xi_nm(xi_mn(m, n), m') == value of m n m^-1 on m'.
  // Equation 2: xi_mn(xi_nm(n, m), n') == value of n m n^-1 on n'.
  struct CompatWitness {
    int  equation;
    Elem m;
    Elem n;
    Elem prime;  // m' for equation 1, n' for equation 2
    Elem lhs;
    Elem rhs;
  };

  struct CompatVerdict {
    bool                         compatible;
    std::optional<CompatWitness> witness;
  };

  namespace detail {
    inline std::pair<Elem, Elem> compat_sides(MutualActions const& mut,
                                              int equation, Elem m, Elem n,
                                              Elem prime) {
      FiniteGroup const& M = mut.M();
      FiniteGroup const& N = mut.N();
      if (equation == 1) {
        Letter const word[] = {{Side::first, m},
                               {Side::second, n},
                               {Side::first, M.inv(m)}};
        return {mut.xi_nm()(mut.xi_mn()(m, n), prime),
                coproduct_eval(mut, word, Side::first, prime)};
      }
      Letter const word[] = {{Side::second, n},
                             {Side::first, m},
                             {Side::second, N.inv(n)}};
      return {mut.xi_mn()(mut.xi_nm()(n, m), prime),
              coproduct_eval(mut, word, Side::second, prime)};
    }
  }  // namespace detail

  // Recomputes both sides of a witness.
  inline std::pair<Elem, Elem> evaluate_witness(MutualActions const& mut,
                                                CompatWitness const& w) {
    return detail::compat_sides(mut, w.equation, w.m, w.n, w.prime);
  }

  // Exhaustive check; the first counterexample in the order
  // (equation, m, n, prime) is reported.
  inline CompatVerdict check_compatible(MutualActions const& mut) {
    std::size_t const nm = mut.M().order(), nn = mut.N().order();
    for (Elem m = 0; m < nm; ++m) {
      for (Elem n = 0; n < nn; ++n) {
        for (Elem m2 = 0; m2 < nm; ++m2) {
          auto [l, r] = detail::compat_sides(mut, 1, m, n, m2);
          if (l != r) {
            return {false, CompatWitness{1, m, n, m2, l, r}};
          }
        }
      }
    }
    for (Elem m = 0; m < nm; ++m) {
      for (Elem n = 0; n < nn; ++n) {
        for (Elem n2 = 0; n2 < nn; ++n2) {
          auto [l, r] = detail::compat_sides(mut, 2, m, n, n2);
          if (l != r) {
            return {false, CompatWitness{2, m, n, n2, l, r}};
          }
        }
      }
    }
    return {true, std::nullopt};
  }

}  // namespace peiffer

#endif  // PEIFFER_COMPAT_HPP_
