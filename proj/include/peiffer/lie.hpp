#ifndef PEIFFER_LIE_HPP_
#define PEIFFER_LIE_HPP_

// Finite-dimensional Lie algebras over Q given by structure constants:
// actions by derivations, crossed modules, compatibility of mutual actions,
// the semidirect sum and the Peiffer product as an ideal quotient.
//
// Semidirect sum convention (N acting on M by rho), basis M first then N:
//
//   [(m, n), (m', n')] = ([m, m'] + rho(n) m' - rho(n') m, [n, n'])
//
// The Peiffer ideal is generated by (rho_nm(n) m, rho_mn(m) n), which is the
// difference between (0, m.n) and [(m, 0), (0, n)] in this convention.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "peiffer/error.hpp"
#include "peiffer/rational.hpp"

namespace peiffer {

  struct LieViolation {
    std::string              condition;
    std::vector<std::size_t> indices;  // basis indices of the witness
    Vector                   residual;

    std::string message() const {
      std::string s = condition + " fails at basis (";
      for (std::size_t i = 0; i < indices.size(); ++i) {
        s += (i ? ", " : "") + std::to_string(indices[i]);
      }
      return s + "), residual " + format_vector(residual);
    }
  };

  // Structure constants c[(i * d + j) * d + k] with [e_i, e_j] = sum c e_k.
  using StructureConstants = std::vector<Rational>;

  namespace detail {
    inline Vector structure_bracket(std::size_t d, StructureConstants const& c,
                                    Vector const& x, Vector const& y) {
      Vector out = zero_vector(d);
      for (std::size_t i = 0; i < d; ++i) {
        if (x[i] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < d; ++j) {
          if (y[j] == 0) {
            continue;
          }
          Rational const s = x[i] * y[j];
          for (std::size_t k = 0; k < d; ++k) {
            Rational const& ck = c[(i * d + j) * d + k];
            if (ck != 0) {
              out[k] += s * ck;
            }
          }
        }
      }
      return out;
    }
  }  // namespace detail

  // Antisymmetry on basis pairs (including [e_i, e_i] = 0), then Jacobi on
  // basis triples: [e_i, [e_j, e_l]] + [e_j, [e_l, e_i]] + [e_l, [e_i, e_j]].
  inline std::optional<LieViolation>
  validate_lie(std::size_t d, StructureConstants const& c) {
    if (c.size() != d * d * d) {
      throw InvalidInput("structure constants: expected "
                         + std::to_string(d * d * d) + " entries, got "
                         + std::to_string(c.size()));
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j < d; ++j) {
        Vector r = zero_vector(d);
        for (std::size_t k = 0; k < d; ++k) {
          r[k] = c[(i * d + j) * d + k] + c[(j * d + i) * d + k];
        }
        if (!is_zero(r)) {
          return LieViolation{"antisymmetry", {i, j}, r};
        }
      }
    }
    auto br = [&](Vector const& x, Vector const& y) {
      return detail::structure_bracket(d, c, x, y);
    };
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t l = 0; l < d; ++l) {
          auto const ei = unit_vector(d, i), ej = unit_vector(d, j),
                     el = unit_vector(d, l);
          Vector r = br(ei, br(ej, el)) + br(ej, br(el, ei)) + br(el, br(ei, ej));
          if (!is_zero(r)) {
            return LieViolation{"jacobi", {i, j, l}, r};
          }
        }
      }
    }
    return std::nullopt;
  }

  class LieAlgebra {
   public:
    LieAlgebra() = default;

    static LieAlgebra make(std::size_t d, StructureConstants c) {
      if (auto v = validate_lie(d, c)) {
        throw InvalidInput("not a Lie algebra: " + v->message());
      }
      return LieAlgebra(d, std::move(c));
    }

    static LieAlgebra abelian(std::size_t d) {
      return LieAlgebra(d, StructureConstants(d * d * d, Rational(0)));
    }

    // Builder for sparse brackets: entries (i, j, [e_i, e_j]); the mirror
    // (j, i) is filled with the negative.
    static LieAlgebra from_brackets(
        std::size_t d,
        std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vector>> const&
            entries) {
      StructureConstants c(d * d * d, Rational(0));
      for (auto const& [ij, v] : entries) {
        auto [i, j] = ij;
        for (std::size_t k = 0; k < d; ++k) {
          c[(i * d + j) * d + k] = v[k];
          c[(j * d + i) * d + k] = -v[k];
        }
      }
      return make(d, std::move(c));
    }

    std::size_t dim() const noexcept {
      return dim_;
    }

    StructureConstants const& constants() const noexcept {
      return c_;
    }

    Rational const& constant(std::size_t i, std::size_t j,
                             std::size_t k) const {
      return c_[(i * dim_ + j) * dim_ + k];
    }

    Vector bracket(Vector const& x, Vector const& y) const {
      return detail::structure_bracket(dim_, c_, x, y);
    }

    Vector basis(std::size_t i) const {
      return unit_vector(dim_, i);
    }

    // Matrix of [x, -].
    Matrix ad(Vector const& x) const {
      std::vector<Vector> cols;
      for (std::size_t j = 0; j < dim_; ++j) {
        cols.push_back(bracket(x, basis(j)));
      }
      return Matrix::from_columns(dim_, cols);
    }

    bool is_abelian() const {
      for (auto const& x : c_) {
        if (x != 0) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(LieAlgebra const&, LieAlgebra const&) = default;

   private:
    LieAlgebra(std::size_t d, StructureConstants c) : dim_(d), c_(std::move(c)) {}

    std::size_t        dim_ = 0;
    StructureConstants c_;
  };

  // A Lie homomorphism check for a linear map given as a matrix
  // (rows = dim cod, cols = dim dom).
  inline std::optional<LieViolation> lie_hom_violation(LieAlgebra const& dom,
                                                       LieAlgebra const& cod,
                                                       Matrix const&     f) {
    if (f.rows() != cod.dim() || f.cols() != dom.dim()) {
      throw InvalidInput("linear map has the wrong shape");
    }
    for (std::size_t i = 0; i < dom.dim(); ++i) {
      for (std::size_t j = 0; j < dom.dim(); ++j) {
        Vector r = f.apply(dom.bracket(dom.basis(i), dom.basis(j)))
                   - cod.bracket(f.column(i), f.column(j));
        if (!is_zero(r)) {
          return LieViolation{"homomorphism", {i, j}, r};
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Actions
  ////////////////////////////////////////////////////////////////////////

  // rho[i] is the matrix of the i-th basis element of the acting algebra.
  inline std::optional<LieViolation>
  check_lie_action(LieAlgebra const& acting, LieAlgebra const& target,
                   std::vector<Matrix> const& rho) {
    if (rho.size() != acting.dim()) {
      throw InvalidInput("lie action: expected " + std::to_string(acting.dim())
                         + " matrices, got " + std::to_string(rho.size()));
    }
    for (auto const& r : rho) {
      if (r.rows() != target.dim() || r.cols() != target.dim()) {
        throw InvalidInput("lie action: matrix has the wrong shape");
      }
    }
    auto rho_of = [&](Vector const& n) {
      Matrix m(target.dim(), target.dim());
      for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] != 0) {
          m = m + n[i] * rho[i];
        }
      }
      return m;
    };
    for (std::size_t i = 0; i < acting.dim(); ++i) {
      for (std::size_t j = 0; j < acting.dim(); ++j) {
        Matrix const diff = rho_of(acting.bracket(acting.basis(i), acting.basis(j)))
                            - (rho[i] * rho[j] - rho[j] * rho[i]);
        if (!diff.is_zero()) {
          std::size_t c = 0;
          while (diff.column(c) == zero_vector(target.dim())) {
            ++c;
          }
          return LieViolation{"homomorphism", {i, j, c}, diff.column(c)};
        }
      }
    }
    for (std::size_t i = 0; i < acting.dim(); ++i) {
      for (std::size_t a = 0; a < target.dim(); ++a) {
        for (std::size_t b = 0; b < target.dim(); ++b) {
          auto const ea = target.basis(a), eb = target.basis(b);
          Vector r = rho[i].apply(target.bracket(ea, eb))
                     - target.bracket(rho[i].apply(ea), eb)
                     - target.bracket(ea, rho[i].apply(eb));
          if (!is_zero(r)) {
            return LieViolation{"derivation", {i, a, b}, r};
          }
        }
      }
    }
    return std::nullopt;
  }

  class LieAction {
   public:
    static LieAction make(LieAlgebra acting, LieAlgebra target,
                          std::vector<Matrix> rho) {
      if (auto v = check_lie_action(acting, target, rho)) {
        throw InvalidInput("not a Lie action: " + v->message());
      }
      return LieAction(std::move(acting), std::move(target), std::move(rho));
    }

    static LieAction unchecked(LieAlgebra acting, LieAlgebra target,
                               std::vector<Matrix> rho) {
      return LieAction(std::move(acting), std::move(target), std::move(rho));
    }

    static LieAction zero(LieAlgebra const& acting, LieAlgebra const& target) {
      return LieAction(acting, target,
                       std::vector<Matrix>(acting.dim(),
                                           Matrix(target.dim(), target.dim())));
    }

    static LieAction adjoint(LieAlgebra const& l) {
      std::vector<Matrix> rho;
      for (std::size_t i = 0; i < l.dim(); ++i) {
        rho.push_back(l.ad(l.basis(i)));
      }
      return LieAction(l, l, std::move(rho));
    }

    LieAlgebra const& acting() const noexcept {
      return acting_;
    }

    LieAlgebra const& target() const noexcept {
      return target_;
    }

    std::vector<Matrix> const& matrices() const noexcept {
      return rho_;
    }

    Matrix rho(Vector const& n) const {
      Matrix m(target_.dim(), target_.dim());
      for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] != 0) {
          m = m + n[i] * rho_[i];
        }
      }
      return m;
    }

    Vector apply(Vector const& n, Vector const& m) const {
      return rho(n).apply(m);
    }

    friend bool operator==(LieAction const&, LieAction const&) = default;

   private:
    LieAction(LieAlgebra acting, LieAlgebra target, std::vector<Matrix> rho)
        : acting_(std::move(acting)),
          target_(std::move(target)),
          rho_(std::move(rho)) {}

    LieAlgebra          acting_;
    LieAlgebra          target_;
    std::vector<Matrix> rho_;
  };

  // rho'(a) = rho(f(a)) for a linear map f : dom -> acting algebra.
  inline LieAction lie_pullback(LieAlgebra const& dom, Matrix const& f,
                                LieAction const& psi) {
    if (f.cols() != dom.dim() || f.rows() != psi.acting().dim()) {
      throw PreconditionFailed("lie pullback: map has the wrong shape");
    }
    std::vector<Matrix> rho;
    for (std::size_t i = 0; i < dom.dim(); ++i) {
      rho.push_back(psi.rho(f.column(i)));
    }
    return LieAction::unchecked(dom, psi.target(), std::move(rho));
  }

  ////////////////////////////////////////////////////////////////////////
  // Crossed modules
  ////////////////////////////////////////////////////////////////////////

  // boundary : X -> A (rows = dim A), action of A on X.
  struct LieCrossedModule {
    Matrix    boundary;
    LieAction action;

    LieAlgebra const& dom() const noexcept {
      return action.target();
    }

    LieAlgebra const& cod() const noexcept {
      return action.acting();
    }
  };

  // Boundary is a Lie homomorphism; then on basis pairs
  //   precrossed: d(rho(a) x) == [a, d x]
  //   peiffer:    rho(d x)(x') == [x, x'].
  inline std::optional<LieViolation> check_lie_xmod(LieCrossedModule const& xm) {
    LieAlgebra const& a_alg = xm.cod();
    LieAlgebra const& x_alg = xm.dom();
    if (xm.boundary.rows() != a_alg.dim() || xm.boundary.cols() != x_alg.dim()) {
      throw InvalidInput("lie crossed module: boundary has the wrong shape");
    }
    if (auto v = lie_hom_violation(x_alg, a_alg, xm.boundary)) {
      return v;
    }
    for (std::size_t a = 0; a < a_alg.dim(); ++a) {
      for (std::size_t x = 0; x < x_alg.dim(); ++x) {
        Vector r = xm.boundary.apply(xm.action.apply(a_alg.basis(a), x_alg.basis(x)))
                   - a_alg.bracket(a_alg.basis(a), xm.boundary.column(x));
        if (!is_zero(r)) {
          return LieViolation{"precrossed", {a, x}, r};
        }
      }
    }
    for (std::size_t x = 0; x < x_alg.dim(); ++x) {
      for (std::size_t y = 0; y < x_alg.dim(); ++y) {
        Vector r = xm.action.apply(xm.boundary.column(x), x_alg.basis(y))
                   - x_alg.bracket(x_alg.basis(x), x_alg.basis(y));
        if (!is_zero(r)) {
          return LieViolation{"peiffer", {x, y}, r};
        }
      }
    }
    return std::nullopt;
  }

  inline LieCrossedModule lie_identity_xmod(LieAlgebra const& l) {
    return LieCrossedModule{Matrix::identity(l.dim()), LieAction::adjoint(l)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Mutual actions and compatibility
  ////////////////////////////////////////////////////////////////////////

  class LieMutualActions {
   public:
    // rho_nm: N acting on M; rho_mn: M acting on N.
    static LieMutualActions make(LieAction rho_nm, LieAction rho_mn) {
      if (!(rho_nm.acting() == rho_mn.target())
          || !(rho_nm.target() == rho_mn.acting())) {
        throw InvalidInput("lie mutual actions: inconsistent algebras");
      }
      if (auto v = check_lie_action(rho_nm.acting(), rho_nm.target(),
                                    rho_nm.matrices())) {
        throw InvalidInput("action of N on M: " + v->message());
      }
      if (auto v = check_lie_action(rho_mn.acting(), rho_mn.target(),
                                    rho_mn.matrices())) {
        throw InvalidInput("action of M on N: " + v->message());
      }
      return LieMutualActions(std::move(rho_nm), std::move(rho_mn));
    }

    static LieMutualActions zero(LieAlgebra const& m, LieAlgebra const& n) {
      return LieMutualActions(LieAction::zero(n, m), LieAction::zero(m, n));
    }

    LieAlgebra const& M() const noexcept {
      return rho_nm_.target();
    }

    LieAlgebra const& N() const noexcept {
      return rho_mn_.target();
    }

    LieAction const& rho_nm() const noexcept {
      return rho_nm_;
    }

    LieAction const& rho_mn() const noexcept {
      return rho_mn_;
    }

    LieMutualActions swapped() const {
      return LieMutualActions(rho_mn_, rho_nm_);
    }

    friend bool operator==(LieMutualActions const&, LieMutualActions const&)
        = default;

   private:
    LieMutualActions(LieAction rho_nm, LieAction rho_mn)
        : rho_nm_(std::move(rho_nm)), rho_mn_(std::move(rho_mn)) {}

    LieAction rho_nm_;
    LieAction rho_mn_;
  };

  struct LieCompatWitness {
    int         equation;  // 1 or 2
    std::size_t first;     // basis index of m (eq 1) or n (eq 2)
    std::size_t second;    // basis index of n (eq 1) or m (eq 2)
    std::size_t prime;     // basis index of m' (eq 1) or n' (eq 2)
    Vector      lhs;
    Vector      rhs;
  };

  struct LieCompatVerdict {
    bool                            compatible;
    std::optional<LieCompatWitness> witness;
  };

  // On basis triples:
  //   (C1) rho_nm(rho_mn(m) n)(m') == [m, rho_nm(n) m'] - rho_nm(n)[m, m']
  //   (C2) rho_mn(rho_nm(n) m)(n') == [n, rho_mn(m) n'] - rho_mn(m)[n, n']
  // Both sides are trilinear, so basis triples decide the identity.
  inline LieCompatVerdict lie_compatible(LieMutualActions const& mut) {
    auto check = [](int eq, LieAlgebra const& a, LieAlgebra const& b,
                    LieAction const& rho_ba, LieAction const& rho_ab)
        -> std::optional<LieCompatWitness> {
      for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
          for (std::size_t k = 0; k < a.dim(); ++k) {
            auto const x = a.basis(i), y = b.basis(j), x2 = a.basis(k);
            Vector lhs = rho_ba.apply(rho_ab.apply(x, y), x2);
            Vector rhs = a.bracket(x, rho_ba.apply(y, x2))
                         - rho_ba.apply(y, a.bracket(x, x2));
            if (lhs != rhs) {
              return LieCompatWitness{eq, i, j, k, lhs, rhs};
            }
          }
        }
      }
      return std::nullopt;
    };
    if (auto w = check(1, mut.M(), mut.N(), mut.rho_nm(), mut.rho_mn())) {
      return {false, w};
    }
    if (auto w = check(2, mut.N(), mut.M(), mut.rho_mn(), mut.rho_nm())) {
      return {false, w};
    }
    return {true, std::nullopt};
  }

  // rho_mn(m) = psi_N(mu(m)), rho_nm(n) = psi_M(nu(n)).
  inline LieMutualActions lie_induced_actions(LieCrossedModule const& xm_m,
                                              LieCrossedModule const& xm_n) {
    if (!(xm_m.cod() == xm_n.cod())) {
      throw PreconditionFailed(
          "lie induced actions: crossed modules have different codomains");
    }
    if (auto v = check_lie_xmod(xm_m)) {
      throw PreconditionFailed("first lie crossed module is invalid: "
                               + v->message());
    }
    if (auto v = check_lie_xmod(xm_n)) {
      throw PreconditionFailed("second lie crossed module is invalid: "
                               + v->message());
    }
    return LieMutualActions::make(
        lie_pullback(xm_n.dom(), xm_n.boundary, xm_m.action),
        lie_pullback(xm_m.dom(), xm_m.boundary, xm_n.action));
  }

  ////////////////////////////////////////////////////////////////////////
  // Semidirect sum and Peiffer product
  ////////////////////////////////////////////////////////////////////////

  struct LieSemidirect {
    LieAlgebra algebra;  // basis: M then N
    Matrix     incl_m;
    Matrix     incl_n;
  };

  inline LieSemidirect lie_semidirect(LieAction const& rho) {
    LieAlgebra const& m_alg = rho.target();
    LieAlgebra const& n_alg = rho.acting();
    std::size_t const dm = m_alg.dim(), dn = n_alg.dim(), d = dm + dn;
    auto split = [&](Vector const& v) {
      return std::pair{Vector(v.begin(), v.begin() + dm),
                       Vector(v.begin() + dm, v.end())};
    };
    auto join = [&](Vector const& m, Vector const& n) {
      Vector v = m;
      v.insert(v.end(), n.begin(), n.end());
      return v;
    };
    StructureConstants c(d * d * d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        auto [m1, n1] = split(unit_vector(d, i));
        auto [m2, n2] = split(unit_vector(d, j));
        Vector const r = join(m_alg.bracket(m1, m2) + rho.apply(n1, m2)
                                  - rho.apply(n2, m1),
                              n_alg.bracket(n1, n2));
        for (std::size_t k = 0; k < d; ++k) {
          c[(i * d + j) * d + k] = r[k];
        }
      }
    }
    if (auto v = validate_lie(d, c)) {
      throw InvalidInput("semidirect sum is not a Lie algebra (invalid "
                         "action?): "
                         + v->message());
    }
    Matrix im(d, dm), in(d, dn);
    for (std::size_t i = 0; i < dm; ++i) {
      im(i, i) = 1;
    }
    for (std::size_t j = 0; j < dn; ++j) {
      in(dm + j, j) = 1;
    }
    return LieSemidirect{LieAlgebra::make(d, std::move(c)), im, in};
  }

  struct LiePeiffer {
    LieMutualActions         source;
    LieSemidirect            semidirect;
    Subspace                 ideal;
    LieAlgebra               product;     // P
    std::vector<std::size_t> lift;        // P basis a lifts to e_{lift[a]}
    Matrix                   projection;  // dim P x (dim M + dim N)
    Matrix                   lM;
    Matrix                   lN;
    bool                     compatible = false;
    std::optional<std::pair<LieAction, LieAction>> actions;  // P on M, P on N
  };

  // Smallest ideal containing the generators: bracket every newly added
  // vector with every basis vector until the span stops growing.
  inline Subspace ideal_closure(LieAlgebra const& l,
                                std::vector<Vector> const& generators) {
    Subspace            ideal(l.dim());
    std::vector<Vector> work;
    for (auto const& g : generators) {
      if (ideal.add(g)) {
        work.push_back(g);
      }
    }
    while (!work.empty()) {
      Vector v = std::move(work.back());
      work.pop_back();
      for (std::size_t k = 0; k < l.dim(); ++k) {
        Vector w = l.bracket(l.basis(k), v);
        std::size_t const before = ideal.dim();
        if (ideal.add(w)) {
          if (ideal.dim() != before + 1) {
            throw std::logic_error("ideal closure: dimension did not grow");
          }
          work.push_back(std::move(w));
        }
      }
    }
    return ideal;
  }

  inline std::optional<std::pair<LieAction, LieAction>>
  lie_peiffer_actions(LiePeiffer const& pp);

  inline LiePeiffer lie_peiffer(LieMutualActions const& mut) {
    auto              sd = lie_semidirect(mut.rho_nm());
    LieAlgebra const& m_alg = mut.M();
    LieAlgebra const& n_alg = mut.N();
    std::size_t const dm = m_alg.dim(), dn = n_alg.dim(), d = dm + dn;

    std::vector<Vector> gens;
    for (std::size_t i = 0; i < dm; ++i) {
      for (std::size_t j = 0; j < dn; ++j) {
        Vector v = mut.rho_nm().apply(n_alg.basis(j), m_alg.basis(i));
        Vector w = mut.rho_mn().apply(m_alg.basis(i), n_alg.basis(j));
        v.insert(v.end(), w.begin(), w.end());
        gens.push_back(std::move(v));
      }
    }
    auto       ideal = ideal_closure(sd.algebra, gens);
    auto const lift  = ideal.free_columns();
    std::size_t const dp = lift.size();

    auto project = [&](Vector const& v) {
      Vector r = ideal.reduce(v);
      Vector out(dp);
      for (std::size_t a = 0; a < dp; ++a) {
        out[a] = r[lift[a]];
      }
      return out;
    };
    StructureConstants c(dp * dp * dp, Rational(0));
    for (std::size_t a = 0; a < dp; ++a) {
      for (std::size_t b = 0; b < dp; ++b) {
        Vector const r = project(sd.algebra.bracket(unit_vector(d, lift[a]),
                                                    unit_vector(d, lift[b])));
        for (std::size_t k = 0; k < dp; ++k) {
          c[(a * dp + b) * dp + k] = r[k];
        }
      }
    }
    std::vector<Vector> pcols;
    for (std::size_t col = 0; col < d; ++col) {
      pcols.push_back(project(unit_vector(d, col)));
    }
    Matrix proj = Matrix::from_columns(dp, pcols);
    Matrix lm   = proj * sd.incl_m;
    Matrix ln   = proj * sd.incl_n;
    LiePeiffer pp{mut,
                  std::move(sd),
                  std::move(ideal),
                  LieAlgebra::make(dp, std::move(c)),
                  lift,
                  std::move(proj),
                  std::move(lm),
                  std::move(ln),
                  lie_compatible(mut).compatible,
                  std::nullopt};
    pp.actions = lie_peiffer_actions(pp);
    return pp;
  }

  // Class of (m, n) acts on M by [m, -] + rho_nm(n) and on N by
  // rho_mn(m) + [n, -]. Defined when the ideal acts trivially and the
  // result is a Lie action of P; nullopt otherwise.
  inline std::optional<std::pair<LieAction, LieAction>>
  lie_peiffer_actions(LiePeiffer const& pp) {
    LieMutualActions const& mut   = pp.source;
    LieAlgebra const&       m_alg = mut.M();
    LieAlgebra const&       n_alg = mut.N();
    std::size_t const       dm = m_alg.dim(), dn = n_alg.dim();
    auto split = [&](Vector const& v) {
      return std::pair{Vector(v.begin(), v.begin() + dm),
                       Vector(v.begin() + dm, v.end())};
    };
    auto on_m = [&](Vector const& v) {
      auto [m, n] = split(v);
      return m_alg.ad(m) + mut.rho_nm().rho(n);
    };
    auto on_n = [&](Vector const& v) {
      auto [m, n] = split(v);
      return mut.rho_mn().rho(m) + n_alg.ad(n);
    };
    for (auto const& b : pp.ideal.basis()) {
      if (!on_m(b).is_zero() || !on_n(b).is_zero()) {
        return std::nullopt;
      }
    }
    std::vector<Matrix> rm, rn;
    for (std::size_t a = 0; a < pp.lift.size(); ++a) {
      auto const v = unit_vector(dm + dn, pp.lift[a]);
      rm.push_back(on_m(v));
      rn.push_back(on_n(v));
    }
    if (check_lie_action(pp.product, m_alg, rm)
        || check_lie_action(pp.product, n_alg, rn)) {
      return std::nullopt;
    }
    return std::pair{LieAction::unchecked(pp.product, m_alg, std::move(rm)),
                     LieAction::unchecked(pp.product, n_alg, std::move(rn))};
  }

  inline std::pair<LieCrossedModule, LieCrossedModule>
  lie_peiffer_xmods(LiePeiffer const& pp) {
    if (!pp.actions) {
      throw PreconditionFailed(
          "lie Peiffer product: induced actions are not well defined");
    }
    return {LieCrossedModule{pp.lM, pp.actions->first},
            LieCrossedModule{pp.lN, pp.actions->second}};
  }

  // h(m, n) = mu(m) + nu(n) on the semidirect sum, descended to P.
  inline Matrix lie_universal_map(LiePeiffer const&       pp,
                                  LieCrossedModule const& xm_m,
                                  LieCrossedModule const& xm_n) {
    auto const induced = lie_induced_actions(xm_m, xm_n);
    if (!(induced == pp.source)) {
      throw PreconditionFailed("lie universal map: the crossed modules induce "
                               "different mutual actions");
    }
    LieAlgebra const& l_alg = xm_m.cod();
    std::size_t const dm = pp.source.M().dim(), dn = pp.source.N().dim();
    Matrix            h(l_alg.dim(), dm + dn);
    for (std::size_t r = 0; r < l_alg.dim(); ++r) {
      for (std::size_t i = 0; i < dm; ++i) {
        h(r, i) = xm_m.boundary(r, i);
      }
      for (std::size_t j = 0; j < dn; ++j) {
        h(r, dm + j) = xm_n.boundary(r, j);
      }
    }
    if (auto v = lie_hom_violation(pp.semidirect.algebra, l_alg, h)) {
      throw PreconditionFailed("lie universal map: h is not a homomorphism "
                               "on the semidirect sum: "
                               + v->message());
    }
    for (auto const& b : pp.ideal.basis()) {
      if (!is_zero(h.apply(b))) {
        throw PreconditionFailed(
            "lie universal map: the Peiffer ideal is not killed");
      }
    }
    std::vector<Vector> cols;
    for (std::size_t a = 0; a < pp.lift.size(); ++a) {
      cols.push_back(h.column(pp.lift[a]));
    }
    Matrix const hp = Matrix::from_columns(l_alg.dim(), cols);
    if (auto v = lie_hom_violation(pp.product, l_alg, hp)) {
      throw std::logic_error("lie universal map: descended map is not a Lie "
                             "homomorphism: "
                             + v->message());
    }
    if (!(hp * pp.lM == xm_m.boundary) || !(hp * pp.lN == xm_n.boundary)) {
      throw std::logic_error("lie universal map: triangles do not commute");
    }
    std::vector<Vector> images;
    for (std::size_t i = 0; i < dm; ++i) {
      images.push_back(pp.lM.column(i));
    }
    for (std::size_t j = 0; j < dn; ++j) {
      images.push_back(pp.lN.column(j));
    }
    if (rank(images, pp.product.dim()) != pp.product.dim()) {
      throw std::logic_error("lie universal map: lM and lN do not span P");
    }
    return hp;
  }

}  // namespace peiffer

#endif  // PEIFFER_LIE_HPP_
