#include <gtest/gtest.h>

#include "support.hpp"

namespace peiffer {
  namespace {

    TEST(CheckXmod, NormalInclusionIsValid) {
      EXPECT_FALSE(check_xmod(fixtures::a3_in_s3()));
      EXPECT_FALSE(check_xmod(fixtures::z3_in_z6()));
      auto k = direct_product(catalog::cyclic(2), catalog::cyclic(2));
      EXPECT_FALSE(check_xmod(normal_subgroup_xmod(ElementSet::whole(k))));
    }

    TEST(CheckXmod, IdentityIsValid) {
      for (auto const& g : catalog::standard()) {
        EXPECT_FALSE(check_xmod(identity_xmod(g))) << g.name();
      }
    }

    TEST(CheckXmod, ZeroMapOnS3FailsPeiffer) {
      auto s3 = catalog::symmetric(3);
      for (auto const& a : {catalog::cyclic(2), s3}) {
        CrossedModule xm{Hom::trivial(s3, a), trivial_action(a, s3)};
        auto v = check_xmod(xm);
        ASSERT_TRUE(v);
        EXPECT_EQ(v->condition, "peiffer");
        Elem x = v->witness[0], y = v->witness[1];
        EXPECT_NE(s3.mul(x, y), s3.mul(y, x));
      }
    }

    TEST(CheckXmod, PrecrossedFailure) {
      // Z2 in S3 as a non-normal subgroup with the trivial action.
      auto s3 = catalog::symmetric(3), z2 = catalog::cyclic(2);
      CrossedModule xm{Hom::make(z2, s3, {0, fixtures::s3_swap01()}),
                       trivial_action(s3, z2)};
      auto v = check_xmod(xm);
      ASSERT_TRUE(v);
      EXPECT_EQ(v->condition, "precrossed");
    }

    TEST(CheckXmod, NonNormalSubsetRejected) {
      auto s3 = catalog::symmetric(3);
      std::vector<Elem> h{0, fixtures::s3_swap01()};
      EXPECT_THROW(normal_subgroup_xmod(ElementSet(s3, h)), PreconditionFailed);
    }

    TEST(InducedActions, IdentityPairGivesMutualConjugation) {
      for (auto const& g : catalog::standard()) {
        auto mut = induced_mutual_actions(identity_xmod(g), identity_xmod(g));
        EXPECT_EQ(mut.xi_nm(), conjugation_action(g));
        EXPECT_EQ(mut.xi_mn(), conjugation_action(g));
      }
    }

    TEST(InducedActions, A3InS3) {
      auto xa  = fixtures::a3_in_s3();
      auto s3  = catalog::symmetric(3);
      auto mut = induced_mutual_actions(xa, identity_xmod(s3));
      auto const& incl = xa.boundary;
      // S3 acting on A3 by conjugation.
      for (Elem g = 0; g < 6; ++g) {
        for (Elem k = 0; k < 3; ++k) {
          EXPECT_EQ(incl(mut.xi_nm()(g, k)), s3.conj(g, incl(k)));
        }
      }
      // A3 acting on S3 by conjugation through the inclusion.
      for (Elem k = 0; k < 3; ++k) {
        for (Elem g = 0; g < 6; ++g) {
          EXPECT_EQ(mut.xi_mn()(k, g), s3.conj(incl(k), g));
        }
      }
    }

    TEST(InducedActions, TrivialCodomainGivesTrivialActions) {
      auto one = catalog::trivial();
      auto z2 = catalog::cyclic(2), z3 = catalog::cyclic(3);
      CrossedModule xm{Hom::trivial(z2, one), trivial_action(one, z2)};
      CrossedModule xn{Hom::trivial(z3, one), trivial_action(one, z3)};
      auto mut = induced_mutual_actions(xm, xn);
      EXPECT_TRUE(mut.xi_nm().is_trivial());
      EXPECT_TRUE(mut.xi_mn().is_trivial());
    }

    TEST(InducedActions, CodomainMismatchRejected) {
      EXPECT_THROW(induced_mutual_actions(identity_xmod(catalog::cyclic(2)),
                                          identity_xmod(catalog::cyclic(3))),
                   PreconditionFailed);
    }

    TEST(InducedActions, InvalidXmodRejected) {
      auto s3 = catalog::symmetric(3);
      CrossedModule bad{Hom::trivial(s3, s3), trivial_action(s3, s3)};
      EXPECT_THROW(induced_mutual_actions(bad, identity_xmod(s3)), PreconditionFailed);
    }

    // Property: every coterminal fixture pair induces compatible actions.
    TEST(InducedActionsProperty, CoterminalPairsAreCompatible) {
      for (auto const& p : fixtures::coterminal_pairs()) {
        auto mut = induced_mutual_actions(p.first, p.second);
        EXPECT_TRUE(check_compatible(mut).compatible) << p.name;
        auto swapped = induced_mutual_actions(p.second, p.first);
        EXPECT_TRUE(check_compatible(swapped).compatible) << p.name;
      }
    }

    // Property: two realizations of the same mutual actions over different
    // codomains give isomorphic Peiffer products. Trivial actions of Z3 and
    // Z6 arise from (Z3 in Z6, id Z6) and from the two inclusions into
    // Z3 x Z6.
    TEST(InducedActionsProperty, SameActionsSamePeifferProduct) {
      auto z3 = catalog::cyclic(3), z6 = catalog::cyclic(6);
      auto first = induced_mutual_actions(fixtures::z3_in_z6(), identity_xmod(z6));
      auto l     = direct_product(z3, z6);
      std::vector<Elem> im(3), in(6);
      for (Elem a = 0; a < 3; ++a) {
        im[a] = a * 6;
      }
      for (Elem b = 0; b < 6; ++b) {
        in[b] = b;
      }
      CrossedModule xm{Hom::make(z3, l, im), trivial_action(l, z3)};
      CrossedModule xn{Hom::make(z6, l, in), trivial_action(l, z6)};
      ASSERT_FALSE(check_xmod(xm));
      ASSERT_FALSE(check_xmod(xn));
      auto second = induced_mutual_actions(xm, xn);
      ASSERT_EQ(first, second);
      auto p1 = peiffer_product(first);
      auto p2 = peiffer_product(second);
      EXPECT_TRUE(is_isomorphic(p1.product, p2.product));
      EXPECT_TRUE(is_isomorphic(p1.product, l));
    }

    // Mutual conjugation on S3 from (id, id) over S3 and from the inclusion
    // of S3 into S3 x Z2 taken twice.
    TEST(InducedActionsProperty, MutualConjugationTwoRealizations) {
      auto s3 = catalog::symmetric(3);
      auto l  = direct_product(s3, catalog::cyclic(2));
      std::vector<Elem> incl(6);
      Table             t(l.order(), std::vector<Elem>(6));
      for (Elem g = 0; g < 6; ++g) {
        incl[g] = g * 2;
      }
      for (Elem a = 0; a < l.order(); ++a) {
        for (Elem x = 0; x < 6; ++x) {
          t[a][x] = s3.conj(a / 2, x);
        }
      }
      CrossedModule xm{Hom::make(s3, l, incl), Action::make(l, s3, t)};
      ASSERT_FALSE(check_xmod(xm));
      auto first  = induced_mutual_actions(identity_xmod(s3), identity_xmod(s3));
      auto second = induced_mutual_actions(xm, xm);
      ASSERT_EQ(first, second);
      EXPECT_TRUE(is_isomorphic(peiffer_product(first).product,
                                peiffer_product(second).product));
    }

  }  // namespace
}  // namespace peiffer
