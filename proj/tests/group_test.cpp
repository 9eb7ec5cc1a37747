#include <gtest/gtest.h>

#include "support.hpp"

namespace peiffer {
  namespace {

    using testing::brute_normal_closure;
    using testing::groups_up_to_24;

    TEST(ValidateGroup, Z2IsValid) {
      EXPECT_FALSE(validate_group({{0, 1}, {1, 0}}));
    }

    TEST(ValidateGroup, Z3IsValid) {
      EXPECT_FALSE(validate_group({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
    }

    TEST(ValidateGroup, MissingInverseIsReported) {
      auto v = validate_group({{0, 1}, {1, 1}});
      ASSERT_TRUE(v);
      EXPECT_EQ(v->condition, "inverse");
      EXPECT_EQ(v->witness, std::vector<Elem>{1});
    }

    TEST(ValidateGroup, MissingIdentityIsReported) {
      auto v = validate_group({{1, 0}, {0, 0}});
      ASSERT_TRUE(v);
      EXPECT_EQ(v->condition, "identity");
    }

    TEST(ValidateGroup, NonAssociativeTableGivesTriple) {
      // Latin square with identity 0 that is not associative.
      Table t{{0, 1, 2, 3, 4},
              {1, 0, 3, 4, 2},
              {2, 4, 0, 1, 3},
              {3, 2, 4, 0, 1},
              {4, 3, 1, 2, 0}};
      auto v = validate_group(t);
      ASSERT_TRUE(v);
      EXPECT_EQ(v->condition, "associativity");
      ASSERT_EQ(v->witness.size(), 3u);
      auto [a, b, c] = std::tuple{v->witness[0], v->witness[1], v->witness[2]};
      EXPECT_NE(t[t[a][b]][c], t[a][t[b][c]]);
    }

    TEST(ValidateGroup, ShapeErrorsThrow) {
      EXPECT_THROW(validate_group({{0, 1}, {1}}), InvalidInput);
      EXPECT_THROW(validate_group({{0, 2}, {1, 0}}), InvalidInput);
      EXPECT_THROW(validate_group({}), InvalidInput);
    }

    TEST(FiniteGroup, IdentityNeedNotBeZero) {
      // Z2 with the identity stored at index 1.
      auto g = FiniteGroup::from_table({{1, 0}, {0, 1}});
      EXPECT_EQ(g.identity(), 1u);
      EXPECT_EQ(g.inv(0), 0u);
      EXPECT_EQ(g.element_order(0), 2u);
      EXPECT_EQ(g.element_order(1), 1u);
    }

    TEST(FiniteGroup, ElementOrdersInS3) {
      auto s3 = catalog::symmetric(3);
      std::vector<std::size_t> orders;
      for (Elem x = 0; x < 6; ++x) {
        orders.push_back(s3.element_order(x));
      }
      std::sort(orders.begin(), orders.end());
      EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 2, 2, 3, 3}));
      EXPECT_FALSE(s3.is_abelian());
    }

    TEST(FiniteGroup, FromTableRejectsInvalid) {
      EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), InvalidInput);
    }

    TEST(NormalClosure, OfIdentityIsTrivial) {
      for (auto const& g : groups_up_to_24()) {
        std::vector<Elem> gens{g.identity()};
        EXPECT_EQ(normal_closure(g, gens).size(), 1u) << g.name();
      }
    }

    TEST(NormalClosure, AbelianEqualsGeneratedSubgroup) {
      auto g = direct_product(catalog::cyclic(4), catalog::cyclic(2));
      for (Elem x = 0; x < g.order(); ++x) {
        std::vector<Elem> gens{x};
        EXPECT_EQ(normal_closure(g, gens), subgroup_generated(g, gens));
      }
    }

    TEST(NormalClosure, TranspositionInS3GivesEverything) {
      auto s3 = catalog::symmetric(3);
      std::vector<Elem> gens{fixtures::s3_swap01()};
      EXPECT_EQ(normal_closure(s3, gens).size(), 6u);
      EXPECT_EQ(brute_normal_closure(s3, gens).size(), 6u);
    }

    TEST(NormalClosure, MatchesBruteForceOnAllSingletonsAndPairs) {
      for (auto const& g : groups_up_to_24()) {
        for (Elem x = 0; x < g.order(); ++x) {
          for (Elem y = x; y < g.order(); y += 3) {
            std::vector<Elem> gens{x, y};
            auto const        lib = normal_closure(g, gens).elements();
            auto const        ref = brute_normal_closure(g, gens);
            EXPECT_EQ(std::set<Elem>(lib.begin(), lib.end()), ref) << g.name();
          }
        }
      }
    }

    TEST(Quotient, ByTrivialSubgroupIsIsomorphic) {
      for (auto const& g : catalog::standard()) {
        std::vector<Elem> e{g.identity()};
        auto q = quotient(g, ElementSet(g, e));
        EXPECT_EQ(q.group.order(), g.order());
        EXPECT_TRUE(q.projection.bijective());
      }
    }

    TEST(Quotient, ByWholeGroupIsTrivial) {
      for (auto const& g : catalog::standard()) {
        auto q = quotient(g, ElementSet::whole(g));
        EXPECT_EQ(q.group.order(), 1u);
      }
    }

    TEST(Quotient, S3ModA3HasOrderTwo) {
      auto const a3 = fixtures::a3_in_s3().boundary.image();
      auto       q  = quotient(catalog::symmetric(3), a3);
      // Coset count oracle: 6 / 3.
      EXPECT_EQ(q.group.order(), 6u / a3.size());
      EXPECT_EQ(q.group.order(), 2u);
    }

    TEST(Quotient, RepresentativesAreMinimalAndAscending) {
      auto const a3 = fixtures::a3_in_s3().boundary.image();
      auto       q  = quotient(catalog::symmetric(3), a3);
      EXPECT_EQ(q.representatives, (std::vector<Elem>{0, 1}));
    }

    TEST(Quotient, NonNormalSubsetIsRejected) {
      auto s3 = catalog::symmetric(3);
      std::vector<Elem> h{0, fixtures::s3_swap01()};
      EXPECT_THROW(quotient(s3, ElementSet(s3, h)), PreconditionFailed);
    }

    // Property: the projection onto G / <<S>> has kernel exactly <<S>>.
    TEST(QuotientProperty, KernelOfProjectionIsTheClosure) {
      for (auto const& g : groups_up_to_24()) {
        for (int trial = 0; trial < 20; ++trial) {
          std::vector<Elem> gens;
          std::size_t const k = testing::uniform(3);
          for (std::size_t i = 0; i < k; ++i) {
            gens.push_back(static_cast<Elem>(testing::uniform(g.order())));
          }
          auto const closure = normal_closure(g, gens);
          auto const q       = quotient(g, closure);
          EXPECT_EQ(q.projection.kernel(), closure) << g.name();
          EXPECT_TRUE(q.projection.surjective());
          EXPECT_EQ(q.group.order() * closure.size(), g.order());
        }
      }
    }

    TEST(DirectProduct, OrdersMultiply) {
      EXPECT_EQ(direct_product(catalog::cyclic(2), catalog::cyclic(3)).order(), 6u);
    }

    TEST(DirectProduct, TrivialFactorGivesIsomorphicGroup) {
      for (auto const& g : catalog::standard()) {
        auto p = direct_product(catalog::trivial(), g);
        EXPECT_TRUE(is_isomorphic(p, g)) << g.name();
      }
    }

    TEST(Hom, MakeRejectsNonHomomorphism) {
      auto z2 = catalog::cyclic(2), z3 = catalog::cyclic(3);
      EXPECT_THROW(Hom::make(z3, z2, {0, 1, 1}), InvalidInput);
      EXPECT_NO_THROW(Hom::make(z3, z2, {0, 0, 0}));
    }

    TEST(Hom, KernelImageAndComposition) {
      auto z6 = catalog::cyclic(6), z3 = catalog::cyclic(3);
      auto f  = Hom::make(z6, z3, {0, 1, 2, 0, 1, 2});
      EXPECT_EQ(f.kernel().elements(), (std::vector<Elem>{0, 3}));
      EXPECT_TRUE(f.surjective());
      auto g = Hom::make(z3, z6, {0, 2, 4});
      EXPECT_EQ(compose(f, g).map(), (std::vector<Elem>{0, 2, 1}));
    }

  }  // namespace
}  // namespace peiffer
