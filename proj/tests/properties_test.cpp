#include <gtest/gtest.h>

#include "support.hpp"

// Invariants spanning several modules, checked over every mutual action
// between small catalog groups.

namespace peiffer {
  namespace {

    struct Pair {
      Elem m, n;
    };

    // Semidirect arithmetic from the defining formula, kept apart from
    // semidirect().
    struct PairArith {
      MutualActions const& mut;

      Pair mul(Pair a, Pair b) const {
        auto const& M = mut.M();
        auto const& N = mut.N();
        return {M.mul(a.m, mut.xi_nm()(a.n, b.m)), N.mul(a.n, b.n)};
      }

      Pair inv(Pair a) const {
        Elem const ni = mut.N().inv(a.n);
        return {mut.xi_nm()(ni, mut.M().inv(a.m)), ni};
      }
    };

    std::size_t oracle_peiffer_order(MutualActions const& mut) {
      PairArith ar{mut};
      auto const& M  = mut.M();
      auto const& N  = mut.N();
      auto const  sd = semidirect(mut.xi_nm());
      std::vector<Elem> rel;
      for (Elem m = 0; m < M.order(); ++m) {
        for (Elem n = 0; n < N.order(); ++n) {
          Pair jm{m, N.identity()};
          Pair jn{M.identity(), n};
          Pair jmn{M.identity(), mut.xi_mn()(m, n)};
          Pair r = ar.mul(ar.mul(ar.mul(jm, jn), ar.inv(jm)), ar.inv(jmn));
          rel.push_back(sd.element(r.m, r.n));
        }
      }
      return sd.group.order() / testing::brute_normal_closure(sd.group, rel).size();
    }

    class MutualFamily : public ::testing::Test {
     protected:
      static void SetUpTestSuite() {
        family_ = new std::vector<MutualActions>(testing::mutual_family(24));
      }

      static void TearDownTestSuite() {
        delete family_;
        family_ = nullptr;
      }

      static std::vector<MutualActions>* family_;
    };

    std::vector<MutualActions>* MutualFamily::family_ = nullptr;

    TEST_F(MutualFamily, IsNonTrivial) {
      EXPECT_GT(family_->size(), 50u);
      std::size_t incompatible = 0;
      for (auto const& mut : *family_) {
        incompatible += !check_compatible(mut).compatible;
      }
      EXPECT_GT(incompatible, 0u);
    }

    TEST_F(MutualFamily, PeifferOrderMatchesBruteForce) {
      for (auto const& mut : *family_) {
        auto pp = peiffer_product(mut);
        EXPECT_EQ(pp.product.order(), oracle_peiffer_order(mut));
        EXPECT_EQ(mut.M().order() * mut.N().order() % pp.product.order(), 0u);
      }
    }

    TEST_F(MutualFamily, ImagesGenerate) {
      for (auto const& mut : *family_) {
        auto pp   = peiffer_product(mut);
        auto gens = pp.lM.map();
        gens.insert(gens.end(), pp.lN.map().begin(), pp.lN.map().end());
        EXPECT_EQ(subgroup_generated(pp.product, gens).size(), pp.product.order());
      }
    }

    TEST_F(MutualFamily, CompatibleImpliesCrossedModulesAndRoundTrip) {
      for (auto const& mut : *family_) {
        auto pp = peiffer_product(mut);
        if (!pp.compatible) {
          continue;
        }
        ASSERT_TRUE(pp.actions);
        auto [xm, xn] = peiffer_xmods(pp);
        EXPECT_FALSE(check_xmod(xm));
        EXPECT_FALSE(check_xmod(xn));
        EXPECT_EQ(induced_mutual_actions(xm, xn), mut);
        // P is universal among its own pair, so h is the identity.
        auto h = universal_map(pp, xm, xn);
        EXPECT_EQ(h, Hom::identity(pp.product));
      }
    }

    TEST_F(MutualFamily, WellDefinedActionsAgreeOnRandomWords) {
      // Two random words with equal image in P act the same way.
      for (auto const& mut : *family_) {
        auto pp = peiffer_product(mut);
        if (!pp.actions) {
          continue;
        }
        auto image = [&](std::vector<Letter> const& w) {
          Elem r = pp.product.identity();
          for (auto l : w) {
            r = pp.product.mul(r, l.side == Side::first ? pp.lM(l.elem)
                                                        : pp.lN(l.elem));
          }
          return r;
        };
        std::vector<FiniteGroup> factors{mut.M(), mut.N()};
        for (int t = 0; t < 40; ++t) {
          auto w = testing::random_raw(factors, 5);
          Elem p = image(w);
          for (Elem x = 0; x < mut.M().order(); ++x) {
            ASSERT_EQ(coproduct_eval(mut, w, Side::first, x), pp.actions->first(p, x));
          }
          for (Elem y = 0; y < mut.N().order(); ++y) {
            ASSERT_EQ(coproduct_eval(mut, w, Side::second, y), pp.actions->second(p, y));
          }
        }
      }
    }

    TEST_F(MutualFamily, SwapGivesIsomorphicProduct) {
      for (auto const& mut : *family_) {
        auto a = peiffer_product(mut);
        auto b = peiffer_product(mut.swapped());
        EXPECT_TRUE(is_isomorphic(a.product, b.product).has_value());
        EXPECT_EQ(check_compatible(mut).compatible,
                  check_compatible(mut.swapped()).compatible);
      }
    }

  }  // namespace
}  // namespace peiffer
