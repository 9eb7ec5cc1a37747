#include <gtest/gtest.h>

#include "support.hpp"

namespace peiffer {
  namespace {

    constexpr Side A = Side::first;
    constexpr Side B = Side::second;

    FreeProduct s3_z3() {
      return FreeProduct(catalog::symmetric(3), catalog::cyclic(3));
    }

    TEST(Reduce, SameSideLettersMerge) {
      auto fp = s3_z3();
      auto w  = fp.reduce({{A, 1}, {A, 2}});
      ASSERT_EQ(w.size(), 1u);
      EXPECT_EQ(w[0].elem, catalog::symmetric(3).mul(1, 2));
    }

    TEST(Reduce, IdentityLettersVanish) {
      auto fp = s3_z3();
      auto w  = fp.reduce({{A, 3}, {B, 0}, {B, 1}});
      EXPECT_EQ(fp.format(w), "M:3 N:1");
    }

    TEST(Reduce, InversePairCancels) {
      auto fp = s3_z3();
      auto s3 = catalog::symmetric(3);
      EXPECT_TRUE(fp.reduce({{A, 3}, {A, s3.inv(3)}}).empty());
    }

    TEST(Reduce, CancellationExposesNeighbours) {
      auto fp = s3_z3();
      auto w  = fp.reduce({{B, 1}, {A, 3}, {A, 4}, {B, 1}});
      // 3 and 4 are inverse 3-cycles, so the two N letters merge.
      EXPECT_EQ(fp.format(w), "N:2");
    }

    TEST(Reduce, OutOfRangeLetterThrows) {
      auto fp = s3_z3();
      EXPECT_THROW(fp.reduce({{B, 5}}), InvalidInput);
    }

    TEST(Parse, ReducesAndRoundTrips) {
      auto fp = s3_z3();
      auto w  = fp.parse("M:3 N:1 N:2 M:0");
      EXPECT_EQ(fp.format(w), "M:3");
      EXPECT_EQ(fp.parse(fp.format(fp.parse("M:1 N:2 M:3"))), fp.parse("M:1 N:2 M:3"));
      EXPECT_THROW(fp.parse("Q:1"), InvalidInput);
      EXPECT_THROW(fp.parse("M:x"), InvalidInput);
      EXPECT_THROW(fp.parse("L:1"), InvalidInput);
    }

    TEST(Sigma, EmptyWordMapsToIdentities) {
      auto fp = s3_z3();
      EXPECT_EQ(fp.sigma_image(FreeWord{}), (std::pair<Elem, Elem>{0, 0}));
    }

    TEST(Sigma, ConjugateFoldsToCore) {
      auto fp = s3_z3();
      auto w  = fp.parse("M:3 N:1 M:4");
      EXPECT_EQ(fp.sigma_image(w), (std::pair<Elem, Elem>{0, 1}));
    }

    TEST(Sigma, FoldsEachSideInOrder) {
      auto fp = s3_z3();
      auto s3 = catalog::symmetric(3);
      auto w  = fp.parse("M:1 N:1 M:2");
      EXPECT_EQ(fp.sigma_image(w), (std::pair<Elem, Elem>{s3.mul(1, 2), 1}));
    }

    TEST(Membership, ConjugateIsFlat) {
      auto fp = s3_z3();
      EXPECT_TRUE(fp.member(fp.parse("M:3 N:1 M:4"), Membership::flat_first));
    }

    TEST(Membership, SingleLetterIsNotFlat) {
      auto fp = s3_z3();
      EXPECT_FALSE(fp.member(fp.parse("M:3"), Membership::flat_first));
      EXPECT_TRUE(fp.member(fp.parse("M:3"), Membership::flat_second));
    }

    TEST(Membership, CommutatorIsInCosmash) {
      auto fp = s3_z3();
      auto w  = fp.parse("M:3 N:1 M:4 N:2");
      EXPECT_TRUE(fp.member(w, Membership::cosmash));
      EXPECT_FALSE(fp.member(fp.parse("M:3 N:1 M:4"), Membership::cosmash));
    }

    TEST(Membership, TernaryCosmash) {
      auto z2 = catalog::cyclic(2);
      FreeProduct fp(z2, z2, z2);
      // [[a, b], c] lies in the ternary cosmash; [a, b] does not.
      auto ab   = fp.parse("M:1 N:1 M:1 N:1");
      auto c    = fp.parse("L:1");
      auto comm = fp.multiply(fp.multiply(ab, c),
                              fp.multiply(fp.inverse(ab), fp.inverse(c)));
      EXPECT_TRUE(fp.member(comm, Membership::ternary_cosmash));
      EXPECT_FALSE(fp.member(ab, Membership::ternary_cosmash));
      EXPECT_TRUE(fp.member(ab, Membership::cosmash));
      FreeProduct two(z2, z2);
      EXPECT_THROW(two.member(ab, Membership::ternary_cosmash), PreconditionFailed);
    }

    TEST(FlatDecompose, SweepsRunningPrefix) {
      auto s3 = catalog::symmetric(3);
      auto fp = s3_z3();
      Elem a1 = 1, a2 = 3;
      Elem a3 = s3.inv(s3.mul(a1, a2));
      std::vector<Letter> w{{A, a1}, {B, 1}, {A, a2}, {B, 2}, {A, a3}, {B, 1}};
      auto gens = fp.flat_decompose(w);
      ASSERT_EQ(gens.size(), 3u);
      EXPECT_EQ(gens[0].conjugator, a1);
      EXPECT_EQ(gens[0].core, 1u);
      EXPECT_EQ(gens[1].conjugator, s3.mul(a1, a2));
      EXPECT_EQ(gens[1].core, 2u);
      EXPECT_EQ(gens[2].conjugator, s3.identity());
      EXPECT_EQ(gens[2].core, 1u);
    }

    TEST(FlatDecompose, ConjugateAndEmpty) {
      auto fp   = s3_z3();
      auto gens = fp.flat_decompose(fp.parse("M:3 N:1 M:4"));
      ASSERT_EQ(gens.size(), 1u);
      EXPECT_EQ(gens[0].conjugator, 3u);
      EXPECT_EQ(gens[0].core, 1u);
      EXPECT_TRUE(fp.flat_decompose(FreeWord{}).empty());
    }

    TEST(FlatDecompose, RejectsNonMembers) {
      auto fp = s3_z3();
      EXPECT_THROW(fp.flat_decompose(fp.parse("M:3 N:1")), PreconditionFailed);
    }

    // Property: the generators multiply back to w.
    TEST(FlatDecomposeProperty, ProductRecoversWord) {
      auto fp = s3_z3();
      auto s3 = catalog::symmetric(3);
      for (int trial = 0; trial < 300; ++trial) {
        auto raw = testing::random_raw({fp.factor(A), fp.factor(B)}, 9);
        Elem pre = s3.identity();
        for (auto l : raw) {
          if (l.side == A) {
            pre = s3.mul(pre, l.elem);
          }
        }
        raw.push_back({A, s3.inv(pre)});
        auto const w = fp.reduce(raw);
        FreeWord   prod;
        for (auto g : fp.flat_decompose(w)) {
          prod = fp.multiply(prod, fp.reduce({{A, g.conjugator},
                                              {B, g.core},
                                              {A, s3.inv(g.conjugator)}}));
        }
        EXPECT_EQ(prod, w);
      }
    }

    TEST(EvalFlatAction, ConjugateGivesActionValue) {
      auto psi = conjugation_action(catalog::symmetric(3));
      FreeProduct fp(psi.acting(), psi.target());
      for (Elem a = 0; a < 6; ++a) {
        for (Elem x = 0; x < 6; ++x) {
          std::vector<Letter> w{{A, a}, {B, x}, {A, psi.acting().inv(a)}};
          EXPECT_EQ(eval_flat_action(psi, w), psi(a, x));
        }
      }
    }

    TEST(EvalFlatAction, TrivialActionMultipliesCoreLetters) {
      auto s3  = catalog::symmetric(3);
      auto psi = trivial_action(catalog::cyclic(2), s3);
      std::vector<Letter> w{{A, 1}, {B, 3}, {B, 1}, {A, 1}, {B, 2}};
      EXPECT_EQ(eval_flat_action(psi, w), s3.mul(s3.mul(3, 1), 2));
    }

    TEST(EvalFlatAction, CommutatorGivesActionCore) {
      auto psi = fixtures::involution_action(catalog::symmetric(3), 2);
      auto s3  = psi.target();
      for (Elem x = 0; x < 6; ++x) {
        std::vector<Letter> w{{A, 1}, {B, x}, {A, 1}, {B, s3.inv(x)}};
        EXPECT_EQ(eval_flat_action(psi, w), s3.mul(psi(1, x), s3.inv(x)));
      }
    }

    // Property: any interleaving of adjacent merges reaches the same normal
    // form. Merges are applied in random order by an independent rewriter.
    TEST(ReduceProperty, ConfluentUnderRandomMergeOrder) {
      auto fp = s3_z3();
      for (int trial = 0; trial < 500; ++trial) {
        auto raw = testing::random_raw({fp.factor(A), fp.factor(B)}, 10);
        auto w   = raw;
        for (;;) {
          std::vector<std::size_t> sites;
          for (std::size_t i = 0; i < w.size(); ++i) {
            if (fp.factor(w[i].side).is_identity(w[i].elem)) {
              sites.push_back(2 * i);
            } else if (i + 1 < w.size() && w[i].side == w[i + 1].side) {
              sites.push_back(2 * i + 1);
            }
          }
          if (sites.empty()) {
            break;
          }
          std::size_t const s = sites[testing::uniform(sites.size())];
          std::size_t const i = s / 2;
          if (s % 2 == 0) {
            w.erase(w.begin() + static_cast<long>(i));
          } else {
            w[i].elem = fp.factor(w[i].side).mul(w[i].elem, w[i + 1].elem);
            w.erase(w.begin() + static_cast<long>(i) + 1);
          }
        }
        auto const lib = fp.reduce(raw);
        ASSERT_EQ(lib.size(), w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
          EXPECT_EQ(lib[i], w[i]);
        }
        EXPECT_EQ(fp.reduce(lib.letters()), lib);
      }
    }

    // Property: concatenate-then-reduce is associative with the empty word
    // as unit.
    TEST(ReduceProperty, MultiplicationIsAssociative) {
      auto fp = s3_z3();
      for (int trial = 0; trial < 200; ++trial) {
        auto u = fp.reduce(testing::random_raw({fp.factor(A), fp.factor(B)}, 6));
        auto v = fp.reduce(testing::random_raw({fp.factor(A), fp.factor(B)}, 6));
        auto w = fp.reduce(testing::random_raw({fp.factor(A), fp.factor(B)}, 6));
        EXPECT_EQ(fp.multiply(fp.multiply(u, v), w), fp.multiply(u, fp.multiply(v, w)));
        EXPECT_EQ(fp.multiply(u, FreeWord{}), u);
        EXPECT_TRUE(fp.multiply(u, fp.inverse(u)).empty());
      }
    }

    // Property: sigma is multiplicative.
    TEST(SigmaProperty, Multiplicative) {
      auto fp = s3_z3();
      auto s3 = fp.factor(A);
      auto z3 = fp.factor(B);
      for (int trial = 0; trial < 300; ++trial) {
        auto v  = fp.reduce(testing::random_raw({s3, z3}, 8));
        auto w  = fp.reduce(testing::random_raw({s3, z3}, 8));
        auto sv = fp.sigma_image(v), sw = fp.sigma_image(w);
        auto s  = fp.sigma_image(fp.multiply(v, w));
        EXPECT_EQ(s.first, s3.mul(sv.first, sw.first));
        EXPECT_EQ(s.second, z3.mul(sv.second, sw.second));
      }
    }

    // Property: evaluation does not see reduction.
    TEST(EvalFlatActionProperty, InvariantUnderReduction) {
      for (auto const& psi : testing::action_family()) {
        FreeProduct fp(psi.acting(), psi.target());
        for (int trial = 0; trial < 10; ++trial) {
          auto raw = testing::random_raw({psi.acting(), psi.target()}, 8);
          Elem pre = psi.acting().identity();
          for (auto l : raw) {
            if (l.side == A) {
              pre = psi.acting().mul(pre, l.elem);
            }
          }
          raw.push_back({A, psi.acting().inv(pre)});
          EXPECT_EQ(eval_flat_action(psi, raw),
                    eval_flat_action(psi, fp.reduce(raw)));
        }
      }
    }

    // Property: for every flat word of length at most 6 over a set of
    // fixtures, evaluation equals conjugation inside X x| A, computed with
    // the semidirect table.
    TEST(EvalFlatActionProperty, EqualsSemidirectConjugation) {
      std::vector<Action> fixtures_list{
          fixtures::involution_action(catalog::symmetric(3), 2),
          fixtures::involution_action(catalog::cyclic(3), 0),
          conjugation_action(catalog::symmetric(3)),
          trivial_action(catalog::cyclic(2), catalog::cyclic(3))};
      // Z2 inverting Z3.
      fixtures_list.push_back(Action::make(catalog::cyclic(2), catalog::cyclic(3),
                                           {{0, 1, 2}, {0, 2, 1}}));
      std::size_t checked = 0;
      for (auto const& psi : fixtures_list) {
        auto const sd = semidirect(psi);
        auto const& g = sd.group;
        FiniteGroup const& a_grp = psi.acting();
        FiniteGroup const& x_grp = psi.target();
        std::vector<Letter> word;
        std::function<void(std::size_t)> rec = [&](std::size_t len) {
          Elem pre = a_grp.identity();
          Elem val = g.identity();
          for (auto l : word) {
            if (l.side == A) {
              pre = a_grp.mul(pre, l.elem);
              val = g.mul(val, sd.jA(l.elem));
            } else {
              val = g.mul(val, sd.jX(l.elem));
            }
          }
          if (a_grp.is_identity(pre)) {
            ++checked;
            EXPECT_EQ(sd.jX(eval_flat_action(psi, word)), val);
          }
          if (len == 6) {
            return;
          }
          // Nonidentity letters, alternating sides, keep the set finite.
          for (Side s : {A, B}) {
            if (!word.empty() && word.back().side == s) {
              continue;
            }
            FiniteGroup const& f = s == A ? a_grp : x_grp;
            for (Elem e = 0; e < f.order(); ++e) {
              if (f.is_identity(e)) {
                continue;
              }
              word.push_back({s, e});
              rec(len + 1);
              word.pop_back();
            }
          }
        };
        rec(0);
      }
      EXPECT_GT(checked, 1000u);
    }

  }  // namespace
}  // namespace peiffer
