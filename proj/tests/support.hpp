#ifndef PEIFFER_TESTS_SUPPORT_HPP_
#define PEIFFER_TESTS_SUPPORT_HPP_

// Shared generators and brute-force oracles for the test binaries. Oracles
// here avoid the library routine they are compared against.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "peiffer/peiffer_all.hpp"

namespace peiffer::testing {

  inline std::mt19937& rng() {
    static std::mt19937 r(20240917u);
    return r;
  }

  inline std::size_t uniform(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng());
  }

  // Catalog plus S4, for closure and quotient properties.
  inline std::vector<FiniteGroup> groups_up_to_24() {
    auto g = catalog::standard();
    g.push_back(catalog::trivial());
    g.push_back(catalog::cyclic(8));
    g.push_back(direct_product(catalog::cyclic(2), catalog::symmetric(3)));
    g.push_back(catalog::symmetric(4));
    return g;
  }

  // Closure by repeated conjugation and multiplication until nothing new
  // appears.
  inline std::set<Elem> brute_normal_closure(FiniteGroup const& g,
                                             std::vector<Elem> const& gens) {
    std::set<Elem> s{g.identity()};
    s.insert(gens.begin(), gens.end());
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<Elem> cur(s.begin(), s.end());
      for (Elem a : cur) {
        for (Elem b : cur) {
          grew |= s.insert(g.mul(a, b)).second;
        }
        for (Elem x = 0; x < g.order(); ++x) {
          grew |= s.insert(g.mul(g.mul(x, a), g.inv(x))).second;
        }
      }
    }
    return s;
  }

  // All bijections of the element set that respect the table.
  inline std::size_t brute_automorphism_count(FiniteGroup const& g) {
    std::vector<Elem> perm(g.order());
    for (Elem i = 0; i < perm.size(); ++i) {
      perm[i] = i;
    }
    std::size_t count = 0;
    do {
      bool ok = true;
      for (Elem a = 0; a < g.order() && ok; ++a) {
        for (Elem b = 0; b < g.order() && ok; ++b) {
          ok = perm[g.mul(a, b)] == g.mul(perm[a], perm[b]);
        }
      }
      count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
  }

  inline Letter random_letter(std::vector<FiniteGroup> const& factors) {
    std::size_t const s = uniform(factors.size());
    return {static_cast<Side>(s), static_cast<Elem>(uniform(factors[s].order()))};
  }

  // Raw letter sequence; may contain identities and same-side neighbours.
  inline std::vector<Letter> random_raw(std::vector<FiniteGroup> const& factors,
                                        std::size_t max_len) {
    std::vector<Letter> w(uniform(max_len + 1));
    for (auto& l : w) {
      l = random_letter(factors);
    }
    return w;
  }

  // Every mutual-action pair between catalog groups with |M||N| <= bound.
  inline std::vector<MutualActions> mutual_family(std::size_t bound = 36) {
    std::vector<MutualActions> out;
    for (auto const& m : catalog::standard()) {
      for (auto const& n : catalog::standard()) {
        if (m.order() * n.order() > bound) {
          continue;
        }
        auto const nm = enumerate_actions(n, m);
        auto const mn = enumerate_actions(m, n);
        for (auto const& a : nm) {
          for (auto const& b : mn) {
            out.push_back(MutualActions::make(a, b));
          }
        }
      }
    }
    return out;
  }

  // Every action between catalog groups.
  inline std::vector<Action> action_family() {
    std::vector<Action> out;
    for (auto const& a : catalog::standard()) {
      for (auto const& x : catalog::standard()) {
        auto acts = enumerate_actions(a, x);
        out.insert(out.end(), acts.begin(), acts.end());
      }
    }
    return out;
  }

}  // namespace peiffer::testing

#endif  // PEIFFER_TESTS_SUPPORT_HPP_
