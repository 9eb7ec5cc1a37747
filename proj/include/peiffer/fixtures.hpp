#ifndef PEIFFER_FIXTURES_HPP_
#define PEIFFER_FIXTURES_HPP_

// Named group fixtures: crossed modules over S3 and Z6, and the standard
// incompatible pair.

#include <string>
#include <utility>
#include <vector>

#include "peiffer/action.hpp"
#include "peiffer/catalog.hpp"
#include "peiffer/compat.hpp"
#include "peiffer/xmod.hpp"

namespace peiffer::fixtures {

  // Index of the transposition swapping the first two points in S3.
  inline Elem s3_swap01() {
    return catalog::permutation_index({1, 0, 2});
  }

  // A3 in S3 with conjugation.
  inline CrossedModule a3_in_s3() {
    auto const s3 = catalog::symmetric(3);
    std::vector<Elem> const a3{catalog::permutation_index({0, 1, 2}),
                               catalog::permutation_index({1, 2, 0}),
                               catalog::permutation_index({2, 0, 1})};
    return normal_subgroup_xmod(ElementSet(s3, a3));
  }

  // Z3 = {0, 2, 4} in Z6.
  inline CrossedModule z3_in_z6() {
    auto const z6 = catalog::cyclic(6);
    return normal_subgroup_xmod(ElementSet(z6, std::vector<Elem>{0, 2, 4}));
  }

  // Z2 acting on a group by conjugation with an involution t.
  inline Action involution_action(FiniteGroup const& g, Elem t) {
    auto const z2 = catalog::cyclic(2);
    Table      table(2, std::vector<Elem>(g.order()));
    for (Elem x = 0; x < g.order(); ++x) {
      table[0][x] = x;
      table[1][x] = g.conj(t, x);
    }
    return Action::make(z2, g, table);
  }

  // M = S3, N = Z2; Z2 acts on S3 by conjugation with (0 1), S3 acts
  // trivially on Z2. Not compatible.
  inline MutualActions s3_z2_incompatible() {
    auto const s3 = catalog::symmetric(3);
    auto const z2 = catalog::cyclic(2);
    return MutualActions::make(involution_action(s3, s3_swap01()),
                               trivial_action(s3, z2));
  }

  struct XmodPair {
    std::string   name;
    CrossedModule first;
    CrossedModule second;
  };

  // Coterminal pairs: (id, id) over every catalog group, (A3 in S3, id S3)
  // and (Z3 in Z6, id Z6).
  inline std::vector<XmodPair> coterminal_pairs() {
    std::vector<XmodPair> out;
    for (auto const& g : catalog::standard()) {
      out.push_back({"id_" + g.name() + ",id_" + g.name(), identity_xmod(g),
                     identity_xmod(g)});
    }
    out.push_back({"A3<S3,id_S3", a3_in_s3(),
                   identity_xmod(catalog::symmetric(3))});
    out.push_back({"Z3<Z6,id_Z6", z3_in_z6(), identity_xmod(catalog::cyclic(6))});
    return out;
  }

}  // namespace peiffer::fixtures

#endif  // PEIFFER_FIXTURES_HPP_
