#ifndef PEIFFER_MORPHISMS_HPP_
#define PEIFFER_MORPHISMS_HPP_

// Backtracking searches over homomorphisms between small groups:
// enumeration, automorphism groups and isomorphism testing.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "peiffer/group.hpp"

namespace peiffer {

  inline constexpr std::size_t default_automorphism_cap = 64;
  inline constexpr std::size_t default_isomorphism_cap  = 64;

  // Greedy generating set: repeatedly add the element that enlarges the
  // current subgroup the most (ties broken by smallest index).
  inline std::vector<Elem> generating_set(FiniteGroup const& g) {
    std::vector<Elem> gens;
    ElementSet        current = subgroup_generated(g, gens);
    while (current.size() < g.order()) {
      Elem        best      = 0;
      std::size_t best_size = 0;
      for (Elem x = 0; x < g.order(); ++x) {
        if (current.contains(x)) {
          continue;
        }
        gens.push_back(x);
        std::size_t s = subgroup_generated(g, gens).size();
        gens.pop_back();
        if (s > best_size) {
          best      = x;
          best_size = s;
        }
      }
      gens.push_back(best);
      current = subgroup_generated(g, gens);
    }
    return gens;
  }

  // Extends generator images to a map on all of dom by walking the Cayley
  // graph. Returns nullopt when the assignment is inconsistent; a consistent
  // walk always yields a homomorphism.
  inline std::optional<std::vector<Elem>>
  extend_to_hom(FiniteGroup const& dom, FiniteGroup const& cod,
                std::span<Elem const> gens, std::span<Elem const> images) {
    std::size_t const unset = cod.order();
    std::vector<Elem> map(dom.order(), static_cast<Elem>(unset));
    std::vector<Elem> queue{dom.identity()};
    map[dom.identity()] = cod.identity();
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Elem const x = queue[i];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Elem const y   = dom.mul(x, gens[k]);
        Elem const img = cod.mul(map[x], images[k]);
        if (map[y] == unset) {
          map[y] = img;
          queue.push_back(y);
        } else if (map[y] != img) {
          return std::nullopt;
        }
      }
    }
    if (queue.size() != dom.order()) {
      return std::nullopt;  // gens do not generate dom
    }
    return map;
  }

  namespace detail {
    // Calls visit(map) for every homomorphism dom -> cod whose generator
    // images satisfy accept(generator, image). Stops early when visit
    // returns false.
    inline void for_each_hom(
        FiniteGroup const& dom, FiniteGroup const& cod,
        std::function<bool(Elem, Elem)> const&              accept,
        std::function<bool(std::vector<Elem> const&)> const& visit) {
      auto const                     gens = generating_set(dom);
      std::vector<std::vector<Elem>> candidates(gens.size());
      for (std::size_t k = 0; k < gens.size(); ++k) {
        for (Elem y = 0; y < cod.order(); ++y) {
          if (accept(gens[k], y)) {
            candidates[k].push_back(y);
          }
        }
      }
      std::vector<Elem>                 images(gens.size());
      bool                              stop = false;
      std::function<void(std::size_t)> rec  = [&](std::size_t k) {
        if (stop) {
          return;
        }
        if (k == gens.size()) {
          if (auto map = extend_to_hom(dom, cod, gens, images)) {
            stop = !visit(*map);
          }
          return;
        }
        for (Elem y : candidates[k]) {
          images[k] = y;
          rec(k + 1);
          if (stop) {
            return;
          }
        }
      };
      rec(0);
    }
  }  // namespace detail

  // All homomorphisms dom -> cod, in lexicographic order of their maps.
  inline std::vector<Hom> homomorphisms(FiniteGroup const& dom,
                                        FiniteGroup const& cod) {
    std::vector<std::vector<Elem>> maps;
    detail::for_each_hom(
        dom, cod,
        [&](Elem g, Elem y) {
          return dom.element_order(g) % cod.element_order(y) == 0;
        },
        [&](std::vector<Elem> const& m) {
          maps.push_back(m);
          return true;
        });
    std::sort(maps.begin(), maps.end());
    maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
    std::vector<Hom> out;
    out.reserve(maps.size());
    for (auto& m : maps) {
      out.push_back(Hom::unchecked(dom, cod, std::move(m)));
    }
    return out;
  }

  // All automorphisms of g in lexicographic order of their maps; the
  // identity comes first.
  inline std::vector<Hom> automorphisms(FiniteGroup const& g,
                                        std::size_t cap
                                        = default_automorphism_cap) {
    if (g.order() > cap) {
      throw CapExceeded("automorphism search: group order "
                        + std::to_string(g.order()) + " exceeds cap "
                        + std::to_string(cap));
    }
    std::vector<std::vector<Elem>> maps;
    detail::for_each_hom(
        g, g,
        [&](Elem x, Elem y) {
          return g.element_order(x) == g.element_order(y);
        },
        [&](std::vector<Elem> const& m) {
          std::vector<bool> hit(m.size(), false);
          for (Elem y : m) {
            hit[y] = true;
          }
          if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
            maps.push_back(m);
          }
          return true;
        });
    std::sort(maps.begin(), maps.end());
    std::vector<Hom> out;
    out.reserve(maps.size());
    for (auto& m : maps) {
      out.push_back(Hom::unchecked(g, g, std::move(m)));
    }
    return out;
  }

  // Aut(g) as a finite group under composition: element i of `group` is
  // `elements[i]`, and i * j is elements[i] o elements[j].
  struct AutomorphismGroup {
    FiniteGroup      group;
    std::vector<Hom> elements;
  };

  inline AutomorphismGroup automorphism_group(FiniteGroup const& g,
                                              std::size_t cap
                                              = default_automorphism_cap) {
    auto        auts = automorphisms(g, cap);
    std::size_t n    = auts.size();
    Table       t(n, std::vector<Elem>(n));
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        auto const c  = compose(auts[i], auts[j]);
        auto const it = std::find(auts.begin(), auts.end(), c);
        t[i][j]       = static_cast<Elem>(it - auts.begin());
      }
    }
    return {FiniteGroup::from_table(t, "Aut(" + g.name() + ")"),
            std::move(auts)};
  }

  // Sorted multiset of element orders.
  inline std::vector<std::size_t> order_profile(FiniteGroup const& g) {
    std::vector<std::size_t> p;
    for (Elem x = 0; x < g.order(); ++x) {
      p.push_back(g.element_order(x));
    }
    std::sort(p.begin(), p.end());
    return p;
  }

  // An isomorphism g -> h, or nullopt. Orders and element-order multisets
  // are compared first; then generator images are searched by element
  // order.
  inline std::optional<Hom> is_isomorphic(FiniteGroup const& g,
                                          FiniteGroup const& h,
                                          std::size_t cap
                                          = default_isomorphism_cap) {
    if (g.order() > cap || h.order() > cap) {
      throw CapExceeded("isomorphism search: group order exceeds cap "
                        + std::to_string(cap));
    }
    if (g.order() != h.order() || order_profile(g) != order_profile(h)) {
      return std::nullopt;
    }
    if (g == h) {
      return Hom::identity(g);
    }
    std::optional<Hom> found;
    detail::for_each_hom(
        g, h,
        [&](Elem x, Elem y) {
          return g.element_order(x) == h.element_order(y);
        },
        [&](std::vector<Elem> const& m) {
          std::vector<bool> hit(m.size(), false);
          for (Elem y : m) {
            hit[y] = true;
          }
          if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
            found = Hom::unchecked(g, h, m);
            return false;
          }
          return true;
        });
    return found;
  }

}  // namespace peiffer

#endif  // PEIFFER_MORPHISMS_HPP_
