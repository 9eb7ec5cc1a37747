#ifndef PEIFFER_CATALOG_HPP_
#define PEIFFER_CATALOG_HPP_

// Small named groups used by fixtures, the CLI and the acceptance suite.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "peiffer/group.hpp"

namespace peiffer::catalog {

  inline FiniteGroup cyclic(std::size_t n) {
    if (n == 0) {
      throw InvalidInput("cyclic group of order 0");
    }
    Table t(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        t[a][b] = static_cast<Elem>((a + b) % n);
      }
    }
    return FiniteGroup::from_table(t, "Z" + std::to_string(n));
  }

  // All permutations of {0, ..., n-1} in lexicographic order.
  inline std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) {
      p[i] = i;
    }
    std::vector<std::vector<int>> out;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  // Index of a permutation (given as images of 0..n-1) in symmetric(n).
  inline Elem permutation_index(std::vector<int> const& perm) {
    auto const all = permutations(static_cast<int>(perm.size()));
    auto const it  = std::find(all.begin(), all.end(), perm);
    if (it == all.end()) {
      throw InvalidInput("not a permutation");
    }
    return static_cast<Elem>(it - all.begin());
  }

  // S_n with elements in lexicographic order and (s t)(i) = s(t(i)).
  inline FiniteGroup symmetric(int n) {
    auto const  perms = permutations(n);
    std::size_t m     = perms.size();
    Table       t(m, std::vector<Elem>(m));
    for (Elem a = 0; a < m; ++a) {
      for (Elem b = 0; b < m; ++b) {
        std::vector<int> c(n);
        for (int i = 0; i < n; ++i) {
          c[i] = perms[a][perms[b][i]];
        }
        t[a][b] = static_cast<Elem>(
            std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
    }
    return FiniteGroup::from_table(t, "S" + std::to_string(n));
  }

  inline FiniteGroup klein() {
    return direct_product(cyclic(2), cyclic(2), "Z2xZ2");
  }

  inline FiniteGroup trivial() {
    return FiniteGroup();
  }

  // Z2, Z3, Z4, Z2xZ2, Z6, S3.
  inline std::vector<FiniteGroup> standard() {
    return {cyclic(2), cyclic(3), cyclic(4), klein(), cyclic(6), symmetric(3)};
  }

  // Accepts "1", "Zn", "Sn" (n <= 5), "Z2xZ2", "Z2xZ3" and similar
  // products of those.
  inline std::optional<FiniteGroup> by_name(std::string_view name) {
    if (name == "1") {
      return trivial();
    }
    if (auto pos = name.find('x'); pos != std::string_view::npos) {
      auto a = by_name(name.substr(0, pos));
      auto b = by_name(name.substr(pos + 1));
      if (a && b) {
        return direct_product(*a, *b, std::string(name));
      }
      return std::nullopt;
    }
    if (name.size() < 2 || (name[0] != 'Z' && name[0] != 'S')) {
      return std::nullopt;
    }
    std::size_t n = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9') {
        return std::nullopt;
      }
      n = n * 10 + static_cast<std::size_t>(c - '0');
      if (n > 4096) {
        return std::nullopt;
      }
    }
    if (n == 0) {
      return std::nullopt;
    }
    if (name[0] == 'Z') {
      return cyclic(n);
    }
    if (n > 5) {
      return std::nullopt;
    }
    return symmetric(static_cast<int>(n));
  }

}  // namespace peiffer::catalog

#endif  // PEIFFER_CATALOG_HPP_
