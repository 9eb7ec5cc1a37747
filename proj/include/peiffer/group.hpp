#ifndef PEIFFER_GROUP_HPP_
#define PEIFFER_GROUP_HPP_

// Finite groups given by multiplication tables, homomorphisms between them,
// element subsets, normal closures and quotients.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "peiffer/error.hpp"

namespace peiffer {

  using Table = std::vector<std::vector<Elem>>;

  namespace detail {
    inline void check_square(Table const& table) {
      std::size_t const n = table.size();
      if (n == 0) {
        throw InvalidInput("group table is empty");
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) {
          throw InvalidInput("group table is not square: row "
                             + std::to_string(i) + " has "
                             + std::to_string(table[i].size())
                             + " entries, expected " + std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (table[i][j] >= n) {
            throw InvalidInput("group table entry (" + std::to_string(i) + ", "
                               + std::to_string(j) + ") = "
                               + std::to_string(table[i][j])
                               + " is out of range");
          }
        }
      }
    }

    inline std::optional<Elem> find_identity(Table const& t) {
      std::size_t const n = t.size();
      for (Elem e = 0; e < n; ++e) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) {
          ok = t[e][x] == x && t[x][e] == x;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  // Checks the group axioms on a raw table. Throws InvalidInput if the grid
  // is not square or has an out-of-range entry; otherwise returns the first
  // failed axiom in the order identity, inverse, associativity.
  inline std::optional<Violation> validate_group(Table const& table) {
    detail::check_square(table);
    std::size_t const n = table.size();
    auto const        e = detail::find_identity(table);
    if (!e) {
      return Violation{"identity", {}, "no two-sided identity element"};
    }
    for (Elem x = 0; x < n; ++x) {
      std::vector<Elem> inverses;
      for (Elem y = 0; y < n; ++y) {
        if (table[x][y] == *e && table[y][x] == *e) {
          inverses.push_back(y);
        }
      }
      if (inverses.empty()) {
        return Violation{"inverse", {x}, "no inverse for element "
                                             + std::to_string(x)};
      }
      if (inverses.size() > 1) {
        return Violation{"inverse",
                         {x, inverses[0], inverses[1]},
                         "element " + std::to_string(x)
                             + " has more than one inverse"};
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (table[table[a][b]][c] != table[a][table[b][c]]) {
            return Violation{"associativity", {a, b, c}, "(ab)c != a(bc)"};
          }
        }
      }
    }
    return std::nullopt;
  }

  // Immutable finite group. Copies share the underlying table.
  class FiniteGroup {
   public:
    // The trivial group.
    FiniteGroup() : FiniteGroup(make_data({{0}}, "1")) {}

    static FiniteGroup from_table(Table const& table, std::string name = {}) {
      if (auto v = validate_group(table)) {
        throw InvalidInput("invalid group table: " + v->message());
      }
      return FiniteGroup(make_data(table, std::move(name)));
    }

    std::size_t order() const noexcept {
      return d_->n;
    }

    Elem identity() const noexcept {
      return d_->identity;
    }

    Elem mul(Elem a, Elem b) const noexcept {
      return d_->table[a * d_->n + b];
    }

    Elem inv(Elem a) const noexcept {
      return d_->inverse[a];
    }

    // a x a^-1
    Elem conj(Elem a, Elem x) const noexcept {
      return mul(mul(a, x), inv(a));
    }

    // a b a^-1 b^-1
    Elem commutator(Elem a, Elem b) const noexcept {
      return mul(mul(a, b), mul(inv(a), inv(b)));
    }

    Elem product(std::span<Elem const> xs) const noexcept {
      Elem r = identity();
      for (Elem x : xs) {
        r = mul(r, x);
      }
      return r;
    }

    std::size_t element_order(Elem a) const noexcept {
      return d_->orders[a];
    }

    bool is_identity(Elem a) const noexcept {
      return a == d_->identity;
    }

    bool is_abelian() const noexcept {
      for (Elem a = 0; a < order(); ++a) {
        for (Elem b = a + 1; b < order(); ++b) {
          if (mul(a, b) != mul(b, a)) {
            return false;
          }
        }
      }
      return true;
    }

    std::string const& name() const noexcept {
      return d_->name;
    }

    Table table() const {
      Table t(order(), std::vector<Elem>(order()));
      for (Elem a = 0; a < order(); ++a) {
        for (Elem b = 0; b < order(); ++b) {
          t[a][b] = mul(a, b);
        }
      }
      return t;
    }

    std::vector<Elem> elements() const {
      std::vector<Elem> v(order());
      std::iota(v.begin(), v.end(), Elem{0});
      return v;
    }

    bool same_as(FiniteGroup const& other) const noexcept {
      return d_ == other.d_;
    }

    // Structural equality on the table; names are ignored.
    friend bool operator==(FiniteGroup const& a, FiniteGroup const& b) {
      return a.d_ == b.d_ || a.d_->table == b.d_->table;
    }

   private:
    struct Data {
      std::size_t         n;
      std::vector<Elem>   table;
      Elem                identity;
      std::vector<Elem>   inverse;
      std::vector<std::size_t> orders;
      std::string         name;
    };

    explicit FiniteGroup(std::shared_ptr<Data const> d) : d_(std::move(d)) {}

    static std::shared_ptr<Data const> make_data(Table const& t,
                                                 std::string name) {
      auto d      = std::make_shared<Data>();
      d->n        = t.size();
      d->name     = std::move(name);
      d->identity = *detail::find_identity(t);
      d->table.reserve(d->n * d->n);
      for (auto const& row : t) {
        d->table.insert(d->table.end(), row.begin(), row.end());
      }
      d->inverse.resize(d->n);
      for (Elem x = 0; x < d->n; ++x) {
        for (Elem y = 0; y < d->n; ++y) {
          if (t[x][y] == d->identity) {
            d->inverse[x] = y;
            break;
          }
        }
      }
      d->orders.resize(d->n);
      for (Elem x = 0; x < d->n; ++x) {
        std::size_t k = 1;
        for (Elem p = x; p != d->identity; p = t[p][x]) {
          ++k;
        }
        d->orders[x] = k;
      }
      return d;
    }

    std::shared_ptr<Data const> d_;
  };

  ////////////////////////////////////////////////////////////////////////
  // ElementSet
  ////////////////////////////////////////////////////////////////////////

  class ElementSet {
   public:
    explicit ElementSet(FiniteGroup g)
        : group_(std::move(g)), mask_(group_.order(), false) {}

    ElementSet(FiniteGroup g, std::span<Elem const> elems)
        : ElementSet(std::move(g)) {
      for (Elem x : elems) {
        if (x >= group_.order()) {
          throw InvalidInput("element " + std::to_string(x)
                             + " is not in the group");
        }
        mask_[x] = true;
      }
    }

    ElementSet(FiniteGroup g, std::vector<bool> mask)
        : group_(std::move(g)), mask_(std::move(mask)) {
      if (mask_.size() != group_.order()) {
        throw InvalidInput("membership mask has the wrong length");
      }
    }

    static ElementSet whole(FiniteGroup g) {
      std::vector<bool> m(g.order(), true);
      return ElementSet(std::move(g), std::move(m));
    }

    FiniteGroup const& group() const noexcept {
      return group_;
    }

    bool contains(Elem x) const noexcept {
      return x < mask_.size() && mask_[x];
    }

    std::size_t size() const noexcept {
      return static_cast<std::size_t>(
          std::count(mask_.begin(), mask_.end(), true));
    }

    std::vector<Elem> elements() const {
      std::vector<Elem> out;
      for (Elem x = 0; x < mask_.size(); ++x) {
        if (mask_[x]) {
          out.push_back(x);
        }
      }
      return out;
    }

    std::vector<bool> const& mask() const noexcept {
      return mask_;
    }

    bool is_subgroup() const {
      if (!contains(group_.identity())) {
        return false;
      }
      auto const es = elements();
      for (Elem a : es) {
        if (!contains(group_.inv(a))) {
          return false;
        }
        for (Elem b : es) {
          if (!contains(group_.mul(a, b))) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_normal() const {
      if (!is_subgroup()) {
        return false;
      }
      for (Elem g = 0; g < group_.order(); ++g) {
        for (Elem s : elements()) {
          if (!contains(group_.conj(g, s))) {
            return false;
          }
        }
      }
      return true;
    }

    friend bool operator==(ElementSet const& a, ElementSet const& b) {
      return a.group_ == b.group_ && a.mask_ == b.mask_;
    }

   private:
    FiniteGroup       group_;
    std::vector<bool> mask_;
  };

  // Subgroup generated by gens: closure of {e} under right multiplication by
  // the generators (finite, so inverses come for free).
  inline ElementSet subgroup_generated(FiniteGroup const&    g,
                                       std::span<Elem const> gens) {
    std::vector<bool> seen(g.order(), false);
    std::vector<Elem> queue{g.identity()};
    seen[g.identity()] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Elem s : gens) {
        Elem y = g.mul(queue[i], s);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    return ElementSet(g, std::move(seen));
  }

  // Smallest normal subgroup containing gens: the subgroup generated by all
  // conjugates of the generators.
  inline ElementSet normal_closure(FiniteGroup const&    g,
                                   std::span<Elem const> gens) {
    std::vector<bool> mark(g.order(), false);
    std::vector<Elem> conjugates;
    for (Elem s : gens) {
      for (Elem a = 0; a < g.order(); ++a) {
        Elem c = g.conj(a, s);
        if (!mark[c]) {
          mark[c] = true;
          conjugates.push_back(c);
        }
      }
    }
    return subgroup_generated(g, conjugates);
  }

  ////////////////////////////////////////////////////////////////////////
  // Hom
  ////////////////////////////////////////////////////////////////////////

  // First pair (x, y) with f(xy) != f(x)f(y), scanning lexicographically.
  inline std::optional<std::pair<Elem, Elem>>
  hom_violation(FiniteGroup const& dom, FiniteGroup const& cod,
                std::span<Elem const> map) {
    for (Elem x = 0; x < dom.order(); ++x) {
      for (Elem y = 0; y < dom.order(); ++y) {
        if (map[dom.mul(x, y)] != cod.mul(map[x], map[y])) {
          return std::pair{x, y};
        }
      }
    }
    return std::nullopt;
  }

  class Hom {
   public:
    // Validating constructor.
    static Hom make(FiniteGroup dom, FiniteGroup cod, std::vector<Elem> map) {
      if (map.size() != dom.order()) {
        throw InvalidInput("homomorphism map has " + std::to_string(map.size())
                           + " entries, domain has order "
                           + std::to_string(dom.order()));
      }
      for (Elem y : map) {
        if (y >= cod.order()) {
          throw InvalidInput("homomorphism image " + std::to_string(y)
                             + " is outside the codomain");
        }
      }
      if (auto v = hom_violation(dom, cod, map)) {
        throw InvalidInput("not a homomorphism: f(xy) != f(x)f(y) at ("
                           + std::to_string(v->first) + ", "
                           + std::to_string(v->second) + ")");
      }
      return Hom(std::move(dom), std::move(cod), std::move(map));
    }

    // Caller guarantees the homomorphism property.
    static Hom unchecked(FiniteGroup dom, FiniteGroup cod,
                         std::vector<Elem> map) {
      return Hom(std::move(dom), std::move(cod), std::move(map));
    }

    static Hom identity(FiniteGroup const& g) {
      return Hom(g, g, g.elements());
    }

    static Hom trivial(FiniteGroup const& dom, FiniteGroup const& cod) {
      return Hom(dom, cod, std::vector<Elem>(dom.order(), cod.identity()));
    }

    Elem operator()(Elem x) const noexcept {
      return map_[x];
    }

    FiniteGroup const& dom() const noexcept {
      return dom_;
    }

    FiniteGroup const& cod() const noexcept {
      return cod_;
    }

    std::vector<Elem> const& map() const noexcept {
      return map_;
    }

    ElementSet kernel() const {
      std::vector<bool> m(dom_.order());
      for (Elem x = 0; x < dom_.order(); ++x) {
        m[x] = map_[x] == cod_.identity();
      }
      return ElementSet(dom_, std::move(m));
    }

    ElementSet image() const {
      return ElementSet(cod_, map_);
    }

    bool injective() const {
      return kernel().size() == 1;
    }

    bool surjective() const {
      return image().size() == cod_.order();
    }

    bool bijective() const {
      return injective() && surjective();
    }

    // Inverse of a bijective homomorphism.
    Hom inverse() const {
      if (!bijective()) {
        throw PreconditionFailed("inverse of a non-bijective homomorphism");
      }
      std::vector<Elem> inv(map_.size());
      for (Elem x = 0; x < map_.size(); ++x) {
        inv[map_[x]] = x;
      }
      return Hom(cod_, dom_, std::move(inv));
    }

    // g o f
    friend Hom compose(Hom const& g, Hom const& f) {
      if (!(f.cod_ == g.dom_)) {
        throw PreconditionFailed("composition of non-composable maps");
      }
      std::vector<Elem> m(f.map_.size());
      for (Elem x = 0; x < m.size(); ++x) {
        m[x] = g.map_[f.map_[x]];
      }
      return Hom(f.dom_, g.cod_, std::move(m));
    }

    friend bool operator==(Hom const& a, Hom const& b) {
      return a.map_ == b.map_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
    }

   private:
    Hom(FiniteGroup dom, FiniteGroup cod, std::vector<Elem> map)
        : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {}

    FiniteGroup       dom_;
    FiniteGroup       cod_;
    std::vector<Elem> map_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  struct Quotient {
    FiniteGroup       group;
    Hom               projection;
    // representatives[c] is the minimal element index in coset c; cosets
    // are numbered in increasing order of their representative.
    std::vector<Elem> representatives;
  };

  inline Quotient quotient(FiniteGroup const& g, ElementSet const& normal) {
    if (!(normal.group() == g)) {
      throw PreconditionFailed("subset belongs to a different group");
    }
    if (!normal.is_normal()) {
      throw PreconditionFailed("subset is not a normal subgroup");
    }
    std::size_t const  none = g.order();
    std::vector<Elem>  coset(g.order(), static_cast<Elem>(none));
    std::vector<Elem>  reps;
    auto const         members = normal.elements();
    for (Elem x = 0; x < g.order(); ++x) {
      if (coset[x] != none) {
        continue;
      }
      Elem const c = static_cast<Elem>(reps.size());
      reps.push_back(x);
      for (Elem k : members) {
        coset[g.mul(x, k)] = c;
      }
    }
    Table t(reps.size(), std::vector<Elem>(reps.size()));
    for (Elem i = 0; i < reps.size(); ++i) {
      for (Elem j = 0; j < reps.size(); ++j) {
        t[i][j] = coset[g.mul(reps[i], reps[j])];
      }
    }
    auto q = FiniteGroup::from_table(t, g.name().empty() ? "" : g.name() + "/K");
    return Quotient{q, Hom::unchecked(g, q, std::move(coset)), std::move(reps)};
  }

  // Elements (g, h) indexed as g * |H| + h.
  inline FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h,
                                    std::string name = {}) {
    std::size_t const nh = h.order();
    std::size_t const n  = g.order() * nh;
    Table             t(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        t[a][b] = static_cast<Elem>(g.mul(a / nh, b / nh) * nh
                                    + h.mul(a % nh, b % nh));
      }
    }
    if (name.empty() && !g.name().empty() && !h.name().empty()) {
      name = g.name() + "x" + h.name();
    }
    return FiniteGroup::from_table(t, std::move(name));
  }

  struct Subgroup {
    FiniteGroup group;
    Hom         inclusion;
  };

  // A subgroup as a standalone group; its element i is the i-th smallest
  // member of the subset.
  inline Subgroup as_group(ElementSet const& s, std::string name = {}) {
    if (!s.is_subgroup()) {
      throw PreconditionFailed("subset is not a subgroup");
    }
    auto const         members = s.elements();
    FiniteGroup const& g       = s.group();
    std::vector<Elem>  index(g.order(), 0);
    for (Elem i = 0; i < members.size(); ++i) {
      index[members[i]] = i;
    }
    Table t(members.size(), std::vector<Elem>(members.size()));
    for (Elem i = 0; i < members.size(); ++i) {
      for (Elem j = 0; j < members.size(); ++j) {
        t[i][j] = index[g.mul(members[i], members[j])];
      }
    }
    auto sub = FiniteGroup::from_table(t, std::move(name));
    return Subgroup{sub, Hom::unchecked(sub, g, members)};
  }

}  // namespace peiffer

#endif  // PEIFFER_GROUP_HPP_
