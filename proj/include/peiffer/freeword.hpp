#ifndef PEIFFER_FREEWORD_HPP_
#define PEIFFER_FREEWORD_HPP_

// Words in the free product of two (or three) finite groups.
//
// A word is a sequence of letters (side, element). The reduced form has no
// identity letters and no two adjacent letters from the same side; every
// element of the free product has exactly one reduced form.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "peiffer/action.hpp"
#include "peiffer/group.hpp"

namespace peiffer {

  enum class Side : std::uint8_t { first = 0, second = 1, third = 2 };

  inline constexpr std::size_t index_of(Side s) noexcept {
    return static_cast<std::size_t>(s);
  }

  inline constexpr Side other(Side s) noexcept {
    return s == Side::first ? Side::second : Side::first;
  }

  struct Letter {
    Side side;
    Elem elem;

    friend bool operator==(Letter const&, Letter const&) = default;
  };

  class FreeWord {
   public:
    FreeWord() = default;

    std::span<Letter const> letters() const noexcept {
      return letters_;
    }

    std::size_t size() const noexcept {
      return letters_.size();
    }

    bool empty() const noexcept {
      return letters_.empty();
    }

    Letter const& operator[](std::size_t i) const noexcept {
      return letters_[i];
    }

    friend bool operator==(FreeWord const&, FreeWord const&) = default;

   private:
    friend class FreeProduct;
    explicit FreeWord(std::vector<Letter> ls) : letters_(std::move(ls)) {}
    std::vector<Letter> letters_;
  };

  // w = a b a^-1 with a from the acting side.
  struct ConjGenerator {
    Elem conjugator;
    Elem core;

    friend bool operator==(ConjGenerator const&, ConjGenerator const&)
        = default;
  };

  enum class Membership {
    flat_first,       // first (x) second: kernel of the fold onto the first side
    flat_second,      // second (x) first: kernel of the fold onto the second side
    cosmash,          // kernel of the fold onto first x second
    ternary_cosmash,  // kernel of A+B+C -> (A+B) x (A+C) x (B+C)
  };

  class FreeProduct {
   public:
    FreeProduct(FiniteGroup a, FiniteGroup b) : factors_{std::move(a), std::move(b)} {}

    FreeProduct(FiniteGroup a, FiniteGroup b, FiniteGroup c)
        : factors_{std::move(a), std::move(b), std::move(c)} {}

    std::size_t arity() const noexcept {
      return factors_.size();
    }

    FiniteGroup const& factor(Side s) const {
      return factors_.at(index_of(s));
    }

    // Identity letters vanish and same-side neighbours merge; a merge that
    // yields the identity pops the letter and may expose a new neighbour.
    FreeWord reduce(std::span<Letter const> raw) const {
      std::vector<Letter> stack;
      stack.reserve(raw.size());
      for (Letter l : raw) {
        check_letter(l);
        FiniteGroup const& g = factor(l.side);
        if (g.is_identity(l.elem)) {
          continue;
        }
        if (!stack.empty() && stack.back().side == l.side) {
          Elem const p = g.mul(stack.back().elem, l.elem);
          if (g.is_identity(p)) {
            stack.pop_back();
          } else {
            stack.back().elem = p;
          }
        } else {
          stack.push_back(l);
        }
      }
      return FreeWord(std::move(stack));
    }

    FreeWord reduce(std::initializer_list<Letter> raw) const {
      return reduce(std::span<Letter const>(raw.begin(), raw.size()));
    }

    FreeWord letter(Side s, Elem x) const {
      Letter const l{s, x};
      return reduce(std::span<Letter const>(&l, 1));
    }

    FreeWord multiply(FreeWord const& v, FreeWord const& w) const {
      std::vector<Letter> raw(v.letters_);
      raw.insert(raw.end(), w.letters_.begin(), w.letters_.end());
      return reduce(raw);
    }

    FreeWord inverse(FreeWord const& w) const {
      std::vector<Letter> raw;
      raw.reserve(w.size());
      for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) {
        raw.push_back({it->side, factor(it->side).inv(it->elem)});
      }
      return FreeWord(std::move(raw));
    }

    // u w u^-1
    FreeWord conjugate(FreeWord const& u, FreeWord const& w) const {
      return multiply(multiply(u, w), inverse(u));
    }

    // Product of the letters on one side, in left-to-right order.
    Elem fold(std::span<Letter const> w, Side s) const {
      FiniteGroup const& g = factor(s);
      Elem               r = g.identity();
      for (Letter l : w) {
        if (l.side == s) {
          r = g.mul(r, l.elem);
        }
      }
      return r;
    }

    Elem fold(FreeWord const& w, Side s) const {
      return fold(w.letters(), s);
    }

    // Image under the map onto first x second.
    std::pair<Elem, Elem> sigma_image(FreeWord const& w) const {
      return {fold(w, Side::first), fold(w, Side::second)};
    }

    // Image of w after sending every letter of side `killed` to the
    // identity.
    FreeWord kill_side(FreeWord const& w, Side killed) const {
      std::vector<Letter> raw;
      for (Letter l : w.letters_) {
        if (l.side != killed) {
          raw.push_back(l);
        }
      }
      return reduce(raw);
    }

    bool member(FreeWord const& w, Membership which) const {
      switch (which) {
        case Membership::flat_first:
          return factor(Side::first).is_identity(fold(w, Side::first));
        case Membership::flat_second:
          return factor(Side::second).is_identity(fold(w, Side::second));
        case Membership::cosmash:
          return member(w, Membership::flat_first)
                 && member(w, Membership::flat_second);
        case Membership::ternary_cosmash:
          if (arity() != 3) {
            throw PreconditionFailed(
                "ternary cosmash membership needs a three-factor product");
          }
          return kill_side(w, Side::first).empty()
                 && kill_side(w, Side::second).empty()
                 && kill_side(w, Side::third).empty();
      }
      return false;
    }

    // Writes a word of the flat subgroup generated by the conjugates
    // a b a^-1 (a from `acting`, b from the other side) as a product of
    // such conjugates, sweeping left to right with the running prefix of
    // acting letters. Works on raw (unreduced) sequences as well.
    std::vector<ConjGenerator> flat_decompose(std::span<Letter const> w,
                                              Side acting = Side::first) const {
      FiniteGroup const&         a_grp  = factor(acting);
      Elem                       prefix = a_grp.identity();
      std::vector<ConjGenerator> out;
      for (Letter l : w) {
        check_letter(l);
        if (l.side == acting) {
          prefix = a_grp.mul(prefix, l.elem);
        } else if (!factor(l.side).is_identity(l.elem)) {
          out.push_back({prefix, l.elem});
        }
      }
      if (!a_grp.is_identity(prefix)) {
        throw PreconditionFailed("word is not in the flat subgroup: the "
                                 "acting letters multiply to "
                                 + std::to_string(prefix));
      }
      return out;
    }

    std::vector<ConjGenerator> flat_decompose(FreeWord const& w,
                                              Side acting = Side::first) const {
      return flat_decompose(w.letters(), acting);
    }

    // Word literal: space-separated letters "M:3 N:1 M:0". Tags M/A map to
    // the first side, N/X/B to the second, L/C to the third. Reduced on
    // parse.
    FreeWord parse(std::string_view text) const {
      std::vector<Letter> raw;
      std::istringstream  in{std::string(text)};
      std::string         tok;
      while (in >> tok) {
        auto const colon = tok.find(':');
        if (colon == std::string::npos || colon == 0) {
          throw InvalidInput("bad letter '" + tok + "' (expected SIDE:INDEX)");
        }
        auto const tag  = tok.substr(0, colon);
        auto const side = side_of_tag(tag);
        if (!side || index_of(*side) >= arity()) {
          throw InvalidInput("unknown side tag '" + tag + "'");
        }
        unsigned long v = 0;
        try {
          std::size_t used = 0;
          v                = std::stoul(tok.substr(colon + 1), &used);
          if (used != tok.size() - colon - 1) {
            throw InvalidInput("bad element index in '" + tok + "'");
          }
        } catch (std::logic_error const&) {
          throw InvalidInput("bad element index in '" + tok + "'");
        }
        raw.push_back({*side, static_cast<Elem>(v)});
      }
      return reduce(raw);
    }

    std::string format(FreeWord const& w) const {
      static constexpr std::array<char const*, 3> tags{"M", "N", "L"};
      std::string                                 out;
      for (Letter l : w.letters_) {
        if (!out.empty()) {
          out += ' ';
        }
        out += tags[index_of(l.side)];
        out += ':';
        out += std::to_string(l.elem);
      }
      return out;
    }

   private:
    static std::optional<Side> side_of_tag(std::string const& tag) {
      if (tag == "M" || tag == "A" || tag == "0") {
        return Side::first;
      }
      if (tag == "N" || tag == "X" || tag == "B" || tag == "1") {
        return Side::second;
      }
      if (tag == "L" || tag == "C" || tag == "2") {
        return Side::third;
      }
      return std::nullopt;
    }

    void check_letter(Letter l) const {
      if (index_of(l.side) >= arity()) {
        throw InvalidInput("letter refers to a missing factor");
      }
      if (l.elem >= factor(l.side).order()) {
        throw InvalidInput("letter element " + std::to_string(l.elem)
                           + " is out of range");
      }
    }

    std::vector<FiniteGroup> factors_;
  };

  // The map A(flat)X -> X determined by psi(a, x) = value on a x a^-1.
  // Words live in the free product (A, X): A on the first side.
  inline Elem eval_flat_action(Action const& psi, std::span<Letter const> w) {
    FreeProduct const fp(psi.acting(), psi.target());
    Elem              r = psi.target().identity();
    for (auto const& g : fp.flat_decompose(w, Side::first)) {
      r = psi.target().mul(r, psi(g.conjugator, g.core));
    }
    return r;
  }

  inline Elem eval_flat_action(Action const& psi, FreeWord const& w) {
    return eval_flat_action(psi, w.letters());
  }

}  // namespace peiffer

#endif  // PEIFFER_FREEWORD_HPP_
