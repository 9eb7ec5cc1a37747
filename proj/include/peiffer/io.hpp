#ifndef PEIFFER_IO_HPP_
#define PEIFFER_IO_HPP_

// JSON file formats. Objects are nlohmann::json, whose keys are kept in
// sorted order, so every emitted report has a fixed field order.
//
// A group or Lie algebra reference is an inline object, a catalog name, or
// a path relative to the directory of the referencing file.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "peiffer/action.hpp"
#include "peiffer/catalog.hpp"
#include "peiffer/census.hpp"
#include "peiffer/compat.hpp"
#include "peiffer/freeword.hpp"
#include "peiffer/group.hpp"
#include "peiffer/lie.hpp"
#include "peiffer/lie_catalog.hpp"
#include "peiffer/peiffer.hpp"
#include "peiffer/xmod.hpp"

namespace peiffer::io {

  using Json = nlohmann::json;
  namespace fs = std::filesystem;

  inline Json read_json(fs::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InvalidInput("cannot open " + path.string());
    }
    try {
      return Json::parse(in);
    } catch (Json::exception const& e) {
      throw InvalidInput("malformed JSON in " + path.string() + ": " + e.what());
    }
  }

  inline void write_json(fs::path const& path, Json const& j) {
    std::ofstream out(path);
    if (!out) {
      throw InvalidInput("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
  }

  namespace detail {
    // Wraps nlohmann accessors so type errors surface as InvalidInput.
    template <class T>
    T get(Json const& j, char const* key, std::string const& what) {
      if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(what + ": missing field '" + key + "'");
      }
      try {
        return j.at(key).get<T>();
      } catch (Json::exception const& e) {
        throw InvalidInput(what + ": bad field '" + key + "': " + e.what());
      }
    }

    template <class T>
    T as(Json const& j, std::string const& what) {
      try {
        return j.get<T>();
      } catch (Json::exception const& e) {
        throw InvalidInput(what + ": " + e.what());
      }
    }

    inline Table to_table(std::vector<std::vector<long long>> const& raw,
                          std::string const& what) {
      Table t;
      for (auto const& row : raw) {
        std::vector<Elem> r;
        for (long long v : row) {
          if (v < 0 || v > 0xffffffffLL) {
            throw InvalidInput(what + ": entry " + std::to_string(v)
                               + " out of range");
          }
          r.push_back(static_cast<Elem>(v));
        }
        t.push_back(std::move(r));
      }
      return t;
    }

    inline std::vector<Elem> to_elems(std::vector<long long> const& raw,
                                      std::string const& what) {
      return to_table({raw}, what)[0];
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Groups
  ////////////////////////////////////////////////////////////////////////

  inline Json group_to_json(FiniteGroup const& g) {
    Json j;
    if (!g.name().empty()) {
      j["name"] = g.name();
    }
    j["order"] = g.order();
    j["table"] = g.table();
    return j;
  }

  // Validates the group axioms; a failure is reported as InvalidInput
  // carrying the violation.
  inline FiniteGroup group_from_json(Json const& j) {
    auto const t = detail::to_table(
        detail::get<std::vector<std::vector<long long>>>(j, "table", "group"),
        "group table");
    auto const order = detail::get<long long>(j, "order", "group");
    if (order < 0 || static_cast<std::size_t>(order) != t.size()) {
      throw InvalidInput("group: order " + std::to_string(order)
                         + " does not match a table with "
                         + std::to_string(t.size()) + " rows");
    }
    std::string name;
    if (j.contains("name")) {
      name = detail::get<std::string>(j, "name", "group");
    }
    return FiniteGroup::from_table(t, std::move(name));
  }

  inline FiniteGroup group_ref(Json const& ref, fs::path const& base) {
    if (ref.is_object()) {
      return group_from_json(ref);
    }
    if (!ref.is_string()) {
      throw InvalidInput("group reference must be an object or a string");
    }
    auto const s = ref.get<std::string>();
    if (auto g = catalog::by_name(s)) {
      return *g;
    }
    return group_from_json(read_json(base / s));
  }

  inline FiniteGroup load_group(fs::path const& path) {
    return group_from_json(read_json(path));
  }

  ////////////////////////////////////////////////////////////////////////
  // Actions and crossed modules
  ////////////////////////////////////////////////////////////////////////

  inline Json action_to_json(Action const& a) {
    return Json{{"acting", group_to_json(a.acting())},
                {"target", group_to_json(a.target())},
                {"table", a.table()}};
  }

  // Groups may be omitted when `acting` and `target` are supplied.
  inline std::pair<std::pair<FiniteGroup, FiniteGroup>, Table>
  action_parts(Json const& j, fs::path const& base,
               std::optional<FiniteGroup> const& acting = std::nullopt,
               std::optional<FiniteGroup> const& target = std::nullopt) {
    auto pick = [&](char const* key, std::optional<FiniteGroup> const& given) {
      if (j.contains(key)) {
        auto g = group_ref(j.at(key), base);
        if (given && !(g == *given)) {
          throw InvalidInput(std::string("action: '") + key
                             + "' does not match the supplied group");
        }
        return g;
      }
      if (!given) {
        throw InvalidInput(std::string("action: missing field '") + key + "'");
      }
      return *given;
    };
    auto a = pick("acting", acting);
    auto x = pick("target", target);
    auto t = detail::to_table(
        detail::get<std::vector<std::vector<long long>>>(j, "table", "action"),
        "action table");
    return {{std::move(a), std::move(x)}, std::move(t)};
  }

  // Validating load.
  inline Action action_from_json(
      Json const& j, fs::path const& base,
      std::optional<FiniteGroup> const& acting = std::nullopt,
      std::optional<FiniteGroup> const& target = std::nullopt) {
    auto [groups, t] = action_parts(j, base, acting, target);
    return Action::make(groups.first, groups.second, t);
  }

  inline Json hom_to_json(Hom const& h) {
    return Json(h.map());
  }

  inline Json xmod_to_json(CrossedModule const& xm) {
    return Json{{"action", action_to_json(xm.action)},
                {"boundary", hom_to_json(xm.boundary)},
                {"cod", group_to_json(xm.cod())},
                {"dom", group_to_json(xm.dom())}};
  }

  // `action` is an inline object or a path; its groups default to cod and
  // dom. The crossed-module conditions are not checked here.
  inline CrossedModule xmod_from_json(Json const& j, fs::path const& base) {
    auto dom = group_ref(detail::get<Json>(j, "dom", "crossed module"), base);
    auto cod = group_ref(detail::get<Json>(j, "cod", "crossed module"), base);
    auto a   = detail::get<Json>(j, "action", "crossed module");
    fs::path abase = base;
    if (a.is_string()) {
      abase = (base / a.get<std::string>()).parent_path();
      a     = read_json(base / a.get<std::string>());
    }
    auto action = action_from_json(a, abase, cod, dom);
    auto map    = detail::to_elems(
        detail::get<std::vector<long long>>(j, "boundary", "crossed module"),
        "boundary");
    return CrossedModule::make(Hom::make(dom, cod, std::move(map)),
                               std::move(action));
  }

  inline CrossedModule load_xmod(fs::path const& path) {
    return xmod_from_json(read_json(path), path.parent_path());
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  inline Json violation_to_json(Violation const& v) {
    return Json{{"condition", v.condition},
                {"detail", v.detail},
                {"witness", v.witness}};
  }

  inline Json compat_to_json(CompatVerdict const& v) {
    Json j{{"compatible", v.compatible}};
    if (v.witness) {
      auto const& w = *v.witness;
      j["witness"]  = Json{{"equation", w.equation},
                           {"lhs", w.lhs},
                           {"m", w.m},
                           {"n", w.n},
                           {"prime", w.prime},
                           {"rhs", w.rhs}};
    }
    return j;
  }

  inline Json letters_to_json(std::vector<Letter> const& w) {
    std::string s;
    for (auto l : w) {
      s += (s.empty() ? "" : " ");
      s += (l.side == Side::first ? "M:" : "N:") + std::to_string(l.elem);
    }
    return s;
  }

  inline Json not_well_defined_to_json(NotWellDefined const& e) {
    return Json{{"coset", e.coset},
                {"first", letters_to_json(e.first)},
                {"first_value", e.first_value},
                {"second", letters_to_json(e.second)},
                {"second_value", e.second_value},
                {"side", e.side == Side::first ? "M" : "N"},
                {"x", e.x}};
  }

  inline Json peiffer_to_json(PeifferProduct const& pp) {
    Json j{{"compatible", pp.compatible},
           {"lM", hom_to_json(pp.lM)},
           {"lN", hom_to_json(pp.lN)},
           {"order", pp.product.order()},
           {"table", pp.product.table()}};
    if (pp.actions) {
      j["actions"] = Json{{"on_M", pp.actions->first.table()},
                          {"on_N", pp.actions->second.table()}};
    }
    return j;
  }

  inline Json census_to_json(CensusReport const& r) {
    Json rows = Json::array();
    for (auto const& row : r.rows) {
      auto opt = [](std::optional<bool> const& b) {
        return b ? Json(*b) : Json(nullptr);
      };
      Json j{{"M", row.m_name},
             {"N", row.n_name},
             {"compatible", row.compatible},
             {"direct_product_iso", opt(row.direct_product_iso)},
             {"peiffer_order", row.peiffer_order},
             {"point_round_trip", row.point_round_trip},
             {"round_trip", opt(row.round_trip)},
             {"strong", opt(row.strong)},
             {"symmetric_iso", row.symmetric_iso},
             {"trivial_actions", row.trivial_actions},
             {"well_defined", row.well_defined},
             {"xi_mn", row.xi_mn_index},
             {"xi_nm", row.xi_nm_index}};
      if (row.witness) {
        j["witness"] = compat_to_json({false, row.witness})["witness"];
      }
      rows.push_back(std::move(j));
    }
    return Json{{"catalog", r.catalog}, {"rows", std::move(rows)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Lie algebras
  ////////////////////////////////////////////////////////////////////////

  inline Json vector_to_json(Vector const& v) {
    Json j = Json::array();
    for (auto const& x : v) {
      j.push_back(format_rational(x));
    }
    return j;
  }

  inline Vector vector_from_json(Json const& j, std::string const& what) {
    if (!j.is_array()) {
      throw InvalidInput(what + ": expected an array of rational strings");
    }
    Vector v;
    for (auto const& x : j) {
      if (x.is_string()) {
        v.push_back(parse_rational(x.get<std::string>()));
      } else if (x.is_number_integer()) {
        v.push_back(Rational(x.get<long long>()));
      } else {
        throw InvalidInput(what + ": rationals are given as \"p/q\" strings");
      }
    }
    return v;
  }

  // Rows of the matrix.
  inline Json matrix_to_json(Matrix const& m) {
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Vector row(m.cols());
      for (std::size_t c = 0; c < m.cols(); ++c) {
        row[c] = m(i, c);
      }
      j.push_back(vector_to_json(row));
    }
    return j;
  }

  inline Matrix matrix_from_json(Json const& j, std::size_t rows,
                                 std::size_t cols, std::string const& what) {
    if (!j.is_array() || j.size() != rows) {
      throw InvalidInput(what + ": expected " + std::to_string(rows) + " rows");
    }
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      auto const row = vector_from_json(j[i], what);
      if (row.size() != cols) {
        throw InvalidInput(what + ": expected " + std::to_string(cols)
                           + " columns");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        m(i, c) = row[c];
      }
    }
    return m;
  }

  // Nonzero brackets [e_i, e_j] with i < j.
  inline Json lie_to_json(LieAlgebra const& l) {
    Json br = Json::array();
    for (std::size_t i = 0; i < l.dim(); ++i) {
      for (std::size_t j = i + 1; j < l.dim(); ++j) {
        Vector v = l.bracket(l.basis(i), l.basis(j));
        if (!is_zero(v)) {
          br.push_back(Json{{"coeffs", vector_to_json(v)}, {"i", i}, {"j", j}});
        }
      }
    }
    return Json{{"brackets", std::move(br)}, {"dim", l.dim()}};
  }

  // Unlisted brackets are zero; an entry (i, j) also fixes (j, i) unless
  // that pair is listed too, in which case both are checked as given.
  inline StructureConstants lie_constants_from_json(Json const& j,
                                                    std::size_t& dim) {
    auto const d = detail::get<long long>(j, "dim", "lie algebra");
    if (d < 0 || d > 64) {
      throw InvalidInput("lie algebra: dim out of range");
    }
    dim = static_cast<std::size_t>(d);
    StructureConstants c(dim * dim * dim, Rational(0));
    std::vector<bool>  given(dim * dim, false);
    auto const brackets = detail::get<Json>(j, "brackets", "lie algebra");
    if (!brackets.is_array()) {
      throw InvalidInput("lie algebra: 'brackets' must be an array");
    }
    for (auto const& b : brackets) {
      auto const i = detail::get<long long>(b, "i", "bracket");
      auto const k = detail::get<long long>(b, "j", "bracket");
      if (i < 0 || k < 0 || i >= d || k >= d) {
        throw InvalidInput("bracket index out of range");
      }
      auto const v = vector_from_json(detail::get<Json>(b, "coeffs", "bracket"),
                                      "bracket coeffs");
      if (v.size() != dim) {
        throw InvalidInput("bracket coeffs: expected " + std::to_string(dim)
                           + " entries");
      }
      given[static_cast<std::size_t>(i * d + k)] = true;
      for (std::size_t l = 0; l < dim; ++l) {
        c[(static_cast<std::size_t>(i) * dim + static_cast<std::size_t>(k)) * dim
          + l] = v[l];
      }
    }
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k) {
        if (given[i * dim + k] && !given[k * dim + i]) {
          for (std::size_t l = 0; l < dim; ++l) {
            c[(k * dim + i) * dim + l] = -c[(i * dim + k) * dim + l];
          }
        }
      }
    }
    return c;
  }

  inline LieAlgebra lie_from_json(Json const& j) {
    std::size_t dim = 0;
    auto        c   = lie_constants_from_json(j, dim);
    return LieAlgebra::make(dim, std::move(c));
  }

  inline LieAlgebra lie_ref(Json const& ref, fs::path const& base) {
    if (ref.is_object()) {
      return lie_from_json(ref);
    }
    if (!ref.is_string()) {
      throw InvalidInput("lie algebra reference must be an object or a string");
    }
    auto const s = ref.get<std::string>();
    if (auto l = lie_catalog::by_name(s)) {
      return *l;
    }
    return lie_from_json(read_json(base / s));
  }

  inline LieAlgebra load_lie(fs::path const& path) {
    return lie_from_json(read_json(path));
  }

  // {"acting", "target", "rho"}: rho[i] is the matrix (as rows) of the i-th
  // basis element of the acting algebra.
  inline Json lie_action_to_json(LieAction const& a) {
    Json rho = Json::array();
    for (auto const& m : a.matrices()) {
      rho.push_back(matrix_to_json(m));
    }
    return Json{{"acting", lie_to_json(a.acting())},
                {"rho", std::move(rho)},
                {"target", lie_to_json(a.target())}};
  }

  inline std::vector<Matrix> lie_rho_from_json(Json const& j,
                                               LieAlgebra const& acting,
                                               LieAlgebra const& target) {
    auto const rho = detail::get<Json>(j, "rho", "lie action");
    if (!rho.is_array() || rho.size() != acting.dim()) {
      throw InvalidInput("lie action: expected " + std::to_string(acting.dim())
                         + " matrices");
    }
    std::vector<Matrix> out;
    for (auto const& m : rho) {
      out.push_back(matrix_from_json(m, target.dim(), target.dim(), "rho"));
    }
    return out;
  }

  // Unvalidated parts of a Lie action; groups may be supplied.
  inline std::pair<std::pair<LieAlgebra, LieAlgebra>, std::vector<Matrix>>
  lie_action_parts(Json const& j, fs::path const& base,
                   std::optional<LieAlgebra> const& acting = std::nullopt,
                   std::optional<LieAlgebra> const& target = std::nullopt) {
    auto pick = [&](char const* key, std::optional<LieAlgebra> const& given) {
      if (j.contains(key)) {
        auto l = lie_ref(j.at(key), base);
        if (given && !(l == *given)) {
          throw InvalidInput(std::string("lie action: '") + key
                             + "' does not match the supplied algebra");
        }
        return l;
      }
      if (!given) {
        throw InvalidInput(std::string("lie action: missing field '") + key
                           + "'");
      }
      return *given;
    };
    auto a   = pick("acting", acting);
    auto x   = pick("target", target);
    auto rho = lie_rho_from_json(j, a, x);
    return {{std::move(a), std::move(x)}, std::move(rho)};
  }

  inline LieAction lie_action_from_json(
      Json const& j, fs::path const& base,
      std::optional<LieAlgebra> const& acting = std::nullopt,
      std::optional<LieAlgebra> const& target = std::nullopt) {
    auto [algs, rho] = lie_action_parts(j, base, acting, target);
    return LieAction::make(algs.first, algs.second, std::move(rho));
  }

  // {"boundary": rows of the dim(cod) x dim(dom) matrix, "action", "dom",
  // "cod"}.
  inline Json lie_xmod_to_json(LieCrossedModule const& xm) {
    return Json{{"action", lie_action_to_json(xm.action)},
                {"boundary", matrix_to_json(xm.boundary)},
                {"cod", lie_to_json(xm.cod())},
                {"dom", lie_to_json(xm.dom())}};
  }

  inline LieCrossedModule lie_xmod_from_json(Json const& j,
                                             fs::path const& base) {
    auto dom = lie_ref(detail::get<Json>(j, "dom", "lie crossed module"), base);
    auto cod = lie_ref(detail::get<Json>(j, "cod", "lie crossed module"), base);
    auto a   = detail::get<Json>(j, "action", "lie crossed module");
    fs::path abase = base;
    if (a.is_string()) {
      abase = (base / a.get<std::string>()).parent_path();
      a     = read_json(base / a.get<std::string>());
    }
    auto action = lie_action_from_json(a, abase, cod, dom);
    auto b = matrix_from_json(detail::get<Json>(j, "boundary", "lie crossed module"),
                              cod.dim(), dom.dim(), "boundary");
    return LieCrossedModule{std::move(b), std::move(action)};
  }

  inline LieCrossedModule load_lie_xmod(fs::path const& path) {
    return lie_xmod_from_json(read_json(path), path.parent_path());
  }

  inline Json lie_violation_to_json(LieViolation const& v) {
    return Json{{"condition", v.condition},
                {"indices", v.indices},
                {"residual", vector_to_json(v.residual)}};
  }

  inline Json lie_compat_to_json(LieCompatVerdict const& v) {
    Json j{{"compatible", v.compatible}};
    if (v.witness) {
      auto const& w = *v.witness;
      j["witness"]  = Json{{"equation", w.equation},
                           {"first", w.first},
                           {"lhs", vector_to_json(w.lhs)},
                           {"prime", w.prime},
                           {"rhs", vector_to_json(w.rhs)},
                           {"second", w.second}};
    }
    return j;
  }

  inline Json lie_peiffer_to_json(LiePeiffer const& pp) {
    Json j{{"algebra", lie_to_json(pp.product)},
           {"compatible", pp.compatible},
           {"dim", pp.product.dim()},
           {"ideal_dim", pp.ideal.dim()},
           {"lM", matrix_to_json(pp.lM)},
           {"lN", matrix_to_json(pp.lN)}};
    if (pp.actions) {
      Json on_m = Json::array(), on_n = Json::array();
      for (auto const& m : pp.actions->first.matrices()) {
        on_m.push_back(matrix_to_json(m));
      }
      for (auto const& m : pp.actions->second.matrices()) {
        on_n.push_back(matrix_to_json(m));
      }
      j["actions"] = Json{{"on_M", std::move(on_m)}, {"on_N", std::move(on_n)}};
    }
    return j;
  }

}  // namespace peiffer::io

#endif  // PEIFFER_IO_HPP_
