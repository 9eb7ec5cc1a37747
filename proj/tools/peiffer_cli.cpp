// peiffer: batch front end over the JSON formats.
//
// Exit codes: 0 success or property true, 1 property false (the report
// carries a witness), 2 invalid input, cap exceeded or failed precondition.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "peiffer/census.hpp"
#include "peiffer/io.hpp"
#include "peiffer/lie.hpp"
#include "peiffer/peiffer.hpp"

namespace {

  using namespace peiffer;
  using io::Json;
  namespace fs = std::filesystem;

  struct Outcome {
    int  code;
    Json report;
  };

  struct Settings {
    std::size_t max_order         = 12;
    std::size_t semidirect_cap    = default_semidirect_cap;
    std::size_t strong_word_bound = 2;
    std::string out;
  };

  fs::path dir_of(std::string const& p) {
    return fs::path(p).parent_path();
  }

  // A command-line group argument is a catalog name or a file.
  FiniteGroup group_arg(std::string const& arg) {
    if (auto g = catalog::by_name(arg)) {
      return *g;
    }
    return io::load_group(arg);
  }

  LieAlgebra lie_arg(std::string const& arg) {
    if (auto l = lie_catalog::by_name(arg)) {
      return *l;
    }
    return io::load_lie(arg);
  }

  MutualActions mutual_args(std::vector<std::string> const& a) {
    auto m     = group_arg(a[0]);
    auto n     = group_arg(a[1]);
    auto xi_nm = io::action_from_json(io::read_json(a[2]), dir_of(a[2]), n, m);
    auto xi_mn = io::action_from_json(io::read_json(a[3]), dir_of(a[3]), m, n);
    return MutualActions::make(std::move(xi_nm), std::move(xi_mn));
  }

  LieMutualActions lie_mutual_args(std::vector<std::string> const& a) {
    auto m      = lie_arg(a[0]);
    auto n      = lie_arg(a[1]);
    auto rho_nm = io::lie_action_from_json(io::read_json(a[2]), dir_of(a[2]), n, m);
    auto rho_mn = io::lie_action_from_json(io::read_json(a[3]), dir_of(a[3]), m, n);
    return LieMutualActions::make(std::move(rho_nm), std::move(rho_mn));
  }

  Json mutual_to_json(MutualActions const& mut) {
    return Json{{"xi_mn", io::action_to_json(mut.xi_mn())},
                {"xi_nm", io::action_to_json(mut.xi_nm())}};
  }

  Json lie_mutual_to_json(LieMutualActions const& mut) {
    return Json{{"rho_mn", io::lie_action_to_json(mut.rho_mn())},
                {"rho_nm", io::lie_action_to_json(mut.rho_nm())}};
  }

  PeifferOptions peiffer_options(Settings const& s) {
    PeifferOptions po;
    po.semidirect_cap    = s.semidirect_cap;
    po.strong_word_bound = s.strong_word_bound;
    return po;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group verbs
  ////////////////////////////////////////////////////////////////////////

  Outcome run_validate(std::vector<std::string> const& a, Settings const&) {
    auto const j = io::read_json(a[0]);
    auto const t = io::detail::to_table(
        io::detail::get<std::vector<std::vector<long long>>>(j, "table", "group"),
        "group table");
    if (auto v = validate_group(t)) {
      return {2, Json{{"error", "group axiom fails: " + v->message()},
                      {"valid", false},
                      {"violation", io::violation_to_json(*v)}}};
    }
    auto const g = io::group_from_json(j);
    return {0, Json{{"abelian", g.is_abelian()},
                    {"order", g.order()},
                    {"valid", true}}};
  }

  Outcome run_check_action(std::vector<std::string> const& a, Settings const&) {
    auto [groups, t] = io::action_parts(io::read_json(a[0]), dir_of(a[0]));
    if (auto v = check_action(groups.first, groups.second, t)) {
      return {1, Json{{"valid", false}, {"violation", io::violation_to_json(*v)}}};
    }
    return {0, Json{{"valid", true}}};
  }

  Outcome run_check_compat(std::vector<std::string> const& a, Settings const&) {
    auto const v = check_compatible(mutual_args(a));
    return {v.compatible ? 0 : 1, io::compat_to_json(v)};
  }

  Outcome run_semidirect(std::vector<std::string> const& a, Settings const& s) {
    auto const psi = io::action_from_json(io::read_json(a[0]), dir_of(a[0]));
    auto const sd  = semidirect(psi, s.semidirect_cap);
    return {0, Json{{"group", io::group_to_json(sd.group)},
                    {"jA", io::hom_to_json(sd.jA)},
                    {"jX", io::hom_to_json(sd.jX)},
                    {"pi", io::hom_to_json(sd.pi)}}};
  }

  Outcome run_peiffer(std::vector<std::string> const& a, Settings const& s) {
    auto const pp = peiffer_product(mutual_args(a), peiffer_options(s));
    return {0, io::peiffer_to_json(pp)};
  }

  Outcome not_well_defined(PeifferProduct const& pp) {
    try {
      induced_actions(pp);
    } catch (NotWellDefined const& e) {
      return {1, Json{{"compatible", pp.compatible},
                      {"not_well_defined", io::not_well_defined_to_json(e)}}};
    }
    return {1, Json{{"compatible", pp.compatible}}};
  }

  Outcome run_strong_check(std::vector<std::string> const& a, Settings const& s) {
    auto const pp = peiffer_product(mutual_args(a), peiffer_options(s));
    if (!pp.actions) {
      return not_well_defined(pp);
    }
    auto const v = strong_relation_check(pp, s.strong_word_bound);
    Json       j{{"checked", v.checked},
                 {"pass", v.pass},
                 {"word_bound", s.strong_word_bound}};
    if (v.witness) {
      auto const& w = *v.witness;
      j["witness"]  = Json{{"lhs", w.lhs},
                           {"rhs", w.rhs},
                           {"side", w.side == Side::first ? "M" : "N"},
                           {"word", io::letters_to_json(w.word)},
                           {"x", w.x}};
    }
    return {v.pass ? 0 : 1, j};
  }

  Outcome run_peiffer_xmods(std::vector<std::string> const& a, Settings const& s) {
    auto const pp = peiffer_product(mutual_args(a), peiffer_options(s));
    if (!pp.actions) {
      return not_well_defined(pp);
    }
    auto const [xm_m, xm_n] = peiffer_xmods(pp);
    return {0, Json{{"M", io::xmod_to_json(xm_m)}, {"N", io::xmod_to_json(xm_n)}}};
  }

  Outcome run_universal_map(std::vector<std::string> const& a, Settings const& s) {
    auto const mut  = mutual_args(a);
    auto const xm_m = io::load_xmod(a[4]);
    auto const xm_n = io::load_xmod(a[5]);
    auto const pp   = peiffer_product(mut, peiffer_options(s));
    auto const h    = universal_map(pp, xm_m, xm_n);
    return {0, Json{{"bijective", h.bijective()},
                    {"injective", h.injective()},
                    {"map", io::hom_to_json(h)},
                    {"surjective", h.surjective()}}};
  }

  Outcome run_xmod_check(std::vector<std::string> const& a, Settings const&) {
    auto const xm = io::load_xmod(a[0]);
    if (auto v = check_xmod(xm)) {
      return {1, Json{{"valid", false}, {"violation", io::violation_to_json(*v)}}};
    }
    return {0, Json{{"valid", true}}};
  }

  Outcome run_induce_actions(std::vector<std::string> const& a, Settings const&) {
    auto const mut = induced_mutual_actions(io::load_xmod(a[0]), io::load_xmod(a[1]));
    Json j = mutual_to_json(mut);
    j["compat"] = io::compat_to_json(check_compatible(mut));
    return {0, j};
  }

  Outcome run_enumerate(std::vector<std::string> const& a, Settings const& s) {
    std::vector<FiniteGroup> cat;
    for (auto const& name : a) {
      cat.push_back(group_arg(name));
    }
    CensusOptions opts;
    opts.max_order         = s.max_order;
    opts.semidirect_cap    = s.semidirect_cap;
    opts.strong_word_bound = s.strong_word_bound;
    opts.threads           = threads_from_env();
    return {0, io::census_to_json(enumerate_census(cat, opts))};
  }

  ////////////////////////////////////////////////////////////////////////
  // Lie verbs
  ////////////////////////////////////////////////////////////////////////

  Outcome run_lie_validate(std::vector<std::string> const& a, Settings const&) {
    std::size_t dim = 0;
    auto const  c   = io::lie_constants_from_json(io::read_json(a[0]), dim);
    if (auto v = validate_lie(dim, c)) {
      return {2, Json{{"error", "Lie axiom fails: " + v->message()},
                      {"valid", false},
                      {"violation", io::lie_violation_to_json(*v)}}};
    }
    return {0, Json{{"dim", dim}, {"valid", true}}};
  }

  Outcome run_lie_check_action(std::vector<std::string> const& a, Settings const&) {
    auto [algs, rho] = io::lie_action_parts(io::read_json(a[0]), dir_of(a[0]));
    if (auto v = check_lie_action(algs.first, algs.second, rho)) {
      return {1, Json{{"valid", false},
                      {"violation", io::lie_violation_to_json(*v)}}};
    }
    return {0, Json{{"valid", true}}};
  }

  Outcome run_lie_compat(std::vector<std::string> const& a, Settings const&) {
    auto const v = lie_compatible(lie_mutual_args(a));
    return {v.compatible ? 0 : 1, io::lie_compat_to_json(v)};
  }

  Outcome run_lie_semidirect(std::vector<std::string> const& a, Settings const&) {
    auto const rho = io::lie_action_from_json(io::read_json(a[0]), dir_of(a[0]));
    auto const sd  = lie_semidirect(rho);
    return {0, Json{{"algebra", io::lie_to_json(sd.algebra)},
                    {"inclusion_acting", io::matrix_to_json(sd.incl_n)},
                    {"inclusion_target", io::matrix_to_json(sd.incl_m)}}};
  }

  Outcome run_lie_peiffer(std::vector<std::string> const& a, Settings const&) {
    return {0, io::lie_peiffer_to_json(lie_peiffer(lie_mutual_args(a)))};
  }

  Outcome run_lie_peiffer_xmods(std::vector<std::string> const& a, Settings const&) {
    auto const pp = lie_peiffer(lie_mutual_args(a));
    if (!pp.actions) {
      return {1, Json{{"compatible", pp.compatible}, {"well_defined", false}}};
    }
    auto const [xm_m, xm_n] = lie_peiffer_xmods(pp);
    Json j{{"M", io::lie_xmod_to_json(xm_m)}, {"N", io::lie_xmod_to_json(xm_n)}};
    auto const vm = check_lie_xmod(xm_m);
    auto const vn = check_lie_xmod(xm_n);
    if (vm || vn) {
      j["violation"] = io::lie_violation_to_json(vm ? *vm : *vn);
      return {1, j};
    }
    return {0, j};
  }

  Outcome run_lie_induce_actions(std::vector<std::string> const& a, Settings const&) {
    auto const mut = lie_induced_actions(io::load_lie_xmod(a[0]),
                                         io::load_lie_xmod(a[1]));
    Json j = lie_mutual_to_json(mut);
    j["compat"] = io::lie_compat_to_json(lie_compatible(mut));
    return {0, j};
  }

  Outcome run_lie_universal_map(std::vector<std::string> const& a, Settings const&) {
    auto const pp = lie_peiffer(lie_mutual_args(a));
    auto const h  = lie_universal_map(pp, io::load_lie_xmod(a[4]),
                                      io::load_lie_xmod(a[5]));
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < h.cols(); ++c) {
      cols.push_back(h.column(c));
    }
    return {0, Json{{"map", io::matrix_to_json(h)},
                    {"rank", rank(cols, h.rows())}}};
  }

  Outcome run_lie_xmod_check(std::vector<std::string> const& a, Settings const&) {
    auto const xm = io::load_lie_xmod(a[0]);
    if (auto v = check_lie_xmod(xm)) {
      return {1, Json{{"valid", false},
                      {"violation", io::lie_violation_to_json(*v)}}};
    }
    return {0, Json{{"valid", true}}};
  }

  struct Verb {
    char const* name;
    char const* help;
    std::vector<char const*> args;
    std::function<Outcome(std::vector<std::string> const&, Settings const&)> run;
    bool variadic = false;
  };

  std::vector<Verb> verbs() {
    std::vector<char const*> const mutual{"M", "N", "xi_nm", "xi_mn"};
    std::vector<char const*> const lie_mutual{"M", "N", "rho_nm", "rho_mn"};
    return {
        {"validate", "validate a group file", {"group"}, run_validate},
        {"check-action", "check the action axioms", {"action"}, run_check_action},
        {"check-compat", "decide compatibility of mutual actions", mutual,
         run_check_compat},
        {"semidirect", "semidirect product of an action", {"action"},
         run_semidirect},
        {"peiffer", "Peiffer product of mutual actions", mutual, run_peiffer},
        {"strong-check", "strong Peiffer relation check", mutual,
         run_strong_check},
        {"peiffer-xmods", "the two crossed modules over the Peiffer product",
         mutual, run_peiffer_xmods},
        {"universal-map", "map from the Peiffer product to a common codomain",
         {"M", "N", "xi_nm", "xi_mn", "xmod_M", "xmod_N"}, run_universal_map},
        {"xmod-check", "check the crossed-module conditions", {"xmod"},
         run_xmod_check},
        {"induce-actions", "mutual actions induced by coterminal crossed modules",
         {"xmod_M", "xmod_N"}, run_induce_actions},
        {"enumerate", "census over a catalog of groups", {"groups"},
         run_enumerate, true},
        {"lie-validate", "validate a Lie algebra file", {"lie"}, run_lie_validate},
        {"lie-check-action", "check the Lie action axioms", {"action"},
         run_lie_check_action},
        {"lie-compat", "decide compatibility of Lie mutual actions", lie_mutual,
         run_lie_compat},
        {"lie-semidirect", "semidirect sum of a Lie action", {"action"},
         run_lie_semidirect},
        {"lie-peiffer", "Lie Peiffer product", lie_mutual, run_lie_peiffer},
        {"lie-peiffer-xmods", "the two Lie crossed modules over the product",
         lie_mutual, run_lie_peiffer_xmods},
        {"lie-induce-actions", "Lie mutual actions induced by crossed modules",
         {"xmod_M", "xmod_N"}, run_lie_induce_actions},
        {"lie-universal-map", "map from the Lie Peiffer product to L",
         {"M", "N", "rho_nm", "rho_mn", "xmod_M", "xmod_N"},
         run_lie_universal_map},
        {"lie-xmod-check", "check the Lie crossed-module conditions", {"xmod"},
         run_lie_xmod_check},
    };
  }

  void emit(Json const& report, Settings const& s) {
    if (s.out.empty()) {
      std::cout << report.dump(2) << '\n';
    } else {
      io::write_json(s.out, report);
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Peiffer products of groups and Lie algebras acting on each other"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--max-order", s.max_order, "largest catalog group order")
      ->capture_default_str();
  app.add_option("--semidirect-cap", s.semidirect_cap,
                 "largest semidirect product order")
      ->capture_default_str();
  app.add_option("--strong-word-bound", s.strong_word_bound,
                 "word length bound of the strong relation check")
      ->capture_default_str();
  app.add_option("--out", s.out, "write the report here instead of stdout");

  auto const table = verbs();
  std::vector<std::vector<std::string>> args(table.size());
  std::vector<CLI::App*>                subs;
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto const& v   = table[i];
    auto*       sub = app.add_subcommand(v.name, v.help);
    sub->fallthrough();
    auto* opt = sub->add_option(v.variadic ? "groups" : "inputs", args[i],
                                v.variadic ? "catalog names or group files"
                                           : "input files");
    if (!v.variadic) {
      opt->expected(static_cast<int>(v.args.size()))->required();
      std::string usage;
      for (auto const* n : v.args) {
        usage += (usage.empty() ? "" : " ") + std::string(n);
      }
      opt->type_name(usage);
    }
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!subs[i]->parsed()) {
      continue;
    }
    auto const& v = table[i];
    if (v.variadic && args[i].empty()) {
      for (auto const& g : catalog::standard()) {
        args[i].push_back(g.name());
      }
    }
    Outcome out{2, Json::object()};
    try {
      out = v.run(args[i], s);
    } catch (CapExceeded const& e) {
      out = {2, Json{{"error", e.what()}, {"kind", "cap_exceeded"}}};
    } catch (PreconditionFailed const& e) {
      out = {2, Json{{"error", e.what()}, {"kind", "precondition"}}};
    } catch (NotWellDefined const& e) {
      out = {1, Json{{"not_well_defined", io::not_well_defined_to_json(e)}}};
    } catch (Error const& e) {
      out = {2, Json{{"error", e.what()}, {"kind", "invalid_input"}}};
    }
    if (out.report.contains("error")) {
      std::cerr << "peiffer " << v.name << ": "
                << out.report["error"].get<std::string>() << '\n';
    }
    try {
      emit(out.report, s);
    } catch (Error const& e) {
      std::cerr << "peiffer: " << e.what() << '\n';
      return 2;
    }
    return out.code;
  }
  return 2;
}
