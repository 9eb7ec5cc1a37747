#ifndef PEIFFER_CENSUS_HPP_
#define PEIFFER_CENSUS_HPP_

// Enumeration of all mutual actions between catalog groups, with the
// verdicts of every round-trip check per pair. Rows are independent; the
// report is assembled in row order, so it does not depend on the number of
// worker threads.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "peiffer/action.hpp"
#include "peiffer/compat.hpp"
#include "peiffer/morphisms.hpp"
#include "peiffer/peiffer.hpp"
#include "peiffer/xmod.hpp"

namespace peiffer {

  struct CensusOptions {
    std::size_t max_order         = 12;  // per catalog group
    std::size_t semidirect_cap    = default_semidirect_cap;
    std::size_t strong_word_bound = 2;
    std::size_t threads           = 1;
  };

  // Worker count from PEIFFER_THREADS, defaulting to 1.
  inline std::size_t threads_from_env() {
    char const* v = std::getenv("PEIFFER_THREADS");
    if (v == nullptr || *v == '\0') {
      return 1;
    }
    char*      end = nullptr;
    long const n   = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 1) {
      throw InvalidInput("PEIFFER_THREADS must be a positive integer");
    }
    return static_cast<std::size_t>(n);
  }

  // Actions of `acting` on `target`, one per homomorphism into Aut(target),
  // in the order of homomorphisms().
  inline std::vector<Action> enumerate_actions(FiniteGroup const& acting,
                                               FiniteGroup const& target) {
    auto const          aut = automorphism_group(target);
    std::vector<Action> out;
    for (auto const& h : homomorphisms(acting, aut.group)) {
      Table t(acting.order(), std::vector<Elem>(target.order()));
      for (Elem a = 0; a < acting.order(); ++a) {
        auto const& phi = aut.elements[h(a)];
        for (Elem x = 0; x < target.order(); ++x) {
          t[a][x] = phi(x);
        }
      }
      out.push_back(Action::unchecked(acting, target, std::move(t)));
    }
    return out;
  }

  struct CensusRow {
    std::size_t m_index = 0;  // position in the catalog
    std::size_t n_index = 0;
    std::string m_name;
    std::string n_name;
    std::size_t xi_nm_index = 0;  // position among actions of N on M
    std::size_t xi_mn_index = 0;
    bool        trivial_actions = false;
    bool        compatible      = false;
    std::optional<CompatWitness> witness;
    std::size_t peiffer_order = 0;
    bool        well_defined  = false;
    // Forward round trip; set only for compatible rows.
    std::optional<bool> round_trip;
    bool                symmetric_iso = false;
    std::optional<bool> strong;
    // point_to_action(semidirect(xi)) == xi for both actions.
    bool point_round_trip = false;
    // Trivial-action rows: P is isomorphic to M x N.
    std::optional<bool> direct_product_iso;
  };

  struct CensusReport {
    std::vector<std::string> catalog;
    std::vector<CensusRow>   rows;
  };

  namespace detail {
    inline bool point_round_trip(Action const& psi, std::size_t cap) {
      auto const sd = semidirect(psi, cap);
      auto const pa = point_to_action(point_of(sd));
      // The kernel is enumerated as (x, e) for x ascending, so its elements
      // line up with X and the tables compare directly.
      return pa.action.acting() == psi.acting()
             && pa.action.target() == psi.target()
             && pa.action.table() == psi.table();
    }

    inline CensusRow census_row(MutualActions const& mut, CensusRow row,
                                CensusOptions const& opts) {
      PeifferOptions po;
      po.semidirect_cap    = opts.semidirect_cap;
      po.strong_word_bound = opts.strong_word_bound;

      auto const verdict  = check_compatible(mut);
      row.compatible      = verdict.compatible;
      row.witness         = verdict.witness;
      row.trivial_actions = mut.xi_nm().is_trivial() && mut.xi_mn().is_trivial();

      auto const pp     = peiffer_product(mut, po);
      row.peiffer_order = pp.product.order();
      row.well_defined  = pp.actions.has_value();

      if (row.compatible && row.well_defined) {
        auto const [xm_m, xm_n] = peiffer_xmods(pp);
        bool const valid = !check_xmod(xm_m) && !check_xmod(xm_n);
        row.round_trip   = valid && induced_mutual_actions(xm_m, xm_n) == mut;
        row.strong = strong_relation_check(pp, opts.strong_word_bound).pass;
      } else if (row.compatible) {
        row.round_trip = false;
      }

      auto const mirrored = peiffer_product(mut.swapped(), po);
      row.symmetric_iso   = is_isomorphic(pp.product, mirrored.product,
                                          opts.semidirect_cap)
                              .has_value();

      row.point_round_trip = point_round_trip(mut.xi_nm(), opts.semidirect_cap)
                             && point_round_trip(mut.xi_mn(), opts.semidirect_cap);

      if (row.trivial_actions) {
        auto const prod        = direct_product(mut.M(), mut.N());
        row.direct_product_iso = pp.product.order() == prod.order()
                                 && is_isomorphic(pp.product, prod,
                                                  opts.semidirect_cap)
                                        .has_value();
      }
      return row;
    }
  }  // namespace detail

  struct CensusJob {
    CensusRow     row;
    MutualActions mut;
  };

  // Jobs in row order: ordered pairs (M, N) of the catalog, then actions of
  // N on M, then actions of M on N.
  inline std::vector<CensusJob> census_jobs(std::vector<FiniteGroup> const& cat,
                                            CensusOptions const& opts) {
    for (auto const& g : cat) {
      if (g.order() > opts.max_order) {
        throw CapExceeded("catalog group " + g.name() + " has order "
                          + std::to_string(g.order()) + " > max order "
                          + std::to_string(opts.max_order));
      }
    }
    std::vector<CensusJob> jobs;
    for (std::size_t i = 0; i < cat.size(); ++i) {
      for (std::size_t j = 0; j < cat.size(); ++j) {
        auto const& m = cat[i];
        auto const& n = cat[j];
        if (m.order() * n.order() > opts.semidirect_cap) {
          throw CapExceeded("|M||N| = " + std::to_string(m.order() * n.order())
                            + " exceeds the semidirect cap");
        }
        auto const nm = enumerate_actions(n, m);
        auto const mn = enumerate_actions(m, n);
        for (std::size_t a = 0; a < nm.size(); ++a) {
          for (std::size_t b = 0; b < mn.size(); ++b) {
            CensusRow row;
            row.m_index     = i;
            row.n_index     = j;
            row.m_name      = m.name();
            row.n_name      = n.name();
            row.xi_nm_index = a;
            row.xi_mn_index = b;
            jobs.push_back({std::move(row), MutualActions::make(nm[a], mn[b])});
          }
        }
      }
    }
    return jobs;
  }

  inline CensusReport enumerate_census(std::vector<FiniteGroup> const& cat,
                                       CensusOptions const& opts = {}) {
    auto           jobs = census_jobs(cat, opts);
    CensusReport   report;
    for (auto const& g : cat) {
      report.catalog.push_back(g.name());
    }
    report.rows.resize(jobs.size());

    std::atomic<std::size_t>        next{0};
    std::vector<std::exception_ptr> errors(jobs.size());
    auto work = [&] {
      for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) {
        try {
          report.rows[k] = detail::census_row(jobs[k].mut, jobs[k].row, opts);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      }
    };
    std::size_t const nthreads = std::max<std::size_t>(
        1, std::min(opts.threads, jobs.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < nthreads; ++t) {
      pool.emplace_back(work);
    }
    work();
    for (auto& t : pool) {
      t.join();
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    return report;
  }

}  // namespace peiffer

#endif  // PEIFFER_CENSUS_HPP_
