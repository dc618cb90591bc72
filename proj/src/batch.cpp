#include "tkit/batch.hpp"

#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tkit/codec.hpp"
#include "tkit/error.hpp"
#include "tkit/meta_nf.hpp"

namespace tkit {

int effective_threads(int requested) {
#ifdef _OPENMP
  if (requested <= 0) return omp_get_max_threads();
  return requested;
#else
  (void)requested;
  return 1;
#endif
}

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

template <typename Fn>
void parallel_for(size_t count, int threads, Fn&& body) {
  if (threads == 1) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
#ifdef _OPENMP
  int team = effective_threads(threads);
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
  for (long long i = 0; i < static_cast<long long>(count); ++i)
    body(static_cast<size_t>(i));
#else
  for (size_t i = 0; i < count; ++i) body(i);
#endif
}

}  // namespace

RoundtripReport roundtrip_suite(const TypePtr& tau, const Nat& max_code,
                                uint32_t census_size, const Budget& budget,
                                int threads) {
  RoundtripReport report;
  report.type_text = print_type(tau);

  std::vector<TermPtr> census = enumerate_pure_closed_nf(tau, census_size);
  report.rows.resize(census.size());
  for (size_t i = 0; i < census.size(); ++i) {
    report.rows[i].term = print_term(census[i], {}, true);
    report.rows[i].code = encode_oslash(census[i]);
    report.rows[i].in_range = report.rows[i].code <= max_code;
  }

  EnumeratorBundle bundle = build_bundle(tau);

  parallel_for(census.size(), threads, [&](size_t i) {
    RoundtripRow& row = report.rows[i];
    if (!row.in_range) return;
    auto start = std::chrono::steady_clock::now();
    try {
      EvalStats stats;
      NormalForm got = apply_enumerator(bundle, row.code, budget, &stats);
      row.produced = print_term(got.term, {}, true);
      row.ok = alpha_eq(got.term, census[i]);
      row.steps = stats.steps;
      row.delta_hits = stats.delta_hits;
    } catch (const Error& e) {
      row.ok = false;
      row.error = e.what();
    }
    row.wall_ms = ms_since(start);
  });

  for (const RoundtripRow& row : report.rows) {
    if (!row.in_range) continue;
    ++report.checked;
    if (row.ok)
      ++report.passed;
    else
      report.all_ok = false;
  }
  return report;
}

SeparationReport separation_suite(const std::vector<TermPtr>& census,
                                  const ReducibilityWitness& witness,
                                  const Budget& budget, int threads) {
  SeparationReport report;
  report.numerals.resize(census.size());
  std::vector<std::string> errors(census.size());

  TermPtr n_term = build_N(witness);
  parallel_for(census.size(), threads, [&](size_t i) {
    try {
      NormalForm nf = normalize(mk_app(n_term, census[i]), budget);
      report.numerals[i] = eval_numeral(nf);
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });

  for (size_t i = 0; i < census.size(); ++i) {
    if (!errors[i].empty()) {
      report.all_ok = false;
      report.failures.push_back("element " + std::to_string(i) + ": " +
                                errors[i]);
    }
  }
  for (size_t i = 0; i < census.size(); ++i) {
    for (size_t j = i; j < census.size(); ++j) {
      ++report.pairs_checked;
      bool same_term = alpha_eq(census[i], census[j]);
      bool same_code = report.numerals[i] == report.numerals[j];
      if (same_term != same_code) {
        report.all_ok = false;
        report.failures.push_back(
            "separation failed on (" + print_term(census[i], {}, true) +
            ", " + print_term(census[j], {}, true) + "): numerals " +
            report.numerals[i].to_string() + " vs " +
            report.numerals[j].to_string());
      }
    }
  }
  return report;
}

}  // namespace tkit
