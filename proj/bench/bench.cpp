// Compares the production evaluator against the naive reference rewriter on
// the arithmetic corpus, and the serial batch lane against the OpenMP lane
// on the decode suite.
#include <chrono>
#include <iomanip>
#include <iostream>

#include "tkit/batch.hpp"
#include "tkit/enumerator.hpp"
#include "tkit/error.hpp"
#include "tkit/codec.hpp"
#include "tkit/normalize.hpp"
#include "tkit/stdlib.hpp"

using namespace tkit;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

TermPtr apply2(const Combinator& c, uint64_t a, uint64_t b) {
  return mk_app(mk_app(c.term, numeral_term(Nat(a))), numeral_term(Nat(b)));
}

void row(const std::string& name, double naive_ms, double pure_ms,
         double accel_ms) {
  std::cout << std::left << std::setw(28) << name << std::right
            << std::setw(12) << naive_ms << std::setw(12) << pure_ms
            << std::setw(12) << accel_ms << std::endl;
}

}  // namespace

int main() {
  std::cout << std::fixed << std::setprecision(2);
  std::cout << std::left << std::setw(28) << "term (times in ms)"
            << std::right << std::setw(12) << "naive" << std::setw(12)
            << "evaluator" << std::setw(12) << "accel" << "\n";

  Budget pure;
  pure.accel = false;
  Budget accel;

  struct Case {
    std::string name;
    TermPtr term;
  };
  std::vector<Case> cases = {
      {"Add 100 100", apply2(arith("Add"), 100, 100)},
      {"Mult 20 20", apply2(arith("Mult"), 20, 20)},
      {"Monus 200 80", apply2(arith("Monus"), 200, 80)},
      {"Div 60 7", apply2(arith("Div"), 60, 7)},
      {"P0 8 8", apply2(cantor("P0"), 8, 8)},
      {"P1 9", mk_app(cantor("P1").term, numeral_term(Nat(9)))},
  };

  for (const Case& c : cases) {
    double naive_ms = -1;
    try {
      naive_ms = time_ms([&] { normalize_naive(c.term, 300'000); });
    } catch (const Error&) {
      naive_ms = -1;  // over the step bound
    }
    double pure_ms = -1;
    try {
      pure_ms = time_ms([&] { normalize(c.term, pure); });
    } catch (const Error&) {
    }
    double accel_ms = time_ms([&] { normalize(c.term, accel); });
    row(c.name, naive_ms, pure_ms, accel_ms);
  }

  std::cout << "\ndecode suite over three types, codes <= 2000\n";
  Budget budget = Budget::for_enumerator();
  for (int threads : {1, 0}) {
    double ms = time_ms([&] {
      for (const char* tau :
           {"N -> N", "N -> N -> N", "(N -> N) -> N -> N"}) {
        RoundtripReport report =
            roundtrip_suite(parse_type(tau), Nat(2000), 12, budget, threads);
        if (!report.all_ok) std::cout << "  (failures!)\n";
      }
    });
    std::cout << "  threads="
              << (threads == 0 ? effective_threads(0) : threads)
              << (threads == 1 ? " (serial reference)" : "") << "  " << ms
              << " ms" << std::endl;
  }

  std::cout << "\nstaging-lemma grid (N -> N -> N, i,j <= 5)\n";
  EnumeratorBundle bundle = build_bundle(parse_type("N -> N -> N"));
  for (int threads : {1, 0}) {
    double ms = time_ms([&] {
      bool ok = true;
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic, 1) \
    num_threads(effective_threads(threads)) if (threads != 1) \
    reduction(&& : ok)
#endif
      for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 5; ++j)
          ok = ok && check_lemma_a(bundle, i, j, budget);
      if (!ok) std::cout << "  (failures!)\n";
    });
    std::cout << "  threads="
              << (threads == 0 ? effective_threads(0) : threads)
              << (threads == 1 ? " (serial reference)" : "") << "  " << ms
              << " ms" << std::endl;
  }
  return 0;
}
