// Walks one threshold end to end: the star colouring as a lower bound for
// bal(n, K13+K2), the exhaustive scan as the upper bound, and the tone
// spectrum that makes the star work.
//
//   demo_threshold [n]      (default n = 8; n <= 9 keeps it under a minute)

#include <cstdlib>
#include <iostream>

#include "balancelab/balancelab.hpp"

using namespace balancelab;

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 8;
  const Pattern p = pattern_lookup("K13+K2");
  const Colouring star = construct(Construction::star, n);

  std::cout << "pattern " << p.name << ": v=" << p.v << " e=" << p.e << " aut=" << p.aut << "\n";
  std::cout << "star colouring of K_" << n << ": |R|=" << star.red_count() << " |B|=" << star.blue_count()
            << ", red graph " << emit_graph6(star.red_graph()) << "\n";
  std::cout << "tones of " << p.name << " under the star: " << tone_spectrum(star, p).to_string()
            << " (balanced tone 2 is missing)\n";

  const SolveResult r = bal_exact(n, p);
  std::cout << "bal(" << n << "," << p.name << ") = " << r.value << " over " << r.classes_scanned << " classes, witness "
            << r.witness_graph6 << "\n";

  const auto claim = registry_expected(p, Quantity::bal, n);
  if (claim) {
    const ThresholdReport t = verify_threshold(n, p, Quantity::bal, static_cast<int>(*claim));
    std::cout << "tabulated " << *claim << ": witness " << (t.witness_ok ? "ok" : "fails") << ", scan "
              << (t.scan_ok ? "ok" : "fails") << " (" << t.mode << ")\n";
  } else {
    std::cout << "n = " << n << " is below the tabulated range\n";
  }
}
