#ifndef CYCLOTRIG_DISCOVER_HPP
#define CYCLOTRIG_DISCOVER_HPP

#include <chrono>
#include <cstdint>
#include <vector>

#include "cyclotrig/verify.hpp"

namespace cyclotrig {

// Inclusive multiple range; hi = 0 means "up to n - 1".
struct MultipleRange {
  long lo = 1;
  long hi = 0;
};

struct DiscoveryConfig {
  std::vector<unsigned> denominators;        // odd
  MultipleRange tan_multiples;
  MultipleRange sin_multiples;
  std::vector<Rational> coeff_set;           // sin coefficients, e.g. +-4
  unsigned max_sin_terms = 1;                // <= 4
  std::vector<unsigned> surd_candidates;     // squarefree odd m
  std::vector<Rational> q_candidates{Rational(1), Rational(-1)};
  double prefilter_tol = 1e-9;
  unsigned max_denominator = 51;
};

struct DiscoveryReport {
  std::vector<Identity> found;  // each exactly verified, deduplicated
  std::uint64_t candidates_scanned = 0;
  std::uint64_t prefilter_pass = 0;
  std::chrono::duration<double> elapsed{0};
};

// Enumerates tan(a pi/n) + sum c_i sin(b_i pi/n) against q sqrt(m),
// numeric prefilter first, exact verification as the only acceptance.
// Candidate blocks run concurrently; the merged output order is the
// lexicographic enumeration order.
DiscoveryReport discover(const DiscoveryConfig& cfg);

// For prime n = 3 mod 4: completes each i tan(k pi/n) to the Gauss sum
// G_n by a +-4-coefficient sin combination, the way the quadratic-residue
// proof assembles the sqrt(11) identity. Returns exactly verified
// identities only.
std::vector<Identity> residue_construct(unsigned n);

}  // namespace cyclotrig

#endif
