#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cayley/spectrum.hpp"

namespace cayley {

// Every abelian group of order 2..max_order, one per multiset of cyclic
// factor sizes >= 2, ordered by (order, factors).
std::vector<AbelianGroup> abelian_groups_up_to(int64_t max_order);

// Every valid connection set on G: per negation pair {x, -x} the choices
// are none / both in A / x in B / -x in B; involutions join A or stay out.
std::vector<ConnectionSet> enumerate_connection_sets(const AbelianGroup& G);

// One uniformly chosen valid connection set (same choice model).
ConnectionSet random_connection_set(const AbelianGroup& G, std::mt19937_64& rng);

// Result of running every per-set invariant on one connection set.
// `corrupt_stabilizer` deliberately flips one stabilizer element before
// the comparison; used by the harness self-check.
struct SetCheckBreakdown {
  bool stabilizers_equal = true;  // set stabilizer == Galois-fixing oracle + degree formula
  bool integrality_equiv = true;  // exact rationality == atom characterization
  bool undirected = false;
  bool duality_ok = true;         // phi(4n)/|H| == phi(n)/|H'| (undirected sets)
  bool identities_ok = true;      // trace sums, parity relations, Galois law, char poly
  std::string first_failure;

  bool all_ok() const { return stabilizers_equal && integrality_equiv && duality_ok && identities_ok; }
};

SetCheckBreakdown check_connection_set_invariants(const ConnectionSet& cs,
                                                  bool corrupt_stabilizer = false);

struct VerifyOptions {
  int64_t max_order = 12;
  uint64_t seed = 0;
  int jobs = 1;
  double tol = 1e-8;
  int numeric_samples_per_group = 4;
  bool self_test_negative = false;
};

struct VerifyFailure {
  std::string check;
  std::string where;  // group and connection set, human-readable
  std::string detail;
};

struct VerificationSummary {
  int64_t groups = 0;
  int64_t connection_sets = 0;
  int64_t checks = 0;
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Exhaustive invariant sweep over all groups of order <= max_order and
// all their connection sets, plus seeded numeric-vs-exact spot checks.
VerificationSummary run_verify(const VerifyOptions& opts);

}  // namespace cayley
