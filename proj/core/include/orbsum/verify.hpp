#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orbsum::verify {

struct SuiteResult {
  std::string name;
  long long checked = 0;
  std::vector<std::string> failures;  // capped; failure_count has the total
  long long failure_count = 0;
  std::string note;

  bool ok() const { return failure_count == 0; }
  void record_failure(const std::string& message);
};

/// One line per suite plus one line per recorded failure.
std::string format(const SuiteResult& result);

/// Exhaustive classifier sweep: bad exactly on one cone point or two of
/// distinct orders on the sphere, spherical exactly on the bounding types,
/// and chi-sign coherence everywhere.
SuiteResult check_classifier(int max_genus, int max_cones, int max_order);

/// All trees up to max_edges edges (up to isomorphism), all edge orderings:
/// beta_sum = #external - 1 and the Euler-characteristic recount agrees.
SuiteResult check_tree_lemma(int max_edges);

/// All C/N-coloured forests up to max_edges edges, all orderings: alpha_sum
/// is order-independent, blow-up preserves it, and an edge with a
/// valence-1 C endpoint contributes 1 wherever it sits.
SuiteResult check_alpha_forests(int max_edges);

/// Canonicalization confluence over the generated tree family: every
/// maximal contraction sequence reaches one form, and the split process
/// (first-fit plus seeded random runs) reproduces it.
SuiteResult check_confluence(int max_edges, std::size_t max_instances,
                             int random_seeds);

/// Randomly generated efficient vertex-sum-free realizations: nu agrees
/// across every valid build order, across slide-equivalent realizations
/// (exhaustive up to bfs_node_limit nodes), and between its two
/// computation routes.
SuiteResult check_nu_invariance(int instances, int max_edges,
                                std::uint64_t seed,
                                std::size_t bfs_node_limit = 5);

}  // namespace orbsum::verify
