#include "orbsum/split.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "orbsum/error.hpp"

namespace orbsum {

bool edge_essential(const RealizationTree& t, std::size_t edge_index) {
  require_valid(t);
  if (edge_index >= t.edges().size()) {
    throw std::out_of_range("edge_essential: edge index out of range");
  }
  const SphericalType type = t.edges()[edge_index].type;
  CanonicalForm identity_form;
  identity_form.summands.push_back(identity_name(type));
  auto [side_a, side_b] = split_at_edge(t, edge_index);
  return canonicalize(side_a) != identity_form &&
         canonicalize(side_b) != identity_form;
}

std::string SplitStep::to_string() const {
  std::ostringstream os;
  os << "phase " << phase << " "
     << (action == Action::Cut ? "cut" : "contract") << " " << edge_desc;
  return os.str();
}

namespace {

// Seeded bounded draw; avoids std::uniform_int_distribution so that traces
// are identical across standard libraries.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

struct Candidate {
  std::size_t component;
  std::size_t edge;
};

}  // namespace

SplitTrace run_split(const RealizationTree& t, SplitStrategy strategy,
                     std::uint64_t seed) {
  require_valid(t);
  std::mt19937_64 rng(seed);
  std::vector<RealizationTree> forest{t};
  SplitTrace trace;
  std::vector<SphericalType> cut_labels;

  for (int phase = 1; phase <= 3; ++phase) {
    auto phase_kind = static_cast<SphericalType::Kind>(phase - 1);
    while (true) {
      std::vector<Candidate> trivial;
      std::vector<Candidate> essential;
      for (std::size_t c = 0; c < forest.size(); ++c) {
        const RealizationTree& comp = forest[c];
        for (std::size_t i = 0; i < comp.edges().size(); ++i) {
          if (comp.edges()[i].type.kind() != phase_kind) continue;
          if (contract_applicable(comp, i)) {
            trivial.push_back({c, i});
          } else if (edge_essential(comp, i)) {
            essential.push_back({c, i});
          }
        }
      }
      // Trivial sums are absorbed as they arise; essential spheres are cut.
      const bool contracting = !trivial.empty();
      const std::vector<Candidate>& pool = contracting ? trivial : essential;
      if (pool.empty()) break;
      std::size_t pick = 0;
      if (strategy == SplitStrategy::Random && pool.size() > 1) {
        pick = draw(rng, pool.size());
      }
      const Candidate cand = pool[pick];
      RealizationTree& comp = forest[cand.component];
      SplitStep step;
      step.phase = phase;
      step.edge_type = comp.edges()[cand.edge].type;
      step.edge_desc = describe_edge(comp, cand.edge);
      if (contracting) {
        step.action = SplitStep::Action::Contract;
        comp = contract_trivial(comp, cand.edge);
      } else {
        step.action = SplitStep::Action::Cut;
        cut_labels.push_back(step.edge_type);
        auto [side_a, side_b] = split_at_edge(comp, cand.edge);
        forest[cand.component] = std::move(side_a);
        forest.insert(forest.begin() + cand.component + 1, std::move(side_b));
      }
      trace.steps.push_back(std::move(step));
    }
    // Once a phase ends, no sum of its class may survive anywhere: every
    // edge of the class is either essential (cut) or trivial (contracted).
    for (const RealizationTree& comp : forest) {
      for (std::size_t i = 0; i < comp.edges().size(); ++i) {
        if (static_cast<int>(comp.edges()[i].type.kind()) < phase) {
          throw std::logic_error(
              "split process left an edge of an earlier phase: " +
              describe_edge(comp, i));
        }
      }
    }
  }

  for (const RealizationTree& comp : forest) {
    if (comp.nodes().size() != 1) {
      throw std::logic_error(
          "split process terminated with a composite component");
    }
    trace.final.summands.push_back(comp.nodes().front().atom.name());
  }
  trace.final.sum_labels = std::move(cut_labels);
  std::sort(trace.final.summands.begin(), trace.final.summands.end());
  std::sort(trace.final.sum_labels.begin(), trace.final.sum_labels.end());
  return trace;
}

}  // namespace orbsum
