#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blab/map.hpp"
#include "blab/rng.hpp"

namespace blab {

enum class SamplerMethod { Enumerate, FlipMcmc };

/// Parameters of one sampling ensemble. Negative burn_in / thinning select
/// the defaults 50*E and E flip attempts (E = 3(n-2)).
struct EnsembleSpec {
  int32_t n = 4;
  MapClass map_class = MapClass::Simple;
  SamplerMethod method = SamplerMethod::FlipMcmc;
  int64_t burn_in = -1;
  int64_t thinning = -1;
  uint64_t seed = 0;

  int64_t effective_burn_in() const;
  int64_t effective_thinning() const;
  void validate() const;
};

enum class FlipReject {
  None,             ///< edge is flippable
  SameFace,         ///< both sides of the edge lie on one face
  LoopDiagonal,     ///< new diagonal would be a loop (simple class)
  ParallelDiagonal  ///< new diagonal already present (simple class)
};

const char* flip_reject_name(FlipReject r);

/// Why edge `e` of `t` can or cannot be flipped, under t's own class rules.
FlipReject classify_flip(const Triangulation& t, int32_t e);

/// Replaces edge e (shared by two distinct triangles) with the opposite
/// diagonal of their union. Throws NotFlippable with the reason in the
/// message. The input is untouched; the result reuses the same edge index
/// for the new diagonal, so flipping the same index again undoes the move.
Triangulation flip_edge(const Triangulation& t, int32_t e);

int32_t count_flippable_edges(const Triangulation& t);

/// Deterministic starter state: double_fan(n) for n >= 4, the doubled
/// triangle for n = 3 (general class only).
Triangulation initial_triangulation(int32_t n, MapClass cls);

struct EnumerationBudget {
  int64_t max_operations = 50'000'000;
};

/// All isomorphism classes with n vertices, as canonical representatives,
/// found by breadth-first exploration of the flip graph from the starter
/// state (diagonal flips connect all sphere triangulations with a fixed
/// vertex count). Sorted by canonical code. Returns an empty list for n < 3,
/// where no sphere triangulation exists.
std::vector<Triangulation> enumerate_classes(int32_t n, MapClass cls,
                                             const EnumerationBudget& budget = {});

/// Canonical codes of enumerate_classes, sorted.
std::vector<std::string> enumerate_triangulations(int32_t n, MapClass cls,
                                                  const EnumerationBudget& budget = {});

/// Rooted map count of one isomorphism class: darts / |Aut|. The flip chain
/// below is uniform over dart-labelled states, so long-run class frequencies
/// are proportional to this weight.
int64_t rooted_count(const Triangulation& t);

/// Exact sampler for small n: enumerates the isomorphism classes once and
/// draws them uniformly — the literal uniform measure on the finite set of
/// classes. Note the convention gap to the flip chain, which is uniform at
/// the rooted (dart-labelled) level and therefore weights each class by
/// darts/|Aut|; the two laws coincide only when all automorphism groups
/// have equal order.
class ExactSampler {
 public:
  ExactSampler(int32_t n, MapClass cls, uint64_t seed,
               const EnumerationBudget& budget = {});

  Triangulation next();
  int32_t class_count() const { return static_cast<int32_t>(classes_.size()); }

 private:
  std::vector<Triangulation> classes_;
  Rng rng_;
};

/// Lazy edge-flip Metropolis chain. Each step proposes a uniformly random
/// edge; non-flippable proposals are rejected moves. Both the proposal
/// (1/E per edge) and its reversal are symmetric at the labelled-state
/// level, so every move is accepted and the stationary law is uniform over
/// dart-labelled triangulations, i.e. uniform with weight darts/|Aut| over
/// isomorphism classes.
class McmcSampler {
 public:
  explicit McmcSampler(const EnsembleSpec& spec);

  /// Runs the chain forward (burn-in before the first sample, thinning
  /// before each) and emits a validated snapshot.
  Triangulation next();

  int64_t steps() const { return steps_; }
  int64_t accepted() const { return accepted_; }

 private:
  void advance(int64_t step_count);

  EnsembleSpec spec_;
  Rng rng_;
  std::vector<int32_t> next_, origin_, degree_;
  int32_t edge_count_ = 0;
  int64_t steps_ = 0;
  int64_t accepted_ = 0;
  bool burned_in_ = false;
};

}  // namespace blab
