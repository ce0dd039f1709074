#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "shiftkit/complex.hpp"

namespace shiftkit {

using Rng = std::mt19937_64;

struct RandomComplexOptions {
  int max_facets = 5;
  /// Facet sizes are drawn from 1..max_facet_size.
  int max_facet_size = 3;
};

/// Closure of random facets on [n]; never the empty complex.
SimplicialComplex random_complex(Rng& rng, int n, const RandomComplexOptions& options = {});

/// A near cone with respect to vertex 1 on [n]: a cone 1 * L plus random
/// faces avoiding 1 whose boundaries lie in L. Requires n >= 1.
SimplicialComplex random_near_cone(Rng& rng, int n, const RandomComplexOptions& options = {});

/// Shifted closure of a few random faces on [n].
SimplicialComplex random_shifted(Rng& rng, int n, const RandomComplexOptions& options = {});

/// perm[v-1] is the image of v; a uniform permutation of [n].
std::vector<Vertex> random_permutation(Rng& rng, int n);

/// Every nonempty complex with faces in [n] (every downset containing ∅).
std::vector<SimplicialComplex> all_complexes(int n);

/// One representative per isomorphism class among complexes whose vertex
/// set is exactly [m] for some m <= n, each on ambient m.
std::vector<SimplicialComplex> complex_classes(int n);

/// Lexicographically least relabeled face list over all permutations of
/// the compacted vertex set.
std::vector<std::uint64_t> canonical_key(const SimplicialComplex& k);

} // namespace shiftkit
