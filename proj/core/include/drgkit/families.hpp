#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "drgkit/graph.hpp"

namespace drgkit {

enum class Family {
  johnson,                // params n,k: k-subsets of {0..n-1}, colex order
  halved_cube,            // params n: even-weight words of length n, numeric order
  hamming,                // params d,q: words over Z_q of length d, lexicographic
  shrikhande,             // no params: (i,j) in Z_4 x Z_4 -> 4i+j
  rook_grid,              // params m: (i,j) -> i*m+j, line graph of K_{m,m}
  triangular_complement,  // params m: complement of J(m,2)
  complete_bipartite,     // params t: parts {0..t-1} and {t..2t-1}
  icosahedron,            // no params: fixed 12-vertex labeling
  chang,                  // params v in {1,2,3}: switched J(8,2)
};

struct FamilySpec {
  Family family;
  std::vector<long> params;
};

/// Largest vertex count any constructor will produce.
inline constexpr std::size_t kMaxFamilyOrder = 1024;

std::string_view family_name(Family f);
/// Errors: "unknown family".
Family family_from_name(std::string_view name);
std::vector<std::string_view> family_names();

/// Builds the named graph with its documented labeling. Errors: "arity",
/// "parameter range".
Graph construct(const FamilySpec& spec);

/// Complements adjacency between `s` and its complement. Errors:
/// "vertex out of range".
Graph seidel_switch(const Graph& g, const std::vector<Vertex>& s);

/// Characteristic bitmasks of the k-subsets of {0..n-1} in colex order; the
/// position in this list is the Johnson vertex index.
std::vector<std::uint64_t> johnson_masks(int n, int k);

/// Switching set of J(8,2) for Chang variant 1, 2 or 3, as vertex indices.
std::vector<Vertex> chang_switching_set(int variant);

}  // namespace drgkit
