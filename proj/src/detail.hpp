#pragma once

#include <cstdint>
#include <vector>

#include "ribbonball/ribbon_graph.hpp"

namespace ribbonball::detail {

// Side-tracing of faces on raw permutations. Returns the face index of every
// state (2*d for the (+) side, 2*d+1 for (-)) and the faces in trace order.
struct TraceResult {
  std::vector<int> face_of_state;
  std::vector<Face> faces;
};

TraceResult trace_states(const std::vector<Dart>& sigma, const std::vector<Dart>& sigma_inv,
                         const std::vector<Dart>& alpha, const std::vector<std::uint8_t>& twist);

std::vector<Dart> inverse(const std::vector<Dart>& perm);

}  // namespace ribbonball::detail
