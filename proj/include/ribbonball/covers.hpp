#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ribbonball/ribbon_graph.hpp"

namespace ribbonball {

struct BranchRecord {
  int source_face;
  int target_face;
  // length(source face) / length(target face); 0 when not a whole number.
  int order;
};

/*
 * A dart-level morphism source -> target commuting with alpha and, up to the
 * local sheet orientation, with sigma:
 *
 *   dart_map(sigma x) = sigma_t^(reversed[x] ? -1 : +1)(dart_map x)
 *
 * For untwisted graphs every sheet is (+) and this is plain equivariance.
 * Branching happens only at face centers.
 */
struct CoveringMap {
  std::shared_ptr<const RibbonGraph> source;
  std::shared_ptr<const RibbonGraph> target;
  std::vector<Dart> dart_map;
  std::vector<bool> reversed;
  int degree = 0;
  std::vector<BranchRecord> branches;

  // order -> number of source faces
  std::map<int, int> branch_profile() const;
};

// Fills degree and branch report from a dart map. Does not check anything;
// use verify_covering.
CoveringMap make_covering(std::shared_ptr<const RibbonGraph> source, std::shared_ptr<const RibbonGraph> target,
                          std::vector<Dart> dart_map, std::vector<bool> reversed = {});

struct CheckItem {
  std::string name;
  bool passed;
  std::string detail;
};

struct CoveringReport {
  std::vector<CheckItem> items;
  bool ok() const;
  bool passed(const std::string& name) const;
};

// Itemized checks: range, sigma and alpha equivariance, colors, valences,
// fiber sizes, integral branch orders and Riemann-Hurwitz.
CoveringReport verify_covering(const CoveringMap& c);

// A covering g -> h, or nullopt. Candidates for the image of dart 0 are tried
// in increasing order; the first consistent one is returned. Both graphs must
// be connected and orientable.
std::optional<CoveringMap> find_covering(const RibbonGraph& g, const RibbonGraph& h);

// a: A -> B, b: B -> C gives A -> C.
CoveringMap compose(const CoveringMap& a, const CoveringMap& b);

// Permutation voltages: volt[d] is a permutation of {0..D-1} with
// volt[alpha d] = volt[d]^-1.
using Voltages = std::vector<std::vector<int>>;

Voltages random_voltages(const RibbonGraph& g, int degree, std::uint64_t seed);

// Darts (d, i) with id i*N + d, sigma(d, i) = (sigma d, i) and
// alpha(d, i) = (alpha d, volt[d][i]). Returns one covering per connected
// component of the lift.
std::vector<CoveringMap> voltage_lift(const RibbonGraph& g, int degree, const Voltages& volt);

}  // namespace ribbonball
