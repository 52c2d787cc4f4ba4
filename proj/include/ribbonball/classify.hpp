#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbonball/catalog.hpp"
#include "ribbonball/ribbon_graph.hpp"

namespace ribbonball {

struct ArithmeticBound {
  std::optional<int> min_b;  // empty when infeasible
  // Name of the failing constraint when infeasible.
  std::string reason;
};

// Smallest b allowed by the Euler-characteristic inequality (the stronger
// valence-4 form when n = 1) together with integrality of w and e.
ArithmeticBound arithmetic_min_b(const PatternType& t);

enum class Certification { arithmetic, search, table };
std::string_view to_string(Certification c);

struct ClassRow {
  int row = 0;
  PatternType type;
  int min_b = 0;
  int min_w = 0;
  int arithmetic_b = 0;
  Certification certification = Certification::arithmetic;
  CatalogId realization;
};

struct InfeasibleTriple {
  PatternType type;
  std::string reason;
};

struct Classification {
  std::vector<ClassRow> rows;
  std::vector<InfeasibleTriple> infeasible;
  // Arithmetically feasible triples with no catalog row; empty when the
  // table is complete on the scanned window.
  std::vector<PatternType> unexplained;
};

struct ScanWindow {
  int k_max = 12;
  int l_max = 12;
  int n_max = 8;
  int dart_cap = 40;
};

// Rows sorted by (row, k). Family rows are instantiated for 3 <= k <= k_max.
Classification feasible_rows(const ScanWindow& window);
Classification feasible_rows(int k_max);

// All spherical (t, b) patterns up to isomorphism, sorted by canonical form.
// Throws Error when k*b + l*w exceeds dart_cap. Empty when w or e would not be
// integral.
std::vector<RibbonGraph> exhaustive_search(const PatternType& t, int b, int dart_cap = 40);

}  // namespace ribbonball
