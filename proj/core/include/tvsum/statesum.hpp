#pragma once

#include <cstdint>
#include <vector>

#include "tvsum/complexes.hpp"
#include "tvsum/gauge.hpp"

namespace tvsum {

struct StateSumOptions {
  int workers = 0;  // 0: hardware concurrency
};

struct StateSumResult {
  FieldElement value;
  std::uint64_t visited = 0;     // grade-compatible colorings
  std::uint64_t admissible = 0;  // colorings with every edge module nonzero
  double seconds = 0;
};

// |M|_C for the G-manifold given by a labeled skeleton.
StateSumResult closed_invariant(const Skeleton& s, const GLabeling& l, const GFusionData& cat,
                                const StateSumOptions& opt = {});

// Sum without the dim(C_1)^-|P| prefactor, on spines only.
StateSumResult unnormalized_invariant(const Skeleton& s, const GLabeling& l, const GFusionData& cat,
                                      const StateSumOptions& opt = {});

// Throws DomainError naming the broken spine condition.
void check_spine(const Skeleton& s);

struct ClassRow {
  GLabeling representative;
  std::size_t orbit_size = 0;
  FieldElement value;
};

struct PartitionTable {
  std::vector<ClassRow> rows;
  std::size_t labelings = 0;
  FieldElement aggregate;  // |G|^-|P| times the sum over all labelings
};

PartitionTable partition_all_classes(const Skeleton& s, const GFusionData& cat, const StateSumOptions& opt = {});

// One class g of G-labelings against the H-classes lying over it.
struct LiftRow {
  GLabeling representative;  // G-labeling
  FieldElement pushed;       // |M, g| for the push-forward of cat along phi
  FieldElement lifted;       // |Ker phi|^-1 times the sum of |M, h| over lifts h of g
  std::size_t lifts = 0;
};

// cat is graded by H; phi: H -> target given as an image table.
std::vector<LiftRow> lift_sums(const Skeleton& s, const GFusionData& cat, const FiniteGroup& target,
                               const std::vector<int>& phi, const StateSumOptions& opt = {});

}  // namespace tvsum
