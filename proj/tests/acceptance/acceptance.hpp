#pragma once

#include <string>
#include <vector>

#include "tvsum/catdata.hpp"
#include "tvsum/complexes.hpp"

namespace acceptance {

// Every comparison in the suite is exact equality in the number field; there is
// no numeric tolerance to tune.
inline constexpr const char* kTolerance = "exact";

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool passed() const { return failed_ == 0 && checks_ > 0; }
  std::string detail() const;

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

std::string data(const std::string& rel);
tvsum::GFusionData category(const std::string& name);
tvsum::Triangulation triangulation(const std::string& name);
tvsum::Skeleton skeleton(const std::string& name);

extern const std::vector<std::string> kManifolds;  // every shipped triangulation
extern const std::vector<std::string> kPointed;    // every shipped vect_G^theta

Tally s3_normalization();
Tally s1xs2_value();
Tally move_invariance();
Tally gauge_invariance();
Tally oracle_equivalence();
Tally sector_dimensions();
Tally category_validation();
Tally push_forward_sums();
Tally spine_relation();
Tally hqft_suite();
Tally graph_properties();

}  // namespace acceptance
