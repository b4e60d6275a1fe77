#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <string>

#include "acceptance.hpp"
#include "tvsum/error.hpp"

namespace acceptance {

const std::vector<std::string> kManifolds = {"s3_2tet", "s3_5tet", "s3_1vertex", "rp3", "l31", "l41", "t3_6tet", "s1xs2"};
const std::vector<std::string> kPointed = {"vect_Z2_theta0", "vect_Z2_theta1", "vect_Z3_theta0",
                                           "vect_Z3_theta1", "vect_Z3_theta2", "vect_Z4_theta0",
                                           "vect_Z4_theta1", "vect_Z4_theta2", "vect_Z4_theta3"};

std::string Tally::detail() const {
  std::string s = std::to_string(checks_ - failed_) + "/" + std::to_string(checks_) + " checks";
  for (const auto& f : failures_) s += "; failed: " + f;
  return s;
}

std::string data(const std::string& rel) { return std::string(TVSUM_DATA_DIR) + "/" + rel; }
tvsum::GFusionData category(const std::string& name) { return tvsum::load_category(data("categories/" + name + ".json")); }
tvsum::Triangulation triangulation(const std::string& name) {
  return tvsum::load_triangulation(data("triangulations/" + name + ".tri"));
}
tvsum::Skeleton skeleton(const std::string& name) { return tvsum::load_skeleton(data("skeletons/" + name + ".json")); }

}  // namespace acceptance

int main(int argc, char** argv) {
  using namespace acceptance;
  struct Criterion {
    int id;
    const char* name;
    std::function<Tally()> run;
  };
  const Criterion all[] = {
      {1, "S^3 normalization", s3_normalization},
      {2, "S^1 x S^2 equals 1", s1xs2_value},
      {3, "Pachner and skeleton move invariance", move_invariance},
      {4, "gauge invariance", gauge_invariance},
      {5, "oracle equivalence", oracle_equivalence},
      {6, "sector dimensions", sector_dimensions},
      {7, "category validation and corruption detection", category_validation},
      {8, "push-forward lift sums", push_forward_sums},
      {9, "spine relation", spine_relation},
      {10, "HQFT structural suite", hqft_suite},
      {11, "graph property suite", graph_properties},
  };
  // optional argument: run a single criterion
  const int only = argc > 1 ? std::stoi(argv[1]) : 0;
  int failed = 0;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      auto t = c.run();
      ok = t.passed();
      detail = t.detail();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.1fs", s);
    std::cout << "criterion " << c.id << " [" << (ok ? "PASS" : "FAIL") << "] " << c.name << " (tolerance: " << kTolerance
              << ", " << secs << ") " << detail << std::endl;
    if (!ok) ++failed;
  }
  return failed ? 1 : 0;
}
