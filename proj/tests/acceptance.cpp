// One line per acceptance criterion: [PASS] or [FAIL], with instance counts
// and wall time against the criterion's limit. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "isoperimetric/verify.hpp"

using namespace isoperimetric;

namespace {

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;  // 0: no limit
  std::function<CheckReport()> run;
  std::function<std::string(const CheckReport&)> extra = nullptr;  // empty when satisfied
};

VerifyOptions with_order(int max_order) {
  VerifyOptions opt;
  opt.max_order = max_order;
  return opt;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "cauchy-davenport kappa_1 = |S|-1 in Z_p, p in {5,7,11,13}", 60,
       [] {
         auto opt = with_order(13);
         opt.manifest = {"cyclic:5", "cyclic:7", "cyclic:11", "cyclic:13"};
         return check_cauchy_davenport(opt);
       },
       [](const CheckReport& r) {
         // every S containing 0 generates Z_p: 2^(p-1) - 1 nonempty additions
         const std::int64_t expected = 15 + 63 + 1023 + 4095;
         return r.instances_tested == expected ? std::string()
                                               : "expected " + std::to_string(expected) + " instances";
       }},
      {2, "duality kappa_k = kappa_-k (catalog <= 12, k = 1,2; 1000 random digraphs <= 7)", 300,
       [] { return check_duality_sweep(with_order(12)); }},
      {3, "olson bound with equality structure (catalog <= 12)", 300,
       [] { return check_olson(with_order(12)); }},
      {4, "distinct k-atoms meet in <= k-1 points when alpha_k <= alpha_-k (catalog <= 12)", 600,
       [] { return check_atom_intersection_sweep(with_order(12)); }},
      {5, "1-atom through 1 is the subgroup <S n H> (catalog <= 12)", 0,
       [] { return check_one_atom_structure(with_order(12)); }},
      {6, "abelian 2-atoms are subgroups or of size 2 (abelian catalog <= 16)", 900,
       [] { return check_abelian_two_atoms(with_order(16)); }},
      {7, "menger: flow connectivity = enumerated cut, verified paths (500 digraphs <= 8)", 300,
       [] { return check_menger(with_order(12), 500); }},
      {8, "flow kappa_1 = exhaustive kappa_1 (catalog <= 12, 500 digraphs)", 0,
       [] { return check_flow_oracle(with_order(12), 500); }},
      {9, "S^(floor(2n/k)-1) = G (catalog <= 16)", 600, [] { return check_orderbase(with_order(16)); }},
      {10, "strong isoperimetric matchings (catalog <= 12, every X)", 0,
       [] { return check_strong_iso_sweep(with_order(12)); }},
      {11, "order-21 Frobenius group: negative 1-atom of H u Hu is not a subgroup", 120,
       [] { return check_frobenius_witness(with_order(12)); }},
  };

  int passed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const CheckReport r = c.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string why;
    if (r.counterexamples_found > 0) {
      why = std::to_string(r.counterexamples_found) + " counterexamples, first: " +
            r.counterexamples.front().group + " " + r.counterexamples.front().sets.dump() + " " +
            r.counterexamples.front().observed.dump();
    } else if (r.instances_tested == 0) {
      why = "no instances tested";
    } else if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      why = "over the time limit";
    } else if (c.extra) {
      why = c.extra(r);
    }
    const bool ok = why.empty();
    passed += ok ? 1 : 0;
    char timing[64];
    if (c.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.1f s (limit %.0f s)", seconds, c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.1f s", seconds);
    std::printf("[%s] %2d %s: tested %lld, skipped %lld, %s%s%s\n", ok ? "PASS" : "FAIL", c.number,
                c.name.c_str(), static_cast<long long>(r.instances_tested),
                static_cast<long long>(r.instances_skipped), timing, ok ? "" : "; ", why.c_str());
    for (const auto& n : r.notes) std::printf("       note: %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
