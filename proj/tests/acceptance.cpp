// Acceptance suite: every check is an exact identity at desk scale. One line
// per criterion; exit status reflects the overall outcome.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hlwhit/verify.hpp"

using namespace hlwhit;
using verify::SuiteResult;

namespace {

struct Criterion {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string detail;
  double ms = 0;
};

Criterion fold(const std::string& name, const std::vector<SuiteResult>& results) {
  Criterion c;
  c.name = name;
  for (const auto& r : results) {
    c.cases += r.cases;
    c.failures += r.failures;
    c.ms += r.elapsed_ms;
    if (c.detail.empty() && !r.first_violation.empty())
      c.detail = r.suite + ": " + r.first_violation;
  }
  return c;
}

}  // namespace

int main() {
  constexpr unsigned kSeed = 20240811;
  std::vector<Criterion> criteria;

  // 1. zeta/L-factor identity, (k,c) in {(2,2),(2,3),(3,2),(3,3)}, M = 6,
  //    symbolically in (x, y, q) plus seeded numeric spot checks.
  {
    std::vector<SuiteResult> rs;
    for (auto [k, c] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}})
      rs.push_back(verify::zeta(k, c, 6, kSeed));
    criteria.push_back(fold("zeta series lhs == rhs, (k,c) in {2,3}^2, M=6", rs));
  }

  // 2. flag-count formula, mu |- m <= 4, q in {2,3}
  criteria.push_back(fold("modified H at t=q == flag counts, m <= 4, q in {2,3}",
                          {verify::flag(4)}));

  // 3. duality <P_lambda, H_mu> = delta, all lambda, mu |- m <= 5
  criteria.push_back(fold("duality <P,H> = delta, m <= 5", {verify::duality(5)}));

  // 4. Kostka-Foulkes: pipeline == charge oracle (m <= 5), positivity and
  //    dominance triangularity (m <= 6)
  criteria.push_back(fold("Kostka-Foulkes pipeline == charge oracle (m<=5), structure (m<=6)",
                          {verify::charge(5, 6)}));

  // 5. Shintani degeneration at c = 1, m <= 8, k <= 4
  criteria.push_back(fold("c=1 degeneration speh == shintani, m <= 8, k <= 4",
                          {verify::shintani(8, 4, kSeed)}));

  // 6. corollary expansion == speh value, mu |- m <= 4, k, c <= 3
  criteria.push_back(fold("corollary expansion == speh value, m <= 4, k,c <= 3",
                          {verify::corollary(4, 3, 3, kSeed)}));

  // 7. specializations: P(x;0) = s (m<=6); modified H single row = h_m (m<=8);
  //    one variable = x^|mu| (m<=6)
  criteria.push_back(fold("specializations P(x;0)=s, H~_(m)=h_m, one-variable power",
                          {verify::specialization(6, 8, 6)}));

  // 8. vanishing iff negative last entry (entries in [-2,2], length <= 3) and
  //    normalization speh(empty) = (0,1)
  criteria.push_back(fold("vanishing iff last entry < 0; speh(empty) = (0,1)",
                          {verify::vanishing(2, 3)}));

  long failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    bool ok = c.failures == 0;
    if (!ok) ++failed;
    std::printf("[%s] %zu. %s  (%ld checks, %.0f ms)\n", ok ? "PASS" : "FAIL", i + 1,
                c.name.c_str(), c.cases, c.ms);
    if (!ok) std::printf("       first violation: %s\n", c.detail.c_str());
  }
  std::printf("%ld/%zu criteria passed\n", static_cast<long>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
