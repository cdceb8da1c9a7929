// Acceptance run: one PASS/FAIL line per criterion. A criterion passes only
// if every check holds exactly and it finishes inside its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "eopkit/appendix_a.hpp"
#include "eopkit/cli.hpp"
#include "eopkit/reference.hpp"
#include "eopkit/relations.hpp"
#include "eopkit/sampling.hpp"
#include "eopkit/suite.hpp"

using namespace eop;

namespace {

constexpr std::uint64_t kSeed = 20240611;

/// Counts checks and remembers the first one that failed.
struct Tally {
  int total = 0;
  int failed = 0;
  int divergent = 0;
  std::string first_failure;

  void add(const VerdictReport& r) {
    ++total;
    bool ok = r.passed();
    for (const auto& s : r.sub_claims) ok = ok && s.passed();
    if (r.status == VerdictStatus::Divergent) ++divergent;
    if (!ok) fail(r.claim_id + describe(r.context));
  }

  void add(bool ok, const std::string& what) {
    ++total;
    if (!ok) fail(what);
  }

  void fail(const std::string& what) {
    if (failed++ == 0) first_failure = what;
  }

  static std::string describe(const std::vector<std::pair<std::string, std::string>>& ctx) {
    std::string s;
    for (const auto& [k, v] : ctx) s += " " + k + "=" + v;
    return s;
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<void(Tally&)> body;
};

std::vector<int> type3_degrees(int m, int extra) {
  std::vector<int> out{0};
  for (int n = m + 1; n <= m + extra; ++n) out.push_back(n);
  return out;
}

void reference_rows(Tally& t, ReferenceRow::Kind kind) {
  for (const auto& row : reference_table(kSeed, 5)) {
    if (row.kind != kind) continue;
    for (const auto& c : row.checks) t.add(c);
  }
}

void limit_sweep(Tally& t) {
  RationalSampler s(kSeed + 3);
  for (EopType type : {EopType::I, EopType::II})
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 4; ++n)
        for (int i = 0; i < 3; ++i) t.add(verify_limit_jacobi_to_laguerre(type, m, n, s.next_non_integer()));
  for (int m = 0; m <= 3; ++m)
    for (int n : type3_degrees(m, 4))
      for (int i = 0; i < 3; ++i) t.add(verify_limit_jacobi_to_laguerre(EopType::III, m, n, s.next_non_integer()));
  // Hermite targets have no free parameter; each case is one exact check.
  for (int m : {0, 2, 4})
    for (int n : type3_degrees(m, 4)) {
      t.add(verify_limit_jacobi_to_hermite(m, n));
      t.add(verify_limit_laguerre_to_hermite(m, n));
    }
}

void quadratic(Tally& t) {
  for (int m = 0; m <= 3; ++m)
    for (int n : type3_degrees(m, 3)) t.add(verify_quadratic_even(m, n));
  for (int m = 1; m <= 3; ++m) t.add(verify_quadratic_odd_special(m));
  for (int n = 0; n <= 8; ++n) {
    t.add(verify_classical_quadratic(Parity::Even, n));
    t.add(verify_classical_quadratic(Parity::Odd, n));
  }
}

void identities(Tally& t) {
  RationalSampler s(kSeed + 5);
  for (AppendixA id : kAllAppendixA) {
    const Family fam = appendix_a_family(id);
    for (int n = 0; n <= 10; ++n) {
      if (fam == Family::Hermite) {
        t.add(verify_appendix_a<Rat>(id, n));
      } else if (fam == Family::Laguerre) {
        t.add(verify_appendix_a(id, n, RatFunc::t()));
      } else {
        for (int i = 0; i < 5; ++i) {
          auto [a, b] = s.next_generic_pair();
          t.add(verify_appendix_a(id, n, a, b));
        }
      }
    }
  }
  for (int m = 1; m <= 6; ++m)
    for (int i = 0; i < 5; ++i) {
      auto [a, b] = s.next_generic_pair();
      VerdictReport r = verify_appendix_b_identity(m, a, b);
      t.add(r.sub_claims.size() >= 3, "appendix-b sub-steps present");
      t.add(r);
    }
  for (int m = 0; m <= 3; ++m)
    for (int n = m; n <= m + 4; ++n) {
      auto [a, b] = s.next_generic_pair();
      t.add(verify_link_formula(m, n, a, b));
    }
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 5; ++n)
      for (int i = 0; i < 5; ++i) {
        auto [a, b] = s.next_generic_pair();
        t.add(verify_jacobi_symmetry(m, n, a, b));
      }
  for (int n = 0; n <= 8; ++n) {
    auto [a, b] = s.next_generic_pair();
    t.add(verify_m0_degeneration(Family::Hermite, EopType::III, n));
    for (EopType type : {EopType::I, EopType::II, EopType::III}) {
      t.add(verify_m0_degeneration(Family::Laguerre, type, n, a));
      t.add(verify_m0_degeneration(Family::Jacobi, type, n, a, b));
    }
    t.add(verify_monic_conversion(Family::Hermite, n));
    t.add(verify_monic_conversion(Family::Laguerre, n, a));
    t.add(verify_monic_conversion(Family::Jacobi, n, a, b));
  }
}

void guards(Tally& t) {
  for (const auto& k : random_invalid_specs(kSeed + 7, 200)) {
    std::ostringstream out, err;
    int code = -1;
    try {
      code = run_cli(k.cli_args(), out, err);
    } catch (...) {
      t.add(false, "run_cli threw");
      continue;
    }
    const bool named = err.str().find(std::string(rule_name(k.expected))) != std::string::npos;
    std::string what;
    for (const auto& a : k.cli_args()) what += " " + a;
    t.add(code == 2 && named, "not rejected with '" + std::string(rule_name(k.expected)) + "':" + what);
  }
}

void obstruction(Tally& t) { t.add(verify_odd_quadratic_obstruction(1, 2)); }

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "reference polynomials regenerate exactly", 1.0,
       [](Tally& t) { reference_rows(t, ReferenceRow::Kind::Polynomial); }},
      {2, "reference limits verify exactly", 2.0, [](Tally& t) { reference_rows(t, ReferenceRow::Kind::Limit); }},
      {3, "limit theorem sweep", 60.0, limit_sweep},
      {4, "quadratic transformations", 10.0, quadratic},
      {5, "identity suites", 60.0, identities},
      {6, "guards reject 200 random invalid specs with exit 2", 60.0, guards},
      {7, "general odd quadratic system is inconsistent at m=1, n=2", 1.0, obstruction},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Tally t;
    std::string crash;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(t);
    } catch (const std::exception& e) {
      crash = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool ok = crash.empty() && t.failed == 0 && t.divergent == 0 && t.total > 0 && in_time;
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s (%d checks, %d failed, %d divergent, %.3f s, limit %.0f s)\n",
                ok ? "PASS" : "FAIL", c.number, c.title.c_str(), t.total, t.failed, t.divergent, seconds,
                c.limit_seconds);
    if (!crash.empty()) std::printf("    exception: %s\n", crash.c_str());
    if (!t.first_failure.empty()) std::printf("    first failure: %s\n", t.first_failure.c_str());
    if (!in_time) std::printf("    over the time limit\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
