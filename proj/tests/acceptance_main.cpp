// SPDX-License-Identifier: Apache-2.0
// Acceptance suite: one PASS/FAIL line per criterion; exits with the number
// of failed criteria.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "crisper/complexity.hpp"
#include "crisper/example.hpp"
#include "crisper/verify.hpp"
#include "generators.hpp"

using namespace crisper;
using namespace crisper::testgen;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << index << ": " << name;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Box box2(const Interval& x, const Interval& y) { return Box({x, y}); }

std::string subset_to_string(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += "r" + std::to_string(s[i] + 1);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// 1. Worked-example reproduction: exactly 4 compatible subsets with the
//    published regions and exactly 6 crisp rules.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const FuzzyRuleBase base = example_document().base;
  const auto subsets = mine_compatible_subsets(base);
  const CrispRuleBase crb = mine_sufficient(base);
  const double elapsed = seconds_since(t0);

  const std::vector<std::pair<std::vector<int>, Region>> expected = {
      {{0}, Region::from_box(box2(Interval::open(-kInf, 4.96),
                                  Interval::make(-kInf, false, 1.19, true)))},
      {{2}, Region::from_box(box2(Interval::open(4.96, kInf),
                                  Interval::make(-kInf, false, 1.19, true)))},
      {{0, 1}, Region::from_box(box2(Interval::open(-kInf, 4.96), Interval::open(1.19, kInf)))},
      {{1, 2}, Region::from_box(box2(Interval::open(4.96, kInf), Interval::open(1.19, kInf)))},
  };

  bool expected_found = true;
  for (const auto& [rules, region] : expected) {
    bool found = false;
    for (const auto& cs : subsets) {
      if (cs.rule_indices == rules && cs.compatible_region == region) {
        found = true;
        break;
      }
    }
    expected_found = expected_found && found;
  }

  const bool ok =
      subsets.size() == 4 && expected_found && crb.rules.size() == 6 && elapsed < 1.0;
  report(1, "worked-example reproduction (4 subsets, 6 crisp rules)", ok,
         std::to_string(subsets.size()) + " subsets, " + std::to_string(crb.rules.size()) +
             " rules, " + std::to_string(elapsed) + "s");

  if (!ok) {
    std::cout << "      analysis: the exact region algebra finds "
              << subsets.size() << " non-empty compatible subsets, not 4.\n"
              << "      all 4 published subsets and regions are reproduced exactly ("
              << (expected_found ? "verified" : "NOT FOUND") << "), but the set\n"
              << "      difference S_r2 \\ (S_r1 u S_r3) additionally leaves the degenerate\n"
              << "      slab {4.96} x (1.19, +inf), i.e. the extra subset ";
    for (const auto& cs : subsets) {
      if (cs.rule_indices == std::vector<int>{1}) {
        std::cout << subset_to_string(cs.rule_indices) << ".\n";
      }
    }
    std::cout << "      points on that slab activate only r2 and classify as class 1, so\n"
              << "      dropping the subset would break pointwise equivalence (criteria 4/5\n"
              << "      and the coverage semantics both force its inclusion). The published\n"
              << "      4-subset/6-rule tally omits this measure-zero region; this suite\n"
              << "      reports the discrepancy honestly instead of matching the tally.\n";
  }
}

// ---------------------------------------------------------------------------
// 2. Upper-bound table for n = 2..10.
void criterion_2() {
  const std::int64_t expected[] = {4, 12, 32, 80, 192, 448, 1024, 2304, 5120};
  bool ok = true;
  for (int n = 2; n <= 10; ++n) {
    ok = ok && upper_bound_sufficient(n) == expected[n - 2];
  }
  report(2, "upper-bound table n=2..10", ok);
}

// ---------------------------------------------------------------------------
// 3. Complexity-formula cross-check on published cells.
void criterion_3() {
  const struct {
    std::int64_t crisp;
    int fuzzy;
    double expected;
  } cells[] = {
      {69, 6, 0.36}, {16, 5, 0.20}, {143, 6, 0.74}, {63, 5, 0.79}, {4, 3, 0.33},
  };
  bool ok = true;
  for (const auto& cell : cells) {
    ok = ok && round_half_up_2(degree_of_complexity(cell.crisp, cell.fuzzy)) == cell.expected;
  }
  const double vehicle = round_half_up_2(degree_of_complexity(686, 8));
  ok = ok && vehicle == 0.67;
  report(3, "complexity-formula cross-check", ok,
         "cell (686,8) computes to 0.67; the published 0.7 is a documented discrepancy");
}

// ---------------------------------------------------------------------------
// 4 & 5 & 7 share the same random bases.
std::vector<FuzzyRuleBase> random_bases(int count) {
  Rng rng(0xC0FFEE);
  std::vector<FuzzyRuleBase> bases;
  bases.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) bases.push_back(random_base(rng));
  return bases;
}

void criterion_4(const std::vector<FuzzyRuleBase>& bases) {
  const auto t0 = std::chrono::steady_clock::now();
  long long configs_checked = 0;
  bool ok = true;
  std::string first_failure;
  for (const FuzzyRuleBase& base : bases) {
    const CrispRuleBase mined[] = {
        mine_sufficient(base),
        mine_hyperrectangles(base, InferenceMode::kSufficient),
        mine_additive(base),
        mine_hyperrectangles(base, InferenceMode::kAdditive),
    };
    for (const CrispRuleBase& crb : mined) {
      const VerificationReport rep = verify_grid(base, crb, 4);
      ++configs_checked;
      if (rep.agreement_rate() != 1.0 && first_failure.empty()) {
        ok = false;
        std::ostringstream ss;
        ss << "first mismatch in config " << configs_checked << " ("
           << (crb.mode == InferenceMode::kSufficient ? "sufficient" : "additive") << "/"
           << (crb.geometry == Geometry::kCompatibleRegions ? "regions" : "boxes") << ") at (";
        for (size_t i = 0; i < rep.mismatches[0].point.size(); ++i) {
          if (i) ss << ", ";
          ss << rep.mismatches[0].point[i];
        }
        ss << "): fuzzy=" << rep.mismatches[0].fuzzy << " crisp=" << rep.mismatches[0].crisp;
        first_failure = ss.str();
      }
    }
  }
  const double elapsed = seconds_since(t0);
  ok = ok && elapsed < 60.0;
  report(4, "equivalence suite on random bases (4 configs each)", ok,
         std::to_string(bases.size()) + " bases, " + std::to_string(configs_checked) +
             " configs, " + std::to_string(elapsed) + "s" +
             (first_failure.empty() ? "" : "; " + first_failure));
}

void criterion_5(const std::vector<FuzzyRuleBase>& bases) {
  bool ok = true;
  std::string detail;
  for (const FuzzyRuleBase& base : bases) {
    const auto mined = mine_compatible_subsets(base);
    const auto oracle = brute_force_compatible_subsets(base);
    if (mined.size() != oracle.size()) {
      ok = false;
      detail = "subset count mismatch";
      break;
    }
    for (size_t i = 0; i < mined.size(); ++i) {
      if (mined[i].rule_indices != oracle[i].rule_indices ||
          !(mined[i].compatible_region == oracle[i].compatible_region)) {
        ok = false;
        detail = "subset/region mismatch at entry " + std::to_string(i);
        break;
      }
    }
    if (!ok) break;

    // anti-monotonicity: a non-empty joint activation implies non-empty
    // joint activations for all subsets
    const int n = base.rule_count();
    std::vector<Box> supports;
    for (int r = 0; r < n; ++r) supports.push_back(base.rule_support(r));
    std::vector<bool> nonempty(1u << n, false);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Box jact = Box::all(base.dim());
      for (int r = 0; r < n; ++r) {
        if (mask & (1u << r)) jact = intersect(jact, supports[static_cast<size_t>(r)]);
      }
      nonempty[mask] = !jact.is_empty();
    }
    for (std::uint32_t mask = 1; mask < (1u << n) && ok; ++mask) {
      if (!nonempty[mask]) continue;
      for (int r = 0; r < n; ++r) {
        const std::uint32_t sub = mask & ~(1u << r);
        if (sub != 0 && !nonempty[sub]) {
          ok = false;
          detail = "anti-monotonicity violated";
          break;
        }
      }
    }
    if (!ok) break;
  }
  report(5, "miner equals brute-force oracle; anti-monotonicity holds", ok, detail);
}

// ---------------------------------------------------------------------------
// 6. Region-algebra laws, >= 10^4 random cases over 1-3 dimensions.
void criterion_6() {
  Rng rng(0xB0A7);
  const std::vector<Real> probes = probe_coordinates();
  const int cases = 10000;
  bool ok = true;
  std::string detail;

  const auto any_contains = [](const std::vector<Box>& boxes, std::span<const Real> x) {
    for (const Box& b : boxes) {
      if (b.contains(x)) return true;
    }
    return false;
  };

  for (int iter = 0; iter < cases && ok; ++iter) {
    const int dim = 1 + iter % 3;
    std::vector<Box> as, bs;
    for (int i = 0, n = uniform_int(rng, 1, 2); i < n; ++i) as.push_back(random_box(rng, dim));
    for (int i = 0, n = uniform_int(rng, 1, 2); i < n; ++i) bs.push_back(random_box(rng, dim));
    const Region ra = disjoint_decomposition(dim, as);
    const Region rb = disjoint_decomposition(dim, bs);
    const Region u = region_union(ra, rb);
    const Region x = region_intersect(ra, rb);
    const Region d = region_difference(ra, rb);

    // decomposition outputs pairwise-disjoint boxes
    for (size_t i = 0; i < ra.boxes().size() && ok; ++i) {
      for (size_t j = i + 1; j < ra.boxes().size(); ++j) {
        if (!intersect(ra.boxes()[i], ra.boxes()[j]).is_empty()) {
          ok = false;
          detail = "decomposition produced overlapping boxes";
        }
      }
    }

    // pointwise semantics at endpoints, midpoints and far tails
    std::vector<Real> point(static_cast<size_t>(dim));
    const int samples = dim == 1 ? static_cast<int>(probes.size()) : (dim == 2 ? 120 : 160);
    for (int s = 0; s < samples && ok; ++s) {
      if (dim == 1) {
        point[0] = probes[static_cast<size_t>(s)];
      } else {
        for (int k = 0; k < dim; ++k) {
          point[static_cast<size_t>(k)] =
              probes[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(probes.size()) - 1))];
        }
      }
      const bool in_a = any_contains(as, point);
      const bool in_b = any_contains(bs, point);
      if (ra.contains(point) != in_a || u.contains(point) != (in_a || in_b) ||
          x.contains(point) != (in_a && in_b) || d.contains(point) != (in_a && !in_b)) {
        ok = false;
        detail = "pointwise semantics violated at case " + std::to_string(iter);
      }
    }
  }
  report(6, "region-algebra laws (10^4 random cases, 1-3 dims)", ok, detail);
}

void criterion_7(const std::vector<FuzzyRuleBase>& bases) {
  bool ok = true;
  for (const FuzzyRuleBase& base : bases) {
    const std::int64_t suff = static_cast<std::int64_t>(mine_sufficient(base).rules.size());
    const std::int64_t add = static_cast<std::int64_t>(mine_additive(base).rules.size());
    ok = ok && suff <= upper_bound_sufficient(base.rule_count());
    ok = ok && add <= upper_bound_additive(base.rule_count(), base.class_count());
  }
  report(7, "mined rule counts respect the closed-form bounds", ok);
}

// ---------------------------------------------------------------------------
// 8. Boundary export: byte-identical CSVs and the published band layout.
void criterion_8() {
  const FuzzyRuleBase base = example_document().base;
  const CrispRuleBase crb = mine_sufficient(base);
  const Box bounds = sampling_box(base);
  const BoundaryGrid fuzzy_grid = export_decision_boundary(
      [&](std::span<const Real> x) { return classify_sufficient(base, x); }, bounds, 200);
  const BoundaryGrid crisp_grid = export_decision_boundary(
      [&](std::span<const Real> x) { return classify_crisp(crb, x); }, bounds, 200);
  bool ok = boundary_csv(fuzzy_grid) == boundary_csv(crisp_grid);

  const Real p0[2] = {1.0, 0.0};
  const Real p1[2] = {5.0, 5.0};
  const Real p2[2] = {9.0, 0.0};
  ok = ok && classify_sufficient(base, p0) == 0 && classify_crisp(crb, p0) == 0;
  ok = ok && classify_sufficient(base, p1) == 1 && classify_crisp(crb, p1) == 1;
  ok = ok && classify_sufficient(base, p2) == 2 && classify_crisp(crb, p2) == 2;
  report(8, "boundary export: identical CSVs at resolution 200, bands as published", ok);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  const std::vector<FuzzyRuleBase> bases = random_bases(200);
  criterion_4(bases);
  criterion_5(bases);
  criterion_6();
  criterion_7(bases);
  criterion_8();
  std::cout << (g_failures == 0 ? "all criteria passed"
                                : std::to_string(g_failures) + " criterion/criteria failed")
            << "\n";
  return g_failures;
}
