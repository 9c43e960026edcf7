// SPDX-License-Identifier: Apache-2.0
#include "crisper/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <stdexcept>

namespace crisper {

namespace {

std::vector<Real> finite_abscissae(const LinguisticVariable& var) {
  std::vector<Real> vals;
  for (const TrapezoidalFuzzySet& fs : var.labels) {
    for (Real v : {fs.a, fs.b, fs.c, fs.d}) {
      if (std::isfinite(v)) vals.push_back(v);
    }
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

struct Hull {
  Real lo, hi, step;
};

Hull padded_hull(const std::vector<Real>& vals) {
  if (vals.empty()) return {-1.0, 1.0, 1.0};
  Real lo = vals.front();
  Real hi = vals.back();
  Real step = vals.size() > 1 ? (hi - lo) / static_cast<Real>(vals.size() - 1) : 1.0;
  if (step <= 0.0) step = 1.0;
  return {lo - step, hi + step, step};
}

int classify_fuzzy(const FuzzyRuleBase& base, InferenceMode mode, std::span<const Real> x) {
  return mode == InferenceMode::kSufficient ? classify_sufficient(base, x)
                                            : classify_additive(base, x);
}

VerificationReport compare_on(const FuzzyRuleBase& base, const CrispRuleBase& crb,
                              const std::vector<std::vector<Real>>& axis_values,
                              std::string sampling) {
  VerificationReport rep;
  rep.sampling = std::move(sampling);
  const int dim = base.dim();
  std::vector<Real> point(static_cast<size_t>(dim));
  std::vector<size_t> idx(static_cast<size_t>(dim), 0);
  for (;;) {
    for (int d = 0; d < dim; ++d) {
      point[static_cast<size_t>(d)] = axis_values[static_cast<size_t>(d)][idx[static_cast<size_t>(d)]];
    }
    const int f = classify_fuzzy(base, crb.mode, point);
    const int c = classify_crisp(crb, point);
    ++rep.samples_tested;
    if (f != c) rep.mismatches.push_back({point, f, c});
    int d = dim - 1;
    while (d >= 0 && ++idx[static_cast<size_t>(d)] == axis_values[static_cast<size_t>(d)].size()) {
      idx[static_cast<size_t>(d)] = 0;
      --d;
    }
    if (d < 0) break;
  }
  return rep;
}

std::string format_real(Real v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

}  // namespace

Box sampling_box(const FuzzyRuleBase& base) {
  std::vector<Interval> dims;
  dims.reserve(static_cast<size_t>(base.dim()));
  for (const LinguisticVariable& var : base.variables()) {
    const Hull h = padded_hull(finite_abscissae(var));
    dims.push_back(Interval::closed(h.lo, h.hi));
  }
  return Box(std::move(dims));
}

VerificationReport verify_grid(const FuzzyRuleBase& base, const CrispRuleBase& crb,
                               int resolution) {
  if (resolution < 2) throw std::invalid_argument("grid resolution must be at least 2");
  if (base.dim() != crb.source.dim() || base.class_count() != crb.source.class_count()) {
    throw std::invalid_argument("fuzzy and crisp bases are incompatible");
  }
  std::vector<std::vector<Real>> axes;
  for (const LinguisticVariable& var : base.variables()) {
    std::vector<Real> vals = finite_abscissae(var);
    const Hull h = padded_hull(vals);
    std::vector<Real> pts = vals;
    pts.push_back(h.lo);
    pts.push_back(h.hi);
    std::sort(pts.begin(), pts.end());
    std::vector<Real> samples = pts;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      samples.push_back((pts[i] + pts[i + 1]) / 2.0);  // interior of every elementary cell
    }
    for (int i = 0; i < resolution; ++i) {
      samples.push_back(h.lo + (h.hi - h.lo) * static_cast<Real>(i) /
                                   static_cast<Real>(resolution - 1));
    }
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
    axes.push_back(std::move(samples));
  }
  return compare_on(base, crb, axes, "grid resolution " + std::to_string(resolution));
}

VerificationReport verify_random(const FuzzyRuleBase& base, const CrispRuleBase& crb,
                                 long long n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample count must be positive");
  if (base.dim() != crb.source.dim() || base.class_count() != crb.source.class_count()) {
    throw std::invalid_argument("fuzzy and crisp bases are incompatible");
  }
  const Box box = sampling_box(base);
  std::mt19937_64 rng(seed);
  VerificationReport rep;
  rep.sampling = "random n=" + std::to_string(n) + " seed=" + std::to_string(seed);
  std::vector<Real> point(static_cast<size_t>(base.dim()));
  for (long long i = 0; i < n; ++i) {
    for (int d = 0; d < base.dim(); ++d) {
      const Real u = static_cast<Real>(rng() >> 11) * 0x1.0p-53;  // uniform in [0,1)
      point[static_cast<size_t>(d)] = box[d].lo() + (box[d].hi() - box[d].lo()) * u;
    }
    const int f = classify_fuzzy(base, crb.mode, point);
    const int c = classify_crisp(crb, point);
    ++rep.samples_tested;
    if (f != c) rep.mismatches.push_back({point, f, c});
  }
  return rep;
}

std::vector<CompatibleSubset> brute_force_compatible_subsets(const FuzzyRuleBase& base) {
  const int n = base.rule_count();
  if (n > 20) throw std::invalid_argument("brute-force enumeration refuses more than 20 rules");
  std::vector<Box> supports;
  for (int r = 0; r < n; ++r) supports.push_back(base.rule_support(r));

  std::vector<CompatibleSubset> result;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int r = 0; r < n; ++r) {
      if (mask & (1u << r)) subset.push_back(r);
    }
    Box jact = supports[static_cast<size_t>(subset[0])];
    for (size_t i = 1; i < subset.size(); ++i) {
      jact = intersect(jact, supports[static_cast<size_t>(subset[i])]);
    }
    if (jact.is_empty()) continue;
    std::vector<Box> others;
    for (int r = 0; r < n; ++r) {
      if (!(mask & (1u << r))) others.push_back(supports[static_cast<size_t>(r)]);
    }
    Region region = boxes_difference(base.dim(), {jact}, others);
    if (!region.is_empty()) {
      result.push_back({std::move(subset), std::move(jact), std::move(region)});
    }
  }
  std::sort(result.begin(), result.end(), [](const CompatibleSubset& a, const CompatibleSubset& b) {
    if (a.rule_indices.size() != b.rule_indices.size()) {
      return a.rule_indices.size() < b.rule_indices.size();
    }
    return a.rule_indices < b.rule_indices;
  });
  return result;
}

BoundaryGrid export_decision_boundary(const std::function<int(std::span<const Real>)>& classify,
                                      const Box& bounds, int resolution) {
  if (bounds.dim() != 2) {
    throw std::invalid_argument("decision boundary export requires exactly 2 features");
  }
  if (resolution < 2) throw std::invalid_argument("boundary resolution must be at least 2");
  BoundaryGrid grid;
  grid.x_min = bounds[0].lo();
  grid.x_max = bounds[0].hi();
  grid.y_min = bounds[1].lo();
  grid.y_max = bounds[1].hi();
  grid.resolution = resolution;
  grid.labels.reserve(static_cast<size_t>(resolution) * static_cast<size_t>(resolution));
  for (int iy = 0; iy < resolution; ++iy) {
    const Real y = grid.y_min + (grid.y_max - grid.y_min) * static_cast<Real>(iy) /
                                    static_cast<Real>(resolution - 1);
    for (int ix = 0; ix < resolution; ++ix) {
      const Real x = grid.x_min + (grid.x_max - grid.x_min) * static_cast<Real>(ix) /
                                      static_cast<Real>(resolution - 1);
      const Real point[2] = {x, y};
      grid.labels.push_back(classify(point));
    }
  }
  return grid;
}

std::string boundary_csv(const BoundaryGrid& grid) {
  std::string out = format_real(grid.x_min) + "," + format_real(grid.x_max) + "," +
                    format_real(grid.y_min) + "," + format_real(grid.y_max) + "," +
                    std::to_string(grid.resolution) + "\n";
  for (int iy = 0; iy < grid.resolution; ++iy) {
    for (int ix = 0; ix < grid.resolution; ++ix) {
      if (ix > 0) out += ',';
      out += std::to_string(grid.labels[static_cast<size_t>(iy) * static_cast<size_t>(grid.resolution) +
                                        static_cast<size_t>(ix)]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace crisper
