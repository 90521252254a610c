// Copyright 2026 The RASM Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rasm/verify.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <random>

#include "rasm/cuts.h"
#include "rasm/distribution.h"
#include "rasm/instance.h"
#include "rasm/risk.h"
#include "rasm/solver.h"

namespace rasm {

std::optional<Fault> ParseFault(std::string_view name) {
  if (name == "none") return Fault::kNone;
  if (name == "shrink-new-cut") return Fault::kShrinkNewCut;
  if (name == "skew-cvar") return Fault::kSkewCvar;
  return std::nullopt;
}

bool VerifyReport::ok() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyReport& p) { return p.failed == 0; });
}

std::vector<std::string> VerifyReport::Violated() const {
  std::vector<std::string> out;
  for (const PropertyReport& p : properties) {
    if (p.failed > 0) out.push_back(p.name);
  }
  return out;
}

void PrintReport(const VerifyReport& report, std::ostream& out) {
  for (const PropertyReport& p : report.properties) {
    out << (p.failed == 0 ? "PASS " : "FAIL ") << p.name
        << " checked=" << p.checked;
    if (p.failed > 0) {
      out << " failed=" << p.failed << " first: " << p.first_failure;
    }
    out << '\n';
  }
  out << (report.ok() ? "all properties hold" : "property violations found")
      << '\n';
}

namespace {

class Recorder {
 public:
  void Check(const std::string& name, bool ok, const std::string& detail) {
    auto [it, inserted] = index_.try_emplace(name, properties_.size());
    if (inserted) properties_.push_back({name, 0, 0, {}});
    PropertyReport& p = properties_[it->second];
    ++p.checked;
    if (!ok) {
      if (p.failed == 0) p.first_failure = detail;
      ++p.failed;
    }
  }

  VerifyReport Finish() { return {std::move(properties_)}; }

 private:
  std::vector<PropertyReport> properties_;
  std::map<std::string, std::size_t> index_;
};

std::vector<Selection> SupportsUpTo(int n, int k) {
  std::vector<Selection> out;
  Selection x(n);
  auto rec = [&](auto&& self, int start, int size) -> void {
    out.push_back(x);
    if (size == k) return;
    for (int j = start; j < n; ++j) {
      x.Set(j);
      self(self, j + 1, size + 1);
      x.Reset(j);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::string Describe(int instance, const Selection& xbar,
                     const Selection& x, double lhs, double rhs) {
  return "instance " + std::to_string(instance) + " xbar=" + xbar.ToString() +
         " x=" + x.ToString() + " cvar=" + std::to_string(lhs) +
         " rhs=" + std::to_string(rhs);
}

}  // namespace

VerifyReport RunVerification(const VerifyOptions& options) {
  Recorder rec;
  std::mt19937_64 rng(options.seed);
  constexpr double kAlphas[] = {0.01, 0.025, 0.05, 0.1, 0.5, 1.0};

  for (int inst = 0; inst < options.instances; ++inst) {
    std::uniform_int_distribution<int> pick_n(2, std::max(2, options.max_n));
    std::uniform_int_distribution<int> pick_m(1, std::max(1, options.max_m));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    GeneratorParams gen;
    gen.n = pick_n(rng);
    gen.m = pick_m(rng);
    gen.prob_low = 0.3 * unit(rng);
    gen.prob_high = gen.prob_low + (1.0 - gen.prob_low) * unit(rng);
    gen.seed = rng();
    const RascOracle oracle(GenerateInstance(gen));
    const int n = gen.n;
    const int k = std::uniform_int_distribution<int>(1, std::min(3, n))(rng);
    const double alpha = unit(rng) < 0.5 ? 0.1 : 0.3;
    const std::vector<Selection> feasible = SupportsUpTo(n, k);

    // Oracle chain: DP pmf vs enumeration, closed-form CVaR vs eta scan,
    // scenario CVaR vs closed form.
    for (const Selection& x : feasible) {
      const Eigen::VectorXd q = ItemCoverageProbs(oracle.instance(), x);
      const Pmf dp = CoveragePmf(q);
      const Pmf brute = PmfBruteforce(q);
      const double diff = (dp.mass - brute.mass).cwiseAbs().maxCoeff();
      rec.Check("pmf-dp-matches-enumeration", diff <= 1e-12,
                "instance " + std::to_string(inst) + " x=" + x.ToString() +
                    " max diff " + std::to_string(diff));
      Eigen::VectorXd support(dp.mass.size());
      for (Eigen::Index j = 0; j < support.size(); ++j) {
        support(j) = static_cast<double>(j);
      }
      for (double a : kAlphas) {
        double closed = CvarAlpha(dp, a);
        if (options.fault == Fault::kSkewCvar) closed += 1e-6;
        const double scan = CvarBruteforce(dp, a);
        rec.Check("cvar-closed-form-matches-eta-scan",
                  std::abs(closed - scan) <= 1e-9,
                  "instance " + std::to_string(inst) + " x=" + x.ToString() +
                      " alpha=" + std::to_string(a));
        const double scen = CvarFromScenarios(support, dp.mass, a);
        rec.Check("cvar-scenarios-match-closed-form",
                  std::abs(scen - CvarAlpha(dp, a)) <= 1e-9,
                  "instance " + std::to_string(inst) + " x=" + x.ToString());
      }
    }

    // Cut families at every incumbent with |X| <= k.
    for (const Selection& xbar : feasible) {
      const double base = oracle.Evaluate(xbar, alpha);
      Cut lshaped = LShapedCut(oracle, xbar, alpha);
      Cut fresh = NewCut(oracle, xbar, alpha);
      if (options.fault == Fault::kShrinkNewCut) fresh.coeffs *= 0.1;
      const LiftingResult lifted = GreedyLift(oracle, xbar, alpha);

      const std::pair<const char*, const Cut*> families[] = {
          {"lshaped", &lshaped}, {"new", &fresh}, {"lifted", &lifted.cut}};
      for (const auto& [name, cut] : families) {
        rec.Check(std::string("cut-tightness-") + name,
                  std::abs(Rhs(*cut, xbar) - base) <= 1e-12,
                  Describe(inst, xbar, xbar, base, Rhs(*cut, xbar)));
        for (const Selection& x : feasible) {
          const double lhs = oracle.Evaluate(x, alpha);
          const double rhs = Rhs(*cut, x);
          rec.Check(std::string("cut-validity-") + name,
                    lhs <= rhs + kValueTolerance,
                    Describe(inst, xbar, x, lhs, rhs));
        }
      }
      rec.Check("new-cut-dominates-lshaped",
                ((fresh.coeffs - lshaped.coeffs).array() <= 1e-12).all(),
                "instance " + std::to_string(inst) + " xbar=" +
                    xbar.ToString());

      const double cap =
          oracle.Evaluate(Selection::Full(n), alpha) - base + 1e-12;
      bool monotone = true;
      for (std::size_t t = 0; t < lifted.order.size(); ++t) {
        const double d = lifted.cut.coeffs(lifted.order[t]);
        if (d > cap) monotone = false;
        if (t > 0 && d + 1e-12 < lifted.cut.coeffs(lifted.order[t - 1])) {
          monotone = false;
        }
      }
      rec.Check("lifted-coefficients-monotone-and-capped", monotone,
                "instance " + std::to_string(inst) + " xbar=" +
                    xbar.ToString());

      const ExactLifting exact = ExactLiftingCoefficients(
          oracle, xbar, alpha, lifted.order, FeasibleRegion{k});
      for (std::size_t t = 0; t < lifted.order.size(); ++t) {
        if (exact.infeasible[t]) continue;
        const double relaxed = lifted.cut.coeffs(lifted.order[t]);
        rec.Check("relaxed-lifting-dominates-exact",
                  relaxed >= exact.delta(static_cast<Eigen::Index>(t)) - 1e-9,
                  "instance " + std::to_string(inst) + " xbar=" +
                      xbar.ToString() + " t=" + std::to_string(t));
      }
    }

    // Solver against exhaustive search, every family set in both modes.
    const SolveResult truth = SolveExhaustive(oracle, FeasibleRegion{k}, alpha);
    const std::vector<std::vector<CutFamily>> configs = {
        {CutFamily::kLShaped},
        {CutFamily::kNewCut},
        {CutFamily::kLifted},
        {CutFamily::kNewCut, CutFamily::kLifted}};
    for (const auto& families : configs) {
      for (SolveMode mode : {SolveMode::kLoop, SolveMode::kLazy}) {
        SolveConfig config;
        config.risk = {alpha, 1e-6};
        config.region = {k};
        config.cut_families = families;
        config.mode = mode;
        const SolveResult got = SolveRasm(oracle, config);
        rec.Check("solver-matches-exhaustive",
                  got.status == SolveStatus::kOptimal &&
                      std::abs(got.cvar_best - truth.cvar_best) <= 1e-6 &&
                      got.iterations <= truth.iterations,
                  "instance " + std::to_string(inst) + " " +
                      CutFamiliesName(families) + "/" +
                      std::string(SolveModeName(mode)) + " got " +
                      std::to_string(got.cvar_best) + " want " +
                      std::to_string(truth.cvar_best));
      }
    }
  }
  return rec.Finish();
}

}  // namespace rasm
