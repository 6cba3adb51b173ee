// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "corpus.hpp"
#include "hrl/criterion.hpp"
#include "hrl/curve_tracer.hpp"
#include "hrl/real_roots.hpp"
#include "hrl/recurrence.hpp"
#include "hrl/spectral_zeros.hpp"
#include "matching.hpp"

using namespace hrl;
namespace fs = std::filesystem;

namespace {

// Collects failed expectations for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

RecurrencePair example(int i) {
  const auto p = testing::example_pairs()[static_cast<std::size_t>(i - 1)];
  return RecurrencePair(p.q1, p.q2);
}

double max_imag(const std::vector<std::complex<double>>& roots) {
  double m = 0.0;
  for (const auto& z : roots) m = std::max(m, std::fabs(z.imag()));
  return m;
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

const Witness* witness_of(const ConditionReport& r) { return r.witness ? &*r.witness : nullptr; }

void criterion1(Checker& c) {
  const RecurrencePair pair = example(1);
  const Verdict v = full_verdict(pair);
  c.expect(v.report(ConditionId::kA).status == Status::kPass, "A should pass");
  c.expect(v.report(ConditionId::kC).status == Status::kPass, "C should pass");
  const ConditionReport& e = v.report(ConditionId::kE);
  c.expect(e.status == Status::kFail, "E should fail");
  const Witness* w = witness_of(e);
  c.expect(w && w->point && compare(*w->point, Rational(0)) == 0, "E witness at alpha = 0");
  c.expect(w && w->exact_value && *w->exact_value == Rational(-1), "E witness value Q2(0) = -1");

  const std::vector<double> expected{-2.39337, -0.54374, 0.47570, 6.46141};
  const auto roots = CriterionContext(pair).d_roots();
  c.expect(roots.size() == expected.size(), "four distinct discriminant roots");
  for (std::size_t i = 0; i < std::min(roots.size(), expected.size()); ++i) {
    c.expect(near(roots[i].to_double(), expected[i], 1e-4), "discriminant root " + std::to_string(i));
  }
  const SpectralZeros z = zeros_via_levels(pair, 100);
  c.expect(z.converged, "levels n = 100 converged");
  c.expect(max_imag(z.roots) > 0.01, "P_100 has non-real zeros");
}

void criterion2(Checker& c) {
  const RecurrencePair pair = example(2);
  const Verdict v = full_verdict(pair);
  c.expect(v.report(ConditionId::kA).status == Status::kPass, "A should pass");
  c.expect(is_passing(v.report(ConditionId::kB).status), "B should pass");
  c.expect(v.report(ConditionId::kC).status == Status::kPass, "C should pass");
  const ConditionReport& d = v.report(ConditionId::kD);
  c.expect(d.status == Status::kFail, "D should fail");
  const Witness* w = witness_of(d);
  c.expect(w && w->point_estimate && near(*w->point_estimate, -1.66437, 1e-4), "critical point near -1.66437");
  c.expect(w && w->value_estimate && near(*w->value_estimate, 3.50783, 1e-4), "critical value near 3.50783");
  const std::vector<Rational> expected{Rational(-3), Rational(-1), Rational(2), Rational(5)};
  const auto droots = CriterionContext(pair).d_roots();
  c.expect(droots.size() == expected.size(), "four distinct discriminant roots");
  for (std::size_t i = 0; i < std::min(droots.size(), expected.size()); ++i) {
    c.expect(droots[i].is_rational() && compare(droots[i], expected[i]) == 0,
             "discriminant root " + expected[i].get_str() + " exact");
  }
}

void criterion3(Checker& c) {
  const RecurrencePair pair = example(3);
  const Verdict v = full_verdict(pair);
  for (ConditionId id : {ConditionId::kA, ConditionId::kB, ConditionId::kC, ConditionId::kD}) {
    c.expect(is_passing(v.report(id).status), std::string(1, condition_letter(id)) + " should pass");
  }
  const ConditionReport& e = v.report(ConditionId::kE);
  c.expect(e.status == Status::kFail, "E should fail");
  const Witness* w = witness_of(e);
  c.expect(w && w->point && compare(*w->point, Rational(1)) == 0 && w->exact_value &&
               *w->exact_value == Rational(-16),
           "witness Q2(1) = -16");
  bool saw_three = false;
  for (const auto& r : e.roots) {
    if (compare(r, Rational(3)) == 0) saw_three = pair.q2()(Rational(3)) == Rational(-4);
  }
  c.expect(saw_three, "second witness Q2(3) = -4");
  c.expect(pair.discriminant() == RatPoly{100, -40, 4}, "D = 4x^2 - 40x + 100");
  const auto droots = CriterionContext(pair).d_roots();
  c.expect(droots.size() == 1 && compare(droots[0], Rational(5)) == 0, "squarefree root of D is 5");
}

void criterion4(Checker& c) {
  const RecurrencePair pair = example(4);
  const Verdict v = full_verdict(pair);
  c.expect(v.overall == Status::kPass, "overall pass");
  const RatPoly root5{-5, 0, 1}, other{-5, -4, 1};
  c.expect(v.support.size() == 2, "two support intervals");
  if (v.support.size() == 2) {
    const auto& s = v.support;
    auto is_root_of = [](const std::optional<AlgebraicNumber>& a, const RatPoly& p, double approx) {
      return a && sign_at(p, *a) == 0 && near(a->to_double(), approx, 1e-12);
    };
    c.expect(is_root_of(s[0].lo, root5, -std::sqrt(5.0)), "left end -sqrt 5");
    c.expect(is_root_of(s[0].hi, other, -1.0), "endpoint -1");
    c.expect(is_root_of(s[1].lo, root5, std::sqrt(5.0)), "endpoint sqrt 5");
    c.expect(is_root_of(s[1].hi, other, 5.0), "right end 5");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const SpectralZeros z = zeros_via_levels(pair, 200);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(z.converged, "levels n = 200 converged");
  c.expect(secs < 120.0, "n = 200 under 120 s");
  c.expect(max_imag(z.roots) < 1e-8, "all zeros real");
  bool inside = true;
  for (const auto& r : z.roots) {
    bool hit = false;
    for (const auto& iv : v.support) {
      hit = hit || (iv.lo->to_double() - 1e-8 <= r.real() && r.real() <= iv.hi->to_double() + 1e-8);
    }
    inside = inside && hit;
  }
  c.expect(inside, "zeros inside the support");
}

void criterion5(Checker& c) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const RecurrencePair pair = testing::random_pair(rng);
    for (int n = 1; n <= 10; ++n) {
      const SpectralZeros lv = zeros_via_levels(pair, n);
      const ComplexRootSet ex = zeros_via_expansion(pair, n);
      if (!lv.converged || !ex.converged || !testing::matches_within(lv.roots, ex.roots, 1e-7)) {
        c.expect(false, "mismatch for q1 = " + to_string(pair.q1()) + ", q2 = " + to_string(pair.q2()) +
                            ", n = " + std::to_string(n));
      }
    }
  }
}

void criterion6(Checker& c) {
  std::vector<RecurrenceSpec> specs;
  for (int i = 1; i <= 4; ++i) specs.push_back(example(i).spec());
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) specs.push_back(testing::random_pair(rng).spec());
  specs.push_back(RecurrenceSpec({RatPoly{1, -2, 1}, RatPoly{0, 3}, RatPoly{-1, 0, 0, 2}}));
  for (const auto& spec : specs) {
    const int n = 15;
    c.expect(expand_generating_function(spec, n) == generate_sequence(spec, n),
             "series differs for order " + std::to_string(spec.order()));
  }
}

void criterion7(Checker& c) {
  int passing = 0;
  for (const auto& pair : testing::reality_corpus(100)) {
    const bool verdict = is_passing(full_verdict(pair).overall);
    bool real = true;
    for (int n : {10, 50}) real = real && max_imag(zeros_via_levels(pair, n).roots) < 1e-8;
    passing += verdict ? 1 : 0;
    if (verdict != real) {
      c.expect(false, "verdict " + std::string(verdict ? "pass" : "fail") + " but zeros " +
                          (real ? "real" : "non-real") + " for q1 = " + to_string(pair.q1()) +
                          ", q2 = " + to_string(pair.q2()));
    }
  }
  c.expect(passing > 0, "corpus contains passing pairs");
}

void criterion8(Checker& c) {
  const auto f1 = testing::even_pair();
  const CriterionContext ctx(RecurrencePair(f1.q1, f1.q2));
  const ConditionReport b = check_b(ctx, SweepMode::kCertified);
  c.expect(b.status == Status::kFail, "even pair sweep fails");
  const Witness* w = witness_of(b);
  c.expect(w && w->kind == Witness::Kind::kRationalSample && w->sample && *w->sample == Rational(1),
           "witness s = 1");
  c.expect(w && w->real_roots == 2 && w->expected_roots == 4, "2 of 4 real roots");
  c.expect(w && w->polynomial && *w->polynomial == RatPoly{-5, 0, 1, 0, 1}, "fiber x^4 + x^2 - 5");

  const SweepResult e4 = hyperbolicity_sweep(CriterionContext(example(4)));
  c.expect(!e4.unresolved && !e4.samples.empty(), "example 4 sweep resolved");
  for (const auto& s : e4.samples) {
    c.expect(s.s > 0 && s.s < 4 && s.real_roots == 4, "example 4 sample s = " + s.s.get_str());
  }
}

double directed_hausdorff(const std::vector<std::complex<double>>& from, const std::vector<std::complex<double>>& to) {
  double worst = 0.0;
  for (const auto& p : from) {
    double best = INFINITY;
    for (const auto& q : to) best = std::min(best, std::abs(p - q));
    worst = std::max(worst, best);
  }
  return worst;
}

void criterion9(Checker& c) {
  for (const auto& named : {testing::even_pair(), testing::crossing_pair()}) {
    const RecurrencePair pair(named.q1, named.q2);
    const Window w = default_window(pair, 512);
    CurveTrace t = trace_gamma_tilde(pair, w);
    const auto crit = real_critical_abscissas(pair);
    classify(t, crit);
    c.expect(!t.components.empty() && t.components[0].classification == Classification::kRealAxis,
             named.name + ": real-axis band present");
    c.expect(t.components.size() >= 2, named.name + ": off-axis components traced");
    std::vector<std::complex<double>> all, mirrored;
    for (std::size_t i = 1; i < t.components.size(); ++i) {
      for (const auto& z : t.components[i].points) {
        all.push_back(z);
        mirrored.push_back(std::conj(z));
      }
    }
    const double h = std::max(directed_hausdorff(all, mirrored), directed_hausdorff(mirrored, all));
    c.expect(h <= w.cell_size(), named.name + ": conjugation symmetry within one cell");
    for (const auto& comp : t.components) {
      for (double x : comp.crossing_points) {
        double best = INFINITY;
        for (double r : crit) best = std::min(best, std::fabs(r - x));
        c.expect(best <= 3 * w.cell_width(), named.name + ": crossing at " + std::to_string(x));
      }
    }
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void criterion10(Checker& c) {
  const fs::path dir = fs::temp_directory_path() / ("hrl-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string cli = HRL_CLI_PATH;

  for (int i = 1; i <= 4; ++i) {
    const auto p = testing::example_pairs()[static_cast<std::size_t>(i - 1)];
    const std::string q = "--q1 '" + to_string(p.q1) + "' --q2 '" + to_string(p.q2) + "'";
    const std::vector<std::pair<std::string, std::vector<std::string>>> commands{
        {"check " + q + " --json {}/check.json", {"check.json"}},
        {"zeros " + q + " -n 40 --json {}/zeros.json --csv {}/zeros.csv", {"zeros.json", "zeros.csv"}},
        {"zeros " + q + " -n 12 --method expand --json {}/expand.json", {"expand.json"}},
        {"gen --q '" + to_string(p.q1) + ";" + to_string(p.q2) + "' -n 8 --json {}/gen.json", {"gen.json"}},
        {"gen --q '" + to_string(p.q1) + ";" + to_string(p.q2) + "' -n 8 --method series --json {}/series.json",
         {"series.json"}},
        {"curve " + q + " --resolution 256 --cloud 41 --json {}/curve.json --csv {}/curve.csv --svg {}/curve.svg",
         {"curve.json", "curve.csv", "curve.svg"}},
        {"verify " + q + " --n-max 12 --json {}/verify.json", {"verify.json"}},
        {"sweep " + q + " --grid 7 --json {}/sweep.json", {"sweep.json"}},
    };
    for (const auto& [args, files] : commands) {
      std::vector<std::string> runs[2];
      for (int r = 0; r < 2; ++r) {
        const fs::path out = dir / ("run" + std::to_string(r));
        fs::create_directories(out);
        std::string line = args;
        for (std::size_t pos; (pos = line.find("{}")) != std::string::npos;) line.replace(pos, 2, out.string());
        const std::string cmd = "'" + cli + "' " + line + " > '" + (out / "stdout").string() + "' 2>&1";
        const int rc = std::system(cmd.c_str());
        c.expect(rc == 0, "exit status of: hrl " + line);
        runs[r].push_back(slurp(out / "stdout"));
        for (const auto& f : files) runs[r].push_back(slurp(out / f));
      }
      bool same = runs[0] == runs[1];
      for (std::size_t k = 1; k < runs[0].size(); ++k) same = same && !runs[0][k].empty();
      c.expect(same, "example " + std::to_string(i) + ": outputs differ for " + args.substr(0, args.find(' ')));
    }
  }
  fs::remove_all(dir);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"example 1 verdict and witnesses", criterion1},
      {"example 2 verdict and witnesses", criterion2},
      {"example 3 verdict and witnesses", criterion3},
      {"example 4 verdict and witnesses", criterion4},
      {"level factorization matches the expanded polynomial", criterion5},
      {"generating function matches the recurrence", criterion6},
      {"verdict agrees with numeric reality on the corpus", criterion7},
      {"sweep soundness", criterion8},
      {"curve properties", criterion9},
      {"deterministic CLI output", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << "criterion " << (i + 1) << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
         << std::fixed << std::setprecision(2) << secs << " s)";
    std::cout << line.str() << "\n";
    for (const auto& f : c.failures()) std::cout << "    " << f << "\n";
    std::cout.flush();
    failed += c.ok() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
