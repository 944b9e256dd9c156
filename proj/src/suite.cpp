#include "pwa/suite.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <utility>

#include "pwa/approx_operators.hpp"
#include "pwa/decomposition.hpp"
#include "pwa/errors.hpp"
#include "pwa/paley_wiener.hpp"
#include "pwa/random.hpp"
#include "pwa/smoothness.hpp"
#include "pwa/vector_io.hpp"

namespace pwa {

namespace {

using Params = std::map<std::string, std::string>;

// Finite stand-in for "the ratio stays in a bounded bracket".
constexpr double kFiniteBracket = 1e12;

std::string num(double x) { return format_double(x); }

struct Member {
  const SpectralDecomposition* dec;
  HilbertVector f;
  std::uint64_t seed;
};

class Collector {
 public:
  // Keeps the worst (largest) measurement per (check, params).
  void add(const std::string& check, Params params, double measured, double tolerance) {
    auto [it, fresh] = records_.try_emplace({check, std::move(params)});
    auto& r = it->second;
    if (fresh) {
      r.measured = measured;
      r.tolerance = tolerance;
      return;
    }
    if (std::isnan(measured) || measured > r.measured) r.measured = measured;
  }

  // Tracks [min, max] of a positive ratio; the record measures max / min.
  void bracket(const std::string& check, Params params, double value) {
    auto& b = brackets_[{check, std::move(params)}];
    if (!std::isfinite(value) || value <= 0.0) b.bad = true;
    b.lo = std::min(b.lo, value);
    b.hi = std::max(b.hi, value);
  }

  void constant_max(const std::string& name, double v) {
    auto [it, fresh] = constants_.try_emplace(name, v);
    if (!fresh) it->second = std::max(it->second, v);
  }
  void constant_min(const std::string& name, double v) {
    auto [it, fresh] = constants_.try_emplace(name, v);
    if (!fresh) it->second = std::min(it->second, v);
  }
  void constant(const std::string& name, double v) { constants_[name] = v; }

  void finish(VerificationReport& rep, const std::map<std::string, double>& overrides) {
    for (auto& [key, b] : brackets_) {
      Params p = key.second;
      p["bracket_lo"] = num(b.lo);
      p["bracket_hi"] = num(b.hi);
      add(key.first, std::move(p), b.bad ? kInfinity : b.hi / b.lo, kFiniteBracket);
    }
    for (auto& [key, r] : records_) {
      r.check = key.first;
      r.params = key.second;
      const auto q = r.params.find("quantity");
      if (q != r.params.end()) {
        if (auto o = overrides.find(r.check + "/" + q->second); o != overrides.end()) r.tolerance = o->second;
        else if (auto o2 = overrides.find(r.check); o2 != overrides.end()) r.tolerance = o2->second;
      } else if (auto o = overrides.find(r.check); o != overrides.end()) {
        r.tolerance = o->second;
      }
      r.passed = std::isfinite(r.measured) && std::isfinite(r.tolerance) && r.measured <= r.tolerance;
      rep.records.push_back(r);
    }
    rep.constants = constants_;
  }

 private:
  struct Bracket {
    double lo = kInfinity, hi = 0.0;
    bool bad = false;
  };
  std::map<std::pair<std::string, Params>, CheckRecord> records_;
  std::map<std::pair<std::string, Params>, Bracket> brackets_;
  std::map<std::string, double> constants_;
};

struct Context {
  Collector& out;
  Rng& rng;
  const Member& m;
  std::size_t n;

  const SpectralDecomposition& dec() const { return *m.dec; }
  Params with_n(Params p) const {
    p["N"] = std::to_string(n);
    return p;
  }
  // ω drawn uniformly from [λ_1⁺·lo, λ_N·hi].
  double omega(double lo = 1.0, double hi = 1.0) const {
    return rng.uniform(dec().lambda_min_positive() * lo, dec().lambda_max() * hi);
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

const ApproxKernel& cached_kernel(int n) {
  static std::map<int, ApproxKernel> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_kernel(n, 0)).first;
  return it->second;
}

// Per-member checks ------------------------------------------------------

void check_plancherel(Context& cx) {
  const auto& f = cx.m.f;
  const auto c = spectral_transform(cx.dec(), f);
  cx.out.add("plancherel", cx.with_n({{"quantity", "norm"}}), rel(c.norm(), f.norm()), 1e-12);
  cx.out.add("plancherel", cx.with_n({{"quantity", "inverse"}}), (inverse_transform(c) - f).norm() / f.norm(),
             1e-12);
}

void check_e_equals_r(Context& cx) {
  const auto& dec = cx.dec();
  const auto& f = cx.m.f;
  std::vector<double> omegas;
  for (int i = 0; i < 3; ++i) omegas.push_back(cx.rng.uniform(0.0, 1.1 * dec.lambda_max()));
  omegas.push_back(dec.lambda(static_cast<std::size_t>(cx.rng.integer(0, static_cast<int>(dec.dim()) - 1))));
  for (double w : omegas)
    cx.out.add("e_equals_r", cx.with_n({}),
               std::abs(best_approx(dec, f, w) - spectral_tail(dec, f, w)) / (1.0 + f.norm()), 1e-12);
}

const std::vector<double> kBernsteinS{0.5, 1.0, 2.0, 7.0};

void check_bernstein(Context& cx) {
  const auto& dec = cx.dec();
  const double w = cx.omega();
  const auto g = pw_project(dec, cx.m.f, w);
  if (g.norm() > 0.0) {
    const auto rep = bernstein_check(dec, g, w, kBernsteinS);
    for (std::size_t i = 0; i < kBernsteinS.size(); ++i)
      cx.out.add("bernstein", cx.with_n({{"quantity", "ratio"}, {"s", num(kBernsteinS[i])}}), rep.ratios[i],
                 1.0 + 1e-10);
  }
  const auto top = dec.eigenvector(dec.dim() - 1);
  const auto eq = bernstein_check(dec, top, dec.lambda_max(), kBernsteinS);
  for (std::size_t i = 0; i < kBernsteinS.size(); ++i)
    cx.out.add("bernstein", cx.with_n({{"quantity", "equality"}, {"s", num(kBernsteinS[i])}}),
               std::abs(eq.ratios[i] - 1.0), 1e-12);
}

void check_limit_condition(Context& cx) {
  // Two-point spectrum {λ, 2λ}; |c₂| is kept away from 0 so that
  // |c₂|^{1/40} stays above 0.95.
  const double lam = cx.rng.uniform(0.5, 2.0);
  const auto op = SymmetricOperator(2, {lam, 0.0, 0.0, 2.0 * lam}, OperatorKind::raw_D);
  const auto two = eigh(op);
  const double theta = cx.rng.uniform(std::numbers::pi / 12.0, std::numbers::pi * 5.0 / 12.0);
  const double p1 = cx.rng.uniform(0.0, 2.0 * std::numbers::pi), p2 = cx.rng.uniform(0.0, 2.0 * std::numbers::pi);
  const HilbertVector f({std::polar(std::cos(theta), p1), std::polar(std::sin(theta), p2)});
  const auto rep = bandwidth(two, f);
  cx.out.add("limit_condition", {{"quantity", "k40_rel_gap"}}, rel(rep.k_sequence.back(), 2.0 * lam), 0.05);
  double drop = 0.0;
  for (std::size_t k = 1; k < rep.k_sequence.size(); ++k)
    drop = std::max(drop, (rep.k_sequence[k - 1] - rep.k_sequence[k]) / (2.0 * lam));
  cx.out.add("limit_condition", {{"quantity", "monotone_drop"}}, drop, 1e-12);

  // On the member operator: unit-norm f, full support.
  auto g = cx.m.f;
  g *= 1.0 / g.norm();
  const auto mrep = bandwidth(cx.dec(), g);
  cx.out.add("limit_condition", cx.with_n({{"quantity", "omega_f"}}), rel(mrep.omega_f, cx.dec().lambda_max()),
             1e-12);
  double mdrop = 0.0;
  for (std::size_t k = 1; k < mrep.k_sequence.size(); ++k)
    mdrop = std::max(mdrop, (mrep.k_sequence[k - 1] - mrep.k_sequence[k]) / mrep.omega_f);
  cx.out.add("limit_condition", cx.with_n({{"quantity", "monotone_drop"}}), mdrop, 1e-12);
}

constexpr long kRieszK = 10000;

void check_riesz_norm(Context& cx) {
  const double w = cx.omega(1.0, 1.5);
  const RieszConfig cfg{w, kRieszK};
  const auto& f = cx.m.f;
  const double out = riesz_apply(cx.dec(), f, cfg).norm();
  cx.out.add("riesz_norm", cx.with_n({{"K", std::to_string(kRieszK)}}), out / ((w - cfg.tail_bound()) * f.norm()),
             1.0 + 1e-10);
}

void check_riesz_identity(Context& cx) {
  const double w = cx.omega();
  const auto g = pw_project(cx.dec(), cx.m.f, w);
  if (g.norm() == 0.0) return;
  const auto rep = riesz_identity_check(cx.dec(), g, w, 1, kRieszK);
  cx.out.add("riesz_identity", cx.with_n({{"K", std::to_string(kRieszK)}, {"n", "1"}}),
             rep.residual / rep.tail_bound, 1.0 + 1e-6);
}

void check_q_operator(Context& cx) {
  const auto& dec = cx.dec();
  const auto& f = cx.m.f;
  const auto c = spectral_transform(dec, f);
  for (int m = 1; m <= 3; ++m) {
    const int n = default_kernel_order(m);
    const double w = cx.omega();
    const auto qf = q_apply(dec, f, w, m, cached_kernel(n));
    const auto qc = spectral_transform(dec, qf);
    const Params p{{"m", std::to_string(m)}, {"n", std::to_string(n)}};
    auto pt = p;
    pt["quantity"] = "tail";
    cx.out.add("q_operator", cx.with_n(pt), spectral_tail(qc, w) / f.norm(), 1e-10);
    double ker = 0.0;
    for (std::size_t j = 0; j < dec.dim() && dec.lambda(j) == 0.0; ++j)
      ker = std::max(ker, std::abs(qc[j] - c[j]) / f.norm());
    auto pk = p;
    pk["quantity"] = "kernel_component";
    cx.out.add("q_operator", cx.with_n(pk), ker, 1e-10);
  }
}

const std::vector<std::pair<int, int>> kJacksonOrders{{2, 0}, {2, 1}, {3, 1}};

void check_jackson(Context& cx) {
  for (auto [m, k] : kJacksonOrders) {
    const int n = default_kernel_order(m);
    const double w = cx.omega(1.0, 2.0);
    const auto rep = jackson_check(cx.dec(), cx.m.f, w, m, k, cached_kernel(n));
    const Params p{{"m", std::to_string(m)}, {"k", std::to_string(k)}, {"n", std::to_string(n)}};
    auto pr = p, pc = p;
    pr["quantity"] = "ratio";
    pc["quantity"] = "chain";
    cx.out.add("jackson", cx.with_n(pr), rep.ratio, 1.0 + 1e-6);
    cx.out.add("jackson", cx.with_n(pc), rep.chain_ratio, 1.0 + 1e-10);
    const std::string tag = "m=" + std::to_string(m) + ",k=" + std::to_string(k) + ",n=" + std::to_string(n);
    cx.out.constant("C^h(" + tag + ")", rep.constant);
    cx.out.constant("C^h_proof(" + tag + ")", rep.constant_proof);
  }
}

void check_modulus_inequalities(Context& cx) {
  const int m = cx.rng.integer(1, 3);
  const int k = cx.rng.integer(0, m);
  const double s = cx.rng.uniform(0.05, 2.0) / cx.dec().lambda_max();
  const double a = cx.rng.uniform(1.0, 4.0);
  const auto rep = modulus_inequality_checks(cx.dec(), cx.m.f, s, a, m, k);
  const Params p{{"m", std::to_string(m)}, {"k", std::to_string(k)}};
  auto pp = p, ps = p;
  pp["quantity"] = "power";
  ps["quantity"] = "scale";
  cx.out.add("modulus_inequalities", cx.with_n(pp), rep.power_ratio, 1.0 + 1e-6);
  cx.out.add("modulus_inequalities", cx.with_n(ps), rep.scale_ratio, 1.0 + 1e-6);
}

struct LemmaParams {
  double alpha;
  int n, r;
};
const std::vector<LemmaParams> kLemmaParams{{0.5, 0, 1}, {1.5, 1, 1}, {2.5, 1, 2}};

Params lemma_params(const LemmaParams& lp) {
  return {{"alpha", num(lp.alpha)}, {"n", std::to_string(lp.n)}, {"r", std::to_string(lp.r)}};
}

void check_lemma1(Context& cx) {
  for (const auto& lp : kLemmaParams) {
    const auto rep = lemma1_check(cx.dec(), cx.m.f, lp.alpha, lp.n, lp.r);
    cx.out.add("lemma1", cx.with_n(lemma_params(lp)), rep.ratio, kFiniteBracket);
    cx.out.constant_max("A(n=" + std::to_string(lp.n) + ",r=" + std::to_string(lp.r) + ")", rep.ratio);
  }
}

void check_lemma2(Context& cx) {
  for (const auto& lp : kLemmaParams) {
    const auto rep = lemma2_check(cx.dec(), cx.m.f, lp.alpha, lp.n, lp.r);
    auto p = lemma_params(lp), pb = p;
    p["quantity"] = "ratio";
    pb["quantity"] = "band_bound";
    cx.out.add("lemma2", cx.with_n(p), rep.ratio, kFiniteBracket);
    cx.out.add("lemma2", cx.with_n(pb), rep.band_bound_ratio, 1.0 + 1e-10);
    cx.out.constant_max("C(alpha=" + num(lp.alpha) + ",n=" + std::to_string(lp.n) + ",r=" + std::to_string(lp.r) +
                            ")",
                        rep.ratio);
  }
}

struct BesovSet {
  double alpha, q, a;
};
const std::vector<BesovSet> kFlavorSets{{0.7, 1.0, 2.0}, {1.5, 2.0, 2.0}, {0.9, kInfinity, 2.0}};
const std::vector<BesovFlavor> kFlavors{BesovFlavor::discrete_E, BesovFlavor::integral_R, BesovFlavor::discrete_R,
                                        BesovFlavor::k_functional, BesovFlavor::modulus};

Params set_params(const BesovSet& s) { return {{"alpha", num(s.alpha)}, {"q", num(s.q)}, {"a", num(s.a)}}; }

void check_flavor_brackets(Context& cx) {
  const auto& dec = cx.dec();
  auto big = cx.m.f;
  big *= 1e3;
  for (const auto& set : kFlavorSets) {
    BesovParams bp;
    bp.alpha = set.alpha;
    bp.q = set.q;
    bp.a = set.a;
    bp.r = 2;
    bp.flavor = BesovFlavor::integral_E;
    const double ref = besov_norm(dec, cx.m.f, bp), ref_big = besov_norm(dec, big, bp);
    for (auto flavor : kFlavors) {
      bp.flavor = flavor;
      const double ratio = besov_norm(dec, cx.m.f, bp) / ref;
      const double ratio_big = besov_norm(dec, big, bp) / ref_big;
      auto p = set_params(set);
      p["flavor"] = to_string(flavor);
      auto ps = p;
      ps["quantity"] = "scale_invariance";
      p["quantity"] = "bracket";
      cx.out.bracket("flavor_brackets", cx.with_n(p), ratio);
      cx.out.add("flavor_brackets", cx.with_n(ps), rel(ratio_big, ratio), 1e-10);
    }
  }
}

const std::vector<BesovSet> kFrameSets{{0.7, 1.0, 2.0}, {1.5, 2.0, 2.0}, {0.9, kInfinity, 2.0}, {1.2, 2.0, 3.0}};

void check_frame_equivalence(Context& cx) {
  const auto& dec = cx.dec();
  const auto& f = cx.m.f;
  for (const auto& set : kFrameSets) {
    const auto rep = equivalence_report(dec, f, set.alpha, set.q, set.a);
    auto p = set_params(set);
    auto plo = p, phi = p;
    plo["quantity"] = "ratio_lo";
    phi["quantity"] = "ratio_hi";
    cx.out.bracket("frame_equivalence", cx.with_n(plo), rep.ratio_lo);
    cx.out.bracket("frame_equivalence", cx.with_n(phi), rep.ratio_hi);
    const std::string tag = "alpha=" + num(set.alpha) + ",q=" + num(set.q) + ",a=" + num(set.a);
    cx.out.constant_min("c1(" + tag + ")", rep.ratio_lo);
    cx.out.constant_max("c2(" + tag + ")", rep.ratio_lo);
  }
  for (double a : {2.0, 3.0}) {
    const auto bd = band_decompose(dec, f, a);
    cx.out.add("frame_equivalence", cx.with_n({{"a", num(a)}, {"quantity", "reconstruction"}}),
               (bd.sum() - f).norm() / f.norm(), 1e-10);
    double worst = 0.0;
    for (int N = 0; N <= bd.top_index(); ++N) {
      double tail2 = 0.0;
      for (int k = N + 1; k <= bd.top_index(); ++k) tail2 += std::pow(bd.bands[k].norm(), 2);
      worst = std::max(worst, std::abs(best_approx(dec, f, std::pow(a, N)) - std::sqrt(tail2)) / f.norm());
    }
    cx.out.add("frame_equivalence", cx.with_n({{"a", num(a)}, {"quantity", "tail_identity"}}), worst, 1e-10);
  }
}

void check_synthesis(Context& cx) {
  const auto& dec = cx.dec();
  for (const auto& set : kFrameSets) {
    const auto bd = band_decompose(dec, cx.m.f, set.a);
    auto p = set_params(set);
    p["quantity"] = "canonical";
    cx.out.add("synthesis", cx.with_n(p), synthesis_check(dec, bd.bands, set.a, set.alpha, set.q).ratio,
               1.0 + 1e-10);
    // Overlapping bands f_k = w_k P_{a^k} g.
    const auto g = cx.rng.complex_vector(dec.dim());
    std::vector<HilbertVector> bands;
    for (int k = 0; k <= bd.top_index(); ++k) {
      auto b = pw_project(dec, g, std::pow(set.a, k));
      b *= cx.rng.uniform(0.1, 1.0) * std::pow(set.a, -k * set.alpha);
      bands.push_back(std::move(b));
    }
    p["quantity"] = "overlapping";
    cx.out.add("synthesis", cx.with_n(p), synthesis_check(dec, bands, set.a, set.alpha, set.q).ratio, 1.0 + 1e-10);
  }
}

void check_growth_bound(Context& cx) {
  const double w = cx.omega();
  const auto g = pw_project(cx.dec(), cx.m.f, w);
  if (g.norm() == 0.0) return;
  for (int i = 0; i < 20; ++i) {
    const Complex z(cx.rng.uniform(-5.0, 5.0), cx.rng.uniform(-2.0, 2.0));
    const double ratio = schrodinger_group(cx.dec(), z, g).norm() / (std::exp(w * std::abs(z.imag())) * g.norm());
    cx.out.add("growth_bound", cx.with_n({}), ratio, 1.0 + 1e-10);
  }
}

void check_k_functional(Context& cx) {
  const auto c = spectral_transform(cx.dec(), cx.m.f);
  for (int r : {1, 2}) {
    const double scale = std::pow(cx.dec().lambda_max(), -r);
    std::vector<double> t(3);
    for (auto& x : t) x = scale * std::pow(10.0, cx.rng.uniform(-3.0, 2.0));
    std::sort(t.begin(), t.end());
    if (t[0] == t[2]) continue;
    const double k0 = k_functional(c, t[0], r), k1 = k_functional(c, t[1], r), k2 = k_functional(c, t[2], r);
    const double chord = k0 + (k2 - k0) * (t[1] - t[0]) / (t[2] - t[0]);
    const Params p{{"r", std::to_string(r)}};
    auto pm = p, pc = p;
    pm["quantity"] = "monotone";
    pc["quantity"] = "concave";
    cx.out.add("k_functional", cx.with_n(pm), std::max({0.0, k0 - k1, k1 - k2}) / k2, 1e-8);
    cx.out.add("k_functional", cx.with_n(pc), std::max(0.0, chord - k1) / k2, 1e-8);
  }
}

void check_dense_union(Context& cx) {
  const auto& dec = cx.dec();
  const auto& f = cx.m.f;
  const double eps = std::pow(10.0, cx.rng.uniform(-6.0, -1.0)) * f.norm();
  const double w = dense_union_check(dec, f, eps);
  double measured = best_approx(dec, f, w) / eps;
  // Minimality: the next smaller candidate misses ε.
  if (w > 0.0) {
    double prev = 0.0;
    for (double l : dec.distinct_eigenvalues())
      if (l < w) prev = l;
    measured = std::max(measured, eps / best_approx(dec, f, prev));
  }
  cx.out.add("dense_union", cx.with_n({}), measured, 1.0);
}

// Corpus-independent check -----------------------------------------------

void check_kernel(Collector& out) {
  for (int n : {4, 6, 8}) {
    const auto& h = cached_kernel(n);
    const Params p{{"n", std::to_string(n)}};
    auto with = [&](const char* q) {
      auto x = p;
      x["quantity"] = q;
      return x;
    };
    const double mass = h.norm_const() * std::pow(static_cast<double>(n), 1 - n) * sinc_power_integral(n);
    out.add("kernel", with("mass"), std::abs(mass - 1.0), 1e-8);
    out.add("kernel", with("symbol_at_zero"), std::abs(kernel_symbol(h, 0.0, SymbolEvaluator::quadrature) - 1.0),
            1e-8);
    double outside = 0.0;
    for (double xi : {1.01, 1.5, 3.0, -1.01, -1.5, -3.0})
      outside = std::max(outside, std::abs(kernel_symbol(h, xi, SymbolEvaluator::quadrature)));
    out.add("kernel", with("vanishing"), outside, 1e-8);
    double diff = 0.0;
    for (int i = 0; i < 64; ++i) {
      const double xi = -1.2 + 2.4 * i / 63.0;
      diff = std::max(diff, std::abs(kernel_symbol(h, xi, SymbolEvaluator::quadrature) -
                                     kernel_symbol(h, xi, SymbolEvaluator::bspline)));
    }
    out.add("kernel", with("dual_evaluators"), diff, 1e-8);
  }
}

using MemberCheck = void (*)(Context&);

const std::map<std::string, MemberCheck>& member_checks() {
  static const std::map<std::string, MemberCheck> checks{
      {"bernstein", check_bernstein},
      {"dense_union", check_dense_union},
      {"e_equals_r", check_e_equals_r},
      {"flavor_brackets", check_flavor_brackets},
      {"frame_equivalence", check_frame_equivalence},
      {"growth_bound", check_growth_bound},
      {"jackson", check_jackson},
      {"k_functional", check_k_functional},
      {"lemma1", check_lemma1},
      {"lemma2", check_lemma2},
      {"limit_condition", check_limit_condition},
      {"modulus_inequalities", check_modulus_inequalities},
      {"plancherel", check_plancherel},
      {"q_operator", check_q_operator},
      {"riesz_identity", check_riesz_identity},
      {"riesz_norm", check_riesz_norm},
      {"synthesis", check_synthesis},
  };
  return checks;
}

std::string params_text(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : ";") + k + "=" + v;
  return s;
}

}  // namespace

HilbertVector corpus_vector(std::uint64_t member_seed, std::size_t dim) {
  Rng rng(member_seed);
  return rng.complex_vector(dim);
}

bool VerificationReport::passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.passed; });
}

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"kernel"};
    for (const auto& [name, fn] : member_checks()) v.push_back(name);
    std::sort(v.begin(), v.end());
    return v;
  }();
  return names;
}

VerificationReport run_suite(const OperatorSpec& spec, const CorpusParams& corpus,
                             const std::vector<std::string>& checks) {
  const auto& all = all_checks();
  for (const auto& c : checks)
    if (std::find(all.begin(), all.end(), c) == all.end())
      throw Error(ErrorCode::InvalidParams, "unknown check '" + c + "'");
  std::vector<std::string> selected(checks);
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  VerificationReport rep;
  rep.corpus.seed = corpus.seed;
  rep.corpus.count = corpus.count;
  rep.corpus.operator_spec = spec.describe();

  std::vector<OperatorSpec> specs;
  if (spec.resizable()) {
    if (corpus.sizes.empty()) throw Error(ErrorCode::InvalidParams, "no corpus sizes given");
    for (auto n : corpus.sizes) specs.push_back(spec.with_size(n));
  } else {
    specs.push_back(spec);
  }

  Collector out;
  if (std::find(selected.begin(), selected.end(), "kernel") != selected.end()) check_kernel(out);

  std::uint64_t stream = 0;
  for (const auto& s : specs) {
    const auto dec = eigh(build_operator(s));
    rep.corpus.sizes.push_back(dec.dim());
    for (std::size_t i = 0; i < corpus.count; ++i, ++stream) {
      const std::uint64_t seed = derive_seed(corpus.seed, stream);
      rep.corpus.member_seeds.push_back(seed);
      if (selected.empty()) continue;
      Member member{&dec, corpus_vector(seed, dec.dim()), seed};
      for (const auto& name : selected) {
        const auto it = member_checks().find(name);
        if (it == member_checks().end()) continue;
        // Each check draws from its own stream so the selection does not
        // change any check's inputs.
        const auto idx = static_cast<std::uint64_t>(std::find(all.begin(), all.end(), name) - all.begin());
        Rng rng(derive_seed(seed, idx + 1));
        Context cx{out, rng, member, dec.dim()};
        if (name != "plancherel" && name != "e_equals_r" && dec.lambda_max() <= 0.0) continue;
        try {
          it->second(cx);
        } catch (const Error& e) {
          out.add(name, cx.with_n({{"error", to_string(e.code())}}), kInfinity, 0.0);
        }
      }
    }
  }
  out.finish(rep, corpus.tolerance_overrides);
  return rep;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["passed"] = report.passed();
  j["corpus"] = {{"seed", report.corpus.seed},
                 {"count", report.corpus.count},
                 {"sizes", report.corpus.sizes},
                 {"operator", report.corpus.operator_spec},
                 {"member_seeds", report.corpus.member_seeds}};
  auto& recs = j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    recs.push_back({{"check", r.check},
                    {"params", params},
                    {"measured", r.measured},
                    {"tolerance", r.tolerance},
                    {"pass", r.passed}});
  }
  auto& consts = j["constants"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.constants) consts[k] = v;
  return j;
}

namespace {

// Non-finite numbers are written as null.
double number_or_inf(const nlohmann::json& v) { return v.is_number() ? v.get<double>() : kInfinity; }

}  // namespace

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport rep;
  try {
    const auto& c = j.at("corpus");
    rep.corpus.seed = c.at("seed").get<std::uint64_t>();
    rep.corpus.count = c.at("count").get<std::size_t>();
    rep.corpus.sizes = c.at("sizes").get<std::vector<std::size_t>>();
    rep.corpus.operator_spec = c.at("operator").get<std::string>();
    rep.corpus.member_seeds = c.at("member_seeds").get<std::vector<std::uint64_t>>();
    for (const auto& r : j.at("records")) {
      CheckRecord rec;
      rec.check = r.at("check").get<std::string>();
      rec.params = r.at("params").get<std::map<std::string, std::string>>();
      rec.measured = number_or_inf(r.at("measured"));
      rec.tolerance = number_or_inf(r.at("tolerance"));
      rec.passed = r.at("pass").get<bool>();
      rep.records.push_back(std::move(rec));
    }
    for (const auto& [k, v] : j.at("constants").items()) rep.constants[k] = number_or_inf(v);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
  return rep;
}

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw Error(ErrorCode::UnsupportedFormat, "unknown report format '" + name + "'");
}

void emit_report(const VerificationReport& report, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::json) {
    out << to_json(report).dump(2) << '\n';
    return;
  }
  out << "check,parameters,measured,tolerance,pass\n";
  for (const auto& r : report.records)
    out << r.check << ',' << params_text(r.params) << ',' << num(r.measured) << ',' << num(r.tolerance) << ','
        << (r.passed ? "true" : "false") << '\n';
}

void emit_report(const VerificationReport& report, ReportFormat format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  emit_report(report, format, out);
}

}  // namespace pwa
