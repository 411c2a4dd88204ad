#include <cmath>
#include <random>

#include "doctest.h"
#include "geno1d/schemes.hpp"

using namespace geno1d;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> sine_window(int n, double x0, double h) {
  // cell averages of sin(pi x) over n consecutive cells starting at x0
  std::vector<double> u(n);
  for (int m = 0; m < n; ++m) {
    const double a = x0 + m * h;
    u[m] = (std::cos(kPi * a) - std::cos(kPi * (a + h))) / (kPi * h);
  }
  return u;
}

}  // namespace

TEST_CASE("family tables: classical rows and derived weights") {
  const SchemeFamily& f5 = family5();
  REQUIRE(f5.window == 5);
  // quartic interface value: (2, -13, 47, 27, -3)/60
  const double row5[5] = {2.0 / 60, -13.0 / 60, 47.0 / 60, 27.0 / 60, -3.0 / 60};
  for (int i = 0; i < 5; ++i)
    CHECK(f5.large_row[i] == doctest::Approx(row5[i]).epsilon(1e-12));
  CHECK(f5.d_opt[0] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(f5.d_opt[1] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(f5.d_opt[2] == doctest::Approx(0.3).epsilon(1e-12));

  const SchemeFamily& f6 = family6();
  REQUIRE(f6.window == 6);
  // quintic interface value: (1, -8, 37, 37, -8, 1)/60
  const double row6[6] = {1.0 / 60, -8.0 / 60, 37.0 / 60,
                          37.0 / 60, -8.0 / 60, 1.0 / 60};
  for (int i = 0; i < 6; ++i)
    CHECK(f6.large_row[i] == doctest::Approx(row6[i]).epsilon(1e-12));
  // hand-derived by matching functional coefficients cell by cell
  CHECK(f6.d_opt[0] == doctest::Approx(1.0 / 20).epsilon(1e-12));
  CHECK(f6.d_opt[1] == doctest::Approx(3.0 / 20).epsilon(1e-12));
  CHECK(f6.d_opt[2] == doctest::Approx(3.0 / 5).epsilon(1e-12));
  CHECK(f6.d_opt[3] == doctest::Approx(1.0 / 5).epsilon(1e-12));
}

TEST_CASE("kernel matches the composed reconstruction operations") {
  // dual route: the table-driven kernel against polynomials built per call
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> val(-2.0, 2.0);

  const std::vector<StencilSpec> subs5 = {
      {{-2, -1, 0}, {}}, {{-1, 0, 1}, {}}, {{0, 1, 2}, {}}};
  const StencilSpec large5{{-2, -1, 0, 1, 2}, {}};
  const std::vector<StencilSpec> subs6 = {{{-2, -1, 0}, {}},
                                          {{-1, 0, 1}, {}},
                                          {{-1, 0, 1, 2}, {}},
                                          {{0, 1, 2, 3}, {}}};
  const StencilSpec large6{{-2, -1, 0, 1, 2, 3}, {}};

  auto compose = [&](Scheme scheme, const std::vector<double>& u) {
    const bool six = scheme_window(scheme) == 6;
    const auto& subs = six ? subs6 : subs5;
    const auto& large = six ? large6 : large5;
    const int base = 2;  // owner cell index in the window

    std::vector<double> is, pv;
    for (const StencilSpec& s : subs) {
      std::vector<double> slice;
      for (int off : s.offsets) slice.push_back(u[base + off]);
      const ReconPolynomial p = build_interp_poly(slice, s, 1.0);
      is.push_back(smoothness_indicator(p, p.degree));
      pv.push_back(p.value(0.5));
    }
    const ReconPolynomial big = build_interp_poly(u, large, 1.0);
    const double q_high = big.value(0.5);

    const GenoParams gp;
    const TenoParams tp;
    switch (scheme) {
      case Scheme::linear5:
      case Scheme::linear6:
        return q_high;
      case Scheme::geno5:
      case Scheme::geno6: {
        SmoothnessBundle b;
        b.is_k = is;
        b.is_high = is_high_structured(is);
        b.is_low = is_low_structured(is);
        b.is_tau = is_tau_threepoint(is[0], is[1], is[2]);
        b.alpha = ultimate_alpha(b.is_tau, b.is_high, b.is_low, gp.r, gp.eps);
        b.chi = path_function(b.alpha, gp.C);
        std::vector<double> d(subs.size(), 1.0);
        d[1] = gp.C0;
        const WeightVector w = low_order_weights(is, d, gp.r_low, gp.eps);
        return geno_blend(q_high, pv, b, w);
      }
      case Scheme::weno_js5: {
        const WeightVector w = weno_js_weights(is, family5().d_opt, gp.eps);
        double v = 0.0;
        for (std::size_t k = 0; k < pv.size(); ++k) v += w.w[k] * pv[k];
        return v;
      }
      case Scheme::weno_z5: {
        const double tau_z = std::abs(is[0] - is[2]);
        const WeightVector w = weno_z_weights(is, family5().d_opt, tau_z, gp.eps);
        double v = 0.0;
        for (std::size_t k = 0; k < pv.size(); ++k) v += w.w[k] * pv[k];
        return v;
      }
      case Scheme::teno5: {
        // the original fifth-order weighting: Z-type scale separation
        const double tau5 = std::abs(is[0] - is[2]);
        std::vector<double> gamma(3);
        double gamma_sum = 0.0;
        for (int k = 0; k < 3; ++k) {
          gamma[k] = std::pow(1.0 + tau5 / (is[k] + gp.eps), 6);
          gamma_sum += gamma[k];
        }
        double v = 0.0, wsum = 0.0;
        for (int k = 0; k < 3; ++k) {
          const double w =
              gamma[k] / gamma_sum > tp.c_t ? family5().d_opt[k] : 0.0;
          wsum += w;
          v += w * pv[k];
        }
        return v / wsum;
      }
      default: {  // teno6
        const WeightVector w = teno_weights(is, family6().d_opt, tp, gp.eps);
        double v = 0.0;
        for (std::size_t k = 0; k < pv.size(); ++k) v += w.w[k] * pv[k];
        return v;
      }
    }
  };

  for (Scheme scheme : {Scheme::geno5, Scheme::geno6, Scheme::weno_js5,
                        Scheme::weno_z5, Scheme::teno5, Scheme::teno6,
                        Scheme::linear5, Scheme::linear6}) {
    const SchemeRuntime rt(scheme, GenoParams{}, TenoParams{});
    const int win = scheme_window(scheme);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> u(win);
      for (double& v : u) v = val(rng);
      const SideResult got = scheme_eval(u.data(), rt);
      const double want = compose(scheme, u);
      CHECK(got.value == doctest::Approx(want).epsilon(1e-11));
    }
  }
}

TEST_CASE("smooth sine: geno equals linear interface values to 1e-12") {
  for (int n : {20, 40}) {
    const double h = 2.0 / n;
    for (Scheme geno : {Scheme::geno5, Scheme::geno6}) {
      const Scheme lin =
          geno == Scheme::geno5 ? Scheme::linear5 : Scheme::linear6;
      const SchemeRuntime rt_g(geno, GenoParams{}, TenoParams{});
      const SchemeRuntime rt_l(lin, GenoParams{}, TenoParams{});
      const int win = scheme_window(geno);
      for (int j = 0; j < n; ++j) {
        const std::vector<double> u = sine_window(win, j * h, h);
        const SideResult g = scheme_eval(u.data(), rt_g);
        const SideResult l = scheme_eval(u.data(), rt_l);
        CHECK(std::abs(g.value - l.value) < 1e-12);
        CHECK(g.chi == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("ENO property at a unit step") {
  // cell averages of a unit step: candidates must bracket the blend value
  for (Scheme scheme : {Scheme::geno5, Scheme::geno6}) {
    const SchemeRuntime rt(scheme, GenoParams{}, TenoParams{});
    const SchemeFamily& fam = family_for(scheme);
    const int win = fam.window;
    for (int pos = 0; pos <= win; ++pos) {
      std::vector<double> u(win);
      for (int m = 0; m < win; ++m) u[m] = m < pos ? 0.0 : 1.0;
      const SideResult r = scheme_eval(u.data(), rt);
      if (r.chi < 1e-10) {
        double lo = 1e300, hi = -1e300;
        for (const SubStencilOp& sub : fam.subs) {
          const double v = sub.value(u.data());
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        CHECK(r.value >= lo - 1e-10);
        CHECK(r.value <= hi + 1e-10);
      }
    }
  }
}

TEST_CASE("six-cell interface evaluation detects far-edge jumps on both sides") {
  // the shared-tau rule: a jump visible to only one orientation's fourth
  // sub-stencil must still force the blend off the linear path
  const SchemeRuntime rt(Scheme::geno6, GenoParams{}, TenoParams{});
  double u[6] = {100.0, 0.0, 0.0, 0.0, 0.0, 0.0};  // jump at the left edge
  SideResult l, r;
  scheme_eval_interface(u, rt, &l, &r);
  CHECK(l.chi < 1e-10);
  CHECK(r.chi < 1e-10);
  CHECK(std::abs(l.value) < 1e-8);
  CHECK(std::abs(r.value) < 1e-8);

  double v[6] = {0.0, 0.0, 0.0, 0.0, 0.0, 100.0};  // jump at the right edge
  scheme_eval_interface(v, rt, &l, &r);
  CHECK(l.chi < 1e-10);
  CHECK(r.chi < 1e-10);
  CHECK(std::abs(l.value) < 1e-8);
  CHECK(std::abs(r.value) < 1e-8);
}

TEST_CASE("three-point tau vanishes at higher order on smooth data") {
  // IS_tau / IS_high must decay at least like h under refinement
  const SchemeFamily& fam = family5();
  double prev_ratio = 0.0;
  for (int level = 0; level < 4; ++level) {
    const double h = 0.1 / (1 << level);
    double worst = 0.0;
    for (int phase = 0; phase < 16; ++phase) {
      const std::vector<double> u = sine_window(5, 0.03 + phase * 0.125, h);
      double is[3];
      for (int k = 0; k < 3; ++k) is[k] = fam.subs[k].smoothness(u.data());
      const double tau = std::abs(0.5 * (is[0] + is[2]) - is[1]);
      const double hi = std::max(is[0], std::max(is[1], is[2]));
      worst = std::max(worst, tau / hi);
    }
    if (level > 0) CHECK(worst < 0.6 * prev_ratio);
    prev_ratio = worst;
  }
  CHECK(prev_ratio < 2e-3);  // measured 1.5e-3 at h = 1/80
}

TEST_CASE("weno-js weights approach the optimal weights on refining sine data") {
  const SchemeFamily& fam = family5();
  const GenoParams gp;
  double prev = 0.0;
  for (int level = 0; level < 4; ++level) {
    const double h = 0.1 / (1 << level);
    double worst = 0.0;
    for (int phase = 0; phase < 16; ++phase) {
      const std::vector<double> u = sine_window(5, 0.07 + phase * 0.125, h);
      std::vector<double> is(3);
      for (int k = 0; k < 3; ++k) is[k] = fam.subs[k].smoothness(u.data());
      const WeightVector w = weno_js_weights(is, fam.d_opt, gp.eps);
      for (int k = 0; k < 3; ++k)
        worst = std::max(worst, std::abs(w.w[k] - fam.d_opt[k]));
    }
    if (level > 0) CHECK(worst < prev);
    prev = worst;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("nonconstant polynomials have strictly positive smoothness") {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  const StencilSpec spec{{-1, 0, 1}, {}};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> data = {val(rng), val(rng), val(rng)};
    data[2] = data[1] + std::max(0.1, std::abs(val(rng)));  // force variation
    const ReconPolynomial p = build_interp_poly(data, spec, 1.0);
    CHECK(smoothness_indicator(p, 2) > 0.0);
  }
}

TEST_CASE("scheme names round-trip") {
  for (Scheme s : {Scheme::geno5, Scheme::geno6, Scheme::weno_js5,
                   Scheme::weno_z5, Scheme::teno5, Scheme::teno6,
                   Scheme::linear5, Scheme::linear6})
    CHECK(scheme_from_name(scheme_name(s)) == s);
  CHECK(!scheme_from_name("weno9").has_value());
}

TEST_CASE("compact reconstruction: reproduction and convergence") {
  const StencilSpec large = compact8_large_spec();
  REQUIRE(large.constraint_count() == 8);

  SUBCASE("degree-7 data reproduced through the operator") {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<double> c(8);
      for (double& v : c) v = coeff(rng);
      auto poly = [&](double x) {
        double r = 0.0;
        for (int m = 7; m >= 0; --m) r = r * x + c[m];
        return r;
      };
      const double h = 0.3;
      CompactWindow w;
      for (int i = 0; i < 4; ++i) {
        const int off = i - 1;
        const double a = (off - 0.5) * h, b = a + h;
        // quadrature is exact for the septic; gradients via the fundamental
        // theorem of calculus
        w.avg[i] = cell_average_of(poly, a, b);
        w.grad[i] = (poly(b) - poly(a)) / h;
      }
      const double got = compact8_linear_value(w, h);
      CHECK(std::abs(got - poly(0.5 * h)) < 1e-11);
    }
  }

  SUBCASE("smooth data keeps the geno blend on the linear value") {
    const double h = 0.05;
    auto f = [](double x) { return std::sin(kPi * x); };
    CompactWindow w;
    for (int i = 0; i < 4; ++i) {
      const int off = i - 1;
      const double a = 0.21 + (off - 0.5) * h;
      w.avg[i] = (std::cos(kPi * a) - std::cos(kPi * (a + h))) / (kPi * h);
      w.grad[i] = (f(a + h) - f(a)) / h;
    }
    SmoothnessBundle bundle;
    const double blended = compact8_geno_value(w, h, GenoParams{}, &bundle);
    CHECK(bundle.chi == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(blended == doctest::Approx(compact8_linear_value(w, h)).epsilon(1e-13));
    CHECK(bundle.alpha > 0.9);
    CHECK(bundle.is_high >= bundle.is_low);
  }

  SUBCASE("step data drops chi and stays within candidate range") {
    CompactWindow w;
    w.avg = {0.0, 0.0, 1.0, 1.0};
    w.grad = {0.0, 0.0, 0.0, 0.0};
    SmoothnessBundle bundle;
    const double blended = compact8_geno_value(w, 1.0, GenoParams{}, &bundle);
    CHECK(bundle.chi < 1e-6);
    CHECK(blended >= -1e-8);
    CHECK(blended <= 1.0 + 1e-8);
  }

  SUBCASE("interface error decays at 8th order") {
    auto f = [](double x) { return std::sin(kPi * x); };
    double prev = 0.0;
    for (int level = 0; level <= 3; ++level) {
      const double h = 0.25 / (1 << level);
      CompactWindow w;
      for (int i = 0; i < 4; ++i) {
        const int off = i - 1;
        const double a = (off - 0.5) * h;
        w.avg[i] = (std::cos(kPi * a) - std::cos(kPi * (a + h))) / (kPi * h);
        w.grad[i] = (f(a + h) - f(a)) / h;
      }
      const double err = std::abs(compact8_linear_value(w, h) - f(0.5 * h));
      if (level > 0) CHECK(std::log2(prev / err) > 7.0);
      prev = err;
    }
  }
}
