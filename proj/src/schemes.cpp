#include "geno1d/schemes.hpp"

#include <cmath>

namespace geno1d {

namespace {

constexpr double kInterfaceXi = 0.5;

// IS bilinear form via polarization of the exact quadratic indicator.
double is_bilinear(const ReconPolynomial& pa, const ReconPolynomial& pb,
                   int max_order) {
  ReconPolynomial sum = pa;
  for (int m = 0; m <= pa.degree; ++m) sum.coeffs[m] += pb.coeffs[m];
  return 0.5 * (smoothness_indicator(sum, max_order) -
                smoothness_indicator(pa, max_order) -
                smoothness_indicator(pb, max_order));
}

SubStencilOp make_sub(const StencilSpec& spec, int window_first_offset) {
  const int n = static_cast<int>(spec.offsets.size());
  SubStencilOp op;
  op.first = spec.offsets.front() - window_first_offset;
  op.size = n;
  op.degree = n - 1;

  const std::vector<double> row = detail::value_functional(spec, kInterfaceXi);
  for (int i = 0; i < n; ++i) op.value_row[i] = row[i];

  // polynomial response to each unit datum
  std::vector<ReconPolynomial> basis(n);
  for (int i = 0; i < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    basis[i] = build_interp_poly(e, spec, 1.0);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      op.is_form[a * n + b] = is_bilinear(basis[a], basis[b], op.degree);
  return op;
}

SchemeFamily build_family5() {
  SchemeFamily f;
  f.window = 5;
  f.central_sub = 1;
  const int first = -2;
  const StencilSpec large{{-2, -1, 0, 1, 2}, {}};
  const std::vector<StencilSpec> subs = {
      {{-2, -1, 0}, {}}, {{-1, 0, 1}, {}}, {{0, 1, 2}, {}}};
  for (const auto& s : subs) f.subs.push_back(make_sub(s, first));
  f.large_row = detail::value_functional(large, kInterfaceXi);
  f.d_opt = derive_optimal_weights(subs, large, kInterfaceXi);
  return f;
}

SchemeFamily build_family6() {
  SchemeFamily f;
  f.window = 6;
  f.central_sub = 1;
  const int first = -2;
  const StencilSpec large{{-2, -1, 0, 1, 2, 3}, {}};
  const std::vector<StencilSpec> subs = {{{-2, -1, 0}, {}},
                                         {{-1, 0, 1}, {}},
                                         {{-1, 0, 1, 2}, {}},
                                         {{0, 1, 2, 3}, {}}};
  for (const auto& s : subs) f.subs.push_back(make_sub(s, first));
  f.large_row = detail::value_functional(large, kInterfaceXi);
  f.d_opt = derive_optimal_weights(subs, large, kInterfaceXi);
  return f;
}

}  // namespace

double SubStencilOp::value(const double* window) const {
  const double* u = window + first;
  double v = 0.0;
  for (int i = 0; i < size; ++i) v += value_row[i] * u[i];
  return v;
}

double SubStencilOp::smoothness(const double* window) const {
  const double* u = window + first;
  double is = 0.0;
  for (int a = 0; a < size; ++a) {
    double row = 0.0;
    for (int b = 0; b < size; ++b) row += is_form[a * size + b] * u[b];
    is += u[a] * row;
  }
  // exact zero for constant data; clip the tiny negative roundoff tail
  return is > 0.0 ? is : 0.0;
}

double SchemeFamily::large_value(const double* data) const {
  double v = 0.0;
  for (int i = 0; i < window; ++i) v += large_row[i] * data[i];
  return v;
}

const SchemeFamily& family5() {
  static const SchemeFamily f = build_family5();
  return f;
}

const SchemeFamily& family6() {
  static const SchemeFamily f = build_family6();
  return f;
}

const SchemeFamily& family_for(Scheme s) {
  switch (s) {
    case Scheme::geno6:
    case Scheme::teno6:
    case Scheme::linear6:
      return family6();
    default:
      return family5();
  }
}

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::geno5: return "geno5";
    case Scheme::geno6: return "geno6";
    case Scheme::weno_js5: return "weno_js5";
    case Scheme::weno_z5: return "weno_z5";
    case Scheme::teno5: return "teno5";
    case Scheme::teno6: return "teno6";
    case Scheme::linear5: return "linear5";
    case Scheme::linear6: return "linear6";
  }
  return "unknown";
}

std::optional<Scheme> scheme_from_name(const std::string& name) {
  for (Scheme s : {Scheme::geno5, Scheme::geno6, Scheme::weno_js5,
                   Scheme::weno_z5, Scheme::teno5, Scheme::teno6,
                   Scheme::linear5, Scheme::linear6})
    if (scheme_name(s) == name) return s;
  return std::nullopt;
}

int scheme_window(Scheme s) { return family_for(s).window; }

void SchemeRuntime::finalize() { tanh_C = std::tanh(geno.C); }

namespace {

// 1 - tanh(C a)/tanh(C) < 2 exp(-2 C a); below 1.1e-13 once C a >= 15.3,
// far inside every tolerance this path feeds.
inline double path_value(double alpha, double C, double tanh_C) {
  const double ca = C * alpha;
  if (ca >= 15.3) return 1.0;
  const double chi = std::tanh(ca) / tanh_C;
  return chi < 0.0 ? 0.0 : (chi > 1.0 ? 1.0 : chi);
}

// exponents are 2 or 3 in practice; gate std::pow behind those
inline double pow_small(double x, double e) {
  if (e == 2.0) return x * x;
  if (e == 3.0) return x * x * x;
  if (e == 1.0) return x;
  return std::pow(x, e);
}

inline double pow_int(double x, int n) {
  double r = 1.0;
  for (; n > 0; --n) r *= x;
  return r;
}

// GENO blend on one window with the three-point tau supplied by the caller.
// Sub-stencil point values are only needed when the path leaves the linear
// reconstruction, so they are computed lazily.
SideResult geno_eval_with_tau(const double* window, const SchemeRuntime& rt,
                              const SchemeFamily& fam, const double* is,
                              double tau) {
  const int k0 = static_cast<int>(fam.subs.size());
  const double eps = rt.geno.eps;
  SideResult out;

  double is_hi = is[0], is_lo = is[0];
  for (int k = 1; k < k0; ++k) {
    is_hi = is[k] > is_hi ? is[k] : is_hi;
    is_lo = is[k] < is_lo ? is[k] : is_lo;
  }
  const double rh = tau / (is_hi + eps);
  const double rl = tau / (is_lo + eps);
  const double a_high = 1.0 + pow_small(rh, rt.geno.r);
  const double a_low = 1.0 + pow_small(rl, rt.geno.r);
  const double alpha = 2.0 * a_high / (a_high + a_low);
  const double chi = path_value(alpha, rt.geno.C, rt.tanh_C);

  const double q_high = fam.large_value(window);
  if (chi == 1.0) {
    out.value = q_high;
    out.chi = 1.0;
    return out;
  }
  double wsum = 0.0, q_low = 0.0;
  for (int k = 0; k < k0; ++k) {
    const double d = k == fam.central_sub ? rt.geno.C0 : 1.0;
    const double denom = is[k] + eps;
    const double w = d / pow_small(denom, rt.geno.r_low);
    wsum += w;
    q_low += w * fam.subs[k].value(window);
  }
  q_low /= wsum;
  out.value = chi * q_high + (1.0 - chi) * q_low;
  out.chi = chi;
  return out;
}

inline double threepoint_tau(const double* is) {
  return std::abs(0.5 * (is[0] + is[2]) - is[1]);
}

}  // namespace

SideResult scheme_eval(const double* window, const SchemeRuntime& rt) {
  const SchemeFamily& fam = family_for(rt.scheme);
  SideResult out;

  if (rt.scheme == Scheme::linear5 || rt.scheme == Scheme::linear6) {
    out.value = fam.large_value(window);
    return out;
  }

  const int k0 = static_cast<int>(fam.subs.size());
  double is[4];
  for (int k = 0; k < k0; ++k) is[k] = fam.subs[k].smoothness(window);
  if (rt.scheme == Scheme::geno5 || rt.scheme == Scheme::geno6)
    return geno_eval_with_tau(window, rt, fam, is, threepoint_tau(is));

  double pv[4];
  for (int k = 0; k < k0; ++k) pv[k] = fam.subs[k].value(window);
  const double eps = rt.geno.eps;

  switch (rt.scheme) {
    case Scheme::weno_js5: {
      double wsum = 0.0, v = 0.0;
      for (int k = 0; k < k0; ++k) {
        const double denom = is[k] + eps;
        const double w = fam.d_opt[k] / (denom * denom);
        wsum += w;
        v += w * pv[k];
      }
      out.value = v / wsum;
      return out;
    }
    case Scheme::weno_z5: {
      const double tau_z = std::abs(is[0] - is[2]);
      double wsum = 0.0, v = 0.0;
      for (int k = 0; k < k0; ++k) {
        const double w = fam.d_opt[k] * (1.0 + tau_z / (is[k] + eps));
        wsum += w;
        v += w * pv[k];
      }
      out.value = v / wsum;
      return out;
    }
    case Scheme::teno5: {
      // fifth-order TENO keeps the original Z-type scale separation:
      // gamma_k = (1 + tau5/(beta_k + eps))^6 with tau5 = |beta_1 - beta_3|
      const double tau5 = std::abs(is[0] - is[2]);
      double gamma[4], gamma_sum = 0.0;
      for (int k = 0; k < k0; ++k) {
        gamma[k] = pow_int(1.0 + tau5 / (is[k] + eps), 6);
        gamma_sum += gamma[k];
      }
      double wsum = 0.0, v = 0.0;
      for (int k = 0; k < k0; ++k) {
        const double w = gamma[k] / gamma_sum > rt.teno.c_t ? fam.d_opt[k] : 0.0;
        wsum += w;
        v += w * pv[k];
      }
      out.value = v / wsum;
      return out;
    }
    case Scheme::teno6: {
      double gamma[4], gamma_sum = 0.0;
      for (int k = 0; k < k0; ++k) {
        gamma[k] = pow_int(1.0 / (is[k] + eps), rt.teno.exponent);
        gamma_sum += gamma[k];
      }
      double wsum = 0.0, v = 0.0;
      for (int k = 0; k < k0; ++k) {
        const double w = gamma[k] / gamma_sum > rt.teno.c_t ? fam.d_opt[k] : 0.0;
        wsum += w;
        v += w * pv[k];
      }
      out.value = v / wsum;
      return out;
    }
    default:
      break;
  }
  out.value = fam.large_value(window);
  return out;
}

void scheme_eval_interface(const double* union6, const SchemeRuntime& rt,
                           SideResult* left, SideResult* right) {
  const SchemeFamily& fam = family_for(rt.scheme);
  double fwd[6], bwd[6];
  if (fam.window == 5) {
    for (int i = 0; i < 5; ++i) fwd[i] = union6[i];
    for (int i = 0; i < 5; ++i) bwd[i] = union6[5 - i];
  } else {
    for (int i = 0; i < 6; ++i) fwd[i] = union6[i];
    for (int i = 0; i < 6; ++i) bwd[i] = union6[5 - i];
  }

  if (rt.scheme == Scheme::geno6) {
    // The six-cell large stencil is symmetric about the interface and shared
    // by both one-sided limits. The three sub-stencils entering the
    // three-point tau cover only five of its six cells, so a jump at the far
    // cell is invisible to one orientation; binding tau to the stencil
    // (max over both orientations) restores full coverage.
    double is_f[4], is_b[4];
    for (int k = 0; k < 4; ++k) {
      is_f[k] = fam.subs[k].smoothness(fwd);
      is_b[k] = fam.subs[k].smoothness(bwd);
    }
    const double tau = std::max(threepoint_tau(is_f), threepoint_tau(is_b));
    *left = geno_eval_with_tau(fwd, rt, fam, is_f, tau);
    *right = geno_eval_with_tau(bwd, rt, fam, is_b, tau);
    return;
  }

  *left = scheme_eval(fwd, rt);
  *right = scheme_eval(bwd, rt);
}

// ---------------------------------------------------------------------------
// Compact 8th-order operator
// ---------------------------------------------------------------------------

StencilSpec compact8_large_spec() { return {{-1, 0, 1, 2}, {-1, 0, 1, 2}}; }

std::vector<StencilSpec> compact8_sub_specs() {
  return {{{-1, 0}, {-1}}, {{-1, 0, 1}, {}}, {{0, 1, 2}, {}}};
}

namespace {

struct CompactTable {
  std::array<double, 8> large_row{};  // data order: 4 averages then 4 h*grad
  // sub-stencil operators on their own (average, h*grad) data slices
  struct Sub {
    std::vector<double> value_row;
    std::vector<double> is_form;
    int n = 0;
  };
  std::array<Sub, 3> subs;
};

CompactTable build_compact_table() {
  CompactTable t;
  const StencilSpec large = compact8_large_spec();
  const std::vector<double> lrow = detail::value_functional(large, kInterfaceXi);
  for (int i = 0; i < 8; ++i) t.large_row[i] = lrow[i];

  const std::vector<StencilSpec> specs = compact8_sub_specs();
  for (int k = 0; k < 3; ++k) {
    const StencilSpec& spec = specs[k];
    const int n = spec.constraint_count();
    CompactTable::Sub& sub = t.subs[k];
    sub.n = n;
    sub.value_row = detail::value_functional(spec, kInterfaceXi);
    sub.is_form.assign(n * n, 0.0);

    const int na = static_cast<int>(spec.offsets.size());
    std::vector<ReconPolynomial> basis(n);
    for (int i = 0; i < n; ++i) {
      std::vector<double> ea(na, 0.0);
      std::vector<double> eg(n - na, 0.0);
      if (i < na)
        ea[i] = 1.0;
      else
        eg[i - na] = 1.0;
      basis[i] = build_hermite_poly(ea, eg, spec, 1.0);
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        sub.is_form[a * n + b] = is_bilinear(basis[a], basis[b], n - 1);
  }
  return t;
}

const CompactTable& compact_table() {
  static const CompactTable t = build_compact_table();
  return t;
}

}  // namespace

double compact8_linear_value(const CompactWindow& w, double h) {
  const CompactTable& t = compact_table();
  // The average-row coefficients sum to one, so evaluating about the owner
  // average is algebraically identical and avoids the O(1) cancellation that
  // otherwise floors the error near machine precision. Extended-precision
  // accumulation keeps the operator's own noise below the h^8 term on the
  // finest meshes the convergence checks use.
  const double base = w.avg[1];
  long double v = base;
  for (int i = 0; i < 4; ++i)
    v += static_cast<long double>(t.large_row[i]) * (w.avg[i] - base);
  for (int i = 0; i < 4; ++i)
    v += static_cast<long double>(t.large_row[4 + i]) * w.grad[i] * h;
  return static_cast<double>(v);
}

double compact8_geno_value(const CompactWindow& w, double h,
                           const GenoParams& params, SmoothnessBundle* bundle) {
  const CompactTable& t = compact_table();

  // data slices per sub-stencil: S1 (u_-1, u_0, h g_-1); S2 (u_-1,u_0,u_1);
  // S3 (u_0, u_1, u_2)
  const double s1[3] = {w.avg[0], w.avg[1], w.grad[0] * h};
  const double s2[3] = {w.avg[0], w.avg[1], w.avg[2]};
  const double s3[3] = {w.avg[1], w.avg[2], w.avg[3]};
  const double* data[3] = {s1, s2, s3};

  double is[3], pv[3];
  for (int k = 0; k < 3; ++k) {
    const CompactTable::Sub& sub = t.subs[k];
    double v = 0.0, q = 0.0;
    for (int a = 0; a < sub.n; ++a) {
      v += sub.value_row[a] * data[k][a];
      double row = 0.0;
      for (int b = 0; b < sub.n; ++b) row += sub.is_form[a * sub.n + b] * data[k][b];
      q += data[k][a] * row;
    }
    pv[k] = v;
    is[k] = q > 0.0 ? q : 0.0;
  }

  const double is_hi = std::max(is[0], std::max(is[1], is[2]));
  const double is_lo = std::min(is[0], std::min(is[1], is[2]));
  const double tau = std::abs(0.5 * (is[1] + is[2]) - is[0]);
  const double alpha = ultimate_alpha(tau, is_hi, is_lo, params.r, params.eps);
  const double chi = path_function(alpha, params.C);

  const std::vector<double> d = {1.0, params.C0, 1.0};
  const WeightVector wts =
      low_order_weights(std::span<const double>(is, 3), d, params.r_low, params.eps);
  double q_low = 0.0;
  for (int k = 0; k < 3; ++k) q_low += wts.w[k] * pv[k];

  if (bundle) {
    bundle->is_k.assign(is, is + 3);
    bundle->is_high = is_hi;
    bundle->is_low = is_lo;
    bundle->is_tau = tau;
    bundle->alpha = alpha;
    bundle->chi = chi;
  }
  return chi * compact8_linear_value(w, h) + (1.0 - chi) * q_low;
}

}  // namespace geno1d
