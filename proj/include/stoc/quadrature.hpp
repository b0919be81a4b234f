#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "stoc/errors.hpp"

namespace stoc::quad {

// Globally adaptive 15-point Gauss-Kronrod integration of a vector-valued
// integrand f: double -> std::array<double, N>. Every component must meet
// |err_i| <= max(rel_tol * |I_i|, abs_tol). The interval is first cut into
// `initial_panels` equal panels; the panel with the worst scaled error is
// bisected until the tolerance is met or `max_panels` is reached, at which
// point NumericalError is thrown with the achieved error.

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int initial_panels = 1;
  int max_panels = 4000;
};

template <std::size_t N>
using Vec = std::array<double, N>;

template <std::size_t N>
struct Result {
  Vec<N> value{};
  Vec<N> error{};
  int panels = 0;
};

namespace detail {

inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7.
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <std::size_t N>
struct Panel {
  double a;
  double b;
  Vec<N> value;
  Vec<N> error;
};

template <std::size_t N, class F>
Panel<N> gauss_kronrod(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Vec<N> kronrod{};
  Vec<N> gauss{};
  const Vec<N> fc = f(center);
  for (std::size_t c = 0; c < N; ++c) {
    kronrod[c] = kWgk[7] * fc[c];
    gauss[c] = kWg[3] * fc[c];
  }
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const Vec<N> f1 = f(center - dx);
    const Vec<N> f2 = f(center + dx);
    for (std::size_t c = 0; c < N; ++c) {
      const double s = f1[c] + f2[c];
      kronrod[c] += kWgk[j] * s;
      if (j % 2 == 1) gauss[c] += kWg[j / 2] * s;
    }
  }
  Panel<N> p{a, b, {}, {}};
  for (std::size_t c = 0; c < N; ++c) {
    p.value[c] = kronrod[c] * half;
    p.error[c] = std::abs((kronrod[c] - gauss[c]) * half);
  }
  return p;
}

}  // namespace detail

template <std::size_t N, class F>
Result<N> integrate(F&& f, double a, double b, const Options& opt = {}) {
  Result<N> out;
  if (a == b) return out;
  const int n0 = std::max(1, opt.initial_panels);
  std::vector<detail::Panel<N>> panels;
  panels.reserve(static_cast<std::size_t>(n0) * 2);
  for (int i = 0; i < n0; ++i) {
    const double lo = a + (b - a) * i / n0;
    const double hi = (i + 1 == n0) ? b : a + (b - a) * (i + 1) / n0;
    panels.push_back(detail::gauss_kronrod<N>(f, lo, hi));
  }

  for (;;) {
    Vec<N> total{};
    Vec<N> err{};
    for (const auto& p : panels) {
      for (std::size_t c = 0; c < N; ++c) {
        total[c] += p.value[c];
        err[c] += p.error[c];
      }
    }
    Vec<N> tol{};
    bool done = true;
    for (std::size_t c = 0; c < N; ++c) {
      tol[c] = std::max(opt.rel_tol * std::abs(total[c]), opt.abs_tol);
      if (err[c] > tol[c]) done = false;
    }
    if (done) {
      out.value = total;
      out.error = err;
      out.panels = static_cast<int>(panels.size());
      return out;
    }
    if (static_cast<int>(panels.size()) >= opt.max_panels) {
      double worst = 0.0;
      for (std::size_t c = 0; c < N; ++c) worst = std::max(worst, err[c]);
      throw NumericalError("adaptive quadrature on [" + std::to_string(a) + ", " +
                               std::to_string(b) + "] did not converge; achieved error " +
                               std::to_string(worst),
                           worst);
    }
    std::size_t worst_index = 0;
    double worst_scaled = -1.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      double scaled = 0.0;
      for (std::size_t c = 0; c < N; ++c) {
        scaled = std::max(scaled, panels[i].error[c] / tol[c]);
      }
      if (scaled > worst_scaled) {
        worst_scaled = scaled;
        worst_index = i;
      }
    }
    const auto split = panels[worst_index];
    const double mid = 0.5 * (split.a + split.b);
    panels[worst_index] = detail::gauss_kronrod<N>(f, split.a, mid);
    panels.push_back(detail::gauss_kronrod<N>(f, mid, split.b));
  }
}

// Golden-section search for the maximum of a unimodal f on [lo, hi].
// Returns {x, f(x)} once the bracket is narrower than `x_tol`.
template <class F>
std::array<double, 2> golden_section_max(F&& f, double lo, double hi, double x_tol) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > x_tol) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 >= f2 ? std::array<double, 2>{x1, f1} : std::array<double, 2>{x2, f2};
}

}  // namespace stoc::quad
