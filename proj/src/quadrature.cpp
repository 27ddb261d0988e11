#include "hkdehn/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include <fmt/core.h>

#include "hkdehn/errors.hpp"

namespace hkdehn {

namespace {

// Kronrod abscissae on [0,1); odd indices are shared with the 7-point
// Gauss rule, index 7 is the centre.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gauss_kronrod(const std::function<double(double)>& fn, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = fn(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = fn(centre - dx) + fn(centre + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  if (!std::isfinite(kronrod)) throw QuadratureError(fmt::format("non-finite integrand on [{}, {}]", a, b));
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& fn, double a, double b, double tol,
                     std::size_t max_panels) {
  if (!(a <= b)) throw std::invalid_argument("integrate requires a <= b");
  if (!(tol > 0)) throw std::invalid_argument("integrate requires a positive tolerance");
  if (a == b) return {0.0, 0.0, 0};

  std::vector<Panel> heap{gauss_kronrod(fn, a, b)};
  double err = heap.front().err;
  std::size_t panels = 1;

  for (;;) {
    while (err > tol) {
      if (panels >= max_panels)
        throw QuadratureError(fmt::format("tolerance {} not met on [{}, {}] after {} panels (err {})", tol, a, b,
                                          panels, err));
      std::pop_heap(heap.begin(), heap.end());
      const Panel worst = heap.back();
      heap.pop_back();
      const double mid = 0.5 * (worst.a + worst.b);
      if (!(mid > worst.a && mid < worst.b))
        throw QuadratureError(fmt::format("panel [{}, {}] cannot be split further", worst.a, worst.b));
      const Panel left = gauss_kronrod(fn, worst.a, mid);
      const Panel right = gauss_kronrod(fn, mid, worst.b);
      for (const Panel& half : {left, right}) {
        heap.push_back(half);
        std::push_heap(heap.begin(), heap.end());
      }
      err += left.err + right.err - worst.err;
      ++panels;
    }
    // Re-sum from scratch; the running error total drifts by rounding.
    QuadResult out{0.0, 0.0, panels};
    for (const Panel& p : heap) {
      out.value += p.value;
      out.err += p.err;
    }
    if (out.err <= tol) return out;
    err = out.err;
  }
}

}  // namespace hkdehn
