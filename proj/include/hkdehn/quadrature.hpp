#ifndef HKDEHN_QUADRATURE_HPP
#define HKDEHN_QUADRATURE_HPP

#include <cstddef>
#include <functional>

namespace hkdehn {

/// Default absolute tolerance for every integral in the library.
inline constexpr double kDefaultTol = 1e-12;
inline constexpr std::size_t kDefaultPanelBudget = 1'000'000;

struct QuadResult {
  double value = 0.0;
  double err = 0.0;  ///< estimated absolute error, <= requested tolerance
  std::size_t panels = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of fn over [a, b].
/// The panel with the largest |K15 - G7| is bisected until the summed
/// estimate is within `tol`. Throws QuadratureError once `max_panels` is
/// exhausted or a panel can no longer be split.
QuadResult integrate(const std::function<double(double)>& fn, double a, double b, double tol = kDefaultTol,
                     std::size_t max_panels = kDefaultPanelBudget);

}  // namespace hkdehn

#endif  // HKDEHN_QUADRATURE_HPP
