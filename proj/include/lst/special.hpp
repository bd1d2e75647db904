#pragma once

#include <functional>
#include <optional>

namespace lst::special {

// abs_floor > 0 relaxes tol so that the absolute error target never drops below abs_floor
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-13,
                 double abs_floor = 0.0);

// 2F1(1 - eta, 5/2; 7/2; z) for z <= 0
double hyp2f1_family(double eta, double z);

// I(w; eta) = int_w^1 (x - w)^{3/2} x^{eta - 1} dx
double integral_I_w(double w, double eta);
double integral_I_w_quadrature(double w, double eta);
double integral_I_half(double eta);  // I(0.5; eta) via the Gamma form

// I(a, b; eta) = int_a^b (x - a)^{3/2} x^{eta - 1} dx
double integral_I_ab(double a, double b, double eta);
double integral_I_ab_quadrature(double a, double b, double eta);
std::optional<double> integral_I_ab_closed(double a, double b, double eta);

double gamma(double x);
double beta(double a, double b);

}  // namespace lst::special
