#include "rase/special_functions.hpp"

#include <cmath>
#include <complex>
#include <limits>

namespace rase {

namespace {

constexpr double kPi = 3.14159265358979323846;

double si_series(double x)
{
    // Si(x) = sum_k (-1)^k x^(2k+1) / ((2k+1)(2k+1)!)
    double term = x;
    double sum = x;
    const double x2 = x * x;
    for (int k = 1; k < 60; ++k) {
        term *= -x2 * (2.0 * k - 1.0) / ((2.0 * k) * (2.0 * k + 1.0) * (2.0 * k + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum))
            break;
    }
    return sum;
}

// E1(z) by the even-contracted continued fraction (modified Lentz).
// Converges quickly for |z| >~ a few; used here only on the imaginary axis.
std::complex<double> e1_continued_fraction(std::complex<double> z)
{
    const double tiny = 1e-300;
    std::complex<double> b = z + 1.0;
    std::complex<double> c = 1.0 / tiny;
    std::complex<double> d = 1.0 / b;
    std::complex<double> f = d;
    for (int k = 1; k < 400; ++k) {
        const double a = -static_cast<double>(k) * static_cast<double>(k);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const std::complex<double> delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            break;
    }
    return f * std::exp(-z);
}

} // namespace

double sine_integral(double x)
{
    if (x < 0.0)
        return -sine_integral(-x);
    if (x <= 8.0)
        return si_series(x);
    // Si(x) = pi/2 + Im E1(ix)
    const std::complex<double> e1 = e1_continued_fraction(std::complex<double>(0.0, x));
    return 0.5 * kPi + e1.imag();
}

} // namespace rase
