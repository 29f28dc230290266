#ifndef RASE_SPECIAL_FUNCTIONS_HPP
#define RASE_SPECIAL_FUNCTIONS_HPP

namespace rase {

/// Sine integral Si(x) = int_0^x sin(t)/t dt.
/// Power series for |x| <= 8, continued fraction for E1(ix) beyond.
/// Absolute accuracy better than 1e-12 over the full range.
double sine_integral(double x);

} // namespace rase

#endif
