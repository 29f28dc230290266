#ifndef RASE_PARAMS_HPP
#define RASE_PARAMS_HPP

#include "rase/errors.hpp"

namespace rase {

/// Optical depth parameters of the ensemble.  All physics downstream depends
/// only on the dimensionless product alpha_l(); time and length units are the
/// caller's choice.
struct PhysicalParams {
    double alpha = 0.0;   // optical depth per unit length
    double length = 1.0;  // sample length l

    double alpha_l() const { return alpha * length; }

    void validate() const
    {
        if (alpha < 0.0)
            throw config_error("PhysicalParams: alpha must be >= 0");
        if (length <= 0.0)
            throw config_error("PhysicalParams: length must be > 0");
    }
};

} // namespace rase

#endif
