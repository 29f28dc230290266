#ifndef RASE_SEQUENCE_HPP
#define RASE_SEQUENCE_HPP

#include <array>
#include <optional>
#include <vector>

#include "rase/grid.hpp"

namespace rase {

enum class Regime { Ground, Excited };

inline Regime toggled(Regime r) { return r == Regime::Ground ? Regime::Excited : Regime::Ground; }
inline const char* regime_name(Regime r) { return r == Regime::Ground ? "ground" : "excited"; }

enum class EventKind { PiPulse, WeakInput };

struct PulseEvent {
    double time = 0.0;
    EventKind kind = EventKind::PiPulse;
    double amplitude = 0.0;                  // weak-input mean amplitude (per-bin units)
    std::array<double, 2> transverse_k{0.0, 0.0}; // zero in 1-D runs
};

/// Inter-pulse interval with its linearized regime label.
struct Region {
    double t_start = 0.0;
    double t_end = 0.0; // clipped to the grid window
    Regime regime = Regime::Ground;
};

struct PulseSequence {
    std::vector<PulseEvent> events;
    std::vector<Region> regions;

    std::vector<const PulseEvent*> pi_pulses() const;
};

/// Labels the inter-event intervals.  Atoms start in the ground state; each
/// ideal pi pulse toggles ground <-> excited.  Weak inputs do not toggle.
/// The first region starts at the first event (or at window start when the
/// event list is empty) and the last one is clipped at window end.
///
/// Errors: unordered or overlapping events, pi pulses off bin boundaries.
PulseSequence build_sequence(const std::vector<PulseEvent>& events, const SimulationGrid& grid);

} // namespace rase

#endif
