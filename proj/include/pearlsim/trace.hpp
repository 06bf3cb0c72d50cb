#ifndef PEARLSIM_TRACE_HPP
#define PEARLSIM_TRACE_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace pearlsim {

// Piecewise-constant ambient power: each segment holds from its start time
// until the next segment begins; the last segment extends forever. Powers are
// stored in milliwatts, the file format's unit, so that saving and loading a
// trace is an exact identity.
struct PowerTrace {
    struct Segment {
        double start_s = 0.0;
        double power_mw = 0.0;
        bool operator==(const Segment&) const = default;
    };
    std::vector<Segment> segments;

    double power_at(double t_s) const;  // watts
    // Start time of the first segment after t_s, or infinity when t_s is in
    // the final segment.
    double next_change_after(double t_s) const;

    bool operator==(const PowerTrace&) const = default;
};

enum class DaylightKind { short_day, middle_day, long_day };

PowerTrace constant_trace(double power_w);

// Half-sine day profile sampled at segment starts; the final segment holds
// zero so the night stays dark. The kinds scale a shared (day, peak) base:
// short (0.33, 0.8x), middle (0.66, 1.0x), long (1.0, 1.2x).
PowerTrace daylight_trace(DaylightKind kind, double peak_base_w, double day_base_s,
                          double step_s);

// Square wave: base power with a periodic attenuation window, truncated at
// total_s. Models an obstacle moving through an RF harvesting path.
PowerTrace rf_obstacle_trace(double base_w, double attenuated_w, double period_s,
                             double obstacle_s, double total_s);

// Text format: one "time_s,power_mW" pair per line, '#' comments allowed.
// Round-trips exactly. Parse errors carry the offending line number.
PowerTrace load_trace(const std::string& path);
void save_trace(const PowerTrace& trace, const std::string& path);

// Harvestable energy over [0, t_end]; feeds the conservation ledger.
double trace_energy_j(const PowerTrace& trace, double t_end_s);

}  // namespace pearlsim

#endif
