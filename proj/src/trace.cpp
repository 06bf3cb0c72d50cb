#include "pearlsim/trace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pearlsim {

double PowerTrace::power_at(double t_s) const {
    if (segments.empty() || t_s < segments.front().start_s) return 0.0;
    auto it = std::upper_bound(segments.begin(), segments.end(), t_s,
                               [](double t, const Segment& s) { return t < s.start_s; });
    return std::prev(it)->power_mw * 1e-3;
}

double PowerTrace::next_change_after(double t_s) const {
    auto it = std::upper_bound(segments.begin(), segments.end(), t_s,
                               [](double t, const Segment& s) { return t < s.start_s; });
    if (it == segments.end()) return std::numeric_limits<double>::infinity();
    return it->start_s;
}

PowerTrace constant_trace(double power_w) {
    if (power_w < 0.0) throw std::invalid_argument("power must be non-negative");
    PowerTrace t;
    t.segments.push_back({0.0, power_w * 1e3});
    return t;
}

PowerTrace daylight_trace(DaylightKind kind, double peak_base_w, double day_base_s,
                          double step_s) {
    if (day_base_s <= 0.0) throw std::invalid_argument("day length must be positive");
    if (step_s <= 0.0) throw std::invalid_argument("step must be positive");
    if (peak_base_w < 0.0) throw std::invalid_argument("peak power must be non-negative");

    double day = day_base_s;
    double peak = peak_base_w;
    switch (kind) {
        case DaylightKind::short_day: day *= 0.33; peak *= 0.8; break;
        case DaylightKind::middle_day: day *= 0.66; peak *= 1.0; break;
        case DaylightKind::long_day: day *= 1.0; peak *= 1.2; break;
    }

    PowerTrace t;
    const auto n = static_cast<std::size_t>(std::llround(std::floor(day / step_s)));
    for (std::size_t k = 0; k < n; ++k) {
        const double start = static_cast<double>(k) * step_s;
        double p = peak * std::sin(M_PI * start / day);
        if (k + 1 == n) p = 0.0;  // dusk; the last segment holds forever
        t.segments.push_back({start, std::max(0.0, p) * 1e3});
    }
    if (t.segments.empty()) t.segments.push_back({0.0, 0.0});
    return t;
}

PowerTrace rf_obstacle_trace(double base_w, double attenuated_w, double period_s,
                             double obstacle_s, double total_s) {
    if (obstacle_s >= period_s)
        throw std::invalid_argument("obstacle duration must be shorter than the period");
    if (attenuated_w > base_w)
        throw std::invalid_argument("attenuated power cannot exceed base power");
    if (attenuated_w < 0.0) throw std::invalid_argument("power must be non-negative");
    if (total_s <= 0.0) throw std::invalid_argument("total duration must be positive");

    PowerTrace t;
    const double clear_s = period_s - obstacle_s;
    double start = 0.0;
    while (start < total_s) {
        t.segments.push_back({start, base_w * 1e3});
        if (start + clear_s >= total_s) break;
        t.segments.push_back({start + clear_s, attenuated_w * 1e3});
        start += period_s;
    }
    // Merge the degenerate no-attenuation case back into one segment run.
    if (attenuated_w == base_w) {
        PowerTrace c;
        c.segments.push_back({0.0, base_w * 1e3});
        return c;
    }
    return t;
}

PowerTrace load_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open trace file " + path);
    PowerTrace t;
    std::string line;
    std::size_t line_no = 0;
    double prev_time = -std::numeric_limits<double>::infinity();
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        double time_s = 0.0, power_mw = 0.0;
        char extra = 0;
        const int got = std::sscanf(line.c_str(), "%lf,%lf %c", &time_s, &power_mw, &extra);
        if (got != 2) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 'time_s,power_mW'");
        }
        if (time_s <= prev_time) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": segment times must be strictly increasing");
        }
        if (power_mw < 0.0) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": power must be non-negative");
        }
        if (t.segments.empty() && time_s != 0.0) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": first segment must start at time 0");
        }
        prev_time = time_s;
        t.segments.push_back({time_s, power_mw});
    }
    if (t.segments.empty())
        throw std::runtime_error(path + ": trace file holds no segments");
    return t;
}

void save_trace(const PowerTrace& trace, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "# time_s,power_mW\n";
    char buf[64];
    for (const auto& s : trace.segments) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.start_s, s.power_mw);
        out << buf;
    }
}

double trace_energy_j(const PowerTrace& trace, double t_end_s) {
    double e = 0.0;
    for (std::size_t i = 0; i < trace.segments.size(); ++i) {
        const double start = trace.segments[i].start_s;
        if (start >= t_end_s) break;
        const double end = (i + 1 < trace.segments.size())
                               ? std::min(trace.segments[i + 1].start_s, t_end_s)
                               : t_end_s;
        e += trace.segments[i].power_mw * 1e-3 * (end - start);
    }
    return e;
}

}  // namespace pearlsim
