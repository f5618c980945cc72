#include "grasstri/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "grasstri/error.hpp"

namespace grasstri {

double Window::midpoint() const noexcept {
    if (std::isinf(upper)) return lower + 1.0;
    return lower + 0.5 * (upper - lower);
}

const Window& WindowReport::widest() const {
    if (windows.empty()) throw InvalidArgument("report has no windows");
    const Window* best = &windows.front();
    for (const auto& w : windows)
        if (w.width() > best->width()) best = &w;
    return *best;
}

WindowReport matching_windows(const Barcode& barcode, const BettiProfile& target, int top_dim) {
    if (top_dim < 0) throw InvalidArgument("top_dim must be nonnegative");
    if (target.size() < static_cast<std::size_t>(top_dim + 1))
        throw InvalidArgument("target profile must cover degrees 0.." + std::to_string(top_dim));

    WindowReport report;
    report.top_dim = top_dim;
    report.target.betti.assign(target.betti.begin(), target.betti.begin() + top_dim + 1);

    auto& cv = report.critical_values;
    const std::size_t degrees = std::min(barcode.size(), static_cast<std::size_t>(top_dim + 1));
    for (std::size_t d = 0; d < degrees; ++d) {
        for (const auto& iv : barcode[d]) {
            cv.push_back(iv.birth);
            if (!iv.infinite()) cv.push_back(iv.death);
        }
    }
    std::sort(cv.begin(), cv.end());
    cv.erase(std::unique(cv.begin(), cv.end()), cv.end());

    // Sweep: events sorted by parameter, +1 at a birth and -1 at a death.
    struct Event {
        double at;
        std::size_t degree;
        int delta;
    };
    std::vector<Event> events;
    for (std::size_t d = 0; d < degrees; ++d) {
        for (const auto& iv : barcode[d]) {
            events.push_back({iv.birth, d, +1});
            if (!iv.infinite()) events.push_back({iv.death, d, -1});
        }
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.at < b.at; });
    std::vector<long long> current(static_cast<std::size_t>(top_dim + 1), 0);
    std::size_t next_event = 0;
    auto matches = [&](double r) {
        while (next_event < events.size() && events[next_event].at <= r) {
            current[events[next_event].degree] += events[next_event].delta;
            ++next_event;
        }
        for (int d = 0; d <= top_dim; ++d)
            if (current[static_cast<std::size_t>(d)] !=
                static_cast<long long>(report.target[static_cast<std::size_t>(d)]))
                return false;
        return true;
    };

    // Pieces [0, c0), [c0, c1), ..., [c_last, inf). The leading piece only
    // exists when the first critical value is positive.
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> starts;
    if (cv.empty() || cv.front() > 0.0) starts.push_back(0.0);
    starts.insert(starts.end(), cv.begin(), cv.end());
    for (std::size_t i = 0; i < starts.size(); ++i) {
        const double lo = starts[i];
        const double hi = i + 1 < starts.size() ? starts[i + 1] : inf;
        if (!matches(lo)) continue;
        if (!report.windows.empty() && report.windows.back().upper == lo)
            report.windows.back().upper = hi;
        else
            report.windows.push_back({lo, hi});
    }
    return report;
}

Filtration export_complex(const Filtration& filtration, double r) {
    if (r < 0.0) throw InvalidArgument("export parameter must be nonnegative");
    return filtration.prefix(r);
}

}  // namespace grasstri
