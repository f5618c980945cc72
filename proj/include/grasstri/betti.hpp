#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace grasstri {

/// Mod-2 Betti numbers indexed by homological degree.
struct BettiProfile {
    std::vector<std::size_t> betti;

    std::size_t size() const noexcept { return betti.size(); }
    std::size_t operator[](std::size_t degree) const {
        return degree < betti.size() ? betti[degree] : 0;
    }

    /// Space separated, e.g. "1 1 2 1 1".
    std::string to_string() const;
    static BettiProfile parse(const std::string& text);

    friend bool operator==(const BettiProfile&, const BettiProfile&) = default;
};

}  // namespace grasstri
