#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace grasstri {

/// Points of equal dimension stored contiguously, one row per point.
class PointCloud {
public:
    PointCloud() = default;
    explicit PointCloud(std::size_t dimension) : dim_(dimension) {}
    PointCloud(std::size_t dimension, std::vector<double> coords);

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
    bool empty() const noexcept { return coords_.empty(); }

    std::span<const double> operator[](std::size_t i) const {
        return {coords_.data() + i * dim_, dim_};
    }

    void push_back(std::span<const double> point);
    void reserve(std::size_t points) { coords_.reserve(points * dim_); }

    std::span<const double> coords() const noexcept { return coords_; }

    friend bool operator==(const PointCloud&, const PointCloud&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> coords_;
};

}  // namespace grasstri
