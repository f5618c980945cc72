#include "grasstri/point_cloud.hpp"

#include <string>

#include "grasstri/error.hpp"

namespace grasstri {

PointCloud::PointCloud(std::size_t dimension, std::vector<double> coords)
    : dim_(dimension), coords_(std::move(coords)) {
    if (dim_ == 0 ? !coords_.empty() : coords_.size() % dim_ != 0)
        throw DimensionMismatch("coordinate count is not a multiple of the point dimension");
}

void PointCloud::push_back(std::span<const double> point) {
    if (empty() && dim_ == 0) dim_ = point.size();
    if (point.size() != dim_) {
        throw DimensionMismatch("point of dimension " + std::to_string(point.size()) +
                                " added to cloud of dimension " + std::to_string(dim_));
    }
    coords_.insert(coords_.end(), point.begin(), point.end());
}

}  // namespace grasstri
