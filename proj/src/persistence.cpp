#include "grasstri/persistence.hpp"

#include <algorithm>
#include <string>

#include "grasstri/error.hpp"

namespace grasstri {

void BoundaryMatrix::push_back(std::span<const ColumnIndex> rows, int dim, double value) {
    rows_.insert(rows_.end(), rows.begin(), rows.end());
    offsets_.push_back(rows_.size());
    dims_.push_back(static_cast<std::int8_t>(dim));
    values_.push_back(value);
    max_dim_ = std::max(max_dim_, dim);
}

namespace {

std::string describe(const SimplexView& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(s.vertices[i]);
    }
    return out + "]";
}

}  // namespace

BoundaryMatrix build_boundary(const Filtration& filtration) {
    const std::size_t n = filtration.size();
    if (n >= std::numeric_limits<ColumnIndex>::max())
        throw ResourceLimit("filtration too large for 32-bit column indices");

    // Per dimension, positions sorted lexicographically by vertex tuple.
    std::vector<std::vector<ColumnIndex>> by_dim;
    for (std::size_t i = 0; i < n; ++i) {
        const auto d = static_cast<std::size_t>(filtration.dim(i));
        if (by_dim.size() <= d) by_dim.resize(d + 1);
        by_dim[d].push_back(static_cast<ColumnIndex>(i));
    }
    auto lex_less = [&](ColumnIndex a, ColumnIndex b) {
        const auto va = filtration[a].vertices;
        const auto vb = filtration[b].vertices;
        return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
    };
    for (auto& list : by_dim) std::sort(list.begin(), list.end(), lex_less);

    BoundaryMatrix matrix;
    std::vector<Vertex> facet;
    std::vector<ColumnIndex> rows;
    for (std::size_t j = 0; j < n; ++j) {
        const SimplexView s = filtration[j];
        const int d = s.dim();
        rows.clear();
        if (d > 0) {
            const auto& candidates = by_dim[static_cast<std::size_t>(d - 1)];
            for (std::size_t drop = 0; drop <= static_cast<std::size_t>(d); ++drop) {
                facet.clear();
                for (std::size_t i = 0; i < s.vertices.size(); ++i)
                    if (i != drop) facet.push_back(s.vertices[i]);
                auto it = std::lower_bound(candidates.begin(), candidates.end(), facet,
                                           [&](ColumnIndex c, const std::vector<Vertex>& key) {
                                               const auto v = filtration[c].vertices;
                                               return std::lexicographical_compare(
                                                   v.begin(), v.end(), key.begin(), key.end());
                                           });
                const bool found = it != candidates.end() &&
                                   std::equal(facet.begin(), facet.end(),
                                              filtration[*it].vertices.begin(),
                                              filtration[*it].vertices.end());
                if (!found || *it >= j) {
                    throw MissingFace("facet of simplex " + describe(s) + " at position " +
                                      std::to_string(j) +
                                      (found ? " appears after it" : " is missing"));
                }
                rows.push_back(*it);
            }
            std::sort(rows.begin(), rows.end());
        }
        matrix.push_back(rows, d, s.value);
    }
    return matrix;
}

namespace {

constexpr ColumnIndex none = std::numeric_limits<ColumnIndex>::max();

class Reducer {
public:
    Reducer(const BoundaryMatrix& m, bool twist) : m_(m), twist_(twist), pivot_slot_(m.size(), none) {
        if (twist_) cleared_.assign(m.size(), false);
    }

    void reduce_column(ColumnIndex j) {
        if (twist_ && cleared_[j]) return;
        const auto col = m_.column(j);
        working_.assign(col.begin(), col.end());
        while (!working_.empty()) {
            const ColumnIndex low = working_.back();
            const ColumnIndex slot = pivot_slot_[low];
            if (slot == none) {
                pivot_slot_[low] = static_cast<ColumnIndex>(slots_.size());
                slots_.push_back({j, working_});
                if (twist_) cleared_[low] = true;
                return;
            }
            const auto& other = slots_[slot].column;
            scratch_.clear();
            std::set_symmetric_difference(working_.begin(), working_.end(), other.begin(),
                                          other.end(), std::back_inserter(scratch_));
            working_.swap(scratch_);
        }
    }

    Pairing finish(int reduced_dim) const {
        Pairing out;
        std::vector<bool> paired(m_.size(), false);
        out.pairs.reserve(slots_.size());
        for (std::size_t row = 0; row < pivot_slot_.size(); ++row) {
            if (pivot_slot_[row] == none) continue;
            const ColumnIndex death = slots_[pivot_slot_[row]].owner;
            out.pairs.push_back({static_cast<ColumnIndex>(row), death});
            paired[row] = true;
            paired[death] = true;
        }
        for (std::size_t j = 0; j < m_.size(); ++j) {
            const bool in_range = m_.dim(j) < reduced_dim ||
                                  (m_.dim(j) == reduced_dim && reduced_dim == m_.max_dim());
            if (in_range && !paired[j]) out.essential.push_back(static_cast<ColumnIndex>(j));
        }
        return out;
    }

private:
    struct Slot {
        ColumnIndex owner;
        std::vector<ColumnIndex> column;
    };

    const BoundaryMatrix& m_;
    bool twist_;
    std::vector<ColumnIndex> pivot_slot_;
    std::vector<bool> cleared_;
    std::vector<Slot> slots_;
    std::vector<ColumnIndex> working_;
    std::vector<ColumnIndex> scratch_;
};

}  // namespace

Pairing reduce(const BoundaryMatrix& matrix, Reduction strategy, int max_dim) {
    const int top = matrix.max_dim();
    const int limit = max_dim < 0 ? top : std::min(top, max_dim + 1);
    const std::size_t n = matrix.size();
    Reducer reducer(matrix, strategy == Reduction::twist);
    if (strategy == Reduction::standard) {
        for (std::size_t j = 0; j < n; ++j)
            if (matrix.dim(j) <= limit) reducer.reduce_column(static_cast<ColumnIndex>(j));
    } else {
        std::vector<std::vector<ColumnIndex>> by_dim(static_cast<std::size_t>(limit + 1));
        for (std::size_t j = 0; j < n; ++j)
            if (matrix.dim(j) <= limit && matrix.dim(j) > 0)
                by_dim[static_cast<std::size_t>(matrix.dim(j))].push_back(static_cast<ColumnIndex>(j));
        for (int d = limit; d >= 1; --d)
            for (ColumnIndex j : by_dim[static_cast<std::size_t>(d)]) reducer.reduce_column(j);
    }
    return reducer.finish(limit);
}

Barcode barcodes(const Filtration& filtration, const Pairing& pairing, int max_dim) {
    if (max_dim < 0) throw InvalidArgument("max_dim must be nonnegative");
    Barcode bc;
    bc.degrees.resize(static_cast<std::size_t>(max_dim + 1));
    for (const auto& p : pairing.pairs) {
        const int deg = filtration.dim(p.birth);
        if (deg > max_dim) continue;
        const double b = filtration.value(p.birth);
        const double d = filtration.value(p.death);
        if (d > b) bc.degrees[static_cast<std::size_t>(deg)].push_back({b, d});
    }
    for (ColumnIndex j : pairing.essential) {
        const int deg = filtration.dim(j);
        if (deg > max_dim) continue;
        bc.degrees[static_cast<std::size_t>(deg)].push_back(
            {filtration.value(j), std::numeric_limits<double>::infinity()});
    }
    for (auto& list : bc.degrees) {
        std::sort(list.begin(), list.end(), [](const Interval& a, const Interval& b) {
            return a.birth != b.birth ? a.birth < b.birth : a.death < b.death;
        });
    }
    return bc;
}

Barcode barcodes(const Filtration& filtration, int max_dim, Reduction strategy) {
    if (max_dim < 0) throw InvalidArgument("max_dim must be nonnegative");
    const BoundaryMatrix matrix = build_boundary(filtration);
    return barcodes(filtration, reduce(matrix, strategy, max_dim), max_dim);
}

BettiProfile betti_at(const Barcode& barcode, double r) {
    BettiProfile p;
    p.betti.assign(barcode.size(), 0);
    for (std::size_t d = 0; d < barcode.size(); ++d)
        for (const auto& iv : barcode[d])
            if (iv.birth <= r && r < iv.death) ++p.betti[d];
    return p;
}

}  // namespace grasstri
