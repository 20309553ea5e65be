#include "nearfact/walk_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace nearfact {

WalkMatrix::WalkMatrix(const GroupSpec& group, const GroupSubset& source) : source_(source) {
    if (source.group() != group) throw std::invalid_argument("subset belongs to a different group");
    std::size_t n = static_cast<std::size_t>(group.order());
    std::vector<ElementIndex> members = source.indices();
    rows_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& row = rows_[i];
        row.reserve(members.size());
        for (ElementIndex h : members) row.push_back(group.add(static_cast<ElementIndex>(i), h));
        std::sort(row.begin(), row.end());
    }
}

QMatrix WalkMatrix::to_rational() const {
    std::size_t n = dimension();
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (ElementIndex j : rows_[i]) m.at(i, j) = 1;
    return m;
}

}  // namespace nearfact
