#pragma once

#include <cstddef>
#include <vector>

#include "nearfact/group.hpp"
#include "nearfact/rational.hpp"

namespace nearfact {

/// n x n 0-1 matrix M(H) with M(H)[i][j] = 1 iff g_j - g_i lies in H.
/// Stored sparsely, one sorted column-index list per row.  Every row and
/// column carries exactly |H| ones, and row 0 is the indicator of H itself.
class WalkMatrix {
public:
    WalkMatrix(const GroupSpec& group, const GroupSubset& source);

    std::size_t dimension() const { return rows_.size(); }
    std::size_t weight() const { return source_.size(); }
    const std::vector<ElementIndex>& row(std::size_t i) const { return rows_[i]; }
    const GroupSubset& source() const { return source_; }
    const GroupSpec& group() const { return source_.group(); }

    QMatrix to_rational() const;

private:
    GroupSubset source_;
    std::vector<std::vector<ElementIndex>> rows_;
};

}  // namespace nearfact
