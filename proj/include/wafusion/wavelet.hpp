#pragma once

#include "wafusion/image.hpp"

#include <vector>

namespace wafusion {

// The four half-resolution planes of one orthonormal Haar analysis step.
// Naming follows X_pq = F_p^T X F_q with p indexing row filtering and q column
// filtering; F_L = (1/sqrt 2)[1,1], F_H = (1/sqrt 2)[1,-1].
struct SubBands {
    ImageBuffer ll, lh, hl, hh;
};

enum class PlaneSelect : unsigned {
    lh = 1u,
    hl = 2u,
    hh = 4u,
    ll = 8u,
    detail = lh | hl | hh,
    all = detail | ll,
};

SubBands dwt_haar(const ImageBuffer& img);
ImageBuffer iwt_haar(const SubBands& bands);

// Element-wise mean of the selected planes of a and b; planes outside the
// selection are copied from a. Default selection excludes LL (it travels
// through the diffusion path instead).
SubBands average_subbands(const SubBands& a, const SubBands& b,
                          PlaneSelect which = PlaneSelect::detail);

// levels[0] is the first analysis step; levels[k] re-analyzes levels[k-1].ll.
struct MultiLevelBands {
    std::vector<SubBands> levels;
    const ImageBuffer& deepest_ll() const { return levels.back().ll; }
};

MultiLevelBands dwt_multilevel(const ImageBuffer& img, uint32_t levels);

}  // namespace wafusion
