#pragma once

#include <string>

#include "spink/certificate.hpp"
#include "spink/exact.hpp"

namespace spink {

/// Rationally highly connected manifold model of dimension 8m: rational
/// cohomology only in degrees 0, 4m and 8m, so the only rational Pontryagin
/// numbers are P2 = ∫p_m² and Q = ∫p_{2m}.
///
/// In the realization conditions x = P2 and y = Q. The dimension-8 family is
/// usually written with p_1 = x·α, in which case P2 = x².
struct RHCModel {
    long m = 1;
    long middle_betti = 1;
    Integer sigma = 0;
    Integer P2 = 0;
    Integer Q = 0;

    long dimension() const { return 8 * m; }

    /// Throws std::invalid_argument when m < 1, middle_betti < 0 or
    /// |sigma| > middle_betti.
    void validate() const;

    Json to_json() const;
    /// Validates after parsing; errors name the offending field.
    static RHCModel from_json(const Json& j);

    friend bool operator==(const RHCModel&, const RHCModel&) = default;
};

}  // namespace spink
