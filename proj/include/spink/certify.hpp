#pragma once

// Certificates for realization, non-existence and guaranteed-existence
// statements about spin^k and pin^{k±} structures.

#include <optional>
#include <string>

#include "spink/certificate.hpp"
#include "spink/exact.hpp"

namespace spink {

/// Value of ((−1)^{m+1}/(2m−1)!·s_m + 1/(2(4m−1)!))·P2 − Q/(4m−1)!.
Rational condition_ii(int m, const Integer& P2, const Integer& Q);
/// P2/(2m−1)!².
Rational condition_iii(int m, const Integer& P2);

/// σ = s_mm·P2 + s_2m·Q must be an integer and conditions (ii), (iii) dyadic.
/// Failures are recorded in the certificate, never thrown; the verdict is
/// `established` exactly when all three hold.
Certificate realization_conditions(int m, const Integer& P2, const Integer& Q);

/// Data for the diagonal Poincaré duality algebra Q[α_1..α_σ]/(α_i² = α_j², α_iα_j = 0):
/// p_m = Σ a_i α_i with Σ a_i² = P2 and p_{2m} = Q·α_1².
struct RealizationWitness {
    int m = 1;
    Integer sigma;
    Integer P2;
    Integer Q;
    FourSquares four_square{};
    std::string algebra_note;

    Json to_json() const;
    friend bool operator==(const RealizationWitness&, const RealizationWitness&) = default;
};

/// Throws std::invalid_argument unless sigma > 4 and P2 ≥ 0.
RealizationWitness poincare_witness(const Integer& sigma, const Integer& P2, const Integer& Q, int m = 1);

/// Deterministic search: odd σ ≥ max(5, sigma_min) ascending, then P2 over
/// positive multiples of a base that makes (iii) and the P2-part of (ii) dyadic
/// and s_mm·P2 an even integer; Q an odd multiple of a base that makes s_2m·Q
/// odd. Throws std::invalid_argument when m is not a power of two and
/// std::runtime_error when the multiplier bound is exhausted.
RealizationWitness realization_search(int m, const Integer& sigma_min, long max_multiplier = 1'000'000);

/// 4m − 5 − 2ν₂(m) − floor(k/2).
long signature_bound(long m, long k);
/// Excluded iff ν₂(2σ) < signature_bound(m, k). Throws std::invalid_argument
/// when k ≥ 2m, k < 1, m < 1 or σ = 0.
Certificate signature_bound_verdict(long m, long k, const Integer& sigma);
/// First dimension 8m (m a power of two) where the odd-signature bound
/// excludes spin^k. Specific to this criterion, not a minimal dimension.
long bound_exclusion_dimension(long k);

/// The 8-manifold with ∫p_1² = x², ∫p_2 = y, x = −168a + 240,
/// y = 4032a² − 11520a + 8235 and σ = 1 is not spin^h.
Certificate nonspinh8_certificate(const Integer& a);

enum class LiftVariant { plain, spin4_plus, spin4_minus };
/// ½(p1_M − p1_E) for plain; ½(p1_M − p1_E ∓ 2·euler_E) for the Λ^± variants.
/// Throws std::domain_error on an odd difference.
Integer w4_lift(const Integer& p1_M, const Integer& p1_E, LiftVariant variant, const Integer& euler_E = 0);

/// "pin^-", "pin^+" for rank 1; "pin^{3+}", "pin^{5-}", ...
std::string pin_structure_name(long k, char sign);

struct StructureRow {
    int n = 0;
    long k = 0;  ///< n − α(n)
    std::string orientable;
    std::string pin;

    friend bool operator==(const StructureRow&, const StructureRow&) = default;
};

/// Structures guaranteed on every n-manifold (orientable, resp. arbitrary). n ≥ 2.
StructureRow guaranteed_structures(int n);

/// Inverse of spin_structure_name; nullopt for other claims.
std::optional<long> spin_structure_rank(const std::string& claim);

/// Established spin^k certificate resting on a cited assumption about `manifold`.
Certificate declared_structure(const std::string& manifold, long k, std::optional<long> dimension,
                               const std::string& reason);

/// spin × spin^k → spin^k, spin^k × spin^l → spin^{k+l}. Existence only.
/// Throws std::invalid_argument unless both inputs are established spin^k claims.
Certificate product_combinator(const Certificate& a, const Certificate& b);
/// spin^k # spin^l → spin^{max(k, l)}. Same preconditions as the product.
Certificate connected_sum_combinator(const Certificate& a, const Certificate& b);

/// From "M is orientable and not spin^k": M × Klein bottle is neither pin^{k+}
/// nor pin^{k−}. Throws std::invalid_argument unless the input excludes a spin^k claim.
Certificate klein_product_pin_obstruction(const Certificate& non_spin_k);

}  // namespace spink
