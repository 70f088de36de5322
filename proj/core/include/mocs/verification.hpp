#pragma once

#include "mocs/constructions.hpp"
#include "mocs/correlation.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mocs {

enum class FamilyKind { gcs, mocs };

std::string to_string(FamilyKind kind);

// A correlation sum that should have been zero (or N*L at the in-phase
// position) but was not: rho(C^{set_a}, C^{set_b}; shift).
struct Violation {
    std::size_t set_a;
    std::size_t set_b;
    std::ptrdiff_t shift;
    CorrelationValue value;
};

struct VerificationReport {
    FamilyKind kind = FamilyKind::gcs;
    ZeroTestMode mode;
    bool passed = false;
    // In-phase autocorrelation sum of set 0; N*L for any well-formed set.
    std::int64_t peak = 0;
    std::vector<Violation> violations;

    Symbol q = 0;
    std::size_t set_size = 0;
    std::size_t flock_size = 0;
    std::size_t length = 0;

    // M <= N.
    bool set_size_bound_holds = true;
    // Every value is zero-tested in both modes; disagreements are counted here
    // independently of which mode decides `passed`.
    std::size_t values_checked = 0;
    std::size_t mode_disagreements = 0;
};

// sum_n rho(c_n; u) = 0 for every 0 < |u| < L and N*L at u = 0, every shift checked.
VerificationReport verify_gcs(const ComplementarySet& set, ZeroTestMode mode = ZeroTestMode::exact());

// Every set is a GCS, every ordered pair of distinct sets has zero set
// cross-correlation at every |u| < L including u = 0, and M <= N.
VerificationReport verify_mocs(const MocsFamily& family, ZeroTestMode mode = ZeroTestMode::exact());

// (a - b) mod q as a binary sequence when every difference is 0 or q/2.
std::optional<QarySequence> half_alphabet_difference(const QarySequence& a, const QarySequence& b);

// For every pair of distinct sets and every flock index, the member difference
// is (q/2) d with d binary of Hamming weight exactly L/2. Only defined for
// families carrying theorem-2 or corollary-1 provenance.
bool check_weight_lemma(const MocsFamily& family);

} // namespace mocs
