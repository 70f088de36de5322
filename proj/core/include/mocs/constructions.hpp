#pragma once

#include "mocs/gbf.hpp"
#include "mocs/sequence_set.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mocs {

// Partition I_1, ..., I_k of {1, ..., m-1} together with the bijections
// pi_alpha : {1..m_alpha} -> I_alpha, and the length parameter t. Each part is
// stored in pi order, so parts()[a][b] is pi_{a+1}(b+1).
class PartitionPlan {
public:
    PartitionPlan(unsigned m, std::vector<std::vector<unsigned>> parts, unsigned t);

    unsigned m() const noexcept { return m_; }
    unsigned t() const noexcept { return t_; }
    std::size_t k() const noexcept { return parts_.size(); }
    const std::vector<std::vector<unsigned>>& parts() const noexcept { return parts_; }

    // 1-based on both arguments, as written in the constructions.
    unsigned pi(std::size_t alpha, std::size_t beta) const;
    std::size_t part_size(std::size_t alpha) const;

    // pi_1(1..m_1), pi_2(1..m_2), ..., pi_k(1..m_k).
    std::vector<unsigned> traversal() const;

    // 2^(m-1) + 2^t.
    std::size_t length() const noexcept { return (std::size_t{1} << (m_ - 1)) + (std::size_t{1} << t_); }

    PartitionPlan with_t(unsigned t) const { return PartitionPlan(m_, parts_, t); }

    bool operator==(const PartitionPlan&) const = default;

private:
    unsigned m_;
    std::vector<std::vector<unsigned>> parts_;
    unsigned t_;
};

// t = m_1 + ... + m_{alpha'-1} + beta' with 1 <= beta' <= m_{alpha'}, and k'
// the largest index with m_1 + ... + m_{k'} <= t. All indices 1-based.
struct TDecomposition {
    std::size_t alpha_prime;
    std::size_t beta_prime;
    std::size_t k_prime;

    bool operator==(const TDecomposition&) const = default;
};

enum class Construction { theorem1, theorem2, corollary1, unspecified };

std::string to_string(Construction construction);

struct ConstructionParameters {
    Construction construction;
    Symbol q;
    PartitionPlan plan;
    std::vector<Symbol> g;  // g_0, g_1, ..., g_m

    bool operator==(const ConstructionParameters&) const = default;
};

// M complementary sets sharing (q, N, L), in set index order p = 0..M-1.
// The set-size bound M <= N is checked by the constructions and by
// verification, not here, so that arbitrary input files can be loaded and
// diagnosed.
class MocsFamily {
public:
    explicit MocsFamily(std::vector<ComplementarySet> sets,
                        std::optional<ConstructionParameters> provenance = std::nullopt);

    Symbol q() const noexcept { return sets_.front().q(); }
    std::size_t set_size() const noexcept { return sets_.size(); }
    std::size_t flock_size() const noexcept { return sets_.front().flock_size(); }
    std::size_t length() const noexcept { return sets_.front().length(); }

    const std::vector<ComplementarySet>& sets() const noexcept { return sets_; }
    const ComplementarySet& operator[](std::size_t p) const { return sets_[p]; }
    const std::optional<ConstructionParameters>& provenance() const noexcept { return provenance_; }

    bool operator==(const MocsFamily&) const = default;

private:
    std::vector<ComplementarySet> sets_;
    std::optional<ConstructionParameters> provenance_;
};

// (q/2) sum_alpha sum_beta x_{pi_alpha(beta)} x_{pi_alpha(beta+1)} + sum_l g_l x_l + g_0.
// An empty g means all zero; otherwise g must hold m+1 coefficients g_0..g_m.
GeneralizedBooleanFunction base_gbf(Symbol q, const PartitionPlan& plan, std::span<const Symbol> g = {});

// std::nullopt for t = 0, where the prefix condition is vacuous.
std::optional<TDecomposition> decompose_t(const PartitionPlan& plan);

struct PrefixCheck {
    bool holds;
    std::vector<unsigned> found;     // first t traversal values, sorted
    std::vector<unsigned> expected;  // 1..t
};

// The first t entries of the traversal are exactly {1, ..., t}.
PrefixCheck prefix_condition(const PartitionPlan& plan);
bool check_prefix_condition(const PartitionPlan& plan);

// (2^(k+1), 2^(m-1)+2^t)-GCS. Member n = (n_1..n_{k+1}), n_1 least significant.
ComplementarySet build_gcs_theorem1(Symbol q, const PartitionPlan& plan, std::span<const Symbol> g = {});

// (2^k', 2^(k+1), 2^(m-1)+2^t)-MOCS; requires m_1 <= t <= m-1.
MocsFamily build_mocs_theorem2(Symbol q, const PartitionPlan& plan, std::span<const Symbol> g = {});

// y_i = i_{pi_k(beta')} when i_m = 1 and i_{pi_k(m_k)} when i_m = 0. Binary (q = 2).
QarySequence hybrid_y_sequence(const PartitionPlan& plan, std::size_t beta_prime, std::size_t length);

// (2^k, 2^(k+1), 2^(m-1)+2^t)-MOCS; requires t = m_1 + ... + m_{k-1} + beta'.
MocsFamily build_mocs_corollary1(Symbol q, const PartitionPlan& plan, std::span<const Symbol> g = {});

} // namespace mocs
