#pragma once

#include "mocs/gbf.hpp"
#include "mocs/sequence_set.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mocs {

// Exact value of a sum of q-th roots of unity, kept as an exponent histogram:
// the represented number is sum_e counts[e] * xi^e with xi = exp(2*pi*i/q).
class CorrelationValue {
public:
    explicit CorrelationValue(Symbol q);
    CorrelationValue(Symbol q, std::vector<std::uint64_t> counts);

    Symbol q() const noexcept { return static_cast<Symbol>(counts_.size()); }
    std::span<const std::uint64_t> counts() const noexcept { return counts_; }
    std::uint64_t count(Symbol exponent) const { return counts_.at(exponent); }

    // Number of index pairs that contributed; L - |u| for a single correlation.
    std::uint64_t overlap() const noexcept;

    void add(Symbol exponent, std::uint64_t times = 1) { counts_.at(exponent) += times; }
    CorrelationValue& operator+=(const CorrelationValue& other);

    // Complex conjugate: exponent e moves to -e mod q.
    CorrelationValue conjugate() const;
    std::complex<double> to_complex() const;

    bool operator==(const CorrelationValue& other) const = default;

private:
    std::vector<std::uint64_t> counts_;
};

struct ZeroTestMode {
    enum class Kind { exact, floating };

    Kind kind = Kind::exact;
    double tolerance = 1e-9;

    static constexpr ZeroTestMode exact() { return {Kind::exact, 1e-9}; }
    static constexpr ZeroTestMode floating(double tolerance = 1e-9) { return {Kind::floating, tolerance}; }

    bool operator==(const ZeroTestMode&) const = default;
};

// Phi_n(X) with integer coefficients in ascending order of powers.
std::vector<std::int64_t> cyclotomic_polynomial(unsigned n);

// Zero tests for a fixed alphabet. Caches Phi_q and the root-of-unity table so
// repeated tests over one family avoid recomputing them.
class ZeroTester {
public:
    explicit ZeroTester(Symbol q);

    Symbol q() const noexcept { return q_; }

    // sum counts[e] X^e is divisible by Phi_q(X).
    bool exact_zero(const CorrelationValue& value) const;
    double magnitude(const CorrelationValue& value) const;
    bool float_zero(const CorrelationValue& value, double tolerance) const {
        return magnitude(value) < tolerance;
    }
    bool is_zero(const CorrelationValue& value, ZeroTestMode mode) const;

private:
    Symbol q_;
    std::vector<std::int64_t> phi_;
    std::vector<std::complex<double>> roots_;
};

bool is_zero(const CorrelationValue& value, ZeroTestMode mode);

// rho(c, d; u). u >= 0 pairs c_{k+u} with d_k; u < 0 pairs c_k with d_{k-u}.
CorrelationValue cross_correlation(const QarySequence& c, const QarySequence& d, std::ptrdiff_t shift);
CorrelationValue auto_correlation(const QarySequence& c, std::ptrdiff_t shift);
// sum_n rho(a_n, b_n; u).
CorrelationValue set_correlation(const ComplementarySet& a, const ComplementarySet& b, std::ptrdiff_t shift);

// One bit plane per symbol: bit k of plane v is set iff c_k == v. Positions at
// or beyond size() are zero in every plane.
class PackedSequence {
public:
    explicit PackedSequence(const QarySequence& sequence);

    Symbol q() const noexcept { return q_; }
    std::size_t size() const noexcept { return size_; }
    std::size_t words() const noexcept { return words_; }
    std::span<const std::uint64_t> plane(Symbol v) const {
        return {planes_.data() + std::size_t{v} * words_, words_};
    }

    // Drop the first `shift` entries: entry k of the result is entry k + shift.
    PackedSequence dropped(std::size_t shift) const;

private:
    PackedSequence(Symbol q, std::size_t size);

    Symbol q_;
    std::size_t size_;
    std::size_t words_;
    std::vector<std::uint64_t> planes_;
};

// Adds the histogram of a_k - b_k over k < min(|a|, |b|) into counts (length q).
void accumulate_aligned(const PackedSequence& a, const PackedSequence& b, std::span<std::uint64_t> counts);

// Same result as cross_correlation, computed on bit planes.
CorrelationValue packed_cross_correlation(const PackedSequence& c, const PackedSequence& d, std::ptrdiff_t shift);

} // namespace mocs
