#include "mocs/verification.hpp"

#include "mocs/error.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace mocs {

std::string to_string(FamilyKind kind) { return kind == FamilyKind::gcs ? "gcs" : "mocs"; }

namespace {

// Above this alphabet size the q^2 plane products cost more than the direct loop.
constexpr Symbol kPackedMaxAlphabet = 16;

// Set cross-correlations rho(C^a, C^b; u) for u = 0..L-1, one ordered pair at a
// time. The left set's shifted bit planes are cached between calls.
class SetCorrelator {
public:
    explicit SetCorrelator(const MocsFamily& family) : family_(family), packed_(family.q() <= kPackedMaxAlphabet) {
        if (!packed_) return;
        planes_.resize(family.set_size());
        for (std::size_t p = 0; p < family.set_size(); ++p) {
            for (const QarySequence& member : family[p].members()) planes_[p].emplace_back(member);
        }
    }

    std::vector<CorrelationValue> nonnegative_shifts(std::size_t a, std::size_t b) {
        const std::size_t length = family_.length();
        const Symbol q = family_.q();
        std::vector<CorrelationValue> out;
        out.reserve(length);
        if (!packed_) {
            for (std::size_t u = 0; u < length; ++u) {
                out.push_back(set_correlation(family_[a], family_[b], static_cast<std::ptrdiff_t>(u)));
            }
            return out;
        }
        cache_left(a);
        std::vector<std::vector<std::uint64_t>> counts(length, std::vector<std::uint64_t>(q, 0));
        for (std::size_t n = 0; n < family_.flock_size(); ++n) {
            const PackedSequence& right = planes_[b][n];
            for (std::size_t u = 0; u < length; ++u) accumulate_aligned(shifted_[n][u], right, counts[u]);
        }
        for (auto& c : counts) out.emplace_back(q, std::move(c));
        return out;
    }

private:
    void cache_left(std::size_t a) {
        if (cached_ == a) return;
        shifted_.clear();
        for (const PackedSequence& member : planes_[a]) {
            std::vector<PackedSequence> by_shift;
            by_shift.reserve(family_.length());
            for (std::size_t u = 0; u < family_.length(); ++u) by_shift.push_back(member.dropped(u));
            shifted_.push_back(std::move(by_shift));
        }
        cached_ = a;
    }

    const MocsFamily& family_;
    bool packed_;
    std::vector<std::vector<PackedSequence>> planes_;
    std::vector<std::vector<PackedSequence>> shifted_;
    std::size_t cached_ = static_cast<std::size_t>(-1);
};

class Checker {
public:
    Checker(VerificationReport& report, ZeroTestMode mode)
        : report_(report), mode_(mode), tester_(report.q),
          tolerance_(mode.kind == ZeroTestMode::Kind::floating ? mode.tolerance : ZeroTestMode{}.tolerance) {}

    void expect_zero(std::size_t a, std::size_t b, std::ptrdiff_t shift, const CorrelationValue& value) {
        ++report_.values_checked;
        const bool exact = tester_.exact_zero(value);
        const bool floating = tester_.float_zero(value, tolerance_);
        if (exact != floating) ++report_.mode_disagreements;
        const bool zero = mode_.kind == ZeroTestMode::Kind::exact ? exact : floating;
        if (!zero) report_.violations.push_back({a, b, shift, value});
    }

    void expect_peak(std::size_t p, const CorrelationValue& value) {
        const std::uint64_t expected = std::uint64_t{report_.flock_size} * report_.length;
        if (p == 0) report_.peak = std::llround(value.to_complex().real());
        if (value.count(0) != expected || value.overlap() != expected) {
            report_.violations.push_back({p, p, 0, value});
        }
    }

private:
    VerificationReport& report_;
    ZeroTestMode mode_;
    ZeroTester tester_;
    double tolerance_;
};

VerificationReport run(const MocsFamily& family, FamilyKind kind, ZeroTestMode mode) {
    VerificationReport report;
    report.kind = kind;
    report.mode = mode;
    report.q = family.q();
    report.set_size = family.set_size();
    report.flock_size = family.flock_size();
    report.length = family.length();
    report.set_size_bound_holds = family.set_size() <= family.flock_size();

    Checker checker(report, mode);
    SetCorrelator correlator(family);
    const std::size_t sets = family.set_size();
    // rho(A, B; -u) is the conjugate of rho(B, A; u), so the nonnegative shifts
    // of every ordered pair cover every shift of every pair.
    for (std::size_t a = 0; a < sets; ++a) {
        for (std::size_t b = 0; b < sets; ++b) {
            const std::vector<CorrelationValue> values = correlator.nonnegative_shifts(a, b);
            for (std::size_t u = 0; u < values.size(); ++u) {
                const auto shift = static_cast<std::ptrdiff_t>(u);
                if (a == b) {
                    if (u == 0) {
                        checker.expect_peak(a, values[0]);
                    } else {
                        checker.expect_zero(a, a, shift, values[u]);
                        checker.expect_zero(a, a, -shift, values[u].conjugate());
                    }
                } else if (a < b) {
                    checker.expect_zero(a, b, shift, values[u]);
                } else if (u != 0) {
                    checker.expect_zero(b, a, -shift, values[u].conjugate());
                }
            }
        }
    }

    std::sort(report.violations.begin(), report.violations.end(), [](const Violation& x, const Violation& y) {
        return std::tie(x.set_a, x.set_b, x.shift) < std::tie(y.set_a, y.set_b, y.shift);
    });
    report.passed = report.violations.empty() && report.set_size_bound_holds &&
                    report.peak == static_cast<std::int64_t>(report.flock_size * report.length);
    return report;
}

} // namespace

VerificationReport verify_gcs(const ComplementarySet& set, ZeroTestMode mode) {
    return run(MocsFamily({set}), FamilyKind::gcs, mode);
}

VerificationReport verify_mocs(const MocsFamily& family, ZeroTestMode mode) {
    return run(family, FamilyKind::mocs, mode);
}

std::optional<QarySequence> half_alphabet_difference(const QarySequence& a, const QarySequence& b) {
    if (a.size() != b.size() || a.q() != b.q()) throw DomainError("difference of incompatible sequences");
    const Symbol q = a.q();
    if (q % 2 != 0) return std::nullopt;
    std::vector<Symbol> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Symbol diff = (a[i] + q - b[i]) % q;
        if (diff == 0) {
            d[i] = 0;
        } else if (diff == q / 2) {
            d[i] = 1;
        } else {
            return std::nullopt;
        }
    }
    return QarySequence(2, std::move(d));
}

bool check_weight_lemma(const MocsFamily& family) {
    const auto& provenance = family.provenance();
    if (!provenance || (provenance->construction != Construction::theorem2 &&
                        provenance->construction != Construction::corollary1)) {
        throw DomainError("the weight lemma applies only to theorem-2 and corollary-1 families");
    }
    const std::size_t length = family.length();
    if (length % 2 != 0) return false;
    for (std::size_t a = 0; a < family.set_size(); ++a) {
        for (std::size_t b = a + 1; b < family.set_size(); ++b) {
            for (std::size_t n = 0; n < family.flock_size(); ++n) {
                const auto d = half_alphabet_difference(family[a][n], family[b][n]);
                if (!d) return false;
                const auto weight = static_cast<std::size_t>(std::count(d->values().begin(), d->values().end(), 1u));
                if (weight != length / 2) return false;
            }
        }
    }
    return true;
}

} // namespace mocs
