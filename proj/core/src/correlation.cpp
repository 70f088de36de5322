#include "mocs/correlation.hpp"

#include "mocs/error.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

namespace mocs {

CorrelationValue::CorrelationValue(Symbol q) : counts_(q, 0) {
    if (q < 1) throw DomainError("alphabet size must be positive");
}

CorrelationValue::CorrelationValue(Symbol q, std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
    if (q < 1 || counts_.size() != q) throw DomainError("histogram must have exactly q bins");
}

std::uint64_t CorrelationValue::overlap() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

CorrelationValue& CorrelationValue::operator+=(const CorrelationValue& other) {
    if (other.q() != q()) throw DomainError("cannot add correlation values over different alphabets");
    for (std::size_t e = 0; e < counts_.size(); ++e) counts_[e] += other.counts_[e];
    return *this;
}

CorrelationValue CorrelationValue::conjugate() const {
    const std::size_t q = counts_.size();
    std::vector<std::uint64_t> out(q);
    for (std::size_t e = 0; e < q; ++e) out[(q - e) % q] = counts_[e];
    return CorrelationValue(static_cast<Symbol>(q), std::move(out));
}

std::complex<double> CorrelationValue::to_complex() const {
    const double q = static_cast<double>(counts_.size());
    std::complex<double> sum = 0.0;
    for (std::size_t e = 0; e < counts_.size(); ++e) {
        if (counts_[e] != 0) {
            sum += static_cast<double>(counts_[e]) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / q);
        }
    }
    return sum;
}

namespace {

using Poly = std::vector<std::int64_t>;

void trim(Poly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact quotient of a by monic b; throws if the division leaves a remainder.
Poly divide_exact(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() - 1 < db) throw std::logic_error("cyclotomic division: degree too small");
    Poly quotient(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const std::int64_t c = a[i];
        quotient[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (a[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
    }
    trim(quotient);
    return quotient;
}

const Poly& cyclotomic_cached(unsigned n, std::map<unsigned, Poly>& cache) {
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    // X^n - 1 = prod_{d | n} Phi_d(X)
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_cached(d, cache));
    }
    return cache.emplace(n, std::move(p)).first->second;
}

} // namespace

std::vector<std::int64_t> cyclotomic_polynomial(unsigned n) {
    if (n < 1) throw DomainError("cyclotomic index must be positive");
    std::map<unsigned, Poly> cache;
    return cyclotomic_cached(n, cache);
}

ZeroTester::ZeroTester(Symbol q) : q_(q), phi_(cyclotomic_polynomial(q)), roots_(q) {
    for (Symbol e = 0; e < q; ++e) {
        roots_[e] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(q));
    }
}

namespace {
__extension__ typedef __int128 Wide;
} // namespace

bool ZeroTester::exact_zero(const CorrelationValue& value) const {
    if (value.q() != q_) throw DomainError("zero tester alphabet mismatch");
    // Reduce sum counts[e] X^e modulo the monic Phi_q.
    std::vector<Wide> r(value.counts().begin(), value.counts().end());
    const std::size_t degree = phi_.size() - 1;
    for (std::size_t i = r.size(); i-- > degree;) {
        const Wide c = r[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= degree; ++j) {
            Wide product = 0;
            if (__builtin_mul_overflow(c, static_cast<Wide>(phi_[j]), &product) ||
                __builtin_sub_overflow(r[i - degree + j], product, &r[i - degree + j])) {
                throw std::overflow_error("exact zero test overflowed 128-bit arithmetic");
            }
        }
    }
    for (std::size_t i = 0; i < degree && i < r.size(); ++i) {
        if (r[i] != 0) return false;
    }
    return true;
}

double ZeroTester::magnitude(const CorrelationValue& value) const {
    if (value.q() != q_) throw DomainError("zero tester alphabet mismatch");
    std::complex<double> sum = 0.0;
    const auto counts = value.counts();
    for (Symbol e = 0; e < q_; ++e) {
        if (counts[e] != 0) sum += static_cast<double>(counts[e]) * roots_[e];
    }
    return std::abs(sum);
}

bool ZeroTester::is_zero(const CorrelationValue& value, ZeroTestMode mode) const {
    return mode.kind == ZeroTestMode::Kind::exact ? exact_zero(value) : float_zero(value, mode.tolerance);
}

bool is_zero(const CorrelationValue& value, ZeroTestMode mode) { return ZeroTester(value.q()).is_zero(value, mode); }

namespace {

void require_compatible(const QarySequence& c, const QarySequence& d, std::ptrdiff_t shift) {
    if (c.size() != d.size()) {
        throw DomainError("correlation of sequences with different lengths " + std::to_string(c.size()) + " and " +
                          std::to_string(d.size()));
    }
    if (c.q() != d.q()) throw DomainError("correlation of sequences over different alphabets");
    const auto length = static_cast<std::ptrdiff_t>(c.size());
    if (shift <= -length || shift >= length) {
        throw DomainError("shift " + std::to_string(shift) + " outside (-" + std::to_string(length) + ", " +
                          std::to_string(length) + ")");
    }
}

} // namespace

CorrelationValue cross_correlation(const QarySequence& c, const QarySequence& d, std::ptrdiff_t shift) {
    require_compatible(c, d, shift);
    const Symbol q = c.q();
    const std::size_t length = c.size();
    CorrelationValue out(q);
    if (shift >= 0) {
        const auto u = static_cast<std::size_t>(shift);
        for (std::size_t k = 0; k + u < length; ++k) out.add((c[k + u] + q - d[k]) % q);
    } else {
        const auto u = static_cast<std::size_t>(-shift);
        for (std::size_t k = 0; k + u < length; ++k) out.add((c[k] + q - d[k + u]) % q);
    }
    return out;
}

CorrelationValue auto_correlation(const QarySequence& c, std::ptrdiff_t shift) { return cross_correlation(c, c, shift); }

CorrelationValue set_correlation(const ComplementarySet& a, const ComplementarySet& b, std::ptrdiff_t shift) {
    if (a.flock_size() != b.flock_size()) throw DomainError("set correlation of sets with different flock sizes");
    CorrelationValue out(a.q());
    for (std::size_t n = 0; n < a.flock_size(); ++n) out += cross_correlation(a[n], b[n], shift);
    return out;
}

PackedSequence::PackedSequence(Symbol q, std::size_t size)
    : q_(q), size_(size), words_((size + 63) / 64), planes_(std::size_t{q} * words_, 0) {}

PackedSequence::PackedSequence(const QarySequence& sequence) : PackedSequence(sequence.q(), sequence.size()) {
    for (std::size_t k = 0; k < size_; ++k) {
        planes_[std::size_t{sequence[k]} * words_ + k / 64] |= std::uint64_t{1} << (k % 64);
    }
}

PackedSequence PackedSequence::dropped(std::size_t shift) const {
    if (shift >= size_) throw DomainError("cannot drop the whole sequence");
    PackedSequence out(q_, size_ - shift);
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = static_cast<unsigned>(shift % 64);
    for (Symbol v = 0; v < q_; ++v) {
        const std::uint64_t* src = planes_.data() + std::size_t{v} * words_;
        std::uint64_t* dst = out.planes_.data() + std::size_t{v} * out.words_;
        for (std::size_t w = 0; w < out.words_; ++w) {
            const std::size_t from = w + word_shift;
            std::uint64_t word = src[from] >> bit_shift;
            if (bit_shift != 0 && from + 1 < words_) word |= src[from + 1] << (64 - bit_shift);
            dst[w] = word;
        }
    }
    return out;
}

void accumulate_aligned(const PackedSequence& a, const PackedSequence& b, std::span<std::uint64_t> counts) {
    if (a.q() != b.q() || counts.size() != a.q()) throw DomainError("packed correlation alphabet mismatch");
    const Symbol q = a.q();
    // Bits past the shorter sequence are zero in its planes, so the AND below
    // only sees overlapping positions.
    const std::size_t words = std::min(a.words(), b.words());
    const std::uint64_t* a_planes = a.plane(0).data();
    const std::uint64_t* b_planes = b.plane(0).data();
    for (Symbol s = 0; s < q; ++s) {
        const std::uint64_t* bs = b_planes + std::size_t{s} * b.words();
        Symbol v = s;
        for (Symbol e = 0; e < q; ++e, ++v) {
            if (v == q) v = 0;
            const std::uint64_t* as = a_planes + std::size_t{v} * a.words();
            std::uint64_t total = 0;
            for (std::size_t w = 0; w < words; ++w) total += static_cast<std::uint64_t>(std::popcount(as[w] & bs[w]));
            counts[e] += total;
        }
    }
}

CorrelationValue packed_cross_correlation(const PackedSequence& c, const PackedSequence& d, std::ptrdiff_t shift) {
    if (c.size() != d.size() || c.q() != d.q()) throw DomainError("packed correlation of incompatible sequences");
    const auto length = static_cast<std::ptrdiff_t>(c.size());
    if (shift <= -length || shift >= length) throw DomainError("shift outside (-L, L)");
    std::vector<std::uint64_t> counts(c.q(), 0);
    if (shift >= 0) {
        accumulate_aligned(c.dropped(static_cast<std::size_t>(shift)), d, counts);
        return CorrelationValue(c.q(), std::move(counts));
    }
    // rho(c, d; -u) is the conjugate of rho(d, c; u).
    accumulate_aligned(d.dropped(static_cast<std::size_t>(-shift)), c, counts);
    return CorrelationValue(c.q(), std::move(counts)).conjugate();
}

} // namespace mocs
