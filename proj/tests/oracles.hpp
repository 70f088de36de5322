#pragma once

// Independent reference implementations. Nothing in here calls into the
// library's construction or correlation code.

#include "mocs/constructions.hpp"

#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

using Seq = std::vector<unsigned>;
using Set = std::vector<Seq>;
using Family = std::vector<Set>;

inline unsigned bit(std::size_t i, unsigned l) { return static_cast<unsigned>((i >> (l - 1)) & 1u); }

struct Plan {
    unsigned q;
    unsigned m;
    std::vector<std::vector<unsigned>> parts;  // pi order
    unsigned t;
    std::vector<unsigned> g;  // empty or m+1 entries
};

inline std::size_t length(const Plan& p) { return (std::size_t{1} << (p.m - 1)) + (std::size_t{1} << p.t); }

inline unsigned base_value(const Plan& p, std::size_t i) {
    unsigned v = 0;
    for (const auto& part : p.parts) {
        for (std::size_t b = 0; b + 1 < part.size(); ++b) v += (p.q / 2) * bit(i, part[b]) * bit(i, part[b + 1]);
    }
    if (!p.g.empty()) {
        v += p.g[0];
        for (unsigned l = 1; l <= p.m; ++l) v += p.g[l] * bit(i, l);
    }
    return v % p.q;
}

// Member n of the complementary set before any set offset.
inline unsigned member_value(const Plan& p, std::size_t n, std::size_t i) {
    const std::size_t k = p.parts.size();
    unsigned v = base_value(p, i);
    for (std::size_t a = 0; a < k; ++a) v += (p.q / 2) * ((n >> a) & 1u) * bit(i, p.parts[a].front());
    v += (p.q / 2) * ((n >> k) & 1u) * bit(i, p.m);
    return v % p.q;
}

// Number of leading parts whose sizes sum to at most t.
inline std::size_t k_prime(const Plan& p) {
    std::size_t sum = 0;
    std::size_t kp = 0;
    for (const auto& part : p.parts) {
        if (sum + part.size() > p.t) break;
        sum += part.size();
        ++kp;
    }
    return kp;
}

inline Family build(const Plan& p, bool corollary) {
    const std::size_t k = p.parts.size();
    const std::size_t L = length(p);
    const std::size_t N = std::size_t{1} << (k + 1);
    std::size_t before_last = 0;
    for (std::size_t a = 0; a + 1 < k; ++a) before_last += p.parts[a].size();
    const std::size_t beta = p.t - before_last;  // only meaningful for the corollary
    const std::size_t sets_log = corollary ? k : k_prime(p);
    Family out;
    for (std::size_t s = 0; s < (std::size_t{1} << sets_log); ++s) {
        Set set;
        for (std::size_t n = 0; n < N; ++n) {
            Seq seq(L);
            for (std::size_t i = 0; i < L; ++i) {
                unsigned v = member_value(p, n, i);
                const std::size_t plain = corollary ? k - 1 : sets_log;
                for (std::size_t a = 0; a < plain; ++a) v += (p.q / 2) * ((s >> a) & 1u) * bit(i, p.parts[a].back());
                if (corollary && ((s >> (k - 1)) & 1u)) {
                    const unsigned y = bit(i, p.m) ? bit(i, p.parts[k - 1][beta - 1]) : bit(i, p.parts[k - 1].back());
                    v += (p.q / 2) * y;
                }
                seq[i] = v % p.q;
            }
            set.push_back(std::move(seq));
        }
        out.push_back(std::move(set));
    }
    return out;
}

inline std::complex<double> root(unsigned q, long e) {
    const long r = ((e % static_cast<long>(q)) + q) % q;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / q);
}

// sum_k xi^(c[k+u] - d[k]) over the overlap, in floating point.
inline std::complex<double> correlation(const Seq& c, const Seq& d, long u, unsigned q) {
    std::complex<double> sum = 0;
    const long L = static_cast<long>(c.size());
    for (long k = 0; k < L; ++k) {
        if (k + u < 0 || k + u >= L) continue;
        sum += root(q, static_cast<long>(c[k + u]) - static_cast<long>(d[k]));
    }
    return sum;
}

// Histogram of exponents c[k+u] - d[k] mod q over the overlap.
inline std::vector<std::uint64_t> histogram(const Seq& c, const Seq& d, long u, unsigned q) {
    std::vector<std::uint64_t> h(q, 0);
    const long L = static_cast<long>(c.size());
    for (long k = 0; k < L; ++k) {
        if (k + u < 0 || k + u >= L) continue;
        ++h[(c[k + u] + q - d[k]) % q];
    }
    return h;
}

// For q a power of two the primitive q-th root satisfies xi^(q/2) = -1 and
// {1, xi, ..., xi^(q/2-1)} is a basis, so the sum vanishes iff every exponent
// pairs off with its negation.
inline bool pow2_zero(const std::vector<std::uint64_t>& h) {
    const std::size_t half = h.size() / 2;
    for (std::size_t e = 0; e < half; ++e) {
        if (h[e] != h[e + half]) return false;
    }
    return true;
}

inline std::complex<double> set_correlation(const Set& a, const Set& b, long u, unsigned q) {
    std::complex<double> sum = 0;
    for (std::size_t n = 0; n < a.size(); ++n) sum += correlation(a[n], b[n], u, q);
    return sum;
}

inline bool is_mocs(const Family& f, unsigned q, double tol = 1e-6) {
    const long L = static_cast<long>(f.front().front().size());
    const double peak = static_cast<double>(f.front().size() * f.front().front().size());
    if (f.size() > f.front().size()) return false;
    for (std::size_t a = 0; a < f.size(); ++a) {
        for (std::size_t b = 0; b < f.size(); ++b) {
            for (long u = -L + 1; u < L; ++u) {
                const std::complex<double> expected = (a == b && u == 0) ? peak : 0.0;
                if (std::abs(set_correlation(f[a], f[b], u, q) - expected) > tol) return false;
            }
        }
    }
    return true;
}

inline Seq values(const mocs::QarySequence& s) { return Seq(s.values().begin(), s.values().end()); }

inline Family values(const mocs::MocsFamily& family) {
    Family out;
    for (const auto& set : family.sets()) {
        Set s;
        for (const auto& member : set.members()) s.push_back(values(member));
        out.push_back(std::move(s));
    }
    return out;
}

inline Plan from(unsigned q, const mocs::PartitionPlan& plan) { return Plan{q, plan.m(), plan.parts(), plan.t(), {}}; }

} // namespace oracle
