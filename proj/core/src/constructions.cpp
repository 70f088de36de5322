#include "mocs/constructions.hpp"

#include "mocs/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mocs {

namespace {

std::string set_to_string(const std::vector<unsigned>& values) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << '}';
    return out.str();
}

std::vector<Symbol> normalized_g(const PartitionPlan& plan, std::span<const Symbol> g) {
    if (g.empty()) return std::vector<Symbol>(plan.m() + 1, 0);
    if (g.size() != plan.m() + 1) {
        throw DomainError("expected " + std::to_string(plan.m() + 1) + " linear coefficients g_0..g_m, got " +
                          std::to_string(g.size()));
    }
    return {g.begin(), g.end()};
}

void require_even(Symbol q) {
    if (q < 2 || q % 2 != 0) throw DomainError("alphabet size q must be an even integer >= 2, got " + std::to_string(q));
}

void require_prefix(const PartitionPlan& plan) {
    const PrefixCheck check = prefix_condition(plan);
    if (!check.holds) {
        throw PreconditionError("prefix condition fails for t=" + std::to_string(plan.t()) + ": traversal prefix " +
                                    set_to_string(check.found) + " != " + set_to_string(check.expected),
                                check.found, check.expected);
    }
}

// (a_i * b_i) over Z_2.
QarySequence multiply_binary(const QarySequence& a, const QarySequence& b) {
    std::vector<Symbol> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return QarySequence(2, std::move(out));
}

// 1 xor a_i.
QarySequence complement_binary(const QarySequence& a) {
    std::vector<Symbol> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = 1u ^ a[i];
    return QarySequence(2, std::move(out));
}

// Members f + (q/2)(sum_alpha n_alpha x_{pi_alpha(1)} + n_{k+1} x_m), n = 0..2^(k+1)-1.
std::vector<QarySequence> theorem1_members(Symbol q, const PartitionPlan& plan, std::span<const Symbol> g) {
    const std::size_t length = plan.length();
    const QarySequence f = truncated_sequence(base_gbf(q, plan, g), length);
    const std::size_t k = plan.k();

    std::vector<QarySequence> selectors;
    selectors.reserve(k + 1);
    for (std::size_t alpha = 1; alpha <= k; ++alpha) selectors.push_back(indicator_sequence(plan.pi(alpha, 1), plan.m(), length, q));
    selectors.push_back(indicator_sequence(plan.m(), plan.m(), length, q));

    std::vector<QarySequence> members;
    const std::size_t flock = std::size_t{1} << (k + 1);
    members.reserve(flock);
    for (std::size_t n = 0; n < flock; ++n) {
        QarySequence c = f;
        for (std::size_t bit = 0; bit <= k; ++bit) {
            if ((n >> bit) & 1u) c = add_sequences(c, selectors[bit], q / 2);
        }
        members.push_back(std::move(c));
    }
    return members;
}

// C^p = {c_n + (q/2) mask_p}: each set's members are the Theorem-1 members
// shifted by one binary mask.
MocsFamily assemble(Symbol q, const std::vector<QarySequence>& base, const std::vector<QarySequence>& masks,
                    ConstructionParameters provenance) {
    std::vector<ComplementarySet> sets;
    sets.reserve(masks.size());
    for (const QarySequence& mask : masks) {
        const QarySequence lifted = mask.with_alphabet(q);
        std::vector<QarySequence> members;
        members.reserve(base.size());
        for (const QarySequence& c : base) members.push_back(add_sequences(c, lifted, q / 2));
        sets.emplace_back(std::move(members));
    }
    MocsFamily family(std::move(sets), std::move(provenance));
    if (family.set_size() > family.flock_size()) {
        throw std::logic_error("construction produced M > N");
    }
    return family;
}

// sum over the set bits of p of the given binary sequences, mod 2.
QarySequence binary_combination(std::size_t p, const std::vector<QarySequence>& terms, std::size_t length) {
    QarySequence acc(2, std::vector<Symbol>(length, 0));
    for (std::size_t bit = 0; bit < terms.size(); ++bit) {
        if ((p >> bit) & 1u) acc = add_sequences(acc, terms[bit], 1);
    }
    return acc;
}

} // namespace

PartitionPlan::PartitionPlan(unsigned m, std::vector<std::vector<unsigned>> parts, unsigned t)
    : m_(m), parts_(std::move(parts)), t_(t) {
    if (m < 2 || m > kMaxVariables) {
        throw DomainError("m must be in [2, " + std::to_string(kMaxVariables) + "], got " + std::to_string(m));
    }
    if (parts_.empty()) throw DomainError("a partition needs at least one part");
    std::vector<bool> seen(m, false);
    for (std::size_t a = 0; a < parts_.size(); ++a) {
        if (parts_[a].empty()) throw DomainError("part " + std::to_string(a + 1) + " is empty");
        for (unsigned v : parts_[a]) {
            if (v < 1 || v > m - 1) {
                throw DomainError("element " + std::to_string(v) + " is outside 1.." + std::to_string(m - 1));
            }
            if (seen[v]) throw DomainError("element " + std::to_string(v) + " appears in more than one place");
            seen[v] = true;
        }
    }
    for (unsigned v = 1; v < m; ++v) {
        if (!seen[v]) throw DomainError("element " + std::to_string(v) + " is not covered by any part");
    }
    // Disjoint nonempty parts covering m-1 elements already force k <= m-1.
    if (t > m - 1) throw DomainError("t must be in [0, m-1], got " + std::to_string(t));
}

unsigned PartitionPlan::pi(std::size_t alpha, std::size_t beta) const {
    if (alpha < 1 || alpha > parts_.size()) throw DomainError("part index out of range");
    const auto& part = parts_[alpha - 1];
    if (beta < 1 || beta > part.size()) throw DomainError("position inside part out of range");
    return part[beta - 1];
}

std::size_t PartitionPlan::part_size(std::size_t alpha) const {
    if (alpha < 1 || alpha > parts_.size()) throw DomainError("part index out of range");
    return parts_[alpha - 1].size();
}

std::vector<unsigned> PartitionPlan::traversal() const {
    std::vector<unsigned> out;
    out.reserve(m_ - 1);
    for (const auto& part : parts_) out.insert(out.end(), part.begin(), part.end());
    return out;
}

std::string to_string(Construction construction) {
    switch (construction) {
    case Construction::theorem1: return "theorem1";
    case Construction::theorem2: return "theorem2";
    case Construction::corollary1: return "corollary1";
    case Construction::unspecified: return "none";
    }
    return "none";
}

MocsFamily::MocsFamily(std::vector<ComplementarySet> sets, std::optional<ConstructionParameters> provenance)
    : sets_(std::move(sets)), provenance_(std::move(provenance)) {
    if (sets_.empty()) throw DomainError("a family needs at least one set");
    for (const auto& set : sets_) {
        if (set.q() != sets_.front().q() || set.flock_size() != sets_.front().flock_size() ||
            set.length() != sets_.front().length()) {
            throw DomainError("all sets of a family must share q, flock size and length");
        }
    }
}

GeneralizedBooleanFunction base_gbf(Symbol q, const PartitionPlan& plan, std::span<const Symbol> g) {
    require_even(q);
    const std::vector<Symbol> coefficients = normalized_g(plan, g);
    std::vector<Term> terms;
    for (const auto& part : plan.parts()) {
        for (std::size_t beta = 0; beta + 1 < part.size(); ++beta) {
            terms.push_back({Monomial{part[beta], part[beta + 1]}, q / 2});
        }
    }
    for (unsigned l = 1; l <= plan.m(); ++l) terms.push_back({Monomial{l}, coefficients[l]});
    terms.push_back({Monomial{}, coefficients[0]});
    return GeneralizedBooleanFunction(q, plan.m(), terms);
}

std::optional<TDecomposition> decompose_t(const PartitionPlan& plan) {
    const std::size_t t = plan.t();
    if (t == 0) return std::nullopt;
    if (t > plan.m() - 1) throw DomainError("t outside 1..m-1");

    TDecomposition out{0, 0, 0};
    std::size_t prefix = 0;
    for (std::size_t alpha = 1; alpha <= plan.k(); ++alpha) {
        const std::size_t size = plan.part_size(alpha);
        if (out.alpha_prime == 0 && prefix + size >= t) {
            out.alpha_prime = alpha;
            out.beta_prime = t - prefix;
        }
        prefix += size;
        if (prefix <= t) out.k_prime = alpha;
    }
    return out;
}

PrefixCheck prefix_condition(const PartitionPlan& plan) {
    PrefixCheck check{true, {}, {}};
    const std::vector<unsigned> traversal = plan.traversal();
    check.found.assign(traversal.begin(), traversal.begin() + plan.t());
    std::sort(check.found.begin(), check.found.end());
    check.expected.resize(plan.t());
    std::iota(check.expected.begin(), check.expected.end(), 1u);
    check.holds = check.found == check.expected;
    return check;
}

bool check_prefix_condition(const PartitionPlan& plan) { return prefix_condition(plan).holds; }

ComplementarySet build_gcs_theorem1(Symbol q, const PartitionPlan& plan, std::span<const Symbol> g) {
    require_even(q);
    if (plan.t() != 0) require_prefix(plan);
    return ComplementarySet(theorem1_members(q, plan, g));
}

MocsFamily build_mocs_theorem2(Symbol q, const PartitionPlan& plan, std::span<const Symbol> g) {
    require_even(q);
    const std::size_t m1 = plan.part_size(1);
    if (plan.t() < 1 || plan.t() < m1) {
        throw PreconditionError("theorem 2 needs m_1 <= t <= m-1; got t=" + std::to_string(plan.t()) +
                                " with m_1=" + std::to_string(m1));
    }
    require_prefix(plan);
    const TDecomposition decomposition = *decompose_t(plan);
    const std::size_t length = plan.length();

    std::vector<QarySequence> ends;
    for (std::size_t alpha = 1; alpha <= decomposition.k_prime; ++alpha) {
        ends.push_back(indicator_sequence(plan.pi(alpha, plan.part_size(alpha)), plan.m(), length));
    }
    std::vector<QarySequence> masks;
    for (std::size_t p = 0; p < (std::size_t{1} << decomposition.k_prime); ++p) {
        masks.push_back(binary_combination(p, ends, length));
    }
    return assemble(q, theorem1_members(q, plan, g), masks,
                    ConstructionParameters{Construction::theorem2, q, plan, normalized_g(plan, g)});
}

QarySequence hybrid_y_sequence(const PartitionPlan& plan, std::size_t beta_prime, std::size_t length) {
    const std::size_t k = plan.k();
    const std::size_t mk = plan.part_size(k);
    if (beta_prime < 1 || beta_prime > mk) {
        throw DomainError("beta' must be in [1, m_k] = [1, " + std::to_string(mk) + "], got " +
                          std::to_string(beta_prime));
    }
    const unsigned m = plan.m();
    const QarySequence top = indicator_sequence(m, m, length);
    const QarySequence upper = multiply_binary(top, indicator_sequence(plan.pi(k, beta_prime), m, length));
    const QarySequence lower = multiply_binary(complement_binary(top), indicator_sequence(plan.pi(k, mk), m, length));
    const QarySequence y = add_sequences(upper, lower, 1);
    // The two branches have disjoint supports, so the Z_2 sum is also the
    // integer sum and '+' and xor agree.
    for (std::size_t i = 0; i < length; ++i) {
        if (upper[i] + lower[i] > 1 || y[i] != upper[i] + lower[i]) {
            throw std::logic_error("hybrid mask branches overlap");
        }
    }
    return y;
}

MocsFamily build_mocs_corollary1(Symbol q, const PartitionPlan& plan, std::span<const Symbol> g) {
    require_even(q);
    const std::size_t k = plan.k();
    const auto decomposition = decompose_t(plan);
    if (!decomposition || decomposition->alpha_prime != k) {
        throw PreconditionError("corollary 1 needs t = m_1 + ... + m_{k-1} + beta' with 1 <= beta' <= m_k; t=" +
                                std::to_string(plan.t()) + " does not have that form");
    }
    require_prefix(plan);
    const std::size_t length = plan.length();

    std::vector<QarySequence> ends;
    for (std::size_t alpha = 1; alpha < k; ++alpha) {
        ends.push_back(indicator_sequence(plan.pi(alpha, plan.part_size(alpha)), plan.m(), length));
    }
    ends.push_back(hybrid_y_sequence(plan, decomposition->beta_prime, length));

    std::vector<QarySequence> masks;
    for (std::size_t p = 0; p < (std::size_t{1} << k); ++p) masks.push_back(binary_combination(p, ends, length));
    return assemble(q, theorem1_members(q, plan, g), masks,
                    ConstructionParameters{Construction::corollary1, q, plan, normalized_g(plan, g)});
}

} // namespace mocs
