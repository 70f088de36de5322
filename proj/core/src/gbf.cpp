#include "mocs/gbf.hpp"

#include "mocs/error.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace mocs {

namespace {

void require_alphabet(Symbol q) {
    if (q < 2) throw DomainError("alphabet size q must be at least 2, got " + std::to_string(q));
}

void require_even_alphabet(Symbol q) {
    require_alphabet(q);
    if (q % 2 != 0) throw DomainError("alphabet size q must be even, got " + std::to_string(q));
}

void require_variable_count(unsigned m) {
    if (m < 1 || m > kMaxVariables) {
        throw DomainError("number of variables m must be in [1, " + std::to_string(kMaxVariables) +
                          "], got " + std::to_string(m));
    }
}

} // namespace

BitIndex::BitIndex(std::uint64_t value, unsigned width) : value_(value), width_(width) {
    if (width > 63) throw DomainError("bit index width must be at most 63");
    if (value >> width != 0) {
        throw DomainError("index " + std::to_string(value) + " does not fit in " +
                          std::to_string(width) + " bits");
    }
}

BitIndex BitIndex::from_bits(std::span<const unsigned> bits) {
    std::uint64_t value = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] > 1) throw DomainError("binary digit must be 0 or 1");
        value |= std::uint64_t{bits[j]} << j;
    }
    return BitIndex(value, static_cast<unsigned>(bits.size()));
}

unsigned BitIndex::bit(unsigned j) const {
    if (j < 1 || j > width_) {
        throw DomainError("bit position " + std::to_string(j) + " outside 1.." + std::to_string(width_));
    }
    return static_cast<unsigned>((value_ >> (j - 1)) & 1u);
}

std::vector<unsigned> BitIndex::bits() const {
    std::vector<unsigned> out(width_);
    for (unsigned j = 1; j <= width_; ++j) out[j - 1] = bit(j);
    return out;
}

Monomial::Monomial(std::initializer_list<unsigned> variables)
    : Monomial(std::span<const unsigned>(variables.begin(), variables.size())) {}

Monomial::Monomial(std::span<const unsigned> variables) {
    for (unsigned v : variables) {
        if (v < 1 || v > 63) throw DomainError("variable index " + std::to_string(v) + " out of range");
        mask_ |= std::uint64_t{1} << (v - 1);
    }
}

Monomial Monomial::from_mask(std::uint64_t mask) noexcept {
    Monomial out;
    out.mask_ = mask;
    return out;
}

unsigned Monomial::degree() const noexcept { return static_cast<unsigned>(std::popcount(mask_)); }

bool Monomial::contains(unsigned variable) const noexcept {
    return variable >= 1 && variable <= 64 && ((mask_ >> (variable - 1)) & 1u) != 0;
}

unsigned Monomial::highest_variable() const noexcept {
    return static_cast<unsigned>(std::bit_width(mask_));
}

std::vector<unsigned> Monomial::variables() const {
    std::vector<unsigned> out;
    for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
        out.push_back(static_cast<unsigned>(std::countr_zero(rest)) + 1);
    }
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const noexcept {
    if (auto c = degree() <=> other.degree(); c != 0) return c;
    // Same degree: compare sorted variable lists lexicographically. Walking both
    // masks from the lowest set bit gives that order directly.
    std::uint64_t a = mask_;
    std::uint64_t b = other.mask_;
    while (a != 0 && b != 0) {
        const int va = std::countr_zero(a);
        const int vb = std::countr_zero(b);
        if (va != vb) return va <=> vb;
        a &= a - 1;
        b &= b - 1;
    }
    return std::strong_ordering::equal;
}

GeneralizedBooleanFunction::GeneralizedBooleanFunction(Symbol q, unsigned m) : q_(q), m_(m) {
    require_even_alphabet(q);
    require_variable_count(m);
}

GeneralizedBooleanFunction::GeneralizedBooleanFunction(Symbol q, unsigned m, std::span<const Term> terms)
    : GeneralizedBooleanFunction(q, m) {
    for (const Term& term : terms) accumulate(term);
}

GeneralizedBooleanFunction::GeneralizedBooleanFunction(Symbol q, unsigned m,
                                                       std::initializer_list<Term> terms)
    : GeneralizedBooleanFunction(q, m, std::span<const Term>(terms.begin(), terms.size())) {}

void GeneralizedBooleanFunction::accumulate(const Term& term) {
    if (term.monomial.highest_variable() > m_) {
        throw DomainError("monomial " + to_string(term.monomial) + " uses a variable beyond m = " +
                          std::to_string(m_));
    }
    const Symbol add = static_cast<Symbol>(term.coefficient % q_);
    if (add == 0) return;
    auto [it, inserted] = terms_.try_emplace(term.monomial, add);
    if (!inserted) {
        it->second = (it->second + add) % q_;
        if (it->second == 0) terms_.erase(it);
    }
}

Symbol GeneralizedBooleanFunction::coefficient(const Monomial& monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? 0 : it->second;
}

unsigned GeneralizedBooleanFunction::degree() const noexcept {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

GeneralizedBooleanFunction operator+(const GeneralizedBooleanFunction& a, const GeneralizedBooleanFunction& b) {
    if (a.q_ != b.q_ || a.m_ != b.m_) throw DomainError("cannot add functions over different (q, m)");
    GeneralizedBooleanFunction out = a;
    for (const auto& [monomial, coefficient] : b.terms_) out.accumulate({monomial, coefficient});
    return out;
}

QarySequence::QarySequence(Symbol q, std::vector<Symbol> values) : q_(q), values_(std::move(values)) {
    require_alphabet(q);
    if (values_.empty()) throw DomainError("sequence length must be at least 1");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] >= q) {
            throw DomainError("symbol " + std::to_string(values_[i]) + " at position " + std::to_string(i) +
                              " is not in Z_" + std::to_string(q));
        }
    }
}

QarySequence QarySequence::with_alphabet(Symbol target) const { return QarySequence(target, values_); }

Symbol eval(const GeneralizedBooleanFunction& f, const BitIndex& i) {
    if (i.value() >> f.m() != 0) {
        throw DomainError("index " + std::to_string(i.value()) + " outside 0..2^" + std::to_string(f.m()) + "-1");
    }
    std::uint64_t sum = 0;
    for (const auto& [monomial, coefficient] : f.terms()) {
        if (monomial.at(i.value())) sum += coefficient;
    }
    return static_cast<Symbol>(sum % f.q());
}

QarySequence truncated_sequence(const GeneralizedBooleanFunction& f, std::size_t length) {
    const std::size_t full = std::size_t{1} << f.m();
    if (length < 1 || length > full) {
        throw DomainError("truncation length " + std::to_string(length) + " outside 1.." + std::to_string(full));
    }
    std::vector<Symbol> values(length);
    for (std::size_t i = 0; i < length; ++i) values[i] = eval(f, BitIndex(i, f.m()));
    return QarySequence(f.q(), std::move(values));
}

QarySequence indicator_sequence(unsigned l, unsigned m, std::size_t length, Symbol q) {
    require_variable_count(m);
    if (l < 1 || l > m) {
        throw DomainError("variable index " + std::to_string(l) + " outside 1.." + std::to_string(m));
    }
    const std::size_t full = std::size_t{1} << m;
    if (length < 1 || length > full) {
        throw DomainError("length " + std::to_string(length) + " outside 1.." + std::to_string(full));
    }
    std::vector<Symbol> values(length);
    for (std::size_t i = 0; i < length; ++i) values[i] = static_cast<Symbol>((i >> (l - 1)) & 1u);
    return QarySequence(q, std::move(values));
}

QarySequence add_sequences(const QarySequence& a, const QarySequence& b, Symbol scale) {
    if (a.size() != b.size()) {
        throw DomainError("length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
    if (a.q() != b.q()) {
        throw DomainError("alphabet mismatch: Z_" + std::to_string(a.q()) + " vs Z_" + std::to_string(b.q()));
    }
    const std::uint64_t q = a.q();
    std::vector<Symbol> values(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        values[i] = static_cast<Symbol>((a[i] + (std::uint64_t{scale} % q) * b[i]) % q);
    }
    return QarySequence(a.q(), std::move(values));
}

namespace {

class GbfParser {
public:
    GbfParser(std::string_view text, Symbol q, unsigned m) : text_(text), q_(q), m_(m) {}

    GeneralizedBooleanFunction parse() {
        std::vector<Term> terms;
        skip_space();
        if (at_end()) fail("empty expression");
        terms.push_back(term());
        while (true) {
            skip_space();
            if (at_end()) break;
            if (peek() != '+') fail(std::string("expected '+' but found '") + peek() + "'");
            ++pos_;
            terms.push_back(term());
        }
        return GeneralizedBooleanFunction(q_, m_, terms);
    }

private:
    Term term() {
        std::uint64_t coefficient = 1;
        std::vector<unsigned> variables;
        while (true) {
            skip_space();
            if (at_end()) fail("expected a constant or a variable");
            if (peek() == 'x' || peek() == 'X') {
                ++pos_;
                const std::size_t at = pos_;
                const std::uint64_t index = number();
                if (index < 1 || index > m_) {
                    pos_ = at;
                    fail("variable x" + std::to_string(index) + " outside x1..x" + std::to_string(m_));
                }
                variables.push_back(static_cast<unsigned>(index));
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coefficient = (coefficient * (number() % q_)) % q_;
            } else {
                fail(std::string("unexpected character '") + peek() + "'");
            }
            skip_space();
            if (at_end() || peek() != '*') break;
            ++pos_;
        }
        // x_i * x_i = x_i on binary inputs.
        return Term{Monomial(variables), coefficient};
    }

    std::uint64_t number() {
        skip_space();
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec == std::errc::invalid_argument) fail("expected a number");
        if (ec == std::errc::result_out_of_range) fail("number too large");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

    std::string_view text_;
    Symbol q_;
    unsigned m_;
    std::size_t pos_ = 0;
};

} // namespace

GeneralizedBooleanFunction parse_gbf(std::string_view text, Symbol q, unsigned m) {
    return GbfParser(text, q, m).parse();
}

std::string to_string(const Monomial& monomial) {
    if (monomial.is_constant()) return "1";
    std::string out;
    for (unsigned v : monomial.variables()) {
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(v);
    }
    return out;
}

std::string to_string(const GeneralizedBooleanFunction& f) {
    if (f.terms().empty()) return "0";
    // Highest degree first, lexicographic within a degree: 2*x1*x2+2*x3*x4+x1+1.
    std::vector<std::pair<Monomial, Symbol>> ordered(f.terms().begin(), f.terms().end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.first.degree() > b.first.degree(); });
    std::string out;
    for (const auto& [monomial, coefficient] : ordered) {
        if (!out.empty()) out += '+';
        if (monomial.is_constant()) {
            out += std::to_string(coefficient);
        } else if (coefficient == 1) {
            out += to_string(monomial);
        } else {
            out += std::to_string(coefficient) + '*' + to_string(monomial);
        }
    }
    return out;
}

} // namespace mocs
