#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mocs {

// Element of Z_q, always stored reduced to [0, q).
using Symbol = std::uint32_t;

// Largest number of Boolean variables a function may have. Sequences are
// materialized in full (length up to 2^m), so this is a memory bound rather
// than an arithmetic one.
inline constexpr unsigned kMaxVariables = 30;

// Integer i together with its binary representation (i_1, ..., i_m), where
// i = sum_j i_j 2^(j-1). i_1 is the least significant bit; every sequence in
// this library is indexed with that convention.
class BitIndex {
public:
    BitIndex(std::uint64_t value, unsigned width);

    static BitIndex from_bits(std::span<const unsigned> bits);

    std::uint64_t value() const noexcept { return value_; }
    unsigned width() const noexcept { return width_; }

    // i_j for 1 <= j <= m.
    unsigned bit(unsigned j) const;
    std::vector<unsigned> bits() const;

private:
    std::uint64_t value_;
    unsigned width_;
};

// Product of distinct Boolean variables x_{v1} x_{v2} ... . The empty product
// is the constant monomial 1. Stored as a variable set (bit v-1 set iff x_v
// occurs); the degree is derived.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::initializer_list<unsigned> variables);
    explicit Monomial(std::span<const unsigned> variables);

    static Monomial from_mask(std::uint64_t mask) noexcept;

    std::uint64_t mask() const noexcept { return mask_; }
    unsigned degree() const noexcept;
    bool is_constant() const noexcept { return mask_ == 0; }
    bool contains(unsigned variable) const noexcept;
    unsigned highest_variable() const noexcept;

    // Sorted ascending.
    std::vector<unsigned> variables() const;

    // Value of the monomial at the point whose bits are the bits of `index`.
    bool at(std::uint64_t index) const noexcept { return (index & mask_) == mask_; }

    // Degree first, then lexicographic on the sorted variable list.
    std::strong_ordering operator<=>(const Monomial& other) const noexcept;
    bool operator==(const Monomial& other) const noexcept = default;

private:
    std::uint64_t mask_ = 0;
};

struct Term {
    Monomial monomial;
    std::uint64_t coefficient = 0;
};

// Z_q-valued function of m binary variables in algebraic normal form.
// Canonical: coefficients reduced mod q, zero coefficients absent.
class GeneralizedBooleanFunction {
public:
    // The zero function.
    GeneralizedBooleanFunction(Symbol q, unsigned m);
    // Sum of the given terms; repeated monomials are combined.
    GeneralizedBooleanFunction(Symbol q, unsigned m, std::span<const Term> terms);
    GeneralizedBooleanFunction(Symbol q, unsigned m, std::initializer_list<Term> terms);

    Symbol q() const noexcept { return q_; }
    unsigned m() const noexcept { return m_; }
    const std::map<Monomial, Symbol>& terms() const noexcept { return terms_; }
    Symbol coefficient(const Monomial& monomial) const;
    unsigned degree() const noexcept;

    friend GeneralizedBooleanFunction operator+(const GeneralizedBooleanFunction& a,
                                                const GeneralizedBooleanFunction& b);
    bool operator==(const GeneralizedBooleanFunction& other) const = default;

private:
    void accumulate(const Term& term);

    Symbol q_;
    unsigned m_;
    std::map<Monomial, Symbol> terms_;
};

// Length-L vector over Z_q, L >= 1.
class QarySequence {
public:
    QarySequence(Symbol q, std::vector<Symbol> values);

    Symbol q() const noexcept { return q_; }
    std::size_t size() const noexcept { return values_.size(); }
    Symbol operator[](std::size_t i) const { return values_[i]; }
    std::span<const Symbol> values() const noexcept { return values_; }

    // Same symbols read over Z_target. Every symbol must already be < target;
    // used to lift binary masks into the q-ary alphabet.
    QarySequence with_alphabet(Symbol target) const;

    bool operator==(const QarySequence& other) const = default;

private:
    Symbol q_;
    std::vector<Symbol> values_;
};

Symbol eval(const GeneralizedBooleanFunction& f, const BitIndex& i);

// (f_0, ..., f_{L-1}); the full 2^m table with the last 2^m - L entries removed.
QarySequence truncated_sequence(const GeneralizedBooleanFunction& f, std::size_t length);

// Entry i is bit i_l of i. Values are 0/1 read over Z_q.
QarySequence indicator_sequence(unsigned l, unsigned m, std::size_t length, Symbol q = 2);

// (a_i + scale * b_i) mod q.
QarySequence add_sequences(const QarySequence& a, const QarySequence& b, Symbol scale);

// Text form: terms joined by '+', each term a '*'-separated product of
// integers and variables x<i>. Whitespace is ignored. "0" is the zero function.
GeneralizedBooleanFunction parse_gbf(std::string_view text, Symbol q, unsigned m);
std::string to_string(const GeneralizedBooleanFunction& f);
std::string to_string(const Monomial& monomial);

} // namespace mocs
