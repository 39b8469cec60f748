#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "charlab/field.hpp"
#include "charlab/sets.hpp"

namespace charlab {

// A character-sum value held exactly: integer weight per exponent class of a
// fixed root of unity (order p-1 for multiplicative characters, p for e_p),
// rendered to a complex double once. Terms chi(0) = 0 contribute to no class,
// so sum(classes) <= term_count with equality iff no zero arguments occurred.
struct SumValue {
    std::uint32_t root_order = 1;
    std::vector<std::int64_t> classes; // length root_order
    std::int64_t term_count = 0;
    bool trivial_character = false; // set when a trivial chi was supplied

    std::complex<double> value() const;
    double magnitude() const { return std::abs(value()); }

    bool same_classes(const SumValue& o) const {
        return root_order == o.root_order && classes == o.classes;
    }
};

// S_chi(A,B) = sum_{a,b} chi(a+b). Fast path goes through the additive
// representation function; the naive sibling is the direct double loop.
SumValue paley_sum(const MultiplicativeCharacter& chi, const ResidueSet& a,
                   const ResidueSet& b, ConvStrategy strategy = ConvStrategy::automatic);
SumValue paley_sum_naive(const MultiplicativeCharacter& chi, const ResidueSet& a,
                         const ResidueSet& b);

// sum_{a,b,c} chi(a+b+c) via double convolution.
SumValue ternary_sum(const MultiplicativeCharacter& chi, const ResidueSet& a,
                     const ResidueSet& b, const ResidueSet& c,
                     ConvStrategy strategy = ConvStrategy::automatic);
SumValue ternary_sum_naive(const MultiplicativeCharacter& chi, const ResidueSet& a,
                           const ResidueSet& b, const ResidueSet& c);

// M_chi(A,B,C) = sum chi(a+bc). Multiplicative representation of (B,C),
// completed at 0 with the dropped-pair count, then shifted through A.
SumValue mult_ternary_sum(const MultiplicativeCharacter& chi, const ResidueSet& a,
                          const ResidueSet& b, const ResidueSet& c,
                          ConvStrategy strategy = ConvStrategy::automatic);
SumValue mult_ternary_sum_naive(const MultiplicativeCharacter& chi, const ResidueSet& a,
                                const ResidueSet& b, const ResidueSet& c);

// H_chi(A,B,C,D) = sum chi(a+b+cd).
SumValue mixed_quaternary_sum(const MultiplicativeCharacter& chi, const ResidueSet& a,
                              const ResidueSet& b, const ResidueSet& c, const ResidueSet& d,
                              ConvStrategy strategy = ConvStrategy::automatic);
SumValue mixed_quaternary_sum_naive(const MultiplicativeCharacter& chi, const ResidueSet& a,
                                    const ResidueSet& b, const ResidueSet& c,
                                    const ResidueSet& d);

// T_x(A,B) = sum_{a,b} e_p(x a b), exact over p-th-root exponent classes.
SumValue bilinear_exponential_sum(const FieldContext& ctx, residue_t x, const ResidueSet& a,
                                  const ResidueSet& b,
                                  ConvStrategy strategy = ConvStrategy::automatic);
SumValue bilinear_exponential_sum_naive(const FieldContext& ctx, residue_t x,
                                        const ResidueSet& a, const ResidueSet& b);

// A polynomial given by its roots in F_p with multiplicities. Only the
// root-listed form is supported; it is what the Weil-bound harness needs.
struct PolynomialSpec {
    struct Root {
        residue_t value;
        std::uint64_t multiplicity;
    };
    std::vector<Root> roots; // distinct root values

    static PolynomialSpec from_roots(std::vector<Root> roots); // errors: bad_input
    std::size_t distinct_roots() const { return roots.size(); }
    std::uint64_t degree() const;
};

// True iff every multiplicity is divisible by l, i.e. f is an l-th power.
bool is_lth_power(const PolynomialSpec& f, std::uint64_t l);

// Complete sum over x in F_p of chi(f(x)), evaluated through the dlog table.
SumValue polynomial_char_sum(const MultiplicativeCharacter& chi, const PolynomialSpec& f);

// The 2k-th moment expansion polynomial for a tuple from A: first k entries
// enter with multiplicity 1, the rest with p-2 (conjugation); equal roots merge.
PolynomialSpec moment_polynomial(const FieldContext& ctx, const std::vector<residue_t>& tuple,
                                 std::size_t k);

// sum_x |sum_{a in A} chi(a+x)|^{2k}. For order-2 characters the value is an
// exact integer, carried in a 128-bit accumulator; otherwise the per-x inner
// sums are exact class counts and only the magnitude power is floating point
// (tolerance 2k * term_count * 8 ulp).
struct MomentValue {
    double value = 0.0;
    bool exact = false;
    unsigned __int128 exact_integer = 0; // valid when exact

    std::string exact_decimal() const;
};

MomentValue moment_sum(const MultiplicativeCharacter& chi, const ResidueSet& a,
                       std::uint64_t k);

// Test oracle: the k = 1 moment as a triple loop over (a, a', x).
std::complex<double> moment_sum_naive_k1(const MultiplicativeCharacter& chi,
                                         const ResidueSet& a);

// Per-x inner sums sum_{c in C} chi(x+c) as class counts over the order()
// values of chi; shared by the moment and Burgess evaluations.
class InnerSumTable {
public:
    InnerSumTable(const MultiplicativeCharacter& chi, const ResidueSet& c);

    // Inner sum at shift x as a complex value.
    std::complex<double> value_at(residue_t x) const;
    // Signed integer inner sum, valid only for order-2 characters.
    std::int64_t signed_at(residue_t x) const;
    std::uint32_t order() const { return order_; }

private:
    std::uint32_t order_;
    std::uint32_t p_;
    std::vector<std::int64_t> counts_; // p rows of order_ class counts
    std::vector<std::complex<double>> roots_;
};

} // namespace charlab
