#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "charlab/bitset.hpp"
#include "charlab/convolution.hpp"
#include "charlab/field.hpp"

namespace charlab {

// A finite subset of F_p kept in two synchronized views: a strictly sorted
// element list and a length-p bit array.
class ResidueSet {
public:
    ResidueSet() = default;

    // Validates range, sorts, dedupes. Duplicate count is discarded here;
    // use load_set for the warning-reporting loader.
    static ResidueSet from_elements(FieldRef ctx, std::vector<residue_t> elems);
    static ResidueSet from_bits(FieldRef ctx, Bitset bits);
    static ResidueSet full(FieldRef ctx);
    static ResidueSet empty(FieldRef ctx);

    const FieldContext& ctx() const { return *ctx_; }
    const FieldRef& ctx_ref() const { return ctx_; }
    const std::vector<residue_t>& elements() const { return elems_; }
    const Bitset& bits() const { return bits_; }
    std::size_t size() const { return elems_.size(); }
    bool empty_set() const { return elems_.empty(); }
    bool contains(residue_t x) const { return bits_.test(x); }
    bool contains_zero() const { return !elems_.empty() && elems_.front() == 0; }

    bool operator==(const ResidueSet& o) const {
        return ctx_->p() == o.ctx_->p() && elems_ == o.elems_;
    }

private:
    FieldRef ctx_;
    std::vector<residue_t> elems_;
    Bitset bits_;
};

void require_same_context(const ResidueSet& a, const ResidueSet& b);

ResidueSet sumset(const ResidueSet& a, const ResidueSet& b);
ResidueSet difference_set(const ResidueSet& a, const ResidueSet& b);
ResidueSet dilate(const ResidueSet& c, residue_t d); // errors: zero_dilation
ResidueSet translate(const ResidueSet& b, residue_t a);

enum class RepKind { additive, multiplicative };

// Integer representation counts r(x) over F_p. Additive: r(x) = #{(a,b): a+b=x}.
// Multiplicative: r(x) = #{(a,b): ab=x} with zero elements dropped from either
// input (dropped_pairs records how many pairs that removed) and counts[0] = 0.
struct RepresentationFunction {
    RepKind kind;
    std::vector<std::int64_t> counts; // length p
    std::int64_t total = 0;           // sum of counts
    std::int64_t dropped_pairs = 0;   // multiplicative kind only
};

RepresentationFunction representation_function(const ResidueSet& a, const ResidueSet& b,
                                               RepKind kind,
                                               ConvStrategy strategy = ConvStrategy::automatic);

struct EnergyValue {
    std::uint64_t value = 0;
    RepKind kind = RepKind::additive;
};

// E_+(A,B) = sum_x r_{A+B}(x)^2, exactly.
EnergyValue additive_energy(const ResidueSet& a, const ResidueSet& b,
                            ConvStrategy strategy = ConvStrategy::automatic);
// E_x(A,B) = sum_x r_{AB}(x)^2, zeros dropped.
EnergyValue multiplicative_energy(const ResidueSet& a, const ResidueSet& b,
                                  ConvStrategy strategy = ConvStrategy::automatic);

// Uniform n-subset of F_p, deterministic for a given seed: Floyd's sampling
// over splitmix64 draws. Errors: size_too_large.
ResidueSet random_subset(FieldRef ctx, std::size_t n, std::uint64_t seed);

// Loader for set files: either one decimal residue per line or a JSON array
// of integers. Values are reduced-range-checked; duplicates are dropped and
// counted in *dup_warnings when non-null.
ResidueSet load_set(FieldRef ctx, std::istream& in, std::size_t* dup_warnings = nullptr);
ResidueSet load_set_file(FieldRef ctx, const std::string& path, std::size_t* dup_warnings = nullptr);

} // namespace charlab
