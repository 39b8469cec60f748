#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "charlab/errors.hpp"

namespace charlab {

using residue_t = std::uint32_t;

// Default ceiling on p: the discrete-log table is p * 4 bytes.
inline constexpr residue_t kDefaultMaxPrime = 1u << 26;

// An odd prime p with its multiplicative bookkeeping: the smallest primitive
// root g and the full discrete-log table. Immutable after construction and
// safe to share across threads.
class FieldContext {
public:
    residue_t p() const { return p_; }
    residue_t generator() const { return g_; }

    // t with g^t = x (mod p), 0 <= t <= p-2. Throws zero_argument on x = 0.
    residue_t dlog(residue_t x) const {
        x %= p_;
        if (x == 0) raise(Errc::zero_argument, "discrete log of 0 is undefined");
        return dlog_[x];
    }

    residue_t add(residue_t a, residue_t b) const {
        residue_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    residue_t sub(residue_t a, residue_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    residue_t mul(residue_t a, residue_t b) const {
        return static_cast<residue_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    residue_t pow(residue_t base, std::uint64_t e) const;
    residue_t neg(residue_t a) const { return a == 0 ? 0 : p_ - a; }

    friend std::shared_ptr<const FieldContext> make_field(residue_t p, residue_t max_p);

private:
    FieldContext() = default;

    residue_t p_ = 0;
    residue_t g_ = 0;
    std::vector<residue_t> dlog_; // index x in [1, p-1] -> exponent
};

using FieldRef = std::shared_ptr<const FieldContext>;

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

residue_t smallest_primitive_root(residue_t p);

// Builds the context. Errors: not_prime, too_large.
FieldRef make_field(residue_t p, residue_t max_p = kDefaultMaxPrime);

inline residue_t discrete_log(const FieldContext& ctx, residue_t x) { return ctx.dlog(x); }

// Exact root of unity exp(2*pi*i*exponent/order), or zero. Character values
// use order p-1; additive characters use order p. Sums over these are
// accumulated as integer counts per exponent class and only rendered to a
// complex double at the boundary.
struct UnitValue {
    std::uint32_t order = 1;
    std::int64_t exponent = 0; // ignored when zero
    bool is_zero = false;

    std::complex<double> to_complex() const;

    static UnitValue zero(std::uint32_t order) { return {order, 0, true}; }
};

std::complex<double> unit_root(std::uint32_t order, std::uint64_t exponent);

// A multiplicative character of F_p^x given by its index m: chi(g^t) = zeta^(m t)
// with zeta the primitive (p-1)-th root of unity, extended by chi(0) = 0.
class MultiplicativeCharacter {
public:
    MultiplicativeCharacter(FieldRef ctx, residue_t index);

    const FieldContext& ctx() const { return *ctx_; }
    const FieldRef& ctx_ref() const { return ctx_; }
    residue_t index() const { return m_; }
    residue_t order() const { return order_; }
    bool trivial() const { return m_ == 0; }
    bool quadratic() const { return order_ == 2; }

    // Exponent class of chi(x) in [0, p-2]; x must be nonzero mod p.
    residue_t exponent_of(residue_t x) const {
        return static_cast<residue_t>(
            static_cast<std::uint64_t>(m_) * ctx_->dlog(x) % (ctx_->p() - 1));
    }

    // Class index of chi(x) among the order() distinct values: exponent
    // divided by (p-1)/order. x must be nonzero mod p.
    residue_t value_class(residue_t x) const { return exponent_of(x) / step_; }

    // (p-1)/order: value_class j corresponds to exponent j*step.
    residue_t class_step() const { return step_; }

    UnitValue eval(residue_t x) const;

private:
    FieldRef ctx_;
    residue_t m_;
    residue_t order_;
    residue_t step_;
};

MultiplicativeCharacter make_character(FieldRef ctx, residue_t index);
MultiplicativeCharacter legendre(FieldRef ctx);

UnitValue char_eval(const MultiplicativeCharacter& chi, residue_t x);

// e_p(u) = exp(2*pi*i*u/p).
UnitValue additive_eval(const FieldContext& ctx, residue_t u);

// Euler criterion x^((p-1)/2), returning +1/0/-1. Independent of the dlog
// table; used to cross-check the quadratic character.
int euler_criterion(const FieldContext& ctx, residue_t x);

} // namespace charlab
