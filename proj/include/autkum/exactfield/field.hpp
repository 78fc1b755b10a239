#pragma once

#include <concepts>
#include <optional>

#include "autkum/exactfield/ext_field.hpp"
#include "autkum/exactfield/prime_field.hpp"
#include "autkum/exactfield/ratfunc.hpp"

namespace autkum {

/// Element of a field of odd characteristic whose descriptor travels with
/// the value; `make(k)` embeds the integer k into the same field.
template <class F>
concept FieldElement = std::copy_constructible<F> && requires(const F a, const F b, i64 k) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::convertible_to<F>;
    { a.make(k) } -> std::convertible_to<F>;
    { a.characteristic() } -> std::convertible_to<u64>;
};

/// Enumeration support; only finite fields define `enumerable = true`.
template <class F>
struct FiniteFieldTraits {
    static constexpr bool enumerable = false;
};

template <>
struct FiniteFieldTraits<Fp> {
    static constexpr bool enumerable = true;
    static u64 size(const Fp& sample) { return sample.modulus(); }
    static Fp element_at(const Fp& sample, u64 idx) { return Fp::from_residue(idx, sample.modulus()); }
    static u64 index(const Fp& x) { return x.value(); }
};

template <>
struct FiniteFieldTraits<ExtElem> {
    static constexpr bool enumerable = true;
    static u64 size(const ExtElem& sample) { return sample.field()->q; }
    static ExtElem element_at(const ExtElem& sample, u64 idx) { return ExtElem::element_at(sample.field(), idx); }
    static u64 index(const ExtElem& x) { return x.index(); }
};

enum class FieldOp { Add, Sub, Mul, Inv, Neg };

/// Uniform entry point for the five basic operations; `y` is ignored for
/// the unary ones.
template <FieldElement F>
F field_ops(const F& x, const std::optional<F>& y, FieldOp op)
{
    auto rhs = [&]() -> const F& {
        if (!y) throw Error(Errc::InvalidArgument, "binary field operation needs two operands");
        return *y;
    };
    switch (op) {
    case FieldOp::Add: return x + rhs();
    case FieldOp::Sub: return x - rhs();
    case FieldOp::Mul: return x * rhs();
    case FieldOp::Inv: return x.inverse();
    case FieldOp::Neg: return -x;
    }
    throw Error(Errc::InternalError, "unknown field op");
}

template <FieldElement F>
F power(const F& x, u64 e)
{
    F acc = x.make(1), base = x;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

static_assert(FieldElement<Fp>);
static_assert(FieldElement<ExtElem>);
static_assert(FieldElement<RatFunc>);

} // namespace autkum
