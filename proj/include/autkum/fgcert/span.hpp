#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "autkum/exactfield/laurent.hpp"

namespace autkum {

/// Reduced row-echelon basis of an F_p-span of Laurent polynomials. Rows are
/// sparse maps exponent -> coefficient; the pivot of a row is its lowest
/// exponent and has coefficient 1; no other row has a nonzero entry there.
class SpanBasis {
public:
    using Row = std::map<i64, u64>;

    explicit SpanBasis(u64 p) : p_(p) { require_odd_prime(p); }

    u64 p() const noexcept { return p_; }
    size_t dimension() const noexcept { return rows_.size(); }
    const std::map<i64, Row>& rows() const noexcept { return rows_; }
    const std::vector<LaurentVector>& generators() const noexcept { return gens_; }
    i64 window_lo() const noexcept { return lo_; }
    i64 window_hi() const noexcept { return hi_; }

    /// Adds v to the generating set; returns true if the dimension grew.
    bool insert(const LaurentVector& v)
    {
        check(v);
        gens_.push_back(v);
        if (!v.is_zero()) {
            lo_ = windowed_ ? std::min(lo_, v.lo) : v.lo;
            hi_ = windowed_ ? std::max(hi_, v.hi) : v.hi;
            windowed_ = true;
        }
        Row r = reduce(to_row(v));
        if (r.empty()) return false;
        const i64 piv = r.begin()->first;
        const u64 s = inv_mod(r.begin()->second, p_);
        for (auto& [e, c] : r) c = mul_mod(c, s, p_);
        for (auto& [piv2, row] : rows_) {
            auto it = row.find(piv);
            if (it != row.end()) axpy(row, r, p_ - it->second);
        }
        rows_.emplace(piv, std::move(r));
        return true;
    }

    bool contains(const LaurentVector& v) const
    {
        check(v);
        return reduce(to_row(v)).empty();
    }

private:
    void check(const LaurentVector& v) const
    {
        if (v.p != p_) throw Error(Errc::FieldMismatch, "Laurent vector over a different prime");
    }

    Row to_row(const LaurentVector& v) const
    {
        Row r;
        for (i64 e = v.lo; e <= v.hi; ++e)
            if (u64 c = v.coeff(e) % p_) r[e] = c;
        return r;
    }

    /// dst += k * src, dropping zeros.
    static void axpy(Row& dst, const Row& src, u64 k, u64 p)
    {
        for (const auto& [e, c] : src) {
            u64& slot = dst[e];
            slot = (slot + mul_mod(k, c, p)) % p;
            if (!slot) dst.erase(e);
        }
    }
    void axpy(Row& dst, const Row& src, u64 k) const { axpy(dst, src, k, p_); }

    Row reduce(Row r) const
    {
        for (const auto& [piv, row] : rows_) {
            auto it = r.find(piv);
            if (it != r.end()) axpy(r, row, p_ - it->second);
        }
        return r;
    }

    u64 p_;
    std::map<i64, Row> rows_;
    std::vector<LaurentVector> gens_;
    i64 lo_ = 0, hi_ = 0;
    bool windowed_ = false;
};

inline SpanBasis span_basis(const std::vector<LaurentVector>& S, u64 p)
{
    SpanBasis b(p);
    for (const auto& v : S) b.insert(v);
    return b;
}

/// Dimension of the F_p-span, which is also the subgroup of (F_p(t), +)
/// generated by S since every element has additive order p.
inline size_t span_dimension(const std::vector<LaurentVector>& S, u64 p) { return span_basis(S, p).dimension(); }

inline bool span_membership(const LaurentVector& v, const std::vector<LaurentVector>& S, u64 p)
{
    return span_basis(S, p).contains(v);
}

/// Least N >= 0 with t^N outside span(S). Terminates by N = max(hi(S), -1) + 1.
inline i64 escape_witness(const std::vector<LaurentVector>& S, u64 p)
{
    const SpanBasis b = span_basis(S, p);
    i64 bound = -1;
    for (const auto& v : S)
        if (!v.is_zero()) bound = std::max(bound, v.hi);
    for (i64 n = 0; n <= bound + 1; ++n)
        if (!b.contains(monomial_vector(n, p))) return n;
    throw Error(Errc::InternalError, "escape witness exceeded its bound");
}

/// Span dimensions of {t^0, ..., t^d} for d = 0..depth.
struct NonFGCert {
    i64 depth = 0;
    u64 p = 0;
    std::vector<size_t> dims;

    bool valid() const
    {
        if (dims.size() != static_cast<size_t>(depth) + 1) return false;
        for (size_t d = 0; d < dims.size(); ++d)
            if (dims[d] != d + 1) return false;
        return true;
    }
};

inline NonFGCert non_fg_certificate(i64 depth, u64 p)
{
    if (depth < 1) throw Error(Errc::InvalidArgument, "depth must be >= 1");
    SpanBasis b(p);
    NonFGCert c{depth, p, {}};
    for (i64 d = 0; d <= depth; ++d) {
        b.insert(monomial_vector(d, p));
        c.dims.push_back(b.dimension());
    }
    if (!c.valid()) throw Error(Errc::InternalError, "powers of t became dependent");
    return c;
}

} // namespace autkum
