#pragma once

#include <cstdint>
#include <string>

namespace modrep {

/// Element of F_{p^2} = F_p[sqrt(delta)], stored as a + b*sqrt(delta) with
/// canonical residues 0 <= a,b < p.
struct Scalar {
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    friend bool operator==(const Scalar&, const Scalar&) = default;
};

/// Arithmetic context for F_p and its quadratic extension. delta is the
/// smallest positive quadratic nonresidue mod p, so the presentation is
/// deterministic and exports are bit-stable.
class FieldCtx {
public:
    explicit FieldCtx(int p);

    int p() const { return static_cast<int>(p_); }
    int delta() const { return static_cast<int>(delta_); }

    Scalar zero() const { return {}; }
    Scalar one() const { return {1u, 0u}; }
    bool is_zero(const Scalar& x) const { return x.a == 0 && x.b == 0; }

    /// Reduce an integer into the prime subfield.
    Scalar from_int(long long v) const;

    Scalar add(const Scalar& x, const Scalar& y) const {
        return {addp(x.a, y.a), addp(x.b, y.b)};
    }
    Scalar sub(const Scalar& x, const Scalar& y) const {
        return {subp(x.a, y.a), subp(x.b, y.b)};
    }
    Scalar neg(const Scalar& x) const { return {negp(x.a), negp(x.b)}; }
    Scalar mul(const Scalar& x, const Scalar& y) const {
        // (a + b s)(a' + b' s) = (aa' + delta bb') + (ab' + a'b) s
        return {addp(mulp(x.a, y.a), mulp(delta_, mulp(x.b, y.b))),
                addp(mulp(x.a, y.b), mulp(x.b, y.a))};
    }
    /// Multiplicative inverse; throws std::domain_error on zero.
    Scalar inv(const Scalar& x) const;

    Scalar pow(Scalar base, unsigned long long e) const;

    /// x -> x^p; fixes exactly the prime subfield.
    Scalar frobenius(const Scalar& x) const { return {x.a, negp(x.b)}; }

    /// Euler criterion for a in [0, p). By convention 0 counts as a residue.
    bool is_residue(std::uint32_t a) const;

    /// Canonical square root of a prime-subfield element a in [0, p).
    /// Residues map to (min(r, p-r), 0); nonresidues to (0, s) with
    /// (s sqrt(delta))^2 = a; sqrt_base(0) = 0.
    Scalar sqrt_base(std::uint32_t a) const;

    /// omega with omega^2 = -1 (always exists in F_{p^2}).
    Scalar sqrt_minus_one() const { return sqrt_base(p_ - 1); }

    // prime-subfield helpers, operands already reduced
    std::uint32_t addp(std::uint32_t x, std::uint32_t y) const {
        std::uint32_t r = x + y;
        return r >= p_ ? r - p_ : r;
    }
    std::uint32_t subp(std::uint32_t x, std::uint32_t y) const {
        return x >= y ? x - y : x + p_ - y;
    }
    std::uint32_t negp(std::uint32_t x) const { return x == 0 ? 0 : p_ - x; }
    std::uint32_t mulp(std::uint32_t x, std::uint32_t y) const {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(x) * y) % p_);
    }
    std::uint32_t invp(std::uint32_t x) const;
    std::uint32_t powp(std::uint32_t base, std::uint64_t e) const;
    std::uint32_t redp(long long v) const;

private:
    std::uint32_t p_ = 0;
    std::uint32_t delta_ = 0;
};

/// Builds the context; rejects non-prime p and p = 2.
FieldCtx make_field(int p);

std::string to_string(const Scalar& x);

} // namespace modrep
