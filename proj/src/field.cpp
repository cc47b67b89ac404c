#include "modrep/field.hpp"

#include <stdexcept>

namespace modrep {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

FieldCtx::FieldCtx(int p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("FieldCtx: p must be an odd prime >= 3, got " +
                                    std::to_string(p));
    if (!is_prime(p))
        throw std::invalid_argument("FieldCtx: p is not prime: " + std::to_string(p));
    p_ = static_cast<std::uint32_t>(p);
    // smallest positive nonresidue; exists for every odd prime
    for (std::uint32_t d = 2; d < p_; ++d) {
        if (powp(d, (p_ - 1) / 2) == p_ - 1) {
            delta_ = d;
            break;
        }
    }
    if (delta_ == 0)
        throw std::logic_error("FieldCtx: no quadratic nonresidue found");
}

FieldCtx make_field(int p) { return FieldCtx(p); }

Scalar FieldCtx::from_int(long long v) const { return {redp(v), 0u}; }

std::uint32_t FieldCtx::redp(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t FieldCtx::powp(std::uint32_t base, std::uint64_t e) const {
    std::uint32_t r = 1 % p_;
    std::uint32_t b = base % p_;
    while (e) {
        if (e & 1) r = mulp(r, b);
        b = mulp(b, b);
        e >>= 1;
    }
    return r;
}

std::uint32_t FieldCtx::invp(std::uint32_t x) const {
    if (x % p_ == 0) throw std::domain_error("FieldCtx: division by zero in F_p");
    return powp(x, p_ - 2);
}

Scalar FieldCtx::inv(const Scalar& x) const {
    if (is_zero(x)) throw std::domain_error("FieldCtx: division by zero in F_{p^2}");
    // norm = a^2 - delta b^2 lies in F_p and is nonzero (delta is a nonresidue)
    std::uint32_t n = subp(mulp(x.a, x.a), mulp(delta_, mulp(x.b, x.b)));
    std::uint32_t ni = invp(n);
    return {mulp(x.a, ni), mulp(negp(x.b), ni)};
}

Scalar FieldCtx::pow(Scalar base, unsigned long long e) const {
    Scalar r = one();
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

bool FieldCtx::is_residue(std::uint32_t a) const {
    a %= p_;
    if (a == 0) return true;
    return powp(a, (p_ - 1) / 2) == 1;
}

Scalar FieldCtx::sqrt_base(std::uint32_t a) const {
    a %= p_;
    if (a == 0) return zero();
    if (is_residue(a)) {
        // p is small here; exhaustive search keeps the branch rule obvious
        for (std::uint32_t r = 1; r < p_; ++r) {
            if (mulp(r, r) == a) {
                std::uint32_t canon = r <= p_ - r ? r : p_ - r;
                return {canon, 0u};
            }
        }
        throw std::logic_error("FieldCtx: residue without root");
    }
    // a = delta * s^2 with s^2 = a / delta a residue
    std::uint32_t s2 = mulp(a, invp(delta_));
    Scalar s = sqrt_base(s2);
    return {0u, s.a};
}

std::string to_string(const Scalar& x) {
    if (x.b == 0) return std::to_string(x.a);
    return std::to_string(x.a) + "+" + std::to_string(x.b) + "w";
}

} // namespace modrep
