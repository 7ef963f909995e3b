#pragma once

// Montgomery arithmetic modulo an odd p < 2^62.

#include <cstdint>

namespace pmscheme::detail {

class Montgomery {
public:
    explicit Montgomery(std::uint64_t p) : p_(p)
    {
        std::uint64_t inv = p;  // Newton iteration for p^-1 mod 2^64
        for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
        neg_inv_ = ~inv + 1;
        const unsigned __int128 r = (static_cast<unsigned __int128>(1) << 64) % p;
        r_ = static_cast<std::uint64_t>(r);
        r2_ = static_cast<std::uint64_t>((r * r) % p);
    }

    std::uint64_t modulus() const noexcept { return p_; }
    std::uint64_t one() const noexcept { return r_; }

    std::uint64_t reduce(unsigned __int128 t) const noexcept
    {
        const std::uint64_t m = static_cast<std::uint64_t>(t) * neg_inv_;
        const std::uint64_t u = static_cast<std::uint64_t>((t + static_cast<unsigned __int128>(m) * p_) >> 64);
        return u >= p_ ? u - p_ : u;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept
    {
        return reduce(static_cast<unsigned __int128>(a) * b);
    }
    std::uint64_t to(std::uint64_t a) const noexcept { return mul(a % p_, r2_); }
    std::uint64_t from(std::uint64_t a) const noexcept { return reduce(a); }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept
    {
        std::uint64_t r = r_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    /// Inverse of a nonzero Montgomery-form element.
    std::uint64_t inv(std::uint64_t a) const noexcept { return pow(a, p_ - 2); }

private:
    std::uint64_t p_;
    std::uint64_t neg_inv_;
    std::uint64_t r_;
    std::uint64_t r2_;
};

} // namespace pmscheme::detail
