#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace wcdim {

/// Field of scalars identified by its characteristic: 0 means the rationals,
/// a prime p means GF(p). Matrices arising from graphs are integer-valued, so
/// GF(p^h) gives the same ranks as GF(p) and is represented by p.
class FieldSpec {
public:
    static constexpr std::uint64_t max_prime = (std::uint64_t{1} << 31) - 1;

    constexpr FieldSpec() = default;

    explicit FieldSpec(std::uint64_t characteristic) : p_(characteristic) {
        if (p_ > max_prime) {
            throw InputError("characteristic " + std::to_string(p_) + " exceeds 2^31");
        }
        if (p_ != 0 && !is_prime(p_)) {
            throw InputError("characteristic " + std::to_string(p_) + " is neither 0 nor a prime");
        }
    }

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime(std::uint64_t p) { return FieldSpec{p}; }

    constexpr std::uint64_t characteristic() const noexcept { return p_; }
    constexpr bool is_rational() const noexcept { return p_ == 0; }

    std::string name() const { return p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")"; }

    /// Canonical representative of q in this field: q itself over Q, the residue
    /// num * den^-1 in 0..p-1 otherwise.
    mpq_class reduce(const mpq_class& q) const {
        if (p_ == 0) return q;
        return mpq_class(residue(q));
    }

    std::uint64_t residue(const mpq_class& q) const {
        const mpz_class p(static_cast<unsigned long>(p_));
        mpz_class den = q.get_den() % p;
        if (den == 0) {
            throw InputError("value " + q.get_str() + " has no image in " + name());
        }
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        mpz_class r = (q.get_num() * inv) % p;
        if (r < 0) r += p;
        return r.get_ui();
    }

    static constexpr bool is_prime(std::uint64_t n) noexcept {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    }

    friend constexpr bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    std::uint64_t p_ = 0;
};

}  // namespace wcdim
