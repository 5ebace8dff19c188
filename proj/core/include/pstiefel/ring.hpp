#ifndef PSTIEFEL_RING_HPP
#define PSTIEFEL_RING_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <pstiefel/error.hpp>

namespace pstiefel {

using Integer = mpz_class;

/// Element of Z/m, or of Z itself when the modulus is 0.
///
/// The value is always kept canonical: for m > 0 it lies in [0, m).
class Residue {
public:
    Residue() = default;
    explicit Residue(Integer value, Integer modulus = 0);

    const Integer& value() const noexcept { return value_; }
    const Integer& modulus() const noexcept { return modulus_; }

    bool is_zero() const noexcept { return value_ == 0; }
    bool is_unit() const;

    Residue operator+(const Residue& rhs) const;
    Residue operator-(const Residue& rhs) const;
    Residue operator*(const Residue& rhs) const;
    Residue operator-() const;
    Residue inverse() const;

    bool operator==(const Residue& rhs) const;

    std::string to_string() const { return value_.get_str(); }

private:
    void check_same_ring(const Residue& rhs) const;

    Integer value_ = 0;
    Integer modulus_ = 0;
};

/// Canonical representative of v in Z/m (m = 0 leaves v untouched).
Integer canonical(const Integer& v, const Integer& m);

/// gcd of absolute values; 0 iff every entry is 0.
Integer gcd_all(std::span<const Integer> values);

/// p-adic valuation of a nonzero integer.
std::int64_t nu(const Integer& p, const Integer& n);

/// Binomial coefficient C(n, r) mod p via base-p digit products.
Residue lucas_binom(const Integer& n, const Integer& r, const Integer& p);

std::vector<std::int64_t> primes_upto(std::int64_t bound);

bool is_prime(const Integer& p);

} // namespace pstiefel

#endif // PSTIEFEL_RING_HPP
