#include <pstiefel/ring.hpp>

#include <algorithm>

namespace pstiefel {

Integer canonical(const Integer& v, const Integer& m) {
    if (m == 0) {
        return v;
    }
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

Residue::Residue(Integer value, Integer modulus)
    : value_(std::move(value)), modulus_(std::move(modulus)) {
    if (modulus_ < 0) {
        throw InputError("negative modulus " + modulus_.get_str());
    }
    value_ = canonical(value_, modulus_);
}

void Residue::check_same_ring(const Residue& rhs) const {
    if (modulus_ != rhs.modulus_) {
        throw InputError("modulus mismatch: " + modulus_.get_str() + " vs " +
                         rhs.modulus_.get_str());
    }
}

bool Residue::is_unit() const {
    if (modulus_ == 0) {
        return abs(value_) == 1;
    }
    if (modulus_ == 1) {
        return true;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t());
    return g == 1;
}

Residue Residue::operator+(const Residue& rhs) const {
    check_same_ring(rhs);
    return Residue(value_ + rhs.value_, modulus_);
}

Residue Residue::operator-(const Residue& rhs) const {
    check_same_ring(rhs);
    return Residue(value_ - rhs.value_, modulus_);
}

Residue Residue::operator*(const Residue& rhs) const {
    check_same_ring(rhs);
    return Residue(value_ * rhs.value_, modulus_);
}

Residue Residue::operator-() const { return Residue(-value_, modulus_); }

Residue Residue::inverse() const {
    if (!is_unit()) {
        throw InputError("not invertible: " + value_.get_str() + " mod " + modulus_.get_str());
    }
    if (modulus_ == 0) {
        return *this; // +-1
    }
    Integer inv;
    mpz_invert(inv.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t());
    return Residue(inv, modulus_);
}

bool Residue::operator==(const Residue& rhs) const {
    return modulus_ == rhs.modulus_ && value_ == rhs.value_;
}

Integer gcd_all(std::span<const Integer> values) {
    if (values.empty()) {
        throw InputError("gcd_all of an empty list");
    }
    Integer g = 0;
    for (const auto& v : values) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    return g;
}

bool is_prime(const Integer& p) {
    return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

std::int64_t nu(const Integer& p, const Integer& n) {
    if (!is_prime(p)) {
        throw InputError(p.get_str() + " is not prime");
    }
    if (n == 0) {
        throw InputError("infinite valuation");
    }
    Integer rest = abs(n);
    std::int64_t e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

namespace {

// C(a, b) mod p for 0 <= a, b < p by direct product; p is small enough here
// that the factorial-free product stays cheap.
Integer small_binom_mod(const Integer& a, const Integer& b, const Integer& p) {
    if (b > a) {
        return 0;
    }
    const Integer k = std::min<Integer>(b, a - b);
    Integer num = 1;
    Integer den = 1;
    for (Integer i = 0; i < k; ++i) {
        num = (num * (a - i)) % p;
        den = (den * (i + 1)) % p;
    }
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    return (num * inv) % p;
}

} // namespace

Residue lucas_binom(const Integer& n, const Integer& r, const Integer& p) {
    if (!is_prime(p)) {
        throw InputError(p.get_str() + " is not prime");
    }
    if (n < 0 || r < 0) {
        throw InputError("lucas_binom needs nonnegative arguments");
    }
    if (r > n) {
        return Residue(0, p);
    }
    Integer a = n;
    Integer b = r;
    Integer acc = 1;
    while (b > 0 || a > 0) {
        Integer ad = a % p;
        Integer bd = b % p;
        if (bd > ad) {
            return Residue(0, p);
        }
        acc = (acc * small_binom_mod(ad, bd, p)) % p;
        a /= p;
        b /= p;
    }
    return Residue(acc, p);
}

std::vector<std::int64_t> primes_upto(std::int64_t bound) {
    if (bound < 2) {
        return {};
    }
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    std::vector<std::int64_t> out;
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (composite[static_cast<std::size_t>(i)]) {
            continue;
        }
        out.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i) {
            composite[static_cast<std::size_t>(j)] = true;
        }
    }
    return out;
}

} // namespace pstiefel
