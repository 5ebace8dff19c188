#ifndef PSTIEFEL_SERIES_HPP
#define PSTIEFEL_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <pstiefel/ring.hpp>

namespace pstiefel {

/// Dense power series in one indeterminate x, truncated below x^T.
///
/// Coefficients live in Z (modulus 0) or Z/m. Every series carries exactly T
/// coefficients; index i holds the coefficient of x^i. Binary operations
/// require both operands to agree on T and on the modulus.
class TruncatedSeries {
public:
    TruncatedSeries(std::vector<Integer> coeffs, std::size_t truncation, Integer modulus = 0);
    TruncatedSeries(std::initializer_list<long> coeffs, std::size_t truncation,
                    Integer modulus = 0);

    static TruncatedSeries one(std::size_t truncation, Integer modulus = 0);

    /// 1 + c x^degree, the building block for every Chern/Pontrjagin factor.
    static TruncatedSeries binomial(const Integer& c, std::size_t degree, std::size_t truncation,
                                    Integer modulus = 0);

    std::size_t truncation() const noexcept { return coeffs_.size(); }
    const Integer& modulus() const noexcept { return modulus_; }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    Residue coeff(std::size_t i) const;

    bool is_unit() const;
    bool operator==(const TruncatedSeries& rhs) const = default;

    std::string to_string() const;

private:
    std::vector<Integer> coeffs_;
    Integer modulus_;
};

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries inv(const TruncatedSeries& a);
TruncatedSeries int_pow(const TruncatedSeries& a, std::int64_t e);
TruncatedSeries reduce_mod(const TruncatedSeries& a, const Integer& m);

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return mul(a, b);
}

} // namespace pstiefel

#endif // PSTIEFEL_SERIES_HPP
