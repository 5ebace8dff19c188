#ifndef PSTIEFEL_WEIGHTS_HPP
#define PSTIEFEL_WEIGHTS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <pstiefel/ring.hpp>
#include <pstiefel/series.hpp>

namespace pstiefel {

/// Primitive integer tuple (l_1, ..., l_k) defining the circle action.
class WeightTuple {
public:
    /// Accepts the tuple iff it is nonempty with gcd 1.
    static WeightTuple validate(std::span<const Integer> raw);
    static WeightTuple validate(std::initializer_list<long> raw);

    std::size_t size() const noexcept { return weights_.size(); }
    const Integer& operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<Integer>& values() const noexcept { return weights_; }

    bool operator==(const WeightTuple&) const = default;

    /// "(l1,l2,...)"
    std::string to_string() const;

private:
    explicit WeightTuple(std::vector<Integer> w) : weights_(std::move(w)) {}

    std::vector<Integer> weights_;
};

/// Complete homogeneous sum h_r = sum over |I| = r of prod l_j^{i_j}.
Integer h(const WeightTuple& ell, std::int64_t r);

/// h_0 .. h_maxr in one pass; the same recurrence as h().
std::vector<Integer> h_table(const WeightTuple& ell, std::int64_t max_r);

/// Independent oracle for h by explicit enumeration of compositions.
/// Restricted to r <= 12 and k <= 6.
Integer h_bruteforce(const WeightTuple& ell, std::int64_t r);

/// phi_d(l1, l2) = (l1^{d+1} - l2^{d+1}) / (l1 - l2), with the limit
/// (d+1) l^d on the diagonal.
Integer phi(const Integer& l1, const Integer& l2, std::int64_t d);

/// prod_j (1 + l_j x) over Z.
TruncatedSeries total_chern(const WeightTuple& ell, std::size_t truncation);

/// prod_j (1 + l_j x)^{-1} over Z; coefficient of x^j is (-1)^j h_j.
TruncatedSeries complement_chern(const WeightTuple& ell, std::size_t truncation);

} // namespace pstiefel

#endif // PSTIEFEL_WEIGHTS_HPP
