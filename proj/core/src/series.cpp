#include <pstiefel/series.hpp>

#include <limits>
#include <sstream>

namespace pstiefel {

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs, std::size_t truncation,
                                 Integer modulus)
    : coeffs_(std::move(coeffs)), modulus_(std::move(modulus)) {
    if (truncation < 1) {
        throw InputError("truncation must be at least 1");
    }
    if (modulus_ < 0) {
        throw InputError("negative modulus");
    }
    coeffs_.resize(truncation, 0);
    for (auto& c : coeffs_) {
        c = canonical(c, modulus_);
    }
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long> coeffs, std::size_t truncation,
                                 Integer modulus)
    : TruncatedSeries(std::vector<Integer>(coeffs.begin(), coeffs.end()), truncation,
                      std::move(modulus)) {}

TruncatedSeries TruncatedSeries::one(std::size_t truncation, Integer modulus) {
    return TruncatedSeries(std::vector<Integer>{1}, truncation, std::move(modulus));
}

TruncatedSeries TruncatedSeries::binomial(const Integer& c, std::size_t degree,
                                          std::size_t truncation, Integer modulus) {
    std::vector<Integer> v(truncation, 0);
    v[0] = 1;
    if (degree < truncation) {
        v[degree] += c;
    }
    return TruncatedSeries(std::move(v), truncation, std::move(modulus));
}

Residue TruncatedSeries::coeff(std::size_t i) const {
    if (i >= coeffs_.size()) {
        throw InputError("beyond truncation: index " + std::to_string(i) + " with T=" +
                         std::to_string(coeffs_.size()));
    }
    return Residue(coeffs_[i], modulus_);
}

bool TruncatedSeries::is_unit() const { return Residue(coeffs_[0], modulus_).is_unit(); }

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        if (!first) {
            os << (coeffs_[i] < 0 ? " - " : " + ");
        } else if (coeffs_[i] < 0) {
            os << "-";
        }
        first = false;
        Integer mag = abs(coeffs_[i]);
        if (i == 0 || mag != 1) {
            os << mag.get_str();
        }
        if (i >= 1) {
            os << "x";
        }
        if (i >= 2) {
            os << "^" << i;
        }
    }
    if (first) {
        os << "0";
    }
    os << " + O(x^" << coeffs_.size() << ")";
    if (modulus_ != 0) {
        os << " mod " << modulus_.get_str();
    }
    return os.str();
}

namespace {

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.truncation() != b.truncation()) {
        throw InputError("truncation mismatch: " + std::to_string(a.truncation()) + " vs " +
                         std::to_string(b.truncation()));
    }
    if (a.modulus() != b.modulus()) {
        throw InputError("modulus mismatch: " + a.modulus().get_str() + " vs " +
                         b.modulus().get_str());
    }
}

} // namespace

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_compatible(a, b);
    const std::size_t t = a.truncation();
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Integer> out(t, 0);
    for (std::size_t i = 0; i < t; ++i) {
        if (ac[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < t; ++j) {
            out[i + j] += ac[i] * bc[j];
        }
    }
    return TruncatedSeries(std::move(out), t, a.modulus());
}

TruncatedSeries inv(const TruncatedSeries& a) {
    if (!a.is_unit()) {
        throw InputError("not invertible: constant term " + a.coeffs()[0].get_str() +
                         " is not a unit");
    }
    const std::size_t t = a.truncation();
    const auto& ac = a.coeffs();
    const Integer& m = a.modulus();
    const Integer c0inv = Residue(ac[0], m).inverse().value();

    // b_0 = a_0^{-1}, b_i = -a_0^{-1} * sum_{j=1..i} a_j b_{i-j}
    std::vector<Integer> b(t, 0);
    b[0] = c0inv;
    for (std::size_t i = 1; i < t; ++i) {
        Integer acc = 0;
        for (std::size_t j = 1; j <= i; ++j) {
            if (ac[j] != 0) {
                acc += ac[j] * b[i - j];
            }
        }
        b[i] = canonical(-c0inv * acc, m);
    }
    return TruncatedSeries(std::move(b), t, m);
}

TruncatedSeries int_pow(const TruncatedSeries& a, std::int64_t e) {
    if (e == std::numeric_limits<std::int64_t>::min()) {
        throw InputError("exponent out of range");
    }
    if (e < 0) {
        // Invert first so the non-unit error surfaces even for e = -1.
        return int_pow(inv(a), -e);
    }
    TruncatedSeries result = TruncatedSeries::one(a.truncation(), a.modulus());
    TruncatedSeries base = a;
    auto exp = static_cast<std::uint64_t>(e);
    while (exp != 0) {
        if (exp & 1U) {
            result = mul(result, base);
        }
        exp >>= 1U;
        if (exp != 0) {
            base = mul(base, base);
        }
    }
    return result;
}

TruncatedSeries reduce_mod(const TruncatedSeries& a, const Integer& m) {
    if (a.modulus() != 0) {
        throw InputError("reduce_mod expects a series over Z");
    }
    if (m < 2) {
        throw InputError("modulus must be at least 2, got " + m.get_str());
    }
    return TruncatedSeries(a.coeffs(), a.truncation(), m);
}

} // namespace pstiefel
