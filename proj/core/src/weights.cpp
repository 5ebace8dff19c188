#include <pstiefel/weights.hpp>

#include <functional>

namespace pstiefel {

WeightTuple WeightTuple::validate(std::span<const Integer> raw) {
    if (raw.empty()) {
        throw InputError("weight tuple must be nonempty");
    }
    if (gcd_all(raw) != 1) {
        throw InputError("weights not primitive (gcd " + gcd_all(raw).get_str() + ")");
    }
    return WeightTuple(std::vector<Integer>(raw.begin(), raw.end()));
}

WeightTuple WeightTuple::validate(std::initializer_list<long> raw) {
    std::vector<Integer> v(raw.begin(), raw.end());
    return validate(std::span<const Integer>(v));
}

std::string WeightTuple::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i != 0) {
            s += ",";
        }
        s += weights_[i].get_str();
    }
    return s + ")";
}

std::vector<Integer> h_table(const WeightTuple& ell, std::int64_t max_r) {
    if (max_r < 0) {
        throw InputError("negative degree");
    }
    // Row for the empty prefix is (1, 0, 0, ...); adding weight l turns row
    // h(prefix) into h(prefix + l) via h_r += l * h_{r-1}, r ascending.
    std::vector<Integer> row(static_cast<std::size_t>(max_r) + 1, 0);
    row[0] = 1;
    for (const auto& l : ell.values()) {
        for (std::size_t r = 1; r < row.size(); ++r) {
            row[r] += l * row[r - 1];
        }
    }
    return row;
}

Integer h(const WeightTuple& ell, std::int64_t r) {
    if (r < 0) {
        throw InputError("negative degree");
    }
    return h_table(ell, r).back();
}

Integer h_bruteforce(const WeightTuple& ell, std::int64_t r) {
    if (r < 0 || r > 12 || ell.size() > 6) {
        throw InputError("oracle range exceeded");
    }
    const std::size_t k = ell.size();
    std::vector<std::int64_t> exps(k, 0);
    Integer total = 0;
    // Enumerate compositions of r into k nonnegative parts.
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t j, std::int64_t left) {
        if (j + 1 == k) {
            exps[j] = left;
            Integer term = 1;
            for (std::size_t i = 0; i < k; ++i) {
                Integer p;
                mpz_pow_ui(p.get_mpz_t(), ell[i].get_mpz_t(), static_cast<unsigned long>(exps[i]));
                term *= p;
            }
            total += term;
            return;
        }
        for (std::int64_t a = 0; a <= left; ++a) {
            exps[j] = a;
            rec(j + 1, left - a);
        }
    };
    rec(0, r);
    return total;
}

Integer phi(const Integer& l1, const Integer& l2, std::int64_t d) {
    if (d < 0) {
        throw InputError("negative degree");
    }
    const auto e = static_cast<unsigned long>(d);
    if (l1 == l2) {
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), l1.get_mpz_t(), e);
        return Integer(d + 1) * p;
    }
    Integer a;
    Integer b;
    mpz_pow_ui(a.get_mpz_t(), l1.get_mpz_t(), e + 1);
    mpz_pow_ui(b.get_mpz_t(), l2.get_mpz_t(), e + 1);
    Integer q;
    Integer num = a - b;
    Integer den = l1 - l2;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

TruncatedSeries total_chern(const WeightTuple& ell, std::size_t truncation) {
    TruncatedSeries c = TruncatedSeries::one(truncation);
    for (const auto& l : ell.values()) {
        c = mul(c, TruncatedSeries::binomial(l, 1, truncation));
    }
    return c;
}

TruncatedSeries complement_chern(const WeightTuple& ell, std::size_t truncation) {
    return inv(total_chern(ell, truncation));
}

} // namespace pstiefel
