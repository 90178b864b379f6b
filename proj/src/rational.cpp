#include "scl/rational.hpp"

#include <limits>

#include "scl/errors.hpp"

namespace scl {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return BigRational(BigInt(std::string(text), 10));
        }
        return BigRational(BigInt(std::string(text.substr(0, slash)), 10),
                           BigInt(std::string(text.substr(slash + 1)), 10));
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational '" + std::string(text) + "'");
    }
}

std::string BigRational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

BigInt lcm_of_denominators(std::span<const BigRational> values) {
    BigInt acc = 1;
    for (const auto& v : values) {
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), v.raw().get_den_mpz_t());
    }
    return acc;
}

std::int64_t to_int64(const BigInt& value) {
    if (!value.fits_slong_p()) throw ResourceLimit("integer " + value.get_str() + " exceeds 64 bits");
    return value.get_si();
}

}  // namespace scl
