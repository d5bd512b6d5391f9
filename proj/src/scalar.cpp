#include "mfslice/scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mfslice {

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    const Rational d = o.norm();
    *this *= o.conj();
    re_ /= d;
    im_ /= d;
    return *this;
}

std::string GaussianRational::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    if (z.is_real()) return os << z.real();
    if (sgn(z.real()) == 0) return os << z.imag() << "i";
    os << z.real() << (sgn(z.imag()) < 0 ? "-" : "+") << abs(z.imag()) << "i";
    return os;
}

GaussianInteger exact_divide(const GaussianInteger& a, const GaussianInteger& b) {
    if (b.is_zero()) throw std::domain_error("exact_divide: division by zero");
    const Integer d = b.re * b.re + b.im * b.im;
    Integer re = a.re * b.re + a.im * b.im;
    Integer im = a.im * b.re - a.re * b.im;
    if (!mpz_divisible_p(re.get_mpz_t(), d.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), d.get_mpz_t()))
        throw std::logic_error("exact_divide: quotient is not a Gaussian integer");
    mpz_divexact(re.get_mpz_t(), re.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(im.get_mpz_t(), im.get_mpz_t(), d.get_mpz_t());
    return {std::move(re), std::move(im)};
}

ExactElement to_exact(const std::vector<Rational>& v) {
    ExactElement out;
    out.reserve(v.size());
    for (const auto& q : v) out.emplace_back(q);
    return out;
}

Element to_float(const ExactElement& v) {
    Element out;
    out.reserve(v.size());
    for (const auto& z : v) out.push_back(z.to_complex());
    return out;
}

}  // namespace mfslice
