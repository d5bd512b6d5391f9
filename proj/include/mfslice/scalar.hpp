#ifndef MFSLICE_SCALAR_HPP
#define MFSLICE_SCALAR_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mfslice {

using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

/// Exact complex scalar re + i*im with rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}
    GaussianRational(const Rational& re) : re_(re) {}
    GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {}

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

private:
    Rational re_{0};
    Rational im_{0};
};

/// Element of Z[i]; used as the ring for fraction-free elimination.
struct GaussianInteger {
    Integer re{0};
    Integer im{0};

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussianInteger operator*(const GaussianInteger& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianInteger operator-(const GaussianInteger& o) const { return {re - o.re, im - o.im}; }
    bool operator==(const GaussianInteger& o) const { return re == o.re && im == o.im; }
};

/// Quotient a / b in Z[i]; throws std::logic_error if b does not divide a.
GaussianInteger exact_divide(const GaussianInteger& a, const GaussianInteger& b);

// Scalar traits shared by the templated exact and floating-point code paths.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussianRational> {
    static constexpr bool exact = true;
    static GaussianRational from_rational(const Rational& q) { return GaussianRational(q); }
    static GaussianRational from_int(long v) { return GaussianRational(v); }
    static Complex to_complex(const GaussianRational& z) { return z.to_complex(); }
};

template <>
struct ScalarTraits<Complex> {
    static constexpr bool exact = false;
    static Complex from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
    static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static Complex to_complex(const Complex& z) { return z; }
};

/// Coordinates of an algebra element in the Chevalley basis.
template <class S>
using Coords = std::vector<S>;

using Element = Coords<Complex>;
using ExactElement = Coords<GaussianRational>;

ExactElement to_exact(const std::vector<Rational>& v);
Element to_float(const ExactElement& v);

}  // namespace mfslice

#endif  // MFSLICE_SCALAR_HPP
