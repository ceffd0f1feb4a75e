#pragma once

#include <complex>
#include <compare>
#include <string>

#include <gmpxx.h>

namespace treg::exact {

// Element of Q(i), stored as two GMP rationals in canonical form.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
    GaussRational(mpq_class re, mpq_class im = 0);

    static GaussRational i() { return {0, 1}; }
    // Accepts "p/q", "a+bi", "-3/2i", "i", "7".
    static GaussRational parse(const std::string& text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_minus_one() const { return re_ == -1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRational conj() const { return {re_, -im_}; }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussRational inverse() const;
    GaussRational pow(long n) const;

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
    std::string str() const;

    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);
    GaussRational operator-() const { return {-re_, -im_}; }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    // Lexicographic on (re, im); only for use as a map key.
    friend std::strong_ordering operator<=>(const GaussRational& a, const GaussRational& b);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

}  // namespace treg::exact
