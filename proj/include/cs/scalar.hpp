#pragma once

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace cs {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gaussian rational re + im*i with arbitrary-precision rational parts.
// Values are kept canonical (reduced fractions, positive denominators),
// so equality is bit-exact and all field operations are exact.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}  // NOLINT: implicit on purpose
    explicit Scalar(mpq_class re) : re_(std::move(re)), im_(0) { canon(); }
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) { canon(); }

    static Scalar rational(long num, long den);
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    mpq_class abs2() const { return re_ * re_ + im_ * im_; }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
        mpq_class d = o.abs2();
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / d;
        mpq_class i = (im_ * o.re_ - re_ * o.im_) / d;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        return {re_.get_d(), im_.get_d()};
    }

    // Canonical text form: "p", "p/q", or "p/q+r/si".
    std::string str() const;

    // Accepts "p", "p/q", "p/q+r/si", "r/si" with optional spaces.
    static Scalar parse(const std::string& text);

private:
    void canon() {
        if (re_.get_den() == 0 || im_.get_den() == 0)
            throw ParseError("zero denominator");
        re_.canonicalize();
        im_.canonicalize();
    }

    mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cs
