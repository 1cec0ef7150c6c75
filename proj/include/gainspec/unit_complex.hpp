#ifndef GAINSPEC_UNIT_COMPLEX_HPP
#define GAINSPEC_UNIT_COMPLEX_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace gainspec {

inline constexpr double kUnitModulusTol = 1e-12;

/// A complex number constrained to the unit circle. Edge gains, cycle gains
/// and switching values are all of this type.
class UnitComplex {
public:
    UnitComplex() : z_(1.0, 0.0) {}

    UnitComplex(double re, double im) : z_(re, im) {
        const double m2 = re * re + im * im;
        if (std::abs(m2 - 1.0) > kUnitModulusTol)
            throw std::invalid_argument("UnitComplex: modulus " +
                                        std::to_string(std::sqrt(m2)) +
                                        " not within tolerance of 1");
    }

    static UnitComplex from_angle(double theta) {
        return UnitComplex(std::cos(theta), std::sin(theta));
    }

    static UnitComplex one() { return UnitComplex(1.0, 0.0); }
    static UnitComplex minus_one() { return UnitComplex(-1.0, 0.0); }
    static UnitComplex i() { return UnitComplex(0.0, 1.0); }
    static UnitComplex minus_i() { return UnitComplex(0.0, -1.0); }

    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }
    std::complex<double> value() const { return z_; }

    /// Inverse of a unit-modulus number equals its conjugate.
    UnitComplex conj() const { return UnitComplex(unchecked{}, std::conj(z_)); }
    UnitComplex inverse() const { return conj(); }
    UnitComplex negated() const { return UnitComplex(unchecked{}, -z_); }

    UnitComplex operator*(const UnitComplex& o) const {
        return UnitComplex(unchecked{}, z_ * o.z_).normalized();
    }

    /// Exact renormalization back onto the unit circle.
    UnitComplex normalized() const {
        return UnitComplex(unchecked{}, z_ / std::abs(z_));
    }

    double angle() const { return std::arg(z_); }

    double distance(const UnitComplex& o) const { return std::abs(z_ - o.z_); }

    bool operator==(const UnitComplex& o) const { return z_ == o.z_; }

private:
    struct unchecked {};
    UnitComplex(unchecked, std::complex<double> z) : z_(z) {}
    std::complex<double> z_;

    friend class GainProduct;
};

/// Accumulates an ordered product of unit gains, renormalizing once the
/// chain exceeds 16 factors so long walks stay on the circle.
class GainProduct {
public:
    void multiply(const UnitComplex& g) {
        acc_ *= g.value();
        if (++count_ >= 16) {
            acc_ /= std::abs(acc_);
            count_ = 0;
        }
    }
    UnitComplex result() const {
        return UnitComplex(UnitComplex::unchecked{}, acc_ / std::abs(acc_));
    }

private:
    std::complex<double> acc_{1.0, 0.0};
    int count_ = 0;
};

}  // namespace gainspec

#endif
