#ifndef SLT_SCALAR_HPP
#define SLT_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <string>

namespace slt {

/// Which exact field a computation is carried out over.
enum class Field { Rational, GaussianRational };

/*
 * Element of Q or of the Gaussian rationals Q(i).
 *
 * Both parts are kept as GMP rationals, which are always fully reduced with
 * a positive denominator. A purely rational value simply has a zero imaginary
 * part; arithmetic takes a fast path in that case so the rational field pays
 * almost nothing for the optional involution.
 */
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {} // NOLINT(google-explicit-constructor)
    Scalar(long num, long den) : re_(num, den) { re_.canonicalize(); }
    explicit Scalar(mpq_class re) : re_(std::move(re)) {}
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return sgn(im_) == 0 && re_ == 1; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    Scalar conj() const { return is_real() ? *this : Scalar(re_, -im_); }
    /// |x|^2 = conj(x)·x, always a non-negative rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    /// Total order (real part first, then imaginary); only used for canonical sorting.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    /// "p/q" or "p" for rationals; "p/q+r/si" style is not used, see io.hpp for JSON.
    std::string to_string() const;
    static Scalar parse_rational(const std::string& text);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::string rational_to_string(const mpq_class& q);

} // namespace slt

#endif
