#include "slt/scalar.hpp"

#include "slt/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace slt {

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_real()) return Scalar(mpq_class(1) / re_);
    const mpq_class n = norm();
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    if (!o.is_real()) im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (!o.is_real()) im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        if (!is_real()) im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    const int d = cmp(a.im_, b.im_);
    if (d != 0) return d < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string rational_to_string(const mpq_class& q) {
    // GMP prints "p" when the denominator is 1 and "p/q" otherwise.
    return q.get_str();
}

std::string Scalar::to_string() const {
    if (is_real()) return rational_to_string(re_);
    return rational_to_string(re_) + (sgn(im_) < 0 ? "" : "+") + rational_to_string(im_) + "i";
}

Scalar Scalar::parse_rational(const std::string& text) {
    // Accepts an optional sign, digits, and an optional "/digits" with a nonzero denominator.
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    const std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_begin) throw ParseError("", "bad rational literal '" + text + "'");
    if (pos < text.size()) {
        if (text[pos] != '/') throw ParseError("", "bad rational literal '" + text + "'");
        const std::size_t den_begin = ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_begin || pos != text.size())
            throw ParseError("", "bad rational literal '" + text + "'");
    }
    std::string body = text[0] == '+' ? text.substr(1) : text;
    mpq_class q;
    if (q.set_str(body, 10) != 0) throw ParseError("", "bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw ParseError("", "zero denominator in '" + text + "'");
    q.canonicalize();
    return Scalar(std::move(q));
}

} // namespace slt
