#include "treg/exact/gauss_rational.hpp"

#include <cctype>

#include "treg/error.hpp"

namespace treg::exact {

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

namespace {

mpq_class parse_rational(const std::string& s, const std::string& whole) {
    if (s.empty() || s == "+") return 1;
    if (s == "-") return -1;
    std::string body = s[0] == '+' ? s.substr(1) : s;
    mpq_class q;
    if (q.set_str(body, 10) != 0 || body.find_first_not_of("-0123456789/") != std::string::npos)
        fail(ErrorCode::schema_invalid, "bad rational literal '" + whole + "'");
    q.canonicalize();
    return q;
}

}  // namespace

GaussRational GaussRational::parse(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) fail(ErrorCode::schema_invalid, "empty number literal");
    if (text.back() != 'i') return {parse_rational(text, raw), 0};
    std::string body = text.substr(0, text.size() - 1);
    // split at the last sign that is not the leading one
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    if (split == std::string::npos) return {0, parse_rational(body, raw)};
    return {parse_rational(body.substr(0, split), raw), parse_rational(body.substr(split), raw)};
}

GaussRational GaussRational::inverse() const {
    if (is_zero()) fail(ErrorCode::invalid_argument, "inverse of zero");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussRational GaussRational::pow(long n) const {
    GaussRational base = n < 0 ? inverse() : *this;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    GaussRational out(1);
    while (e) {
        if (e & 1U) out *= base;
        base *= base;
        e >>= 1U;
    }
    return out;
}

std::string GaussRational::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string im_part;
    if (im_ == 1) im_part = "i";
    else if (im_ == -1) im_part = "-i";
    else im_part = im_.get_str() + "i";
    if (sgn(re_) == 0) return im_part;
    return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im_part;
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const GaussRational& a, const GaussRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace treg::exact
