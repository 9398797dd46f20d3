#include "oplat/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace oplat {

std::string field_name(Field f) {
    return f == Field::Rationals ? "Q" : "Qi";
}

Field field_from_name(const std::string& name) {
    if (name == "Q") return Field::Rationals;
    if (name == "Qi") return Field::GaussianRationals;
    throw std::invalid_argument("unknown field '" + name + "' (expected \"Q\" or \"Qi\")");
}

Scalar::Scalar(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    mpq_class n2 = o.norm2();
    if (sgn(n2) == 0) throw std::domain_error("scalar division by zero");
    // (a+bi)/(c+di) = (a+bi)(c-di)/|c+di|^2
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / n2;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / n2;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
    int c = ::cmp(a.re_, b.re_);
    if (c != 0) return c;
    return ::cmp(a.im_, b.im_);
}

std::string Scalar::str() const {
    if (is_real()) return re_.get_str();
    std::string out = re_.get_str();
    if (sgn(im_) >= 0) {
        out += "+" + im_.get_str();
    } else {
        mpq_class m = -im_;
        out += "-" + m.get_str();
    }
    return out + "i";
}

namespace {

bool valid_rational_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    bool digits = false, slash = false, den_digits = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (slash || !digits) return false;
            slash = true;
        } else if (c >= '0' && c <= '9') {
            (slash ? den_digits : digits) = true;
        } else {
            return false;
        }
    }
    return digits && (!slash || den_digits);
}

mpq_class parse_rational(const std::string& text) {
    if (!valid_rational_text(text))
        throw std::invalid_argument("malformed rational '" + text + "'");
    std::string s = text[0] == '+' ? text.substr(1) : text;
    std::size_t slash = s.find('/');
    mpz_class num(slash == std::string::npos ? s : s.substr(0, slash));
    mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

Scalar Scalar::parse(const std::string& text, Field field) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty scalar");

    if (s.back() != 'i') return Scalar(parse_rational(s), mpq_class(0));

    if (field == Field::Rationals)
        throw std::invalid_argument("imaginary entry '" + text + "' not allowed over field Q");

    s.pop_back();  // strip trailing 'i'
    // Find the sign separating the real part from the imaginary coefficient.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-') {
            split = i;
            break;
        }
    }
    std::string re_text, im_text;
    if (split == std::string::npos) {
        re_text = "0";
        im_text = s;
    } else {
        re_text = s.substr(0, split);
        im_text = s.substr(split);
    }
    if (im_text.empty() || im_text == "+") im_text = "1";
    if (im_text == "-") im_text = "-1";
    return Scalar(parse_rational(re_text), parse_rational(im_text));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace oplat
