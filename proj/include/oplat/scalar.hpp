#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace oplat {

/// Coefficient field selector. Rationals is the default everywhere;
/// GaussianRationals admits exact complex entries p/q + (r/s)i.
enum class Field { Rationals, GaussianRationals };

std::string field_name(Field f);
Field field_from_name(const std::string& name);  // throws std::invalid_argument

/// Exact scalar: a Gaussian rational re + im*i with arbitrary-precision
/// rational parts. Plain rationals are the im == 0 slice. All values are
/// kept canonical (reduced, positive denominators), so equality is exact
/// and decidable.
class Scalar {
  public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
    Scalar(long num, long den);
    explicit Scalar(mpq_class re, mpq_class im = mpq_class(0));

    static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// |z|^2 = z * conj(z), always a nonnegative rational.
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);  // throws std::domain_error on /0

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order used for canonical sorting of basis rows and report
    /// entries. Not a field order; compares (re, im) lexicographically.
    static int cmp(const Scalar& a, const Scalar& b);

    /// Canonical string: "p/q" (q omitted when 1), or "p/q+r/si" / "p/q-r/si"
    /// when the imaginary part is nonzero.
    std::string str() const;

    /// Inverse of str(); also accepts pure-imaginary forms like "i", "-2/3i".
    /// Throws std::invalid_argument on malformed input, and when an imaginary
    /// part appears while `field` is Field::Rationals.
    static Scalar parse(const std::string& text, Field field = Field::GaussianRationals);

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

  private:
    mpq_class re_, im_;
};

}  // namespace oplat
