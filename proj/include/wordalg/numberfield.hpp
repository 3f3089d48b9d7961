#pragma once
#include "wordalg/algebraic.hpp"
#include <memory>
#include <string>
#include <vector>

namespace wordalg {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Element of Q(xi) as a rational coefficient vector in powers of xi.  The
// representation is canonical exactly when the generator's minimal
// polynomial is irreducible; fields created from an unproven polynomial
// run in "conditional" mode and cap their refinement loops.
class NFElem {
public:
    NFElem() = default; // unusable placeholder; any operation throws

    const FieldPtr& field() const { return F_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;      // all non-constant coefficients zero
    Rational rational_value() const;

    int sign() const;
    NFElem abs() const;
    Int floor() const;

    NFElem operator-() const;
    NFElem& operator+=(const NFElem& o);
    NFElem& operator-=(const NFElem& o);

    std::string str() const;
    double approx() const;

    friend NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
    friend NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }
    friend NFElem operator*(const NFElem& a, const NFElem& b);
    friend NFElem operator/(const NFElem& a, const NFElem& b);
    friend bool operator==(const NFElem& a, const NFElem& b);
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }
    friend bool operator<(const NFElem& a, const NFElem& b) { return (a - b).sign() < 0; }
    friend bool operator>(const NFElem& a, const NFElem& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const NFElem& a, const NFElem& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const NFElem& a, const NFElem& b) { return (a - b).sign() >= 0; }

private:
    friend class NumberField;
    NFElem(FieldPtr F, std::vector<Rational> c) : F_(std::move(F)), c_(std::move(c)) {}
    FieldPtr F_;
    std::vector<Rational> c_;
};

class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    // gen's minimal polynomial must be certified irreducible unless
    // allow_unknown is set; an explicitly reducible polynomial is always
    // rejected.
    static FieldPtr create(const AlgebraicReal& gen, std::string symbol = "g",
                           bool allow_unknown = false);

    int degree() const { return gen_.minpoly().degree(); }
    const AlgebraicReal& generator() const { return gen_; }
    const IrredCert& certificate() const { return cert_; }
    bool conditional() const { return !cert_.irreducible(); }
    const std::string& symbol() const { return symbol_; }

    NFElem zero() const;
    NFElem one() const;
    NFElem from_rational(const Rational& q) const;
    NFElem from_int(long n) const { return from_rational(Rational(n)); }
    NFElem gen_element() const; // xi itself
    // coefficient vector in powers of xi, length <= degree (padded with 0)
    NFElem element(std::vector<Rational> coeffs) const;

private:
    NumberField(AlgebraicReal gen, IrredCert cert, std::string symbol);

    friend class NFElem;
    std::vector<Rational> reduce(std::vector<Rational> v) const; // mod minpoly, to length m
    NFElem make(std::vector<Rational> c) const;
    int sign_impl(const std::vector<Rational>& c) const;
    Int floor_impl(const std::vector<Rational>& c) const;
    std::pair<Rational, Rational> range_at_interval(const std::vector<Rational>& c) const;

    AlgebraicReal gen_;
    IrredCert cert_;
    std::string symbol_;
    QPoly minpoly_monic_;
    std::vector<std::vector<Rational>> pow_; // xi^m .. xi^(2m-2) as coefficient vectors
};

} // namespace wordalg
