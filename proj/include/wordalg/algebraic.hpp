#pragma once
#include "wordalg/poly.hpp"
#include <memory>
#include <optional>

namespace wordalg {

// A real algebraic number: primitive squarefree integer polynomial plus an
// open rational isolating interval, refinable on demand.  The interval is
// the only mutable state and only ever shrinks; refinement is not
// synchronized, so confine a value to one thread or pre-refine before
// sharing read-only.
class AlgebraicReal {
public:
    // Normalizes p (primitive squarefree part) and requires exactly one real
    // root in the open interval (lo, hi); throws otherwise.
    AlgebraicReal(const IntPoly& p, const Rational& lo, const Rational& hi);

    const IntPoly& minpoly() const { return p_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }

    void refine() const;                           // one bisection step
    void refine_to_width(const Rational& w) const; // until width < w

    int sign() const;                   // sign of the root itself
    int cmp(const Rational& q) const;   // root <=> q: -1, 0, +1
    bool is_rational() const;           // root equals a rational (linear factor hit)
    double approx() const;
    std::string str() const;

private:
    IntPoly p_;
    std::shared_ptr<const SturmChain> chain_;
    mutable Rational lo_, hi_;

    int count_open(const Rational& a, const Rational& b) const;
    void shrink_around_rational_root(const Rational& r) const;
};

// The unique root of p in (lo, hi): nullopt if there is none, throws
// std::invalid_argument if there are several.
std::optional<AlgebraicReal> isolate_root(const IntPoly& p, const Rational& lo,
                                          const Rational& hi);

} // namespace wordalg
