#pragma once
#include "wordalg/rational.hpp"
#include <initializer_list>
#include <utility>
#include <vector>

namespace wordalg {

// Integer polynomial, coefficients constant-first, no trailing zeros.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    IntPoly(std::initializer_list<long> v) {
        for (long x : v) c.emplace_back(x);
        normalize();
    }
    explicit IntPoly(std::vector<Int> v) : c(std::move(v)) { normalize(); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; } // -1 for the zero polynomial
    const Int& lc() const;
    const Int& coeff(size_t i) const;
    bool monic() const { return !c.empty() && c.back() == 1; }
};

bool operator==(const IntPoly& a, const IntPoly& b);
inline bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }
IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);

Rational eval(const IntPoly& p, const Rational& x);
IntPoly derivative(const IntPoly& p);
Int content(const IntPoly& p);                 // nonnegative gcd of coefficients, 0 for zero poly
IntPoly primitive_part(const IntPoly& p);      // content 1, leading coefficient > 0
IntPoly squarefree_part(const IntPoly& p);     // primitive part of p / gcd(p, p')
std::string poly_str(const IntPoly& p, const std::string& var = "t");

// Rational polynomial, same representation.
struct QPoly {
    std::vector<Rational> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rational> v) : c(std::move(v)) { normalize(); }

    void normalize() {
        while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }
    const Rational& lc() const;
};

bool operator==(const QPoly& a, const QPoly& b);
QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(const Rational& s, const QPoly& a);
QPoly operator-(const QPoly& a);

QPoly to_qpoly(const IntPoly& p);
IntPoly q_to_primitive_int(const QPoly& p); // clear denominators, primitive part
Rational eval(const QPoly& p, const Rational& x);
QPoly monic_scale(const QPoly& p);

std::pair<QPoly, QPoly> qdivmod(const QPoly& a, const QPoly& b); // (quot, rem), b nonzero
QPoly qgcd(QPoly a, QPoly b);                                    // monic gcd (or zero)
struct ExtGcd { QPoly g, s, t; };                                // g = s*a + t*b, g monic
ExtGcd qextgcd(const QPoly& a, const QPoly& b);

// Sturm chain of a squarefree integer polynomial.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& squarefree);
    int variations_at(const Rational& x) const;
    int variations_neg_inf() const;
    int variations_pos_inf() const;
    // distinct real roots in the half-open interval (a, b], a < b
    int count_halfopen(const Rational& a, const Rational& b) const;
    // distinct real roots in the open interval (a, b)
    int count_open(const Rational& a, const Rational& b) const;
    int count_all() const;

private:
    std::vector<QPoly> seq_;
    IntPoly p_;
};

// every real root of p lies in (-B, B)
Rational root_bound(const IntPoly& p);

enum class CertKind { LowDegree, Eisenstein, ModP, Reducible, Unknown };

struct IrredCert {
    CertKind kind = CertKind::Unknown;
    Int prime;            // Eisenstein / mod-p prime
    bool has_root = false;
    Rational root;        // a rational root when kind == Reducible
    bool irreducible() const {
        return kind == CertKind::LowDegree || kind == CertKind::Eisenstein || kind == CertKind::ModP;
    }
    std::string describe() const;
};

// Certificate search for a monic integer polynomial of degree >= 1.
// Order: rational-root scan (reducible), Eisenstein, degree <= 3 with no
// rational root, irreducibility mod one of the first 25 primes, unknown.
IrredCert irreducibility_witness(const IntPoly& p);

// Same search for any primitive polynomial (used internally; the public
// operation above keeps the monic precondition).
IrredCert irreducibility_witness_primitive(const IntPoly& p);

// All rational roots; second member false if the divisor enumeration had to
// bail out (huge unfactored constants), in which case the list may be short.
std::pair<std::vector<Rational>, bool> rational_roots(const IntPoly& p);

} // namespace wordalg
