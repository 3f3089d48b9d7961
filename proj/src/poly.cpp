#include "wordalg/poly.hpp"
#include <algorithm>
#include <map>
#include <stdexcept>

namespace wordalg {

static const Int kZeroInt = 0;
static const Rational kZeroQ = 0;

const Int& IntPoly::lc() const {
    if (c.empty()) return kZeroInt;
    return c.back();
}

const Int& IntPoly::coeff(size_t i) const {
    if (i >= c.size()) return kZeroInt;
    return c[i];
}

const Rational& QPoly::lc() const {
    if (c.empty()) return kZeroQ;
    return c.back();
}

bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a) {
    std::vector<Int> r = a.c;
    for (auto& x : r) x = -x;
    return IntPoly(std::move(r));
}

Rational eval(const IntPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly derivative(const IntPoly& p) {
    if (p.c.size() <= 1) return IntPoly{};
    std::vector<Int> r(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) r[i - 1] = p.c[i] * (long)i;
    return IntPoly(std::move(r));
}

Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& x : p.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (sgn(p.lc()) < 0) g = -g;
    std::vector<Int> r(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) r[i] = p.c[i] / g;
    return IntPoly(std::move(r));
}

std::string poly_str(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Int& a = p.c[i];
        if (a == 0) continue;
        Int mag = abs(a);
        if (out.empty())
            out += (sgn(a) < 0 ? "-" : "");
        else
            out += (sgn(a) < 0 ? " - " : " + ");
        if (mag != 1 || i == 0) out += mag.get_str();
        if (i > 0) {
            if (mag != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly{};
    std::vector<Rational> r(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return QPoly(std::move(r));
}

QPoly operator*(const Rational& s, const QPoly& a) {
    std::vector<Rational> r = a.c;
    for (auto& x : r) x *= s;
    return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a) {
    std::vector<Rational> r = a.c;
    for (auto& x : r) x = -x;
    return QPoly(std::move(r));
}

QPoly to_qpoly(const IntPoly& p) {
    std::vector<Rational> r;
    r.reserve(p.c.size());
    for (const auto& x : p.c) r.emplace_back(x);
    return QPoly(std::move(r));
}

IntPoly q_to_primitive_int(const QPoly& p) {
    Int den = 1;
    for (const auto& q : p.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> r;
    r.reserve(p.c.size());
    for (const auto& q : p.c) {
        Rational s = q * den;
        r.push_back(s.get_num());
    }
    return primitive_part(IntPoly(std::move(r)));
}

Rational eval(const QPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly monic_scale(const QPoly& p) {
    if (p.is_zero()) return p;
    Rational inv = 1 / p.lc();
    return inv * p;
}

std::pair<QPoly, QPoly> qdivmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("qdivmod: division by zero polynomial");
    QPoly r = a;
    std::vector<Rational> q(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1, Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rational f = r.lc() / b.lc();
        q[k] += f;
        for (int i = 0; i <= b.degree(); ++i) r.c[k + i] -= f * b.c[i];
        r.normalize();
    }
    return {QPoly(std::move(q)), r};
}

QPoly qgcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = qdivmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic_scale(a);
}

ExtGcd qextgcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly s0(std::vector<Rational>{Rational(1)}), s1;
    QPoly t0, t1(std::vector<Rational>{Rational(1)});
    while (!r1.is_zero()) {
        auto [q, r2] = qdivmod(r0, r1);
        QPoly s2 = s0 - q * s1;
        QPoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        Rational inv = 1 / r0.lc();
        r0 = inv * r0; s0 = inv * s0; t0 = inv * t0;
    }
    return {r0, s0, t0};
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return IntPoly{{1}};
    QPoly g = qgcd(to_qpoly(p), to_qpoly(derivative(p)));
    if (g.degree() == 0) return primitive_part(p);
    QPoly q = qdivmod(to_qpoly(p), g).first;
    return q_to_primitive_int(q);
}

SturmChain::SturmChain(const IntPoly& squarefree) : p_(squarefree) {
    if (p_.is_zero()) throw std::invalid_argument("sturm: zero polynomial");
    seq_.push_back(to_qpoly(p_));
    if (p_.degree() >= 1) {
        seq_.push_back(to_qpoly(derivative(p_)));
        while (seq_.back().degree() >= 1) {
            QPoly r = qdivmod(seq_[seq_.size() - 2], seq_.back()).second;
            if (r.is_zero()) break; // non-squarefree input would stall here
            seq_.push_back(-r);
        }
    }
}

static int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const auto& f : seq_) s.push_back(sgn(eval(f, x)));
    return variations(s);
}

int SturmChain::variations_neg_inf() const {
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const auto& f : seq_) {
        if (f.is_zero()) { s.push_back(0); continue; }
        int l = sgn(f.lc());
        s.push_back(f.degree() % 2 == 0 ? l : -l);
    }
    return variations(s);
}

int SturmChain::variations_pos_inf() const {
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const auto& f : seq_) s.push_back(f.is_zero() ? 0 : sgn(f.lc()));
    return variations(s);
}

int SturmChain::count_halfopen(const Rational& a, const Rational& b) const {
    if (!(a < b)) throw std::invalid_argument("sturm: empty interval");
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_open(const Rational& a, const Rational& b) const {
    int n = count_halfopen(a, b);
    if (sgn(eval(p_, b)) == 0) --n;
    return n;
}

int SturmChain::count_all() const { return variations_neg_inf() - variations_pos_inf(); }

Rational root_bound(const IntPoly& p) {
    if (p.degree() < 1) return Rational(1);
    Int m = 0;
    for (size_t i = 0; i + 1 < p.c.size(); ++i) {
        Int a = abs(p.c[i]);
        if (a > m) m = a;
    }
    return 1 + make_rational(m, abs(p.lc()));
}

// divisors of |n|; returns empty and ok=false if n does not factor with
// trial division up to 10^6 plus one probable-prime cofactor
static std::pair<std::vector<Int>, bool> divisors(Int n) {
    n = abs(n);
    std::vector<std::pair<Int, int>> fac;
    if (n == 0) return {{}, true};
    for (Int d = 2; d * d <= n && d <= 1000000; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            fac.emplace_back(d, e);
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0 && n > Int(1000000) * Int(1000000))
            return {{}, false};
        fac.emplace_back(n, 1);
    }
    std::vector<Int> divs{Int(1)};
    for (auto& [p, e] : fac) {
        size_t base = divs.size();
        Int pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return {divs, true};
}

std::pair<std::vector<Rational>, bool> rational_roots(const IntPoly& p) {
    std::vector<Rational> roots;
    if (p.degree() < 1) return {roots, true};
    IntPoly q = p;
    while (!q.c.empty() && q.c.front() == 0) { // t divides
        if (roots.empty() || sgn(roots.front()) != 0) roots.insert(roots.begin(), Rational(0));
        q.c.erase(q.c.begin());
    }
    if (q.degree() < 1) return {roots, true};
    auto [nums, ok1] = divisors(q.c.front());
    auto [dens, ok2] = divisors(q.lc());
    bool complete = ok1 && ok2;
    for (const auto& a : nums)
        for (const auto& b : dens) {
            Rational r = make_rational(a, b);
            for (int s = 0; s < 2; ++s) {
                Rational cand = s ? Rational(-r) : r;
                if (sgn(eval(q, cand)) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    return {roots, complete};
}

std::string IrredCert::describe() const {
    switch (kind) {
        case CertKind::LowDegree: return "irreducible: degree <= 3 with no rational root";
        case CertKind::Eisenstein: return "irreducible: Eisenstein at p = " + prime.get_str();
        case CertKind::ModP: return "irreducible: irreducible modulo p = " + prime.get_str();
        case CertKind::Reducible:
            return has_root ? "reducible: rational root " + format_rational(root)
                            : "reducible";
        case CertKind::Unknown: return "unknown: no certificate found";
    }
    return "?";
}

// ---- dense polynomial arithmetic over GF(p), p < 2^15 ----
namespace {

using FpPoly = std::vector<unsigned long>; // constant-first, trimmed

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, unsigned long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<unsigned long> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    // reduce mod monic f
    size_t n = f.size() - 1;
    for (size_t k = r.size(); k-- > n;) {
        unsigned long c = r[k];
        if (!c) continue;
        r[k] = 0;
        for (size_t i = 0; i < n; ++i)
            r[k - n + i] = (r[k - n + i] + c * (p - f[i] % p)) % p;
    }
    r.resize(n);
    fp_trim(r);
    return r;
}

FpPoly fp_powmod(FpPoly base, unsigned long e, const FpPoly& f, unsigned long p) {
    FpPoly r{1};
    while (e) {
        if (e & 1) r = fp_mulmod(r, base, f, p);
        base = fp_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, unsigned long p) {
    auto inv = [&](unsigned long x) {
        long t0 = 0, t1 = 1;
        long r0 = (long)p, r1 = (long)x;
        while (r1) {
            long q = r0 / r1;
            long t2 = t0 - q * t1; t0 = t1; t1 = t2;
            long r2 = r0 - q * r1; r0 = r1; r1 = r2;
        }
        long t = t0 % (long)p;
        if (t < 0) t += p;
        return (unsigned long)t;
    };
    fp_trim(a); fp_trim(b);
    while (!b.empty()) {
        // a mod b
        unsigned long binv = inv(b.back());
        FpPoly r = a;
        while (r.size() >= b.size() && !r.empty()) {
            unsigned long f = (r.back() * binv) % p;
            size_t off = r.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                r[off + i] = (r[off + i] + f * (p - b[i] % p)) % p;
            fp_trim(r);
            if (r.size() < b.size()) break;
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin test: monic f of degree n irreducible over GF(p) iff
// x^(p^n) == x (mod f) and gcd(x^(p^(n/q)) - x, f) = 1 for prime q | n.
bool fp_irreducible(const FpPoly& f, unsigned long p) {
    size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    std::vector<size_t> prime_divs;
    size_t nn = n;
    for (size_t q = 2; q * q <= nn; ++q)
        if (nn % q == 0) {
            prime_divs.push_back(q);
            while (nn % q == 0) nn /= q;
        }
    if (nn > 1) prime_divs.push_back(nn);

    auto frobenius_iter = [&](size_t times) {
        FpPoly g{0, 1}; // x
        for (size_t i = 0; i < times; ++i) g = fp_powmod(g, p, f, p);
        return g;
    };
    FpPoly xpn = frobenius_iter(n);
    FpPoly x{0, 1};
    if (xpn != x) return false;
    for (size_t q : prime_divs) {
        FpPoly h = frobenius_iter(n / q);
        // h - x
        FpPoly d = h;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        fp_trim(d);
        FpPoly g = fp_gcd(f, d, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

const unsigned long kSmallPrimes[25] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                        43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

} // namespace

IrredCert irreducibility_witness_primitive(const IntPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("irreducibility: degree must be >= 1");

    // rational-root scan: an explicit factorization wins over any certificate
    auto [roots, complete] = rational_roots(p);
    if (!roots.empty() && p.degree() >= 2) {
        IrredCert c;
        c.kind = CertKind::Reducible;
        c.has_root = true;
        c.root = roots.front();
        return c;
    }
    if (p.degree() == 1) {
        IrredCert c;
        c.kind = CertKind::LowDegree;
        return c;
    }

    // Eisenstein: prime dividing every non-leading coefficient, not the
    // leading one, with p^2 not dividing the constant term
    Int g = 0;
    for (size_t i = 0; i + 1 < p.c.size(); ++i)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.c[i].get_mpz_t());
    if (g > 1) {
        Int rest = g;
        std::vector<Int> primes;
        for (Int d = 2; d * d <= rest && d <= 1000000; ++d)
            if (rest % d == 0) {
                primes.push_back(d);
                while (rest % d == 0) rest /= d;
            }
        if (rest > 1 && mpz_probab_prime_p(rest.get_mpz_t(), 30) > 0) primes.push_back(rest);
        for (const Int& q : primes) {
            if (p.lc() % q == 0) continue;
            if (p.c.front() % (q * q) != 0) {
                IrredCert c;
                c.kind = CertKind::Eisenstein;
                c.prime = q;
                return c;
            }
        }
    }

    // low degree: degree 2 or 3 primitive with no rational root has no
    // linear factor, hence is irreducible
    if (p.degree() <= 3 && complete && roots.empty()) {
        IrredCert c;
        c.kind = CertKind::LowDegree;
        return c;
    }

    // irreducibility modulo a small prime not dividing the leading coefficient
    for (unsigned long q : kSmallPrimes) {
        if (p.lc() % (long)q == 0) continue;
        FpPoly f(p.c.size());
        for (size_t i = 0; i < p.c.size(); ++i) {
            Int m = p.c[i] % (long)q;
            if (m < 0) m += (long)q;
            f[i] = m.get_ui();
        }
        // make monic
        unsigned long l = f.back();
        if (l != 1) {
            unsigned long linv = 1;
            for (unsigned long t = 1; t < q; ++t)
                if ((t * l) % q == 1) { linv = t; break; }
            for (auto& x : f) x = (x * linv) % q;
        }
        if (fp_irreducible(f, q)) {
            IrredCert c;
            c.kind = CertKind::ModP;
            c.prime = (long)q;
            return c;
        }
    }

    return IrredCert{};
}

IrredCert irreducibility_witness(const IntPoly& p) {
    if (!p.monic()) throw std::invalid_argument("irreducibility: polynomial must be monic");
    return irreducibility_witness_primitive(p);
}

} // namespace wordalg
