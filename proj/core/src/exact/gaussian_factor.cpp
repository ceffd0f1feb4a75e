#include "treg/exact/gaussian_factor.hpp"

#include <map>

#include "treg/error.hpp"

namespace treg::exact {

namespace {

struct GInt {
    mpz_class re, im;
};

GInt mul(const GInt& a, const GInt& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
GInt conj(const GInt& a) { return {a.re, -a.im}; }
mpz_class norm(const GInt& a) { return a.re * a.re + a.im * a.im; }
bool is_zero(const GInt& a) { return a.re == 0 && a.im == 0; }

// a / b if b divides a in Z[i].
bool divide_exact(const GInt& a, const GInt& b, GInt& q) {
    GInt w = mul(a, conj(b));
    mpz_class n = norm(b);
    if (w.re % n != 0 || w.im % n != 0) return false;
    q = {w.re / n, w.im / n};
    return true;
}

mpz_class round_div(const mpz_class& a, const mpz_class& n) {
    // nearest integer to a / n for n > 0
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), mpz_class(2 * a + n).get_mpz_t(), mpz_class(2 * n).get_mpz_t());
    return q;
}

GInt gcd(GInt a, GInt b) {
    while (!is_zero(b)) {
        GInt w = mul(a, conj(b));
        mpz_class n = norm(b);
        GInt q{round_div(w.re, n), round_div(w.im, n)};
        GInt qb = mul(q, b);
        GInt r{a.re - qb.re, a.im - qb.im};
        a = b;
        b = r;
    }
    return a;
}

GInt normalize(GInt a) {
    for (int k = 0; k < 4 && !(a.re > 0 && a.im >= 0); ++k) a = {-a.im, a.re};
    return a;
}

std::vector<GInt> gaussian_primes_over(const mpz_class& p) {
    if (p == 2) return {{1, 1}};
    if (p % 4 == 3) return {{p, 0}};
    mpz_class c = 2;
    while (mpz_legendre(c.get_mpz_t(), p.get_mpz_t()) != -1) ++c;
    mpz_class r;
    mpz_class e = (p - 1) / 4;
    mpz_powm(r.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    GInt pi = normalize(gcd({p, 0}, {r, 1}));
    return {pi, normalize(conj(pi))};
}

std::vector<mpz_class> rational_primes(mpz_class n) {
    std::vector<mpz_class> out;
    for (mpz_class d = 2; d * d <= n && d <= 1000000; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
            fail(ErrorCode::invalid_argument, "norm cofactor " + n.get_str() + " is too large to factor");
        out.push_back(n);
    }
    return out;
}

GaussRational to_rational(const GInt& a) { return {mpq_class(a.re), mpq_class(a.im)}; }

// z = unit * prod primes^e; exponents added into `acc` with sign `s`.
GaussRational factor_integer(GInt z, std::map<GaussRational, long>& acc, long s) {
    for (const auto& p : rational_primes(norm(z)))
        for (const auto& pi : gaussian_primes_over(p)) {
            GInt q;
            long e = 0;
            while (divide_exact(z, pi, q)) {
                z = q;
                ++e;
            }
            if (e) acc[to_rational(pi)] += s * e;
        }
    return to_rational(z);
}

}  // namespace

GaussianFactorization factor_gaussian(const GaussRational& c) {
    if (c.is_zero()) fail(ErrorCode::invalid_argument, "cannot factor zero");
    mpz_class n;
    mpz_lcm(n.get_mpz_t(), c.re().get_den_mpz_t(), c.im().get_den_mpz_t());
    mpq_class re = c.re() * n, im = c.im() * n;
    std::map<GaussRational, long> acc;
    GaussRational u1 = factor_integer({re.get_num(), im.get_num()}, acc, 1);
    GaussRational u2 = factor_integer({n, 0}, acc, -1);
    GaussianFactorization out;
    out.unit = u1 / u2;
    for (const auto& [p, e] : acc)
        if (e != 0) out.primes.emplace_back(p, e);
    return out;
}

}  // namespace treg::exact
