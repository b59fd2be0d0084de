#include "esf/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

namespace esf {

namespace {

// ===================================================================
// dense univariate polynomials over Z (ascending degree, trimmed)
// ===================================================================

using ZPoly = std::vector<mpz_class>;

void z_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int z_deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

bool z_is_zero(const ZPoly& p) { return p.empty(); }

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    z_trim(r);
    return r;
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    z_trim(r);
    return r;
}

ZPoly z_scale(const ZPoly& a, const mpz_class& c) {
    if (c == 0) return {};
    ZPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

ZPoly z_derivative(const ZPoly& a) {
    ZPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * mpz_class(static_cast<long>(i)));
    z_trim(r);
    return r;
}

mpz_class z_content(const ZPoly& a) {
    mpz_class g(0);
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly z_primitive(const ZPoly& a) {
    mpz_class g = z_content(a);
    if (g == 0) return {};
    ZPoly r = a;
    for (auto& c : r) c /= g;
    return r;
}

std::optional<ZPoly> z_divide_exact(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) return std::nullopt;
    ZPoly rem = a;
    ZPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, mpz_class(0));
    while (!rem.empty() && rem.size() >= b.size()) {
        mpz_class quot, r;
        mpz_tdiv_qr(quot.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(),
                    b.back().get_mpz_t());
        if (r != 0) return std::nullopt;
        std::size_t shift = rem.size() - b.size();
        q[shift] = quot;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= quot * b[i];
        z_trim(rem);
    }
    if (!rem.empty()) return std::nullopt;
    z_trim(q);
    return q;
}

// pseudo-remainder of a by b
ZPoly z_prem(ZPoly a, const ZPoly& b) {
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        mpz_class la = a.back(), lb = b.back();
        ZPoly scaled = z_scale(a, lb);
        for (std::size_t i = 0; i < b.size(); ++i) scaled[shift + i] -= la * b[i];
        a = std::move(scaled);
        z_trim(a);
    }
    return a;
}

// gcd of primitive parts (result primitive, positive leading coefficient)
ZPoly z_gcd_primitive(ZPoly a, ZPoly b) {
    a = z_primitive(a);
    b = z_primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = z_primitive(z_prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

ZPoly z_compose_linear_shift(const ZPoly& a, long s) {
    // a(x + s), Horner style
    ZPoly r;
    for (std::size_t i = a.size(); i-- > 0;) {
        // r = r * (x + s) + a[i]
        ZPoly nr(r.size() + 1, mpz_class(0));
        for (std::size_t j = 0; j < r.size(); ++j) {
            nr[j + 1] += r[j];
            nr[j] += r[j] * s;
        }
        if (nr.empty()) nr.push_back(mpz_class(0));
        nr[0] += a[i];
        z_trim(nr);
        r = std::move(nr);
    }
    return r;
}

mpz_class z_eval(const ZPoly& a, long s) {
    mpz_class r(0);
    for (std::size_t i = a.size(); i-- > 0;) r = r * s + a[i];
    return r;
}

// ===================================================================
// univariate polynomials over F_p (p < 2^31)
// ===================================================================

using FpPoly = std::vector<std::int64_t>;

std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return t < 0 ? t + p : t;
}

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_from_z(const ZPoly& a, std::int64_t p) {
    FpPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = static_cast<std::int64_t>(
            mpz_fdiv_ui(a[i].get_mpz_t(), static_cast<unsigned long>(p)));
    }
    fp_trim(r);
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(r);
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    FpPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % p + p) % p;
    fp_trim(r);
    return r;
}

// remainder of a modulo monic-or-not b
FpPoly fp_rem(FpPoly a, const FpPoly& b, std::int64_t p) {
    std::int64_t inv = fp_inv(b.back(), p);
    while (!a.empty() && a.size() >= b.size()) {
        std::int64_t c = a.back() % p * inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        fp_trim(a);
    }
    return a;
}

std::pair<FpPoly, FpPoly> fp_divmod(FpPoly a, const FpPoly& b, std::int64_t p) {
    FpPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    std::int64_t inv = fp_inv(b.back(), p);
    while (!a.empty() && a.size() >= b.size()) {
        std::int64_t c = a.back() % p * inv % p;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        fp_trim(a);
    }
    fp_trim(q);
    return {q, a};
}

FpPoly fp_monic(FpPoly a, std::int64_t p) {
    if (a.empty()) return a;
    std::int64_t inv = fp_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p) {
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

// s*a + t*b = gcd (gcd returned monic); used for Bezout on coprime pairs
void fp_gcd_ext(const FpPoly& a, const FpPoly& b, std::int64_t p, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = fp_divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly ns = fp_sub(s0, fp_mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(ns);
        FpPoly nt = fp_sub(t0, fp_mul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    // scale so the gcd is monic
    std::int64_t inv = fp_inv(r0.back(), p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    s = std::move(s0);
    t = std::move(t0);
}

FpPoly fp_derivative(const FpPoly& a, std::int64_t p) {
    FpPoly r;
    for (std::size_t i = 1; i < a.size(); ++i)
        r.push_back(static_cast<std::int64_t>(i % static_cast<std::size_t>(p)) * a[i] % p);
    fp_trim(r);
    return r;
}

FpPoly fp_powmod_x(const FpPoly& modulus, std::int64_t e, std::int64_t p) {
    // x^e mod modulus
    FpPoly result{1};
    FpPoly base{0, 1};
    base = fp_rem(base, modulus, p);
    while (e) {
        if (e & 1) result = fp_rem(fp_mul(result, base, p), modulus, p);
        e >>= 1;
        if (e) base = fp_rem(fp_mul(base, base, p), modulus, p);
    }
    return result;
}

// Berlekamp factorisation of a monic squarefree f over F_p.
std::vector<FpPoly> berlekamp(const FpPoly& f, std::int64_t p) {
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};

    // Q matrix: column j = x^(p*j) mod f
    std::vector<FpPoly> cols(static_cast<std::size_t>(n));
    FpPoly xp = fp_powmod_x(f, p, p);
    FpPoly cur{1};
    for (int j = 0; j < n; ++j) {
        cols[static_cast<std::size_t>(j)] = cur;
        if (j + 1 < n) cur = fp_rem(fp_mul(cur, xp, p), f, p);
    }

    // M = Q - I, kernel via Gauss
    std::vector<std::vector<std::int64_t>> m(
        static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (int j = 0; j < n; ++j) {
        const FpPoly& col = cols[static_cast<std::size_t>(j)];
        for (int i = 0; i < n; ++i) {
            std::int64_t v = i < static_cast<int>(col.size()) ? col[static_cast<std::size_t>(i)] : 0;
            if (i == j) v = ((v - 1) % p + p) % p;
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        }
    }

    std::vector<int> pivot_col_of_row;
    std::vector<bool> col_is_pivot(static_cast<std::size_t>(n), false);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int sel = -1;
        for (int i = row; i < n; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(row)]);
        std::int64_t inv = fp_inv(m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)], p);
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] =
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] * inv % p;
        for (int i = 0; i < n; ++i) {
            if (i == row) continue;
            std::int64_t c = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (c == 0) continue;
            for (int j = 0; j < n; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    ((m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                      c * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)]) %
                         p +
                     p) %
                    p;
        }
        pivot_col_of_row.push_back(col);
        col_is_pivot[static_cast<std::size_t>(col)] = true;
        ++row;
    }

    std::vector<FpPoly> kernel;
    for (int col = 0; col < n; ++col) {
        if (col_is_pivot[static_cast<std::size_t>(col)]) continue;
        FpPoly v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(col)] = 1;
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            std::int64_t c = m[r][static_cast<std::size_t>(col)];
            v[static_cast<std::size_t>(pivot_col_of_row[r])] = ((-c) % p + p) % p;
        }
        fp_trim(v);
        kernel.push_back(std::move(v));
    }

    // the nullity equals the number of irreducible factors
    const std::size_t k = kernel.size();

    std::vector<FpPoly> factors{f};
    if (k <= 1) return factors;

    for (const FpPoly& v : kernel) {
        if (factors.size() >= k) break;
        if (v.size() <= 1) continue; // constant vector does not split anything
        for (std::int64_t c = 0; c < p && factors.size() < k; ++c) {
            FpPoly shifted = v;
            if (shifted.empty()) shifted.push_back(0);
            shifted[0] = ((shifted[0] - c) % p + p) % p;
            fp_trim(shifted);
            std::vector<FpPoly> next;
            for (const FpPoly& u : factors) {
                if (static_cast<int>(u.size()) - 1 <= 1) {
                    next.push_back(u);
                    continue;
                }
                FpPoly g = fp_gcd(u, shifted, p);
                if (g.size() <= 1 || g.size() == u.size()) {
                    next.push_back(u);
                } else {
                    auto [q, r] = fp_divmod(u, g, p);
                    (void)r;
                    next.push_back(fp_monic(g, p));
                    next.push_back(fp_monic(q, p));
                }
            }
            factors = std::move(next);
        }
    }
    return factors;
}

// ===================================================================
// Hensel lifting over Z/p^K (monic factors)
// ===================================================================

ZPoly z_mod(const ZPoly& a, const mpz_class& m) {
    ZPoly r = a;
    for (auto& c : r) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    z_trim(r);
    return r;
}

ZPoly z_from_fp(const FpPoly& a) {
    ZPoly r;
    r.reserve(a.size());
    for (auto c : a) r.push_back(mpz_class(static_cast<long>(c)));
    return r;
}

// lifts f == a0*b0 (mod p) to A*B == f (mod p^steps), all monic
void hensel_pair_lift(const ZPoly& f, const FpPoly& a0, const FpPoly& b0, std::int64_t p,
                      unsigned steps, ZPoly& a_out, ZPoly& b_out) {
    FpPoly s, t;
    fp_gcd_ext(a0, b0, p, s, t); // s*a0 + t*b0 = 1 mod p
    ZPoly a = z_from_fp(a0), b = z_from_fp(b0);
    mpz_class pk(static_cast<long>(p));
    for (unsigned k = 1; k < steps; ++k) {
        ZPoly e = z_sub(f, z_mul(a, b));
        // e is divisible by p^k
        ZPoly digit;
        digit.reserve(e.size());
        for (auto& c : e) digit.push_back(c / pk);
        z_trim(digit);
        FpPoly ebar = fp_from_z(digit, p);
        if (!ebar.empty()) {
            auto [q, arep] = fp_divmod(fp_mul(t, ebar, p), a0, p);
            FpPoly brep = fp_mul(s, ebar, p);
            FpPoly qb = fp_mul(q, b0, p);
            FpPoly badd(std::max(brep.size(), qb.size()), 0);
            for (std::size_t i = 0; i < brep.size(); ++i) badd[i] = brep[i];
            for (std::size_t i = 0; i < qb.size(); ++i) badd[i] = (badd[i] + qb[i]) % p;
            fp_trim(badd);
            // a += p^k * arep ; b += p^k * badd
            ZPoly za = z_from_fp(arep), zb = z_from_fp(badd);
            za = z_scale(za, pk);
            zb = z_scale(zb, pk);
            if (za.size() > a.size()) a.resize(za.size(), mpz_class(0));
            for (std::size_t i = 0; i < za.size(); ++i) a[i] += za[i];
            if (zb.size() > b.size()) b.resize(zb.size(), mpz_class(0));
            for (std::size_t i = 0; i < zb.size(); ++i) b[i] += zb[i];
        }
        pk *= p;
    }
    mpz_class pfull = pk;
    a_out = z_mod(a, pfull);
    b_out = z_mod(b, pfull);
}

std::vector<ZPoly> hensel_multilift(const ZPoly& f_mod, const std::vector<FpPoly>& seeds,
                                    std::int64_t p, unsigned steps) {
    if (seeds.size() == 1) return {f_mod};
    FpPoly b0{1};
    for (std::size_t i = 1; i < seeds.size(); ++i) b0 = fp_mul(b0, seeds[i], p);
    ZPoly a, b;
    hensel_pair_lift(f_mod, seeds[0], b0, p, steps, a, b);
    std::vector<FpPoly> rest(seeds.begin() + 1, seeds.end());
    std::vector<ZPoly> out{a};
    for (auto& g : hensel_multilift(b, rest, p, steps)) out.push_back(std::move(g));
    return out;
}

// symmetric representative in (-m/2, m/2]
mpz_class z_symmetric(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r * 2 > m) r -= m;
    return r;
}

// ===================================================================
// Zassenhaus over Z
// ===================================================================

std::int64_t choose_prime(const ZPoly& f) {
    mpz_class p(2);
    for (int tries = 0; tries < 500; ++tries) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        std::int64_t pi = static_cast<std::int64_t>(p.get_si());
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(pi))) continue;
        FpPoly fbar = fp_from_z(f, pi);
        if (static_cast<int>(fbar.size()) - 1 != z_deg(f)) continue;
        FpPoly g = fp_gcd(fbar, fp_derivative(fbar, pi), pi);
        if (g.size() == 1) return pi;
    }
    throw Error(ErrorKind::invariant_violation,
                "no suitable prime found; polynomial is likely not squarefree");
}

// factors a primitive squarefree polynomial over Z into primitive
// irreducible factors with positive leading coefficients
std::vector<ZPoly> factor_univariate_z(ZPoly f) {
    std::vector<ZPoly> out;
    if (z_deg(f) <= 0) return out;
    if (f.back() < 0) for (auto& c : f) c = -c;
    // split off x^k
    std::size_t low = 0;
    while (low < f.size() && f[low] == 0) ++low;
    if (low > 0) {
        for (std::size_t i = 0; i < low; ++i) out.push_back(ZPoly{0, 1});
        f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (z_deg(f) <= 0) return out;
    if (z_deg(f) == 1) {
        out.push_back(z_primitive(f));
        return out;
    }

    std::int64_t p = choose_prime(f);
    FpPoly fbar = fp_monic(fp_from_z(f, p), p);
    std::vector<FpPoly> modular = berlekamp(fbar, p);
    if (modular.size() == 1) {
        out.push_back(f);
        return out;
    }
    std::sort(modular.begin(), modular.end(),
              [](const FpPoly& a, const FpPoly& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });

    // monicise: ft(y) = lc^(n-1) * f(y / lc), coefficient of y^i is f[i] * lc^(n-1-i)
    const mpz_class lc = f.back();
    const int n = z_deg(f);
    ZPoly ft(f.size());
    {
        std::vector<mpz_class> powers(static_cast<std::size_t>(n) + 1);
        powers[static_cast<std::size_t>(n)] = 1; // powers[k] = lc^(n-k)
        for (int i = n - 1; i >= 0; --i)
            powers[static_cast<std::size_t>(i)] = powers[static_cast<std::size_t>(i) + 1] * lc;
        for (int i = 0; i < n; ++i)
            ft[static_cast<std::size_t>(i)] =
                f[static_cast<std::size_t>(i)] * powers[static_cast<std::size_t>(i) + 1];
        ft[static_cast<std::size_t>(n)] = 1;
    }

    // Mignotte-style bound for coefficients of monic factors of ft
    mpz_class norm2(0);
    for (const auto& c : ft) norm2 += c * c;
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
    bound += 1;
    mpz_class two_n(1);
    mpz_mul_2exp(two_n.get_mpz_t(), two_n.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1));
    bound *= two_n;

    unsigned steps = 1;
    mpz_class pk(static_cast<long>(p));
    while (pk <= 2 * bound) {
        pk *= p;
        ++steps;
    }
    mpz_class modulus = pk;

    // ft mod p == product of the same monic modular factors (fbar was made monic;
    // monicisation does not change the reduction because lc is a unit mod p and
    // ft == lc^(n-1) f(y/lc) maps the factorisation accordingly)
    FpPoly ftbar = fp_monic(fp_from_z(ft, p), p);
    std::vector<FpPoly> seeds;
    {
        // refactor ft mod p: reuse berlekamp on ftbar only when reductions differ
        // in general; the straightforward route is to re-run berlekamp.
        seeds = berlekamp(ftbar, p);
        std::sort(seeds.begin(), seeds.end(), [](const FpPoly& a, const FpPoly& b) {
            return a.size() < b.size() || (a.size() == b.size() && a < b);
        });
    }

    std::vector<ZPoly> lifted = hensel_multilift(z_mod(ft, modulus), seeds, p, steps);

    // subset recombination
    std::vector<int> remaining(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) remaining[i] = static_cast<int>(i);
    ZPoly current = ft;

    auto symmetric_poly = [&](const ZPoly& a) {
        ZPoly r = a;
        for (auto& c : r) c = z_symmetric(c, modulus);
        z_trim(r);
        return r;
    };

    auto push_back_transformed = [&](const ZPoly& factor_monic) {
        // factor of f: primitive part of factor_monic(lc * x)
        ZPoly g = factor_monic;
        mpz_class pw(1);
        for (std::size_t i = 0; i < g.size(); ++i) {
            g[i] *= pw;
            pw *= lc;
        }
        g = z_primitive(g);
        if (!g.empty() && g.back() < 0)
            for (auto& c : g) c = -c;
        out.push_back(std::move(g));
    };

    std::size_t max_take = 1;
    while (remaining.size() > 0 && max_take <= remaining.size()) {
        // enumerate subsets of size max_take
        std::vector<std::size_t> idx(max_take);
        for (std::size_t i = 0; i < max_take; ++i) idx[i] = i;
        bool found = false;
        while (true) {
            // candidate product
            ZPoly cand{1};
            for (std::size_t i : idx) {
                cand = z_mod(z_mul(cand, lifted[static_cast<std::size_t>(remaining[i])]), modulus);
            }
            cand = symmetric_poly(cand);
            auto q = z_divide_exact(current, cand);
            if (q.has_value()) {
                push_back_transformed(cand);
                current = z_primitive(*q); // stays monic, primitive is a no-op
                std::vector<int> next_remaining;
                for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    next_remaining.push_back(remaining[i]);
                }
                remaining = std::move(next_remaining);
                found = true;
                break;
            }
            // next subset
            int pos = static_cast<int>(max_take) - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] ==
                                   remaining.size() - max_take + static_cast<std::size_t>(pos))
                --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < max_take; ++i)
                idx[i] = idx[i - 1] + 1;
        }
        if (found) {
            if (remaining.size() <= max_take) break;
            continue; // retry the same size on the reduced set
        }
        ++max_take;
        if (max_take * 2 > remaining.size()) break;
    }
    if (z_deg(current) >= 1) push_back_transformed(current);
    return out;
}

// ===================================================================
// bivariate layer: Z[x][y] recursive representation
// ===================================================================

using ZXPoly = std::vector<ZPoly>; // coefficient of y^j is a ZPoly in x

void zx_trim(ZXPoly& p) {
    while (!p.empty() && z_is_zero(p.back())) p.pop_back();
}

int zx_deg_y(const ZXPoly& p) { return static_cast<int>(p.size()) - 1; }

int zx_deg_x(const ZXPoly& p) {
    int d = -1;
    for (const auto& c : p) d = std::max(d, z_deg(c));
    return d;
}

std::optional<ZXPoly> zx_divide_exact(const ZXPoly& a, const ZXPoly& b) {
    if (b.empty()) return std::nullopt;
    ZXPoly rem = a;
    zx_trim(rem);
    ZXPoly q(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0);
    while (!rem.empty() && rem.size() >= b.size()) {
        auto qc = z_divide_exact(rem.back(), b.back());
        if (!qc.has_value()) return std::nullopt;
        std::size_t shift = rem.size() - b.size();
        if (q.size() <= shift) q.resize(shift + 1);
        q[shift] = *qc;
        for (std::size_t i = 0; i < b.size(); ++i) {
            ZPoly prod = z_mul(b[i], *qc);
            ZPoly& acc = rem[shift + i];
            if (prod.size() > acc.size()) acc.resize(prod.size(), mpz_class(0));
            for (std::size_t k = 0; k < prod.size(); ++k) acc[k] -= prod[k];
            z_trim(acc);
        }
        std::size_t before = rem.size();
        zx_trim(rem);
        if (rem.size() == before) return std::nullopt; // leading term did not cancel
    }
    if (!rem.empty()) return std::nullopt;
    zx_trim(q);
    return q;
}

ZPoly zx_content(const ZXPoly& p) {
    ZPoly g;
    for (const auto& c : p) g = z_gcd_primitive(g, c);
    // include the integer content as well
    mpz_class ic(0);
    for (const auto& c : p)
        for (const auto& v : c) mpz_gcd(ic.get_mpz_t(), ic.get_mpz_t(), v.get_mpz_t());
    return z_scale(g, ic);
}

// ===================================================================
// bivariate Hensel lifting over Q[x]/(x^K)
// ===================================================================

using QPoly = std::vector<Rat>;   // univariate over Q, ascending
using QZ = std::vector<QPoly>;    // polynomial in z with Q[x]-coefficients

void q_trim(QPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

QPoly q_mul_mod(const QPoly& a, const QPoly& b, std::size_t K) {
    QPoly r(std::min(K, a.size() + b.size() > 0 ? a.size() + b.size() - 1 : 0), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j + i < K && j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    q_trim(r);
    return r;
}

void qz_trim(QZ& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

QZ qz_mul_mod(const QZ& a, const QZ& b, std::size_t K) {
    if (a.empty() || b.empty()) return {};
    QZ r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            QPoly prod = q_mul_mod(a[i], b[j], K);
            QPoly& acc = r[i + j];
            if (prod.size() > acc.size()) acc.resize(prod.size(), Rat(0));
            for (std::size_t k = 0; k < prod.size(); ++k) acc[k] += prod[k];
            q_trim(acc);
        }
    qz_trim(r);
    return r;
}

QZ qz_sub(const QZ& a, const QZ& b) {
    QZ r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        QPoly& acc = r[i];
        if (b[i].size() > acc.size()) acc.resize(b[i].size(), Rat(0));
        for (std::size_t k = 0; k < b[i].size(); ++k) acc[k] -= b[i][k];
        q_trim(acc);
    }
    qz_trim(r);
    return r;
}

// coefficient of x^k, as a polynomial in z over Q
QPoly qz_digit(const QZ& a, std::size_t k) {
    QPoly d(a.size(), Rat(0));
    for (std::size_t j = 0; j < a.size(); ++j)
        if (k < a[j].size()) d[j] = a[j][k];
    q_trim(d);
    return d;
}

// univariate Q[z] division
std::pair<QPoly, QPoly> q_divmod(QPoly a, const QPoly& b) {
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (!a.empty() && a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        q_trim(a);
    }
    q_trim(q);
    return {q, a};
}

void q_gcd_ext(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
    QPoly r0 = a, r1 = b;
    QPoly s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
    while (!r1.empty()) {
        auto [q, r] = q_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly ns = s0;
        {
            QPoly qs1 = q_mul_mod(q, s1, 1u << 30);
            if (qs1.size() > ns.size()) ns.resize(qs1.size(), Rat(0));
            for (std::size_t i = 0; i < qs1.size(); ++i) ns[i] -= qs1[i];
            q_trim(ns);
        }
        s0 = std::move(s1);
        s1 = std::move(ns);
        QPoly nt = t0;
        {
            QPoly qt1 = q_mul_mod(q, t1, 1u << 30);
            if (qt1.size() > nt.size()) nt.resize(qt1.size(), Rat(0));
            for (std::size_t i = 0; i < qt1.size(); ++i) nt[i] -= qt1[i];
            q_trim(nt);
        }
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    Rat inv = Rat(1) / r0.back();
    for (auto& c : s0) c *= inv;
    for (auto& c : t0) c *= inv;
    s = std::move(s0);
    t = std::move(t0);
}

// lifts G == a0*b0 (mod x) to A*B == G (mod x^K); everything monic in z
void qz_pair_lift(const QZ& g, const QPoly& a0, const QPoly& b0, std::size_t K, QZ& a_out,
                  QZ& b_out) {
    QPoly s, t;
    q_gcd_ext(a0, b0, s, t);
    auto embed = [](const QPoly& u) {
        QZ r(u.size());
        for (std::size_t j = 0; j < u.size(); ++j)
            if (!u[j].is_zero()) r[j] = QPoly{u[j]};
        qz_trim(r);
        return r;
    };
    QZ a = embed(a0), b = embed(b0);
    for (std::size_t k = 1; k < K; ++k) {
        QZ e = qz_sub(g, qz_mul_mod(a, b, K));
        QPoly digit = qz_digit(e, k);
        if (digit.empty()) continue;
        auto [q, arep] = q_divmod(q_mul_mod(t, digit, 1u << 30), a0);
        QPoly brep = q_mul_mod(s, digit, 1u << 30);
        QPoly qb = q_mul_mod(q, b0, 1u << 30);
        if (qb.size() > brep.size()) brep.resize(qb.size(), Rat(0));
        for (std::size_t i = 0; i < qb.size(); ++i) brep[i] += qb[i];
        q_trim(brep);
        // a += x^k * arep, b += x^k * brep
        auto add_digit = [&](QZ& target, const QPoly& rep) {
            if (rep.size() > target.size()) target.resize(rep.size());
            for (std::size_t j = 0; j < rep.size(); ++j) {
                if (rep[j].is_zero()) continue;
                QPoly& cell = target[j];
                if (cell.size() <= k) cell.resize(k + 1, Rat(0));
                cell[k] += rep[j];
                q_trim(cell);
            }
            qz_trim(target);
        };
        add_digit(a, arep);
        add_digit(b, brep);
    }
    a_out = std::move(a);
    b_out = std::move(b);
}

std::vector<QZ> qz_multilift(const QZ& g, const std::vector<QPoly>& seeds, std::size_t K) {
    if (seeds.size() == 1) return {g};
    QPoly b0{Rat(1)};
    for (std::size_t i = 1; i < seeds.size(); ++i) b0 = q_mul_mod(b0, seeds[i], 1u << 30);
    QZ a, b;
    qz_pair_lift(g, seeds[0], b0, K, a, b);
    std::vector<QPoly> rest(seeds.begin() + 1, seeds.end());
    std::vector<QZ> out{a};
    for (auto& f : qz_multilift(b, rest, K)) out.push_back(std::move(f));
    return out;
}

// ===================================================================
// conversions
// ===================================================================

ZXPoly poly_to_zx(const Poly& p) {
    mpz_class den_lcm(1);
    for (const auto& [m, c] : p.terms()) {
        (void)m;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    ZXPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (r.size() <= m.ey) r.resize(m.ey + 1);
        ZPoly& row = r[m.ey];
        if (row.size() <= m.ex) row.resize(m.ex + 1, mpz_class(0));
        row[m.ex] += c.num() * (den_lcm / c.den());
    }
    for (auto& row : r) z_trim(row);
    zx_trim(r);
    return r;
}

Poly zx_to_poly(const ZXPoly& p) {
    std::vector<Poly::Term> ts;
    for (std::size_t j = 0; j < p.size(); ++j)
        for (std::size_t i = 0; i < p[j].size(); ++i)
            if (p[j][i] != 0)
                ts.push_back({Monomial{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)},
                              Rat(p[j][i])});
    return Poly::from_terms(std::move(ts));
}

Poly normalize_factor(const Poly& p) {
    Poly q = p.content_normalized();
    if (!q.is_zero() && q.leading_coeff().sign() < 0) q = q.scaled(Rat(-1));
    return q;
}

ZXPoly poly_to_zx(const Poly& p);
ZPoly zx_content(const ZXPoly& p);

// primitive part with respect to Z[x]: strips both the integer content and
// any polynomial-in-x content (candidates of the form L(x) * factor)
Poly remove_x_content(const Poly& p) {
    if (p.is_zero()) return p;
    ZXPoly z = poly_to_zx(p);
    ZPoly cont = zx_content(z);
    if (z_deg(cont) < 1) return p;
    for (auto& row : z) {
        if (row.empty()) continue;
        auto q = z_divide_exact(row, cont);
        if (!q.has_value())
            throw Error(ErrorKind::internal, "content division failed in candidate mapping");
        row = *q;
    }
    std::vector<Poly::Term> ts;
    for (std::size_t j = 0; j < z.size(); ++j)
        for (std::size_t i = 0; i < z[j].size(); ++i)
            if (z[j][i] != 0)
                ts.push_back({Monomial{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)},
                              Rat(z[j][i])});
    return Poly::from_terms(std::move(ts));
}

Poly zpoly_to_poly_in(const ZPoly& a, bool in_x) {
    std::vector<Poly::Term> ts;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        Monomial m = in_x ? Monomial{static_cast<std::uint32_t>(i), 0}
                          : Monomial{0, static_cast<std::uint32_t>(i)};
        ts.push_back({m, Rat(a[i])});
    }
    return Poly::from_terms(std::move(ts));
}

// ===================================================================
// main bivariate driver
// ===================================================================

std::vector<Poly> factor_bivariate_pp(const ZXPoly& h) {
    // h: primitive in y, deg_y >= 1, deg_x >= 1, squarefree
    const int m = zx_deg_y(h);

    // shift search: need lc_y(h)(s) != 0 and h(s, y) squarefree
    const ZPoly& lead = h.back();
    long shift = 0;
    bool found = false;
    long max_tries = 2 * (zx_deg_x(h) * (2 * m + 1) + 4);
    for (long k = 0; k <= max_tries && !found; ++k) {
        long s = (k % 2 == 0) ? k / 2 : -(k / 2 + 1);
        if (z_eval(lead, s) == 0) continue;
        // u(y) = h(s, y)
        ZPoly u(static_cast<std::size_t>(m) + 1, mpz_class(0));
        for (int j = 0; j <= m; ++j) u[static_cast<std::size_t>(j)] = z_eval(h[static_cast<std::size_t>(j)], s);
        z_trim(u);
        if (z_deg(u) != m) continue;
        ZPoly g = z_gcd_primitive(u, z_derivative(u));
        if (z_deg(g) == 0) {
            shift = s;
            found = true;
        }
    }
    if (!found)
        throw Error(ErrorKind::invariant_violation,
                    "bivariate factorisation requires a squarefree polynomial");

    // G(x,y) = h(x + shift, y)
    ZXPoly G(h.size());
    for (std::size_t j = 0; j < h.size(); ++j) G[j] = z_compose_linear_shift(h[j], shift);

    const ZPoly& L = G.back(); // lc_y(G), L(0) != 0
    const int degL = z_deg(L);

    // monicise: Ghat(x, z), coefficient of z^j is G_j * L^(m-1-j)
    ZXPoly Ghat(G.size());
    {
        std::vector<ZPoly> lpow(static_cast<std::size_t>(m) + 1);
        lpow[0] = ZPoly{mpz_class(1)};
        for (int i = 1; i <= m; ++i) lpow[static_cast<std::size_t>(i)] = z_mul(lpow[static_cast<std::size_t>(i - 1)], L);
        for (int j = 0; j <= m; ++j)
            Ghat[static_cast<std::size_t>(j)] =
                z_mul(G[static_cast<std::size_t>(j)], lpow[static_cast<std::size_t>(m - 1 - j >= 0 ? m - 1 - j : 0)]);
        // j == m gives G_m * L^(-1) conceptually; with the convention above it
        // got multiplied by L^0 * ... fix: top coefficient must be exactly 1.
    }
    // recompute the top coefficient properly: Ghat_m = 1
    Ghat[static_cast<std::size_t>(m)] = ZPoly{mpz_class(1)};

    const std::size_t K = static_cast<std::size_t>(std::max(1, (m - 1) * degL + zx_deg_x(G))) + 1;

    // seed factorisation at x = 0
    ZPoly u0(static_cast<std::size_t>(m) + 1, mpz_class(0));
    for (int j = 0; j <= m; ++j) u0[static_cast<std::size_t>(j)] = Ghat[static_cast<std::size_t>(j)].empty()
                                      ? mpz_class(0)
                                      : Ghat[static_cast<std::size_t>(j)][0];
    z_trim(u0);
    std::vector<ZPoly> seed_factors = factor_univariate_z(u0);
    if (seed_factors.size() == 1) {
        // h itself is irreducible
        return {normalize_factor(zx_to_poly(h))};
    }

    // monic rational seeds
    std::vector<QPoly> seeds;
    for (const auto& sf : seed_factors) {
        QPoly q(sf.size());
        Rat inv = Rat(1) / Rat(sf.back());
        for (std::size_t i = 0; i < sf.size(); ++i) q[i] = Rat(sf[i]) * inv;
        seeds.push_back(std::move(q));
    }
    std::sort(seeds.begin(), seeds.end(), [](const QPoly& a, const QPoly& b) {
        return a.size() < b.size();
    });

    // Ghat as QZ
    QZ ghat(Ghat.size());
    for (std::size_t j = 0; j < Ghat.size(); ++j) {
        QPoly c(Ghat[j].size());
        for (std::size_t i = 0; i < Ghat[j].size(); ++i) c[i] = Rat(Ghat[j][i]);
        q_trim(c);
        ghat[j] = std::move(c);
    }

    std::vector<QZ> lifted = qz_multilift(ghat, seeds, K);

    // recombination against G
    std::vector<Poly> factors;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) remaining[i] = i;
    ZXPoly current = G;

    Poly ell = zpoly_to_poly_in(L, true);

    auto candidate_poly = [&](const std::vector<std::size_t>& idx) {
        QZ w{QPoly{Rat(1)}};
        for (std::size_t i : idx) w = qz_mul_mod(w, lifted[remaining[i]], K);
        // substitute z = L(x) * y and clear content
        Poly cand;
        Poly ellpow = Poly::one();
        std::vector<Poly> pows(w.size());
        for (std::size_t j = 0; j < w.size(); ++j) {
            pows[j] = ellpow;
            ellpow = ellpow * ell;
        }
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (w[j].empty()) continue;
            Poly xc;
            {
                std::vector<Poly::Term> ts;
                for (std::size_t i = 0; i < w[j].size(); ++i)
                    if (!w[j][i].is_zero())
                        ts.push_back({Monomial{static_cast<std::uint32_t>(i),
                                               static_cast<std::uint32_t>(j)},
                                      w[j][i]});
                xc = Poly::from_terms(std::move(ts));
            }
            cand += xc * pows[j];
        }
        return normalize_factor(remove_x_content(cand));
    };

    std::size_t take = 1;
    while (!remaining.empty() && take * 2 <= remaining.size()) {
        std::vector<std::size_t> idx(take);
        for (std::size_t i = 0; i < take; ++i) idx[i] = i;
        bool found_factor = false;
        while (true) {
            Poly cand = candidate_poly(idx);
            ZXPoly candz = poly_to_zx(cand);
            auto q = zx_divide_exact(current, candz);
            if (q.has_value()) {
                factors.push_back(cand);
                current = *q;
                std::vector<std::size_t> next_remaining;
                for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    next_remaining.push_back(remaining[i]);
                }
                remaining = std::move(next_remaining);
                found_factor = true;
                break;
            }
            int pos = static_cast<int>(take) - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] ==
                                   remaining.size() - take + static_cast<std::size_t>(pos))
                --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < take; ++i)
                idx[i] = idx[i - 1] + 1;
        }
        if (!found_factor) ++take;
    }
    if (zx_deg_y(current) >= 1 || zx_deg_x(current) >= 1) factors.push_back(normalize_factor(zx_to_poly(current)));

    // undo the shift
    if (shift != 0) {
        for (auto& f : factors) {
            ZXPoly z = poly_to_zx(f);
            for (auto& row : z) row = z_compose_linear_shift(row, -shift);
            f = normalize_factor(zx_to_poly(z));
        }
    }
    return factors;
}

} // namespace

bool univariate_squarefree_q(const std::vector<Rat>& coeffs) {
    // clear denominators, primitive part, gcd with derivative
    mpz_class den_lcm(1);
    for (const auto& c : coeffs) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    ZPoly z(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) z[i] = coeffs[i].num() * (den_lcm / coeffs[i].den());
    z_trim(z);
    if (z_deg(z) <= 0) return true;
    ZPoly g = z_gcd_primitive(z, z_derivative(z));
    return z_deg(g) == 0;
}

std::vector<Poly> irreducible_factors(const Poly& f) {
    if (f.is_zero())
        throw Error(ErrorKind::invariant_violation, "cannot factor the zero polynomial");
    std::vector<Poly> out;
    if (f.is_constant()) return out;

    // split off monomial factors x^a y^b
    std::uint32_t a = ~0u, b = ~0u;
    for (const auto& [m, c] : f.terms()) {
        (void)c;
        a = std::min(a, m.ex);
        b = std::min(b, m.ey);
    }
    for (std::uint32_t i = 0; i < a; ++i) out.push_back(Poly::variable_x());
    for (std::uint32_t i = 0; i < b; ++i) out.push_back(Poly::variable_y());

    std::vector<Poly::Term> stripped;
    for (const auto& [m, c] : f.terms())
        stripped.push_back({Monomial{m.ex - a, m.ey - b}, c});
    Poly g = Poly::from_terms(std::move(stripped));
    if (g.is_constant()) return out;

    ZXPoly z = poly_to_zx(g);
    if (zx_deg_y(z) == 0) {
        for (const auto& u : factor_univariate_z(z_primitive(z[0])))
            out.push_back(normalize_factor(zpoly_to_poly_in(u, true)));
        return out;
    }
    if (zx_deg_x(z) == 0) {
        ZPoly u;
        for (const auto& row : z) u.push_back(row.empty() ? mpz_class(0) : row[0]);
        z_trim(u);
        for (const auto& v : factor_univariate_z(z_primitive(u)))
            out.push_back(normalize_factor(zpoly_to_poly_in(v, false)));
        return out;
    }

    // content in Z[x] and primitive part
    ZPoly content = zx_content(z);
    if (z_deg(content) >= 1) {
        for (const auto& u : factor_univariate_z(z_primitive(content)))
            out.push_back(normalize_factor(zpoly_to_poly_in(u, true)));
    }
    ZXPoly pp(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (z[j].empty()) continue;
        auto q = z_divide_exact(z[j], content);
        if (!q.has_value())
            throw Error(ErrorKind::internal, "content division failed");
        pp[j] = *q;
    }
    zx_trim(pp);
    if (zx_deg_x(pp) == 0) {
        ZPoly u;
        for (const auto& row : pp) u.push_back(row.empty() ? mpz_class(0) : row[0]);
        z_trim(u);
        for (const auto& v : factor_univariate_z(z_primitive(u)))
            out.push_back(normalize_factor(zpoly_to_poly_in(v, false)));
        return out;
    }

    for (auto& p : factor_bivariate_pp(pp)) out.push_back(std::move(p));
    return out;
}

} // namespace esf
