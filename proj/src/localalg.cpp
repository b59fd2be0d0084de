#include "esf/localalg.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace esf {

namespace {

// ecart = (max total degree) - (degree of the leading monomial)
std::uint64_t ecart(const Poly& f) {
    return f.max_degree() - f.leading_monomial().total_degree();
}

// h - (lt(h)/lt(g)) * g; cancels the leading term of h against g.
Poly reduce_once(const Poly& h, const Poly& g) {
    Monomial m = h.leading_monomial() / g.leading_monomial();
    Rat c = h.leading_coeff() / g.leading_coeff();
    return h - g.mul_monomial(m, c);
}

Poly spoly(const Poly& f, const Poly& g) {
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Poly a = f.mul_monomial(l / f.leading_monomial(), Rat(1) / f.leading_coeff());
    Poly b = g.mul_monomial(l / g.leading_monomial(), Rat(1) / g.leading_coeff());
    return a - b;
}

} // namespace

IdealBasis IdealBasis::of(std::vector<Poly> gens) {
    for (const auto& g : gens)
        if (g.is_zero())
            throw Error(ErrorKind::invariant_violation, "ideal generator is the zero polynomial");
    if (gens.empty())
        throw Error(ErrorKind::invariant_violation, "ideal needs at least one generator");
    return IdealBasis{std::move(gens)};
}

Poly normal_form_mora(Poly h, const std::vector<Poly>& reducers) {
    // Local T grows by earlier partial remainders; this is what makes the
    // reduction terminate for a non-well-ordering.
    std::vector<Poly> pool = reducers;
    while (!h.is_zero()) {
        const Monomial lm = h.leading_monomial();
        int best = -1;
        std::uint64_t best_ecart = std::numeric_limits<std::uint64_t>::max();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (!pool[i].leading_monomial().divides(lm)) continue;
            std::uint64_t e = ecart(pool[i]);
            if (e < best_ecart) {
                best_ecart = e;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) break;
        if (best_ecart > ecart(h)) pool.push_back(h);
        h = reduce_once(h, pool[static_cast<std::size_t>(best)]);
        if (!h.is_zero()) h = h.content_normalized();
    }
    return h;
}

std::vector<Poly> standard_basis(const IdealBasis& ideal) {
    std::vector<Poly> basis;
    for (const auto& g : ideal.generators) {
        if (g.is_zero())
            throw Error(ErrorKind::invariant_violation, "ideal generator is the zero polynomial");
        basis.push_back(g.content_normalized());
    }

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        Poly s = spoly(basis[i], basis[j]);
        if (s.is_zero()) continue;
        Poly h = normal_form_mora(s.content_normalized(), basis);
        if (h.is_zero()) continue;
        h = h.content_normalized();
        for (std::size_t k = 0; k < basis.size(); ++k) pairs.push_back({k, basis.size()});
        basis.push_back(std::move(h));
    }

    // minimalise: drop elements whose leading monomial is divisible by
    // another one (a standard basis stays a standard basis)
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial &mi = basis[i].leading_monomial(), &mj = basis[j].leading_monomial();
            if (mj == mi) {
                redundant = j < i; // keep the first of equal leading monomials
            } else if (mj.divides(mi)) {
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i].monic());
    }

    std::sort(minimal.begin(), minimal.end(), [](const Poly& a, const Poly& b) {
        return LocalOrder::greater(a.leading_monomial(), b.leading_monomial());
    });
    return minimal;
}

namespace {

// Staircase bookkeeping on the leading monomials of a standard basis.
struct Staircase {
    std::vector<Monomial> corners;
    bool zero_dimensional;
    std::uint32_t pure_x; // minimal a with x^a in the leading ideal (valid if zero_dimensional)
};

Staircase staircase_of(const IdealBasis& ideal) {
    auto sb = standard_basis(ideal);
    Staircase s;
    for (const auto& g : sb) s.corners.push_back(g.leading_monomial());
    bool has_pure_x = false, has_pure_y = false;
    std::uint32_t ax = 0;
    for (const auto& m : s.corners) {
        if (m.ey == 0) {
            if (!has_pure_x || m.ex < ax) ax = m.ex;
            has_pure_x = true;
        }
        if (m.ex == 0) has_pure_y = true;
    }
    s.zero_dimensional = has_pure_x && has_pure_y;
    s.pure_x = ax;
    return s;
}

} // namespace

ExtNat quotient_dimension(const IdealBasis& ideal) {
    Staircase s = staircase_of(ideal);
    if (!s.zero_dimensional) return ExtNat::infinite();
    std::uint64_t dim = 0;
    for (std::uint32_t i = 0; i < s.pure_x; ++i) {
        std::uint32_t column_height = std::numeric_limits<std::uint32_t>::max();
        for (const auto& m : s.corners)
            if (m.ex <= i) column_height = std::min(column_height, m.ey);
        dim += column_height;
    }
    return ExtNat::finite(dim);
}

std::vector<Monomial> standard_monomials(const IdealBasis& ideal) {
    Staircase s = staircase_of(ideal);
    if (!s.zero_dimensional)
        throw Error(ErrorKind::not_isolated, "leading ideal is not zero-dimensional");
    std::vector<Monomial> out;
    for (std::uint32_t i = 0; i < s.pure_x; ++i) {
        std::uint32_t column_height = std::numeric_limits<std::uint32_t>::max();
        for (const auto& m : s.corners)
            if (m.ex <= i) column_height = std::min(column_height, m.ey);
        for (std::uint32_t j = 0; j < column_height; ++j) out.push_back(Monomial{i, j});
    }
    return out;
}

namespace {

void check_local_equation(const Poly& f) {
    if (f.is_zero())
        throw Error(ErrorKind::invariant_violation, "local equation is the zero polynomial");
    if (!f.constant_term().is_zero())
        throw Error(ErrorKind::not_at_origin,
                    "local equation has non-zero constant term; germ does not pass through the origin");
}

} // namespace

ExtNat milnor_number(const Poly& f) {
    check_local_equation(f);
    Poly fx = partial_derivative(f, Var::x);
    Poly fy = partial_derivative(f, Var::y);
    if (fx.is_zero() && fy.is_zero()) return ExtNat::infinite(); // constant f is excluded above
    std::vector<Poly> gens;
    if (!fx.is_zero()) gens.push_back(fx);
    if (!fy.is_zero()) gens.push_back(fy);
    return quotient_dimension(IdealBasis{std::move(gens)});
}

ExtNat tjurina_number(const Poly& f) {
    check_local_equation(f);
    Poly fx = partial_derivative(f, Var::x);
    Poly fy = partial_derivative(f, Var::y);
    std::vector<Poly> gens{f};
    if (!fx.is_zero()) gens.push_back(fx);
    if (!fy.is_zero()) gens.push_back(fy);
    return quotient_dimension(IdealBasis{std::move(gens)});
}

} // namespace esf
