#include "esf/surfaces.hpp"

#include <sstream>

namespace esf {

const char* chi_mode_name(ChiMode m) {
    return m == ChiMode::standard ? "standard" : "paper-compat";
}

SurfaceModel::SurfaceModel(Data d, std::string preset)
    : data_(std::move(d)), preset_(std::move(preset)) {
    if (const auto* r = std::get_if<PicardRankOne>(&data_)) {
        if (r->l_squared < 1)
            throw Error(ErrorKind::domain, "rank-one model needs L^2 >= 1");
    } else if (const auto* p = std::get_if<ProductOfCurves>(&data_)) {
        if (p->g2 < 0 || p->g1 < p->g2)
            throw Error(ErrorKind::domain, "product model needs g1 >= g2 >= 0");
    } else if (const auto* s = std::get_if<RuledSurface>(&data_)) {
        if (s->g < 0) throw Error(ErrorKind::domain, "ruled model needs g >= 0");
        if (s->e > 0)
            throw Error(ErrorKind::domain,
                        "ruled model needs e <= 0 (positive invariants are not covered)");
        if (s->e < -s->g)
            throw Error(ErrorKind::domain, "ruled model needs e >= -g");
    }
}

SurfaceModel SurfaceModel::p2() {
    PicardRankOne r;
    r.l_squared = 1;
    r.kappa = -3;
    r.chi_standard = Rat(1);
    r.chi_paper_compat = Rat(1);
    r.preset = "P2";
    return SurfaceModel(r, "P2");
}

SurfaceModel SurfaceModel::surface_in_p3(long long n) {
    if (n < 4)
        throw Error(ErrorKind::domain, "hypersurface preset needs degree n >= 4");
    PicardRankOne r;
    r.l_squared = n;
    r.kappa = n - 4;
    Rat binom = Rat((n - 1) * (n - 2) * (n - 3), 6);
    r.chi_standard = Rat(1) + binom;
    r.chi_paper_compat = binom;
    r.preset = "P3:" + std::to_string(n);
    return SurfaceModel(r, r.preset);
}

SurfaceModel SurfaceModel::k3(long long n) {
    if (n < 1) throw Error(ErrorKind::domain, "K3 preset needs L^2 >= 1");
    PicardRankOne r;
    r.l_squared = n;
    r.kappa = 0;
    r.chi_standard = Rat(2);
    r.chi_paper_compat = Rat(2);
    r.preset = "K3:" + std::to_string(n);
    return SurfaceModel(r, r.preset);
}

SurfaceModel SurfaceModel::rank_one(long long l_squared, long long kappa, Rat chi) {
    PicardRankOne r;
    r.l_squared = l_squared;
    r.kappa = kappa;
    r.chi_standard = chi;
    r.chi_paper_compat = std::move(chi);
    return SurfaceModel(r);
}

SurfaceModel SurfaceModel::product(long long g1, long long g2) {
    return SurfaceModel(ProductOfCurves{g1, g2},
                        "product:" + std::to_string(g1) + "," + std::to_string(g2));
}

SurfaceModel SurfaceModel::ruled(long long g, long long e) {
    return SurfaceModel(RuledSurface{g, e},
                        "ruled:" + std::to_string(g) + "," + std::to_string(e));
}

namespace {

long long parse_ll(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("trail");
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::config, "invalid " + what + " '" + s + "'");
    }
}

} // namespace

SurfaceModel SurfaceModel::from_preset(const std::string& text) {
    if (text == "P2") return p2();
    auto split2 = [&](std::size_t at) -> std::pair<long long, long long> {
        std::string rest = text.substr(at);
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw Error(ErrorKind::config, "preset '" + text + "' needs two parameters");
        return {parse_ll(rest.substr(0, comma), "preset parameter"),
                parse_ll(rest.substr(comma + 1), "preset parameter")};
    };
    if (text.rfind("P3:", 0) == 0) return surface_in_p3(parse_ll(text.substr(3), "degree"));
    if (text.rfind("K3:", 0) == 0) return k3(parse_ll(text.substr(3), "L^2"));
    if (text.rfind("product:", 0) == 0) {
        auto [g1, g2] = split2(8);
        return product(g1, g2);
    }
    if (text.rfind("ruled:", 0) == 0) {
        auto [g, e] = split2(6);
        return ruled(g, e);
    }
    throw Error(ErrorKind::config, "unknown surface preset '" + text + "'");
}

const PicardRankOne& SurfaceModel::rank_one_data() const {
    if (const auto* r = std::get_if<PicardRankOne>(&data_)) return *r;
    throw Error(ErrorKind::not_rank_one, "operation needs a rank-one surface model");
}

void SurfaceModel::set_chi_mode(ChiMode mode) {
    if (auto* r = std::get_if<PicardRankOne>(&data_)) r->chi_mode = mode;
}

ChiMode SurfaceModel::chi_mode() const {
    if (const auto* r = std::get_if<PicardRankOne>(&data_)) return r->chi_mode;
    return ChiMode::standard;
}

std::string SurfaceModel::describe() const {
    std::ostringstream os;
    if (const auto* r = std::get_if<PicardRankOne>(&data_)) {
        os << (preset_.empty() ? std::string("rank-one surface") : preset_) << " (NS = Z*L, L^2 = "
           << r->l_squared << ", K = " << r->kappa << "*L, chi(O) = " << r->chi().str();
        if (r->chi_mode == ChiMode::paper_compat) os << " [paper-compat]";
        os << ")";
    } else if (const auto* p = std::get_if<ProductOfCurves>(&data_)) {
        os << "product of curves (g1 = " << p->g1 << ", g2 = " << p->g2 << ")";
    } else if (const auto* s = std::get_if<RuledSurface>(&data_)) {
        os << "ruled surface (g = " << s->g << ", e = " << s->e << ")";
    }
    return os.str();
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
    if (x.arity != y.arity)
        throw Error(ErrorKind::arity_mismatch, "divisor arity mismatch");
    return {x.arity, x.c0 - y.c0, x.c1 - y.c1};
}

std::string DivisorClass::str() const {
    if (arity == 1) return std::to_string(c0) + "*L";
    return "(" + std::to_string(c0) + ", " + std::to_string(c1) + ")";
}

namespace {

void check_arity(const SurfaceModel& model, const DivisorClass& d) {
    if (model.arity() != d.arity)
        throw Error(ErrorKind::arity_mismatch,
                    "divisor " + d.str() + " does not match the model's NS rank");
}

} // namespace

long long intersect(const SurfaceModel& model, const DivisorClass& d1, const DivisorClass& d2) {
    check_arity(model, d1);
    check_arity(model, d2);
    if (const auto* r = std::get_if<PicardRankOne>(&model.data())) {
        return d1.d() * d2.d() * r->l_squared;
    }
    if (std::holds_alternative<ProductOfCurves>(model.data())) {
        return d1.a() * d2.b() + d2.a() * d1.b();
    }
    const auto& s = std::get<RuledSurface>(model.data());
    return -s.e * d1.a() * d2.a() + d1.a() * d2.b() + d2.a() * d1.b();
}

DivisorClass canonical_class(const SurfaceModel& model) {
    if (const auto* r = std::get_if<PicardRankOne>(&model.data()))
        return DivisorClass::rank_one(r->kappa);
    if (const auto* p = std::get_if<ProductOfCurves>(&model.data()))
        return DivisorClass::pair(2 * p->g2 - 2, 2 * p->g1 - 2);
    const auto& s = std::get<RuledSurface>(model.data());
    return DivisorClass::pair(-2, 2 * s.g - 2 - s.e);
}

long long d_minus_k_squared(const SurfaceModel& model, const DivisorClass& d) {
    DivisorClass dk = d - canonical_class(model);
    return intersect(model, dk, dk);
}

std::vector<HypothesisResult> hypothesis_check(const SurfaceModel& model, const DivisorClass& d) {
    check_arity(model, d);
    std::vector<HypothesisResult> out;
    auto push = [&](std::string name, std::string formula, Rat lhs, Rat rhs, bool strict) {
        bool pass = strict ? lhs < rhs : lhs <= rhs;
        out.push_back({std::move(name), std::move(formula), std::move(lhs), std::move(rhs),
                       strict, pass});
    };

    if (const auto* r = std::get_if<PicardRankOne>(&model.data())) {
        push("D-K big and nef", "0 < d - kappa", Rat(0), Rat(d.d() - r->kappa), true);
        push("D+K nef", "0 <= d + kappa", Rat(0), Rat(d.d() + r->kappa), false);
        return out;
    }
    if (const auto* p = std::get_if<ProductOfCurves>(&model.data())) {
        long long a_min = std::max(2 * p->g2 - 2, 2 - 2 * p->g2);
        long long b_min = std::max(2 * p->g1 - 2, 2 - 2 * p->g1);
        push("a large enough", "a > max{2g2-2, 2-2g2}", Rat(a_min), Rat(d.a()), true);
        push("b large enough", "b > max{2g1-2, 2-2g1}", Rat(b_min), Rat(d.b()), true);
        return out;
    }
    const auto& s = std::get<RuledSurface>(model.data());
    push("a >= 2", "2 <= a", Rat(2), Rat(d.a()), false);
    push("b above the canonical slope", "b > 2g-2+ae/2",
         Rat(2 * s.g - 2) + Rat(d.a() * s.e, 2), Rat(d.b()), true);
    if (s.g == 0) push("b >= 2 on a rational base", "2 <= b", Rat(2), Rat(d.b()), false);
    return out;
}

Rat chi_structure_sheaf(const SurfaceModel& model) { return model.rank_one_data().chi(); }

Rat chi_for_dimension(const SurfaceModel& model) {
    if (const auto* r = std::get_if<PicardRankOne>(&model.data())) return r->chi();
    if (const auto* p = std::get_if<ProductOfCurves>(&model.data()))
        return Rat(1 - p->g1) * Rat(1 - p->g2);
    const auto& s = std::get<RuledSurface>(model.data());
    return Rat(1 - s.g);
}

std::pair<Rat, Rat> positivity_coordinates(const SurfaceModel& model, const DivisorClass& d) {
    check_arity(model, d);
    if (const auto* p = std::get_if<ProductOfCurves>(&model.data()))
        return {Rat(d.a() - 2 * p->g2 + 2), Rat(d.b() - 2 * p->g1 + 2)};
    if (const auto* s = std::get_if<RuledSurface>(&model.data()))
        return {Rat(d.a() + 2), Rat(d.b() + 2 - 2 * s->g) - Rat(d.a() * s->e, 2)};
    throw Error(ErrorKind::not_rank_one,
                "positivity coordinates are defined for product and ruled models");
}

long long expected_dimension(const SurfaceModel& model, const DivisorClass& d,
                             const std::vector<std::pair<SingularityType, std::uint64_t>>& types) {
    check_arity(model, d);
    Rat chi = chi_for_dimension(model);
    long long d2 = intersect(model, d, d);
    long long dk = intersect(model, d, canonical_class(model));
    Rat dim = chi + Rat(d2 - dk, 2) - Rat(1);
    for (const auto& [t, count] : types) {
        if (!t.deg_x_star)
            throw Error(ErrorKind::missing_invariant,
                        "deg X* of '" + t.name + "' is needed for the expected dimension");
        dim -= Rat(static_cast<long>(count)) * Rat(static_cast<long>(*t.deg_x_star));
    }
    if (!dim.is_integer())
        throw Error(ErrorKind::invariant_violation,
                    "expected dimension is not an integer; the model data is inconsistent");
    return static_cast<long long>(dim.floor().get_si());
}

} // namespace esf
