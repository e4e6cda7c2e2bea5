#include "lap/param.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lap {

Label chi_label(const std::string& name) { return Label{name, 1, Duality::Orthogonal, ""}; }

JordanBlock JordanBlock::from_ab(const std::string& rho, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("a and b must be positive");
    JordanBlock j;
    j.rho = rho;
    j.A = HalfInt::from_twice(a + b - 2);
    j.B = HalfInt::from_twice(a >= b ? a - b : b - a);
    j.zeta = a >= b ? 1 : -1;
    return j;
}

const Label& ArthurParameter::label(const std::string& name) const {
    for (const auto& l : labels)
        if (l.name == name) return l;
    throw ValidationError("labels", "unknown label '" + name + "'");
}

bool ArthurParameter::has_label(const std::string& name) const {
    return std::any_of(labels.begin(), labels.end(), [&](const Label& l) { return l.name == name; });
}

int ArthurParameter::dimension() const {
    int n = 0;
    for (const auto& s : summands) n += label(s.rho).dim * s.a * s.b;
    return n;
}

ArthurParameter ArthurParameter::canonical() const {
    ArthurParameter c = *this;
    std::sort(c.summands.begin(), c.summands.end());
    std::sort(c.labels.begin(), c.labels.end(), [](const Label& x, const Label& y) { return x.name < y.name; });
    return c;
}

bool ArthurParameter::same_as(const ArthurParameter& o) const {
    auto x = canonical(), y = o.canonical();
    return x.group == y.group && x.summands == y.summands;
}

std::string ArthurParameter::summary() const {
    auto c = canonical();
    std::ostringstream os;
    for (size_t i = 0; i < c.summands.size(); ++i) {
        const auto& s = c.summands[i];
        if (i) os << " + ";
        os << s.rho;
        if (!s.x.is_zero()) os << "|.|^" << s.x.str();
        os << "xS" << s.a << "xS" << s.b;
    }
    if (c.summands.empty()) os << "0";
    return os.str();
}

static int type_sign(Duality d) { return d == Duality::Symplectic ? -1 : 1; }

Duality summand_type(const Label& rho, int a, int b) {
    if (rho.duality == Duality::NotSelfDual) return Duality::NotSelfDual;
    int s = type_sign(rho.duality) * (a % 2 ? 1 : -1) * (b % 2 ? 1 : -1);
    return s > 0 ? Duality::Orthogonal : Duality::Symplectic;
}

bool is_self_dual_summand(const ArthurParameter& p, const Summand& s) {
    const Label& l = p.label(s.rho);
    return s.x.is_zero() && l.duality != Duality::NotSelfDual && l.partner() == l.name;
}

bool is_good_parity_summand(const ArthurParameter& p, const Summand& s) {
    if (!is_self_dual_summand(p, s)) return false;
    return summand_type(p.label(s.rho), s.a, s.b) == p.group.standard_type();
}

bool is_good_parity(const ArthurParameter& p) {
    return std::all_of(p.summands.begin(), p.summands.end(),
                       [&](const Summand& s) { return is_good_parity_summand(p, s); });
}

static Summand dual_partner(const ArthurParameter& p, const Summand& s) {
    return Summand{p.label(s.rho).partner(), -s.x, s.a, s.b};
}

Decomposition decompose(const ArthurParameter& p) {
    Decomposition d;
    std::multiset<Summand> pool;
    for (const auto& s : p.summands) {
        if (is_good_parity_summand(p, s))
            d.gp.push_back(s);
        else
            pool.insert(s);
    }
    while (!pool.empty()) {
        Summand s = *pool.begin();
        pool.erase(pool.begin());
        Summand partner = dual_partner(p, s);
        auto it = pool.find(partner);
        if (it == pool.end())
            throw UnpairedSummand("summand " + s.rho + " S" + std::to_string(s.a) + " S" + std::to_string(s.b) +
                                  " has no dual partner");
        pool.erase(it);
        // Canonical choice: the smaller of the pair, which pool order already gives.
        if (s.x > Rational(0) || partner.x > Rational(0))
            d.nu_pos.push_back(s.x > Rational(0) ? s : partner);
        else
            d.np.push_back(s);
    }
    std::sort(d.gp.begin(), d.gp.end());
    std::sort(d.np.begin(), d.np.end());
    std::sort(d.nu_pos.begin(), d.nu_pos.end());
    return d;
}

std::vector<Summand> reassemble(const ArthurParameter& p, const Decomposition& d) {
    std::vector<Summand> out = d.gp;
    for (const auto& s : d.np) {
        out.push_back(s);
        out.push_back(dual_partner(p, s));
    }
    for (const auto& s : d.nu_pos) {
        out.push_back(s);
        out.push_back(dual_partner(p, s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ArthurParameter dual(const ArthurParameter& p) {
    ArthurParameter q = p;
    for (auto& s : q.summands) std::swap(s.a, s.b);
    return q;
}

std::vector<std::vector<Rational>> multisegment_matrix(const Summand& s) {
    std::vector<std::vector<Rational>> m(s.a, std::vector<Rational>(s.b));
    Rational top_left = Rational(s.a - s.b, 2) + s.x;
    for (int r = 0; r < s.a; ++r)
        for (int c = 0; c < s.b; ++c) m[r][c] = top_left - Rational(r) + Rational(c);
    return m;
}

void validate(const ArthurParameter& p) {
    std::set<std::string> names;
    for (size_t i = 0; i < p.labels.size(); ++i) {
        const auto& l = p.labels[i];
        std::string f = "labels[" + std::to_string(i) + "]";
        if (l.name.empty()) throw ValidationError(f + ".name", "empty label name");
        if (!names.insert(l.name).second) throw ValidationError(f + ".name", "duplicate label '" + l.name + "'");
        if (l.dim < 1) throw ValidationError(f + ".dim", "dimension must be positive");
    }
    for (const auto& l : p.labels) {
        if (l.dual_name.empty()) continue;
        if (!names.count(l.dual_name))
            throw ValidationError("labels", "dual label '" + l.dual_name + "' of '" + l.name + "' is missing");
        if (p.label(l.dual_name).partner() != l.name)
            throw ValidationError("labels", "dual labels '" + l.name + "' and '" + l.dual_name + "' do not pair");
    }
    if (p.group.kind == GroupKind::Sp && p.group.dual_dim % 2 == 0)
        throw ValidationError("group.dual_dim", "symplectic dual dimension must be odd");
    if (p.group.kind == GroupKind::O && p.group.dual_dim % 2 != 0)
        throw ValidationError("group.dual_dim", "even orthogonal dual dimension must be even");
    if (p.group.kind == GroupKind::O && p.group.epsilon != 1 && p.group.epsilon != -1)
        throw ValidationError("group.epsilon", "tower sign must be +1 or -1");
    for (size_t i = 0; i < p.summands.size(); ++i) {
        const auto& s = p.summands[i];
        std::string f = "summands[" + std::to_string(i) + "]";
        if (!names.count(s.rho)) throw ValidationError(f + ".rho", "unknown label '" + s.rho + "'");
        if (s.a < 1) throw ValidationError(f + ".a", "must be a positive integer");
        if (s.b < 1) throw ValidationError(f + ".b", "must be a positive integer");
        if (!(Rational(-1, 2) < s.x && s.x < Rational(1, 2))) throw ValidationError(f + ".x", "|x| must be below 1/2");
    }
    int dim = p.dimension();
    if (dim != p.group.dual_dim)
        throw ValidationError("summands", "dimension condition fails: sum of dim(rho)*a*b is " + std::to_string(dim) +
                                              ", expected " + std::to_string(p.group.dual_dim));
    try {
        decompose(p);
    } catch (const UnpairedSummand& e) {
        throw ValidationError("summands", e.what());
    }
}

std::map<std::string, std::vector<std::pair<int, JordanBlock>>> gp_blocks(const ArthurParameter& p) {
    std::map<std::string, std::vector<std::pair<int, JordanBlock>>> out;
    for (size_t i = 0; i < p.summands.size(); ++i) {
        const auto& s = p.summands[i];
        if (!is_good_parity_summand(p, s)) continue;
        out[s.rho].push_back({static_cast<int>(i), JordanBlock::from_ab(s.rho, s.a, s.b)});
    }
    return out;
}

std::string duality_name(Duality d) {
    switch (d) {
        case Duality::Orthogonal: return "Orthogonal";
        case Duality::Symplectic: return "Symplectic";
        default: return "NotSelfDual";
    }
}

Duality parse_duality(const std::string& s) {
    if (s == "Orthogonal") return Duality::Orthogonal;
    if (s == "Symplectic") return Duality::Symplectic;
    if (s == "NotSelfDual") return Duality::NotSelfDual;
    throw std::invalid_argument("unknown duality '" + s + "'");
}

}  // namespace lap
