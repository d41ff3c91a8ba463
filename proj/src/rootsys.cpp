#include "orbitkit/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace orbitkit {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

bool valid_cartan_type(Family f, int n) {
    switch (f) {
        case Family::A: return n >= 1 && n <= 64;
        case Family::B: return n >= 2 && n <= 64;
        case Family::C: return n >= 2 && n <= 64;
        case Family::D: return n >= 3 && n <= 64;
        case Family::E: return n >= 6 && n <= 8;
        case Family::F: return n == 4;
        case Family::G: return n == 2;
    }
    return false;
}

CartanType CartanType::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.size() < 2) throw ParseError("bad Cartan type: '" + text + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
    auto pos = std::string("ABCDEFG").find(letter);
    if (pos == std::string::npos) throw ParseError("bad Cartan type: '" + text + "'");
    const std::string digits = t.substr(1);
    if (digits.empty() || digits.size() > 3 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("bad Cartan type: '" + text + "'");
    CartanType ct{static_cast<Family>(pos), std::stoi(digits)};
    if (!valid_cartan_type(ct.family, ct.rank)) throw ParseError("no simple Lie algebra of type " + text);
    return ct;
}

std::string CartanType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

RationalMatrix simple_root_gram(CartanType type) {
    if (!valid_cartan_type(type.family, type.rank)) throw ParseError("invalid Cartan type " + type.name());
    const int n = type.rank;
    RationalMatrix g(n, n);
    auto link = [&](int i, int j, Rational v) {  // 1-based
        g(i - 1, j - 1) = v;
        g(j - 1, i - 1) = v;
    };
    for (int i = 0; i < n; ++i) g(i, i) = 2;
    switch (type.family) {
        case Family::A:
            for (int i = 1; i < n; ++i) link(i, i + 1, -1);
            break;
        case Family::B:
            for (int i = 1; i < n; ++i) link(i, i + 1, -1);
            g(n - 1, n - 1) = 1;
            break;
        case Family::C:
            for (int i = 1; i < n - 1; ++i) link(i, i + 1, Rational(-1, 2));
            link(n - 1, n, -1);
            for (int i = 0; i < n - 1; ++i) g(i, i) = 1;
            break;
        case Family::D:
            for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
            link(n - 2, n, -1);
            break;
        case Family::E:
            link(1, 3, -1);
            link(2, 4, -1);
            for (int i = 3; i < n; ++i) link(i, i + 1, -1);
            break;
        case Family::F:
            link(1, 2, -1);
            link(2, 3, -1);
            link(3, 4, Rational(-1, 2));
            g(2, 2) = 1;
            g(3, 3) = 1;
            break;
        case Family::G:
            g(0, 0) = Rational(2, 3);
            link(1, 2, -1);
            break;
    }
    return g;
}

RootSystem::RootSystem(CartanType type) : type_(type), gram_(simple_root_gram(type)) {
    const int n = type.rank;
    cartan_.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational v = 2 * gram_(i, j) / gram_(j, j);
            if (v.get_den() != 1) throw InternalError("non-integral Cartan entry");
            cartan_[i][j] = static_cast<int>(v.get_num().get_si());
        }

    // Grow by height: beta + alpha_i is a root iff q > 0, with q = p - <beta, alpha_i^vee>.
    std::set<RootCoords> known;
    std::vector<RootCoords> layer;
    for (int i = 0; i < n; ++i) {
        RootCoords c(n, 0);
        c[i] = 1;
        layer.push_back(c);
        known.insert(c);
    }
    std::vector<RootCoords> ordered;
    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end(), std::greater<>());
        std::set<RootCoords> next;
        for (const auto& beta : layer) {
            ordered.push_back(beta);
            for (int i = 0; i < n; ++i) {
                int p = 0;
                RootCoords down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.count(down)) break;
                    ++p;
                }
                RootCoords ai(n, 0);
                ai[i] = 1;
                int q = p - pairing(beta, ai);
                if (q > 0) {
                    RootCoords up = beta;
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        for (const auto& r : next) known.insert(r);
        layer.assign(next.begin(), next.end());
    }

    for (const auto& c : ordered) {
        Root r;
        r.coords = c;
        for (int x : c) r.height += x;
        r.is_long = norm2(c) == 2;
        positive_.push_back(r);
    }
    all_ = positive_;
    for (const auto& r : positive_) {
        Root neg = r;
        for (auto& x : neg.coords) x = -x;
        neg.height = -r.height;
        all_.push_back(neg);
    }
    for (std::size_t k = 0; k < all_.size(); ++k) index_[all_[k].coords] = k;
}

std::optional<std::size_t> RootSystem::index_of(const RootCoords& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t RootSystem::negative_index(std::size_t root) const {
    const std::size_t np = positive_.size();
    return root < np ? root + np : root - np;
}

std::size_t RootSystem::simple_root_index(int i) const {
    RootCoords c(rank(), 0);
    c.at(i) = 1;
    return *index_of(c);
}

Rational RootSystem::inner(const RootCoords& a, const RootCoords& b) const {
    Rational s;
    const int n = rank();
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            s += gram_(i, j) * a[i] * b[j];
        }
    }
    return s;
}

int RootSystem::pairing(const RootCoords& a, const RootCoords& b) const {
    Rational v = 2 * inner(a, b) / norm2(b);
    if (v.get_den() != 1) throw InternalError("non-integral pairing");
    return static_cast<int>(v.get_num().get_si());
}

Vector RootSystem::coroot(const RootCoords& r) const {
    Rational f = 2 / norm2(r);
    Vector v(rank());
    for (int i = 0; i < rank(); ++i) v[i] = f * r[i];
    return v;
}

std::vector<int> RootSystem::coroot_in_simple_coroots(const RootCoords& r) const {
    // r^vee = sum_i r_i (alpha_i, alpha_i) / (r, r) alpha_i^vee
    const Rational nr = norm2(r);
    std::vector<int> out(rank());
    for (int i = 0; i < rank(); ++i) {
        Rational c = gram_(i, i) * r[i] / nr;
        if (c.get_den() != 1) throw InternalError("non-integral coroot coefficient");
        out[i] = static_cast<int>(c.get_num().get_si());
    }
    return out;
}

std::pair<int, int> RootSystem::string_bounds(const RootCoords& beta, int i) const {
    int p = 0, q = 0;
    RootCoords c = beta;
    while (true) {
        c[i] -= 1;
        if (!is_root(c)) break;
        ++p;
    }
    c = beta;
    while (true) {
        c[i] += 1;
        if (!is_root(c)) break;
        ++q;
    }
    return {p, q};
}

RootCoords RootSystem::reflect(const RootCoords& beta, int i) const {
    RootCoords ai(rank(), 0);
    ai[i] = 1;
    RootCoords out = beta;
    out[i] -= pairing(beta, ai);
    return out;
}

int RootSystem::dual_coxeter_via_rho() const {
    const auto& theta = positive_.back().coords;
    int twice = 0;  // 2 <rho, theta^vee> = sum over positive roots
    for (const auto& r : positive_) twice += pairing(r.coords, theta);
    return 1 + twice / 2;
}

int RootSystem::dual_coxeter_via_nonorthogonal() const {
    const auto& theta = positive_.back().coords;
    int count = 0;
    for (const auto& r : positive_)
        if (inner(r.coords, theta) != 0) ++count;
    return 1 + (count + 1) / 2;
}

int RootSystem::dual_coxeter_number() const {
    const int a = dual_coxeter_via_rho();
    const int b = dual_coxeter_via_nonorthogonal();
    if (a != b) throw InternalError("dual Coxeter number: formulas disagree for " + type_.name());
    return a;
}

std::vector<RootCoords> positive_roots_by_reflection(const RootSystem& rs) {
    const int n = rs.rank();
    std::set<RootCoords> all;
    std::vector<RootCoords> frontier;
    for (int i = 0; i < n; ++i) {
        RootCoords c(n, 0);
        c[i] = 1;
        all.insert(c);
        frontier.push_back(c);
    }
    while (!frontier.empty()) {
        std::vector<RootCoords> next;
        for (const auto& r : frontier)
            for (int i = 0; i < n; ++i) {
                auto s = rs.reflect(r, i);
                if (all.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    std::vector<RootCoords> pos;
    for (const auto& r : all)
        if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) pos.push_back(r);
    return pos;
}

std::string format_root(const RootCoords& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

}  // namespace orbitkit
