#include "orbitkit/subalgebra_types.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <regex>

#include "orbitkit/catalog.hpp"
#include "orbitkit/errors.hpp"

namespace orbitkit {

namespace {

int family_order(Family f) { return static_cast<int>(f); }

// Folds low-rank coincidences; appends to out and returns extra center dims.
int fold(CartanType t, std::vector<CartanType>& out) {
    switch (t.family) {
    case Family::B:
    case Family::C:
        if (t.rank == 1) t = {Family::A, 1};
        else if (t.rank == 2) t = {Family::B, 2};
        break;
    case Family::D:
        if (t.rank == 1) return 1;
        if (t.rank == 2) {
            out.push_back({Family::A, 1});
            out.push_back({Family::A, 1});
            return 0;
        }
        if (t.rank == 3) t = {Family::A, 3};
        break;
    default:
        break;
    }
    if (t.rank <= 0) return 0;
    out.push_back(t);
    return 0;
}

std::size_t simple_dim(const CartanType& t) {
    const std::size_t n = t.rank;
    switch (t.family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
    }
    return 0;
}

// so(n, C)
void orthogonal(int n, std::vector<CartanType>& s, int& center) {
    if (n <= 1) return;
    if (n == 2) {
        ++center;
        return;
    }
    if (n % 2) center += fold({Family::B, (n - 1) / 2}, s);
    else center += fold({Family::D, n / 2}, s);
}

}  // namespace

ReductiveType make_reductive(std::vector<CartanType> simple, int center_dim) {
    ReductiveType r;
    r.center_dim = center_dim;
    for (const auto& t : simple) r.center_dim += fold(t, r.simple);
    std::sort(r.simple.begin(), r.simple.end(), [](const CartanType& a, const CartanType& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        return family_order(a.family) < family_order(b.family);
    });
    return r;
}

std::string ReductiveType::name() const {
    std::string s;
    for (const auto& t : simple) s += (s.empty() ? "" : "+") + t.name();
    if (center_dim > 0) s += (s.empty() ? "" : "+") + std::string("T") + std::to_string(center_dim);
    return s.empty() ? "0" : s;
}

std::size_t ReductiveType::dimension() const {
    std::size_t d = center_dim;
    for (const auto& t : simple) d += simple_dim(t);
    return d;
}

ReductiveType parse_reductive_type(const std::string& text) {
    std::vector<CartanType> simple;
    int center = 0;
    std::size_t start = 0;
    if (text == "0") return {};
    while (start <= text.size()) {
        std::size_t plus = text.find('+', start);
        std::string part = text.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        if (!part.empty() && (part[0] == 'T' || part[0] == 't')) {
            try {
                center += std::stoi(part.substr(1));
            } catch (const std::exception&) {
                throw ParseError("bad torus summand: " + part);
            }
        } else {
            // B1, C1, D2, D3 are allowed here even though CartanType rejects them
            static const std::regex low(R"(^([BbCcDd])([123])$)");
            std::smatch m;
            if (std::regex_match(part, m, low)) {
                char f = static_cast<char>(std::toupper(m[1].str()[0]));
                simple.push_back({f == 'B' ? Family::B : f == 'C' ? Family::C : Family::D, std::stoi(m[2])});
            } else {
                simple.push_back(CartanType::parse(part));
            }
        }
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return make_reductive(simple, center);
}

ReductiveType complexified_type(const std::string& name) {
    std::vector<CartanType> simple;
    int center = 0;
    std::string s = canonical_form_name(name);
    std::size_t depth = 0, start = 0;
    std::vector<std::string> parts;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || (s[i] == '+' && depth == 0)) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        } else if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            --depth;
        }
    }
    static const std::regex two(R"(^(sl|su|so|sp|u|gl)\((\d+),(\d+|r|h|c)\)$)");
    static const std::regex one(R"(^(sl|su|so|sp|u|gl|spin|su\*|so\*)[\(_\{]?(\d+)[\)\}]?$)");
    static const std::regex exc(R"(^([gfe])(\d)(\((-?\d+)\))?$)");
    static const std::regex ctype(R"(^([abcdefgt])(\d+)$)");
    for (const auto& p : parts) {
        std::smatch m;
        if (p == "r" || p == "c" || p == "t" || p == "0" || p.empty()) {
            if (p != "0" && !p.empty()) ++center;
            continue;
        }
        if (std::regex_match(p, m, two)) {
            const std::string f = m[1];
            const int a = std::stoi(m[2]);
            const std::string b = m[3];
            if (b == "c") throw ParseError("complex groups viewed as real algebras are not supported: " + p);
            if (b == "r" || b == "h") {
                const int n = b == "h" ? 2 * a : a;
                if (f == "sl") simple.push_back({Family::A, n - 1});
                else if (f == "gl") {
                    simple.push_back({Family::A, n - 1});
                    ++center;
                } else if (f == "sp" && b == "r") simple.push_back({Family::C, a});
                else throw ParseError("unknown real form: " + p);
                continue;
            }
            const int q = std::stoi(b), n = a + q;
            if (f == "su") simple.push_back({Family::A, n - 1});
            else if (f == "u") {
                simple.push_back({Family::A, n - 1});
                ++center;
            } else if (f == "so") orthogonal(n, simple, center);
            else if (f == "sp") simple.push_back({Family::C, n});
            else throw ParseError("unknown real form: " + p);
            continue;
        }
        if (std::regex_match(p, m, one)) {
            const std::string f = m[1];
            const int n = std::stoi(m[2]);
            if (n == 1 && (f == "sl" || f == "su" || f == "so")) continue;  // zero algebra
            if (f == "sl" || f == "su") simple.push_back({Family::A, n - 1});
            else if (f == "gl" || f == "u") {
                simple.push_back({Family::A, n - 1});
                ++center;
            } else if (f == "so" || f == "spin") orthogonal(n, simple, center);
            else if (f == "sp") simple.push_back({Family::C, n});
            else if (f == "su*") {
                if (n % 2) throw ParseError("su*(n) needs n even: " + p);
                simple.push_back({Family::A, n - 1});
            } else if (f == "so*") {
                if (n % 2) throw ParseError("so*(n) needs n even: " + p);
                center += fold({Family::D, n / 2}, simple);
                continue;
            }
            continue;
        }
        if (std::regex_match(p, m, exc)) {
            const char f = m[1].str()[0];
            const int r = std::stoi(m[2]);
            CartanType t{f == 'g' ? Family::G : f == 'f' ? Family::F : Family::E, r};
            if (!valid_cartan_type(t.family, t.rank)) throw ParseError("unknown exceptional algebra: " + p);
            simple.push_back(t);
            continue;
        }
        if (std::regex_match(p, m, ctype)) {
            std::string up = p;
            up[0] = static_cast<char>(std::toupper(up[0]));
            auto r = parse_reductive_type(up);
            simple.insert(simple.end(), r.simple.begin(), r.simple.end());
            center += r.center_dim;
            continue;
        }
        throw ParseError("cannot parse algebra name: " + p);
    }
    for (const auto& t : simple)
        if (t.rank < 1) throw ParseError("empty simple factor in " + name);
    return make_reductive(simple, center);
}

ReductiveType identify_from_roots(const std::vector<Vector>& roots, std::size_t cartan_dim) {
    const std::size_t n = roots.size();
    std::map<Vector, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[roots[i]] = i;
    auto is_root = [&](const Vector& v) { return index.count(v) > 0; };
    auto add = [](const Vector& a, const Vector& b, int c) {
        Vector s = a;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += c * b[i];
        return s;
    };
    for (const auto& r : roots)
        if (!is_root(scaled(r, -1))) throw InternalError("root set is not closed under negation");

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (is_root(add(roots[i], roots[j], 1)) || is_root(add(roots[i], roots[j], -1)) || roots[j] == scaled(roots[i], -1))
                parent[find(i)] = find(j);
    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t i = 0; i < n; ++i) comps[find(i)].push_back(i);

    std::vector<CartanType> simple;
    std::size_t total_rank = 0;
    for (const auto& [root, members] : comps) {
        std::vector<Vector> vs;
        for (auto i : members) vs.push_back(roots[i]);
        const int r = static_cast<int>(rank(RationalMatrix::from_rows(vs, cartan_dim)));
        total_rank += r;
        const std::size_t N = members.size();
        // alpha is short when some <beta, alpha^vee> = p - q reaches 2 or 3
        std::size_t shorts = 0;
        for (auto a : members) {
            bool is_short = false;
            for (auto b : members) {
                if (b == a || roots[b] == scaled(roots[a], -1)) continue;
                int p = 0, q = 0;
                while (is_root(add(roots[b], roots[a], -(p + 1)))) ++p;
                while (is_root(add(roots[b], roots[a], q + 1))) ++q;
                if (std::abs(p - q) >= 2) {
                    is_short = true;
                    break;
                }
            }
            shorts += is_short;
        }
        const std::size_t R = r;
        CartanType t;
        if (N == R * (R + 1)) t = {Family::A, r};
        else if (R == 2 && N == 12) t = {Family::G, 2};
        else if (R == 4 && N == 48) t = {Family::F, 4};
        else if (R == 6 && N == 72 && shorts == 0) t = {Family::E, 6};
        else if (R == 7 && N == 126) t = {Family::E, 7};
        else if (R == 8 && N == 240) t = {Family::E, 8};
        else if (N == 2 * R * R) t = {shorts == 2 * R ? Family::B : Family::C, r};
        else if (R >= 4 && N == 2 * R * (R - 1)) t = {Family::D, r};
        else throw InternalError("unrecognised root system component: rank " + std::to_string(r) + ", " + std::to_string(N) + " roots");
        simple.push_back(t);
    }
    if (total_rank > cartan_dim) throw InternalError("roots span more than the Cartan subalgebra");
    return make_reductive(simple, static_cast<int>(cartan_dim - total_rank));
}

ReductiveType k_complex_type(const RealForm& rf) {
    const auto& ch = rf.complex();
    const std::size_t n = ch.dim();
    const int r = ch.rank();
    std::vector<Vector> t;
    for (int j = 0; j < r; ++j) {
        const int pj = rf.pi_node(j);
        if (pj < j) continue;
        Vector h(n);
        h[j] += 1;
        h[pj] += 1;
        t.push_back(h);
    }
    auto ws = joint_eigenspaces(ch.algebra(), t, rf.k_complex());
    std::vector<Vector> roots;
    for (const auto& w : ws) {
        if (is_zero(w.weight)) {
            if (w.space.dim() != t.size()) throw InternalError(rf.id() + ": h^theta is not a Cartan subalgebra of k_C");
            continue;
        }
        if (w.space.dim() != 1) throw InternalError(rf.id() + ": k_C root space is not one-dimensional");
        roots.push_back(w.weight);
    }
    auto type = identify_from_roots(roots, t.size());
    if (type.dimension() != rf.dim_k()) throw InternalError(rf.id() + ": identified k_C type has the wrong dimension");
    return type;
}

}  // namespace orbitkit
