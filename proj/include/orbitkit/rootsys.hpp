#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitkit/exactlin.hpp"

namespace orbitkit {

enum class Family { A, B, C, D, E, F, G };

struct CartanType {
    Family family = Family::A;
    int rank = 1;

    // Accepts "A3", "e8", "F4"; rejects ranks outside the classification.
    static CartanType parse(const std::string& text);
    std::string name() const;
    friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

bool valid_cartan_type(Family f, int rank);
char family_letter(Family f);

using RootCoords = std::vector<int>;  // coefficients on the simple roots

struct Root {
    RootCoords coords;
    int height = 0;
    bool is_long = true;
};

// Simple roots follow Bourbaki numbering. The inner product is scaled so
// long roots have squared length 2.
class RootSystem {
public:
    explicit RootSystem(CartanType type);

    const CartanType& type() const { return type_; }
    int rank() const { return type_.rank; }

    // gram()(i,j) = (alpha_i, alpha_j)
    const RationalMatrix& gram() const { return gram_; }
    // cartan(i,j) = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
    int cartan(int i, int j) const { return cartan_[i][j]; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

    // Positive roots by height; within a height, coordinates in descending
    // lexicographic order (so alpha_1 precedes alpha_2). roots() is the
    // positive list followed by the negatives in the same order.
    const std::vector<Root>& positive_roots() const { return positive_; }
    const std::vector<Root>& roots() const { return all_; }
    std::size_t num_positive() const { return positive_.size(); }
    std::size_t dimension() const { return static_cast<std::size_t>(rank()) + all_.size(); }

    std::optional<std::size_t> index_of(const RootCoords& c) const;
    std::size_t negative_index(std::size_t root) const;
    std::size_t simple_root_index(int i) const;  // index in roots() of alpha_i
    bool is_root(const RootCoords& c) const { return index_of(c).has_value(); }

    std::size_t highest_root() const { return positive_.size() - 1; }

    Rational inner(const RootCoords& a, const RootCoords& b) const;
    Rational norm2(const RootCoords& a) const { return inner(a, a); }
    // <a, b^vee> = 2 (a, b) / (b, b); integral when a, b are roots.
    int pairing(const RootCoords& a, const RootCoords& b) const;

    // 2 r / (r, r), in simple-root coordinates.
    Vector coroot(const RootCoords& r) const;
    // Coefficients of r^vee on the simple coroots alpha_i^vee.
    std::vector<int> coroot_in_simple_coroots(const RootCoords& r) const;

    // p and q of the alpha_i-string through beta: beta - p alpha_i ... beta + q alpha_i.
    std::pair<int, int> string_bounds(const RootCoords& beta, int i) const;
    RootCoords reflect(const RootCoords& beta, int i) const;

    int dual_coxeter_number() const;
    // 1 + <rho, beta^vee> for the highest root beta.
    int dual_coxeter_via_rho() const;
    // 1 + (N + 1) / 2 where N counts positive roots not orthogonal to beta.
    int dual_coxeter_via_nonorthogonal() const;

private:
    CartanType type_;
    RationalMatrix gram_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> positive_;
    std::vector<Root> all_;
    std::map<RootCoords, std::size_t> index_;
};

RationalMatrix simple_root_gram(CartanType type);

// Positive roots by closing the simple roots under simple reflections.
// Independent of the string-based enumeration; used as a cross-check.
std::vector<RootCoords> positive_roots_by_reflection(const RootSystem& rs);

std::string format_root(const RootCoords& c);

}  // namespace orbitkit
