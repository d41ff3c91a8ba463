#pragma once

#include <string>
#include <vector>

#include "orbitkit/realform.hpp"

namespace orbitkit {

// Isomorphism type of a complex reductive Lie algebra: simple factors plus
// the dimension of the center. Low-rank coincidences are folded so equal
// algebras get equal names: B1 = C1 = A1, C2 -> B2, D2 = A1+A1, D3 -> A3.
struct ReductiveType {
    std::vector<CartanType> simple;  // sorted, largest rank first
    int center_dim = 0;

    std::string name() const;  // "D5+T1", "A1+A1", "0"
    std::size_t dimension() const;
    bool semisimple() const { return center_dim == 0; }
    bool simple_type() const { return center_dim == 0 && simple.size() == 1; }
    friend bool operator==(const ReductiveType&, const ReductiveType&) = default;
};

ReductiveType make_reductive(std::vector<CartanType> simple, int center_dim);

// "A2+T1", "B4", "C2+A1"; the inverse of name().
ReductiveType parse_reductive_type(const std::string& text);

// Complexification of a real reductive algebra given by name, e.g.
// "sp(1,R)+sp(2,R)" -> C2+A1, "so(5,4)" -> B4, "u(2)" -> A1+T1, "f4(-20)" -> F4.
// Complex names such as "so_8", "gl_3", "spin_7" are accepted too.
ReductiveType complexified_type(const std::string& name);

// Type of a reductive algebra from its roots with respect to a Cartan
// subalgebra of dimension cartan_dim. Roots are weight vectors.
ReductiveType identify_from_roots(const std::vector<Vector>& roots, std::size_t cartan_dim);

// Type of k_C, read off from the roots of k_C with respect to h^theta.
ReductiveType k_complex_type(const RealForm& rf);

}  // namespace orbitkit
