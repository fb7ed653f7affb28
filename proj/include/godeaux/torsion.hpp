#pragma once

#include "godeaux/picard.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace godeaux {

struct BranchComponent {
    std::string name;
    DivClass cls;
};

struct KernelElement {
    std::vector<std::string> subset;
    DivClass sum;
    DivClass half;  // sum = 2 half
};

struct BeauvilleResult {
    int kernel_rank = 0;    // dimension of ker(phi) over F_2
    int quotient_rank = 0;  // after dividing out the full sum e
    std::vector<KernelElement> representatives;  // a basis of the quotient
};

class TorsionInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::optional<DivClass> half_class(const DivClass& c);

// Kernel of (Z/2)^I -> Pic(Y) (x) Z/2 modulo e.  Of the two subsets S and
// S + e naming the same quotient element, the one whose half class has the
// lower plane degree is reported.
BeauvilleResult beauville_kernel(const std::vector<BranchComponent>& comps, const DivClass& B);

// Which group of order at most five (Z/2 + Z/2 excluded) has the given F_2
// rank and Miyaoka count #{T : T != -T} / 2.
std::string miyaoka_conclusion(int two_rank, int base_points);

struct GroupRow {
    std::string name;
    int two_rank;
    int miyaoka;
};
std::vector<GroupRow> small_torsion_table();

// One member of a pencil: the plane part as a list of irreducible factors and
// the exceptional curves it contains.
struct PencilMember {
    std::string name;
    std::vector<std::pair<std::string, Form<RationalField>>> factors;
    std::map<std::string, int> exceptional;
    DivClass cls;
};

struct PencilCheck {
    bool first_class_matches = false;
    bool second_class_matches = false;
    std::vector<std::string> shared_factors;     // plane factors dividing the other member
    std::vector<std::string> shared_exceptional;
    bool no_fixed_part() const { return shared_factors.empty() && shared_exceptional.empty(); }
};

// Factors must be irreducible; then the plane parts are coprime iff no factor
// of one divides the product of the other's factors.
PencilCheck bicanonical_pencil_check(const PencilMember& a, const PencilMember& b, const DivClass& target);

// Exact solve of
//   (Q1 Q2)^2 - 4 t Q1 Q2 C2 l~ + 4 T (C2 l~)^2 - u Q1 Q2 Q^2 + 4 v C1 C2 l^2 = 0
// as a linear system in (t, T, u, v), then T = t^2 is checked.
struct QuadricRelation {
    bool solvable = false;
    bool unique = false;
    bool t_squared = false;
    Rational t, T, u, v;
    int equations = 0;
    std::string diagnostic;
    bool holds() const { return solvable && unique && t_squared; }
};

struct OortPetersForms {
    Form<RationalField> Q1, Q2, C1, C2, Q, ell, ell_tilde;
};

QuadricRelation solve_quadric_relation(const OortPetersForms& f);

}  // namespace godeaux
