#pragma once

// Z-graded polynomial algebras and finitely presented graded modules over
// them: graded Nakayama with an explicit Cayley-Hamilton certificate,
// lifting of maps from the reduction mod the irrelevant ideal, and the
// fixed-point ideal.
//
// Decidable class: connected algebras (every variable of positive degree,
// so B_0 = k and the irrelevant ideal I has I_0 = 0).

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "equibundle/linalg.hpp"
#include "equibundle/polynomial.hpp"

namespace equibundle {

using PolyMatrix = Matrix<Polynomial>;

/// k[x1..xr]/(relations) with deg x_j = degrees[j] != 0 and homogeneous
/// relations.
class GradedAlgebra {
public:
    GradedAlgebra(Field f, std::vector<std::int64_t> degrees, std::vector<Polynomial> relations = {});

    Field field() const { return field_; }
    std::size_t nvars() const { return degrees_.size(); }
    const std::vector<std::int64_t>& degrees() const { return degrees_; }
    const std::vector<Polynomial>& relations() const { return relations_; }

    Polynomial zero() const { return Polynomial(field_, nvars()); }
    Polynomial constant(const Scalar& c) const { return Polynomial::constant(nvars(), c); }
    Polynomial variable(std::size_t j) const { return Polynomial::variable(field_, nvars(), j); }

    friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;

private:
    Field field_;
    std::vector<std::int64_t> degrees_;
    std::vector<Polynomial> relations_;
};

/// Ideal given by homogeneous generators.
struct GradedIdeal {
    std::vector<Polynomial> generators;
    std::vector<std::int64_t> degrees;
};

/// Throws InvalidArgument on a non-homogeneous generator.
GradedIdeal make_graded_ideal(const GradedAlgebra& b, std::vector<Polynomial> generators);

/// (x1, ..., xr).
GradedIdeal irrelevant_ideal(const GradedAlgebra& b);

/// Cokernel of a homogeneous relation matrix R (rows = generators,
/// columns = relations) on the shifted free module sum B(-m_i). Entry (i, j)
/// is zero or homogeneous of degree delta_j - m_i for one column degree
/// delta_j.
class GradedModulePresentation {
public:
    GradedModulePresentation(GradedAlgebra b, std::vector<std::int64_t> generator_degrees, PolyMatrix relations);
    static GradedModulePresentation free(GradedAlgebra b, std::vector<std::int64_t> generator_degrees);

    const GradedAlgebra& algebra() const { return b_; }
    const std::vector<std::int64_t>& generator_degrees() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }
    const PolyMatrix& relations() const { return rel_; }
    /// Column degree, nullopt for a zero column.
    const std::vector<std::optional<std::int64_t>>& relation_degrees() const { return rel_deg_; }

    /// True when every relation column is zero.
    bool presented_free() const;

private:
    GradedAlgebra b_;
    std::vector<std::int64_t> gens_;
    PolyMatrix rel_;
    std::vector<std::optional<std::int64_t>> rel_deg_;
};

bool connected_check(const GradedAlgebra& b);

/// Presentation of B^0 = B_0 / I^0_0: generators are the minimal degree-0
/// monomials (a Hilbert basis of the degree-0 monoid), relations are the
/// polynomials set to zero.
struct DegreeZeroPresentation {
    std::vector<Monomial> generators;
    std::vector<Polynomial> relations;
    /// B^0 = 0 (a degree-0 relation has a nonzero constant term).
    bool zero_ring = false;
};

struct FixedPointIdeal {
    GradedIdeal ideal;  // I^0
    DegreeZeroPresentation quotient;  // B^0
};

/// I^0 is generated by the homogeneous elements of nonzero degree. Every
/// variable has nonzero degree, so I^0 = (x1..xr) and B^0 is B_0 with all
/// of its non-unit monomials killed.
FixedPointIdeal fixed_point_ideal(const GradedAlgebra& b);

/// Minimal nonzero exponent vectors e with sum e_j w_j = 0.
std::vector<Monomial> degree_zero_hilbert_basis(const std::vector<std::int64_t>& weights);

/// Certificate that E = 0: generators satisfy e = A e with A having entries
/// in I, and det(1 - A) = chi_A(1) = 1 - a with a in I_0 = 0.
struct CayleyHamiltonWitness {
    std::vector<std::size_t> columns;  // relation columns used
    ScalarMatrix constant_inverse;  // inverse of their constant part
    PolyMatrix a;  // p x p
    std::vector<Polynomial> char_poly;  // det(lambda - A), leading coefficient first
    Polynomial unit;  // chi_A(1)
};

struct NakayamaResult {
    bool vanishes = false;  // E (x) B/I = 0, hence E = 0
    std::optional<CayleyHamiltonWitness> witness;
};

/// Decides E (x)_B B/I = 0. Requires B connected and I the irrelevant
/// ideal; throws PreconditionViolated otherwise.
NakayamaResult nakayama_zero_test(const GradedModulePresentation& e, const GradedIdeal& i);

/// Rechecks every identity of a witness by exact computation.
bool verify_witness(const GradedModulePresentation& e, const CayleyHamiltonWitness& w);

/// det(lambda - A) by Berkowitz's division-free recurrence; coefficients
/// from lambda^n down to lambda^0.
std::vector<Polynomial> characteristic_polynomial(const PolyMatrix& a);

/// dim_k E_d by direct linear algebra on the monomial basis of degree d.
/// Requires B connected.
std::size_t graded_component_dimension(const GradedModulePresentation& e, std::int64_t d);

/// True iff E_d = 0 for all d <= bound (components below the smallest
/// generator degree vanish automatically).
bool vanishes_up_to(const GradedModulePresentation& e, std::int64_t bound);

/// Graded dimensions of E (x) B/I, degree -> dimension (zero entries omitted).
std::map<std::int64_t, std::size_t> residue_dimensions(const GradedModulePresentation& e);

/// Whether u bar : E (x) B/I -> F (x) B/I is bijective. u has one row per
/// generator of F and one column per generator of E. Requires F free, B
/// connected, I irrelevant, u homogeneous of degree 0 and u R_E = 0.
bool graded_iso_test(const PolyMatrix& u, const GradedModulePresentation& e, const GradedModulePresentation& f,
                     const GradedIdeal& i);

/// Homogeneous lift over B of a map given over B/IB = k between free
/// modules. Entry (i, j) of ubar must vanish unless deg f_i = deg e_j.
PolyMatrix lift_graded_map(const ScalarMatrix& ubar, const GradedModulePresentation& e,
                           const GradedModulePresentation& f);

/// Reduction of u mod I (constant terms).
ScalarMatrix reduce_mod_irrelevant(const PolyMatrix& u);

/// Sorted degree multiset: the complete isomorphism invariant of a graded
/// free module over a connected algebra.
std::vector<std::int64_t> iso_class_graded_free(std::vector<std::int64_t> degrees);

/// Graded free module over B realizing a graded k-space with the given
/// dimensions (the lift on isomorphism classes).
GradedModulePresentation lift_residue_class(const GradedAlgebra& b, const std::map<std::int64_t, std::size_t>& dims);

/// Drops generators that a relation with a unit entry expresses through the
/// others, then drops zero columns. Afterwards no relation entry has a
/// nonzero constant term.
GradedModulePresentation minimal_presentation(const GradedModulePresentation& e);

/// E projective (equivalently free): the minimal presentation has no
/// relations. Requires B a connected polynomial ring without relations.
bool is_free(const GradedModulePresentation& e);

}  // namespace equibundle
