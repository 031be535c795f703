#pragma once

// Text documents, one object per file. Line based:
//
//   kind = laurent_matrix
//   field = Q
//   matrix = [[t, 1], [0, t^-1]]
//
// Blank lines and lines starting with '#' are ignored. Scalars are
// integers, p/q, or r mod N (N must be the field's characteristic).
// Laurent polynomials use t, polynomials x1..xr, elements of k[e]/(e^m) use
// e; terms are joined by + and -. Matrices are row lists in brackets; lists
// of degrees, relations and images are comma separated.
//
// Printing produces the canonical form: fixed key order, single spaces,
// cover relations only for posets, F_p scalars as residues in [0, p).

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "equibundle/filtered.hpp"
#include "equibundle/graded.hpp"
#include "equibundle/hensel.hpp"
#include "equibundle/laurent_matrix.hpp"
#include "equibundle/projline.hpp"
#include "equibundle/topospace.hpp"

namespace equibundle {

struct GradedModuleDocument {
    GradedModulePresentation module;
    /// Free target F given by generator degrees, for maps E -> F.
    std::optional<std::vector<std::int64_t>> target;
    /// One row per target generator, one column per source generator.
    std::optional<PolyMatrix> map;
};

struct FindimDocument {
    FiniteDimAlgebra algebra;
    std::optional<AlgVector> element;
};

using DocumentBody = std::variant<LaurentMatrix, SplittingType, GradedAlgebra, GradedModuleDocument, FilteredModule,
                                  FindimDocument, FinitePoset, MonotoneMap>;

struct Document {
    /// The field line, when the document has one.
    std::optional<Field> field;
    DocumentBody body;

    std::string kind() const;
};

/// Throws ParseError on malformed text and InvalidArgument when the text is
/// well formed but describes an invalid object. `default_field` is used when
/// the document has no field line.
Document parse_document(std::string_view text, Field default_field = Field::rationals());

std::string print_document(const Document& doc);

/// Element parsers, exposed for tests.
Scalar parse_scalar(std::string_view s, Field f);
LaurentPoly parse_laurent(std::string_view s, Field f);
Polynomial parse_polynomial(std::string_view s, Field f, std::size_t nvars);
Truncated parse_truncated(std::string_view s, TruncatedRing r);

}  // namespace equibundle
