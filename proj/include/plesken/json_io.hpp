#pragma once

// JSON readers and writers. Scalars are exact strings, never numbers.
// Readers throw Error("BadJson") on malformed documents and propagate the
// domain errors of the constructors they call.

#include "plesken/error.hpp"
#include "plesken/extension.hpp"
#include "plesken/group.hpp"
#include "plesken/lie_algebra.hpp"
#include "plesken/projective_rep.hpp"

#include <string>

namespace plesken::io {

Json to_json(const Scalar& s);
Json to_json(std::span<const Scalar> v);
Json to_json(const Matrix& m);
Scalar scalar_from_json(const Json& j);
Vector vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);

/// {"order", "identity", "table", "labels"}
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

/// {"dim", "labels", "brackets": [{"i", "j", "c"}]}; zero brackets omitted.
Json algebra_to_json(const LieAlgebra& L);
LieAlgebra algebra_from_json(const Json& j);

/// {"dim", "upper"}: row i of "upper" lists alpha(x_i, x_j) for j > i.
/// The reader also accepts a flat strict-upper-triangle array.
Json form_to_json(const BilinearForm& a);
BilinearForm form_from_json(const Json& j);

/// {"v": [...]}
Json functional_to_json(const LinearFunctional& f);
LinearFunctional functional_from_json(const Json& j);

/// {"base", "total", "f", "g", "s"?}
Json extension_to_json(const CentralExtension& e);
CentralExtension extension_from_json(const Json& j);

/// {"dim", "degree", "matrices", "alpha"?}
Json rep_to_json(const ProjectiveRep& r);
/// The algebra travels separately; `L` must match "dim".
ProjectiveRep rep_from_json(const Json& j, const LieAlgebra& L);

/// {"matrix": [[...]]} or a bare nested array.
Json matrix_file_to_json(const Matrix& m);
Matrix matrix_file_from_json(const Json& j);

Json parse(const std::string& text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);
/// Stable textual form used for every written document.
std::string dump(const Json& j);

}  // namespace plesken::io
