#pragma once

#include <string>

#include "json.hpp"
#include "orbitforge/conjecture.hpp"
#include "orbitforge/jm.hpp"
#include "orbitforge/orbits.hpp"
#include "orbitforge/prehomo.hpp"

namespace orbitforge {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json to_json(const QVec& v);
Json to_json(const QMat& m);
QMat qmat_from_json(const Json& j);
Json to_json(const Partition& p);
Json to_json(const ClassLabel& c);
ClassLabel class_label_from_json(const Json& j);
Json to_json(const MClassLabel& c);
/// "trivial", "regular", or a JSON array with one class label per block.
MClassLabel mclass_from_text(const LeviSpec& levi, const std::string& text);
Json to_json(const MPoly& p);
/// Subspace of gl_n as a list of basis matrices.
Json subspace_matrices(const Subspace& s);
Json to_json(const LieTriple& t);
Json to_json(const GradedDecomp& g);
Json to_json(const ParabolicData& pd);
Json to_json(const InductionResult& r);
Json to_json(const RichardsonReport& r);
Json to_json(const CodimReport& r);
Json to_json(const AssocReport& r);
Json to_json(const DescentReport& r);
Json to_json(const GNReport& r);
Json to_json(const SpecialityReport& r);
Json to_json(const CharacterLawReport& r);
Json to_json(const RegularityReport& r);
Json to_json(const FibrationReport& r);
Json to_json(const NCResult& r);
Json to_json(const TranslateReport& r);
Json to_json(const ConjectureVerdict& v);
Json to_json(const BatchReport& r);

/// {"catalog": "point" | "torus-scaling" | "translation" | "zero" | "regular-g2", "d"/"n": k}
/// or an explicit model {"coord_dim", "generators", "vector_fields"} whose
/// polynomials are term lists [[coefficient, [exponents...]], ...].
AffineActionModel model_from_json(const Json& j);

/// Reads a file, or parses the argument itself when it starts with '[' or '{'.
Json read_json_argument(const std::string& arg);

}  // namespace orbitforge
