#pragma once

#include <json.hpp>

#include "hopfcyc/cyclic_module.hpp"
#include "hopfcyc/homology.hpp"
#include "hopfcyc/sayd.hpp"

namespace hopfcyc {

using json = nlohmann::ordered_json;

/// Linear maps serialize as one row per SOURCE basis vector (the image
/// coordinates), i.e. the transpose of the column-action matrix.  Scalars
/// are canonical strings: "n" or "n/d" over Q, decimal residues over F_p.

json fieldToJson(FieldTag f);
FieldTag fieldFromJson(const json& j);

json mapToJson(const Matrix& m);
Matrix mapFromJson(const json& j, FieldTag field, int srcDim, int tgtDim,
                   const std::string& what);

/// Hopf structure-constant file: field, basis, mult (d^2 x d rows), unit,
/// comult (d x d^2), counit, antipode, plus optional named "characters" and
/// "grouplikes" blocks.
struct HopfFile {
    HopfAlgebraData hopf;
    std::vector<Character> characters;
    std::vector<GrouplikeElement> grouplikes;
};
json hopfToJson(const HopfAlgebraData& h, const std::vector<Character>& characters = {},
                const std::vector<GrouplikeElement>& grouplikes = {});
HopfFile hopfFromJson(const json& j);

json saydToJson(const SAYDModuleData& m);
SAYDModuleData saydFromJson(const json& j, const HopfAlgebraData& h);

json moduleToJson(const ParaCyclicModule& x);
json moduleToJson(const ParaCocyclicModule& x);
ParaCyclicModule cyclicModuleFromJson(const json& j);
ParaCocyclicModule cocyclicModuleFromJson(const json& j);
bool jsonIsCocyclicModule(const json& j);

json reportToJson(const Report& r);
json relationReportToJson(const RelationReport& r);
json homologyReportToJson(const HomologyReport& r);

}  // namespace hopfcyc
