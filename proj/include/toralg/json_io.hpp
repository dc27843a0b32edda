#ifndef TORALG_JSON_IO_HPP
#define TORALG_JSON_IO_HPP

#include <json.hpp>

#include "toralg/adp.hpp"
#include "toralg/surface.hpp"

namespace toralg {

using Json = nlohmann::json;

/// Numbers within the double-safe integer range emit as JSON numbers,
/// larger magnitudes as decimal strings; parsing accepts both forms.
Json int_to_json(const Int& v);
Int json_to_int(const Json& j);

/// Rationals always serialize as "p" or "p/q" strings.
Json rat_to_json(const Rat& v);
Rat json_to_rat(const Json& j);

Json vector_to_json(const LatticeVector& v);
LatticeVector json_to_vector(const Json& j, Ambient ambient);

/// {"rays": [[...], ...]}; emitted cones also carry dual_rays and
/// facet_normals.
Json cone_to_json(const RationalCone& sigma);
RationalCone json_to_cone(const Json& j, Ambient ambient = Ambient::N);

/// {"e": [...], "p": [...]}
Json field_to_json(const HomogeneousField& f);
HomogeneousField json_to_field(const Json& j);

/// {"terms": [{"coeff": "3/2", "exp": [...], "dir": [...]}]} with a
/// primitive integer direction per term.
Json termlist_to_json(const LaurentVectorField& f);
LaurentVectorField json_to_termlist(const Json& j);

/// {"faces": [[0], [0,1], ...]}
InvariantSubvariety json_to_subvariety(const RationalCone& sigma, const Json& j);
Json subvariety_to_json(const InvariantSubvariety& y);

Json classification_to_json(const ClassificationRecord& r);

Json certificate_to_json(const AdpCertificate& c);
AdpCertificate json_to_certificate(const Json& j);

Json profile_to_json(const SurfaceProfile& p);

Json closure_table_to_json(const ClosureTable& t);

TemplateRequest json_to_template_request(const Json& j);
Json template_result_to_json(const TemplateResult& r);

}  // namespace toralg

#endif
