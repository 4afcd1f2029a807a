#ifndef UAS_JSON_IO_HPP
#define UAS_JSON_IO_HPP

#include "uas/classify.hpp"
#include "uas/growth.hpp"
#include "uas/ideal.hpp"
#include "uas/rep.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>

namespace uas {

using Json = nlohmann::ordered_json;

Json to_json(const Subspace& s);  // {"ambient", "dim", "rows": integer rows}
Subspace subspace_from_json(const Json& j);
Json to_json(const Decomposition& d);  // {"label", "dimension", "multiplicities": {"2,1": 2}}
Json to_json(const GammaSeries& s);
Json to_json(const GenDegree& g);
// Component dimensions, tops and the tail; "components": true adds the rows.
Json to_json(const IdealWindow& w, bool components = false);

// {"m": 5, "modules": [{"arity": 4, ...}, ...]} where a module is given by
// "labels" ("V[1^4]+V[3,1]", inside U(j)(j)), "generators" (element strings
// whose cyclic span is taken) or "rows" (integer rows of a basis).
Json to_json(const AdmissibleSequence& seq);
AdmissibleSequence sequence_from_json(const Json& j);
AdmissibleSequence read_sequence(const std::filesystem::path& file);

Json to_json(const ClassifiedIdeal& c);
Json to_json(const PairRow& r);

}  // namespace uas

#endif
