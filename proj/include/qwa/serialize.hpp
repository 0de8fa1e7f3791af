#pragma once

// JSON schemas (see README for the full listing).
//
//   CycInt            [c0, ..., c_{p-2}]     big entries as decimal strings
//   QWeylElement      {"p":3, "terms":[{"x":i, "d":j, "c":[...]}]}
//   classical element {"p":3, "terms":[{"x":i, "d":j, "c":k}]}
//   CenterElement     {"p":3, "N":2, "terms":[{"xp":a, "xi":b, "c":[...]}]}
//   SplitMatrix       {"p":3, "N":2, "rows":[[center, ...], ...]}
//   Polynomial        {"0":[...], "2":[...]}   degree -> CycInt
//   HiggsModule       {"p":2, "rank":2, "theta":[[poly]], "nilpotency_index":2}
//   SigmaModule       {"p":2, "rank":4, "xAct":[[poly]], "dAct":[[poly]]}
//
// Readers throw InputError on any schema violation.

#include <nlohmann/json.hpp>

#include "qwa/azumaya.hpp"
#include "qwa/center.hpp"
#include "qwa/classical.hpp"
#include "qwa/higgs.hpp"
#include "qwa/splitting.hpp"

namespace qwa {

using json = nlohmann::ordered_json;

json integer_to_json(const Integer& n);
Integer integer_from_json(const json& j);

json to_json(const CycInt& c);
CycInt cyc_from_json(int p, const json& j);

json to_json(const QWeylElement& e);
QWeylElement weyl_from_json(const json& j);

json to_json(const ClassicalWeylElement& e);
ClassicalWeylElement classical_from_json(const json& j);

json to_json(const CenterElement& e);
CenterElement center_from_json(const json& j);
/// Terms only, for nesting inside a matrix that carries p and N.
json center_terms_json(const CenterElement& e);

json to_json(const SplitMatrix& m);
SplitMatrix split_matrix_from_json(const json& j);

json to_json(const Polynomial& f);
Polynomial polynomial_from_json(int p, const json& j);

json to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(int p, const json& j);

json to_json(const HiggsModule& h);
HiggsModule higgs_from_json(const json& j);

json to_json(const SigmaModule& m);
SigmaModule sigma_from_json(const json& j);

/// The "p" field, validated as a supported prime.
int prime_field(const json& j);

json to_json(const ModICertificate& c);
json to_json(const LiftCertificate& c);
json to_json(const PhiOnCenter& c);
json to_json(const P2Certificate& c);
json to_json(const KanedaCertificate& c);
json to_json(const RoundtripCertificate& c);

} // namespace qwa
