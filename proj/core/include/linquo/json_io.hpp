#pragma once

#include <json.hpp>

#include "linquo/betti.hpp"
#include "linquo/constructible.hpp"
#include "linquo/coxeter.hpp"
#include "linquo/lexsegment.hpp"
#include "linquo/resolution.hpp"
#include "linquo/simplicial.hpp"

namespace linquo {

using Json = nlohmann::ordered_json;

Json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

Json to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const Json& j);

Json to_json(const QuotientCertificate& certificate);
Json to_json(const QuotientFailure& failure);

Json to_json(const BettiTable& table);
Json to_json(const KPolynomial& p);

Json to_json(const GradedFreeResolution& resolution);

Json certificate_to_json(const ConstructibilityCertificate& certificate);
ConstructibilityCertificate certificate_from_json(int n, const Json& j);

Json to_json(const SubwordReport& report);

} // namespace linquo
