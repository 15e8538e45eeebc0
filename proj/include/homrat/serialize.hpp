#pragma once

// JSON forms of verdicts, certificates and maximal-rank subgroups.

#include <json.hpp>

#include "homrat/certify.hpp"

namespace homrat {

using Json = nlohmann::ordered_json;

Json to_json(const CertificateNode& node);
CertificateNode certificate_from_json(const Json& j);  // throws std::invalid_argument

Json to_json(const QuotientInvariants& q);
Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);  // invariants are not read back

/// One line of `enumerate` output.
Json to_json(const MaxRankSubgroup& h);

}  // namespace homrat
