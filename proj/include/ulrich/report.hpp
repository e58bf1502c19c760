#ifndef ULRICH_REPORT_HPP
#define ULRICH_REPORT_HPP

#include <json.hpp>

#include "ulrich/moduli.hpp"
#include "ulrich/scroll.hpp"
#include "ulrich/verifier.hpp"

namespace ulrich {

using Json = nlohmann::json;

// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as
// decimal strings; never floats, so serialized bytes are reproducible.
Json int_json(const Int& v);
Json rat_json(const Rat& v);  // integer when the denominator is 1, else "p/q"

Json to_json(const DivisorClass& d);
Json to_json(const CohTable& t);
Json to_json(const ScrollClass& c);
Json to_json(const HBound& b);
Json to_json(const ScrollCohTable& t);
Json to_json(const ScrollConfig& c);
Json to_json(const PresentationShape& s);
Json to_json(const HomCounts& c);
Json to_json(const VerificationReport& r);
Json to_json(const DimensionReport& r);
Json to_json(const CandidateReport& r);
Json to_json(const LineClassification& r);
Json to_json(const ChernData& d);

// Envelope shared by every command output.
Json make_envelope(const std::string& command, Json params, Json result);

// Two-space indent, sorted keys, trailing newline.
std::string dump_report(const Json& j);

}  // namespace ulrich

#endif
