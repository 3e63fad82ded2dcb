#pragma once

#include "genusdist/asymptotics.hpp"
#include "genusdist/enumerate.hpp"
#include "genusdist/exact.hpp"
#include "genusdist/sampler.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace genusdist {

using Json = nlohmann::ordered_json;

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

/// "num/den", or just "num" for integers.
std::string format_rational(const Rational& q);

Json to_json(const GenusDistribution& d);
Json to_json(const FaceDistribution& d);
Json to_json(const HzIdentityReport& r);
Json to_json(const StationaryPoint& s);
Json to_json(const LltComparison& c);
Json to_json(const SampleReport& r);
Json to_json(const FaceCensus& c);
Json to_json(const EnumerationResult& r);

// CSV writers; headers are fixed.
void write_csv(std::ostream& os, const GenusDistribution& d);   // g,count,probability
void write_csv(std::ostream& os, const FaceDistribution& d);    // k,probability_exact,probability
void write_csv(std::ostream& os, const LltComparison& c);       // g,p_exact,p_llt,ratio
void write_csv(std::ostream& os, const SampleReport& r);        // g,count,frequency
void write_csv(std::ostream& os, const FaceCensus& c);          // k,count,frequency
void write_csv(std::ostream& os, const EnumerationResult& r);   // g,count

} // namespace genusdist
