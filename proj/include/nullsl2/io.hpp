#ifndef NULLSL2_IO_HPP
#define NULLSL2_IO_HPP

// JSON forms of the library types. Coefficients are [re, im] pairs whose
// parts are numbers or exact "p/q" strings; numbers are written whenever the
// value is a double, so files round-trip exactly.

#include <string>

#include <nlohmann/json.hpp>

#include "nullsl2/invariants.hpp"
#include "nullsl2/periods.hpp"
#include "nullsl2/sl2curve.hpp"
#include "nullsl2/spinor.hpp"

namespace nullsl2::io {

using json = nlohmann::ordered_json;

json to_json(const CRational& c);
CRational crational_from_json(const json& j);

json to_json(cplx z);
cplx cplx_from_json(const json& j);
json points_to_json(std::span<const cplx> pts);
std::vector<cplx> points_from_json(const json& j);

json to_json(const MeroFunction& f);
MeroFunction mero_from_json(const json& j);

json to_json(const SpinorData& s);
SpinorData spinor_from_json(const json& j);

json to_json(const C3NullCurve& X);
C3NullCurve c3_from_json(const json& j);

json to_json(const SL2NullCurve& F);
SL2NullCurve sl2_from_json(const json& j);

json to_json(const Sl2Report& r);
json to_json(const C3Report& r);
json to_json(const EndReport& r);

json to_json(const Cycle& c);
Cycle cycle_from_json(const json& j);
std::vector<Cycle> cycles_from_json(const json& j);

json to_json(const SprayFamily& s);
SprayFamily spray_from_json(const json& j);

json to_json(const PeriodReport& r);
/// One row per cycle: cycle,re1,im1,re2,im2,re3,im3.
std::string to_csv(const PeriodReport& r);

/// Reads and parses a JSON file; throws ParseError.
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace nullsl2::io

#endif  // NULLSL2_IO_HPP
