#pragma once

#include <string>
#include <vector>

// vendored single-header nlohmann/json
#include <json.hpp>

#include "alphacalc/alpha.hpp"
#include "alphacalc/ample.hpp"
#include "alphacalc/builder.hpp"

namespace alphacalc {

using OrderedJson = nlohmann::ordered_json;

/// JSON value for an exact integer: a number when it fits 64 bits, a string
/// otherwise.
OrderedJson json_int(const Int& v);

std::string lct_to_string(const LctValue& v);

OrderedJson witness_json(const EffectiveDivisor& d);
EffectiveDivisor witness_from_json(const OrderedJson& j);

OrderedJson build_report_json(const SurfaceBundle& bundle);
std::string build_report_text(const SurfaceBundle& bundle);
std::string build_report_csv(const SurfaceBundle& bundle);

OrderedJson ample_report_json(const std::string& divisor_label, const AmplenessReport& r);
std::string ample_report_text(const std::string& divisor_label, const AmplenessReport& r);
std::string ample_report_csv(const AmplenessReport& r);

struct AlphaRow {
    AlphaResult result;
    bool compare = false;   // closed-form comparison requested
    Rat expected;
    bool matches = false;
};

OrderedJson alpha_report_json(const std::string& divisor_label,
                              const std::vector<AlphaRow>& rows);
std::string alpha_report_text(const std::vector<AlphaRow>& rows);
std::string alpha_report_csv(const std::vector<AlphaRow>& rows);

struct OracleRow {
    AlphaResult direct;
    AlphaResult oracle;
    bool match = false;
};

OrderedJson oracle_report_json(const std::vector<OracleRow>& rows);
std::string oracle_report_text(const std::vector<OracleRow>& rows);
std::string oracle_report_csv(const std::vector<OracleRow>& rows);

OrderedJson verify_report_json(int k, const std::string& divisor_label,
                               const EffectiveDivisor& cert, const CertificateCheck& c);
std::string verify_report_text(int k, const CertificateCheck& c);
std::string verify_report_csv(const CertificateCheck& c);

}  // namespace alphacalc
