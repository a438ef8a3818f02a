#pragma once

#include "su3coh/classify.hpp"
#include "su3coh/geomverify.hpp"

#include <json.hpp>

#include <string>

namespace su3coh {

enum class OutputFormat { Markdown, Csv, Json };

OutputFormat parse_output_format(const std::string& s);  // throws ParseError

nlohmann::json to_json(const CountTable& t);
nlohmann::json to_json(const InfoTable& t);
nlohmann::json to_json(const TableSet& t);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const std::vector<VerificationReport>& rs);

std::string render(const TableSet& t, OutputFormat f);
std::string render_reports(const std::vector<VerificationReport>& rs, OutputFormat f,
                           unsigned long long seed);

} // namespace su3coh
