#pragma once

#include "qstbc/search.hpp"
#include "qstbc/sim.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qstbc {

using json = nlohmann::json;

// Human-readable forms: "1", "-1", "sqrt(-2)", "3/2 + 1/2 sqrt(-3)", ...
std::string field_string(const FieldElem& u);
std::string ring_string(const RingElem& u);
std::string poly_string(const QuadPoly& poly);

// {verdict, witness_coords?, obstruction?}
json to_json(const NormStatus& status);

// {d, p:[a,b], q:[a,b], gamma:[a,b], c_det_sq:"num/den", rho:"num/den",
//  rho_float, norm_status}
json to_json(const CodeSpec& spec);

// Rebuilds the spec from (d, p, q, gamma) through make_code, so the stored
// certificate is revalidated rather than trusted.
CodeSpec code_spec_from_json(const json& j, const SearchBudget& budget = {});

json to_json(const SearchReport& report);
json to_json(const TableRow& row);
json to_json(const std::vector<TableRow>& rows);

std::string table_csv(const std::vector<TableRow>& rows);

// CSV "snr_db,cer,halfwidth,trials" plus a gnuplot-friendly variant
// (whitespace-separated, '#'-prefixed header).
std::string sim_csv(const SimResult& result);
std::string sim_plot_data(const SimResult& result);

}  // namespace qstbc
