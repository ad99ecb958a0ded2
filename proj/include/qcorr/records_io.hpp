#pragma once

// CSV / JSON encodings of sweep records, events and discrepancy rows.

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcorr/events.hpp"
#include "qcorr/scenarios.hpp"

namespace qcorr {

inline constexpr std::string_view kRecordCsvHeader =
    "scenario,a,p,bipartition,total,classical_K,quantum_Q,discord_D,classical_C,concurrence,"
    "theta_a,phi_a,theta_b,phi_b,oracle_max_abs_dev";

inline constexpr std::string_view kEventCsvHeader = "scenario,a,bipartition,measure,kind,p_lo,p_hi";

inline constexpr std::string_view kDiscrepancyCsvHeader =
    "scenario,a,p,bipartition,max_abs_dev,trace_of_printed_matrix,printed_valid,matches,flagged,note";

// Fixed-point with 12 digits after the decimal point, '.' separator, no
// negative zero. Locale independent.
std::string format_real(double value);

std::vector<std::string> csv_fields(const CorrelationRecord& record);
void write_records_csv(std::ostream& os, std::span<const CorrelationRecord> records);

nlohmann::json record_to_json(const CorrelationRecord& record);
nlohmann::json records_to_json(std::span<const CorrelationRecord> records);
// Renders a JSON record back into CSV fields (inverse of record_to_json).
std::vector<std::string> csv_fields_from_json(const nlohmann::json& record);

struct SeriesEvent {
    ScenarioKind scenario;
    double a;
    Bipartition bipartition;
    Event event;
};

void write_events_csv(std::ostream& os, std::span<const SeriesEvent> events);
void write_discrepancies_csv(std::ostream& os, std::span<const DiscrepancyRow> rows);

}  // namespace qcorr
