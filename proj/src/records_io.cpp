#include "qcorr/records_io.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "qcorr/errors.hpp"

namespace qcorr {

std::string format_real(double value) {
    if (!std::isfinite(value)) throw NumericDomainError("cannot format non-finite value");
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, 12);
    if (res.ec != std::errc{}) throw NumericDomainError("value out of range for fixed formatting");
    std::string out(buf.data(), res.ptr);
    if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
    return out;
}

std::vector<std::string> csv_fields(const CorrelationRecord& rec) {
    const CorrelationResult& r = rec.result;
    return {std::string(to_string(rec.scenario)),
            format_real(rec.a),
            format_real(rec.p),
            std::string(to_string(rec.bipartition)),
            format_real(r.total),
            format_real(r.classical),
            format_real(r.quantum),
            format_real(r.discord_one_sided),
            format_real(r.classical_one_sided),
            format_real(r.concurrence),
            format_real(r.basis_a.theta),
            format_real(r.basis_a.phi),
            format_real(r.basis_b.theta),
            format_real(r.basis_b.phi),
            rec.oracle_max_abs_dev ? format_real(*rec.oracle_max_abs_dev) : std::string()};
}

namespace {

void write_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << fields[i];
    }
    os << '\n';
}

}  // namespace

void write_records_csv(std::ostream& os, std::span<const CorrelationRecord> records) {
    os << kRecordCsvHeader << '\n';
    for (const CorrelationRecord& rec : records) write_row(os, csv_fields(rec));
}

nlohmann::json record_to_json(const CorrelationRecord& rec) {
    const CorrelationResult& r = rec.result;
    nlohmann::json j = nlohmann::json::object();
    j["scenario"] = to_string(rec.scenario);
    j["a"] = rec.a;
    j["p"] = rec.p;
    j["bipartition"] = to_string(rec.bipartition);
    j["total"] = r.total;
    j["classical_K"] = r.classical;
    j["quantum_Q"] = r.quantum;
    j["discord_D"] = r.discord_one_sided;
    j["classical_C"] = r.classical_one_sided;
    j["concurrence"] = r.concurrence;
    j["theta_a"] = r.basis_a.theta;
    j["phi_a"] = r.basis_a.phi;
    j["theta_b"] = r.basis_b.theta;
    j["phi_b"] = r.basis_b.phi;
    j["oracle_max_abs_dev"] = rec.oracle_max_abs_dev ? nlohmann::json(*rec.oracle_max_abs_dev) : nlohmann::json();
    j["measured_side"] = to_string(r.measured_side);
    j["discord_theta"] = r.discord_basis.theta;
    j["discord_phi"] = r.discord_basis.phi;
    return j;
}

nlohmann::json records_to_json(std::span<const CorrelationRecord> records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CorrelationRecord& rec : records) arr.push_back(record_to_json(rec));
    return arr;
}

std::vector<std::string> csv_fields_from_json(const nlohmann::json& j) {
    auto real = [&](const char* key) { return format_real(j.at(key).get<double>()); };
    const nlohmann::json& oracle = j.at("oracle_max_abs_dev");
    return {j.at("scenario").get<std::string>(),
            real("a"),
            real("p"),
            j.at("bipartition").get<std::string>(),
            real("total"),
            real("classical_K"),
            real("quantum_Q"),
            real("discord_D"),
            real("classical_C"),
            real("concurrence"),
            real("theta_a"),
            real("phi_a"),
            real("theta_b"),
            real("phi_b"),
            oracle.is_null() ? std::string() : format_real(oracle.get<double>())};
}

void write_events_csv(std::ostream& os, std::span<const SeriesEvent> events) {
    os << kEventCsvHeader << '\n';
    for (const SeriesEvent& e : events) {
        write_row(os, {std::string(to_string(e.scenario)), format_real(e.a), std::string(to_string(e.bipartition)),
                       e.event.measure, std::string(to_string(e.event.kind)), format_real(e.event.p_lo),
                       format_real(e.event.p_hi)});
    }
}

void write_discrepancies_csv(std::ostream& os, std::span<const DiscrepancyRow> rows) {
    os << kDiscrepancyCsvHeader << '\n';
    for (const DiscrepancyRow& r : rows) {
        write_row(os, {std::string(to_string(r.scenario)), format_real(r.a), format_real(r.p),
                       std::string(to_string(r.pair)), format_real(r.max_abs_dev), format_real(r.trace_of_printed),
                       r.printed_valid ? "1" : "0", r.matches ? "1" : "0", r.flagged() ? "1" : "0", r.note});
    }
}

}  // namespace qcorr
