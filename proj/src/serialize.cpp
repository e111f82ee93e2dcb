#include "qstbc/serialize.hpp"

#include <limits>
#include <sstream>

namespace qstbc {

namespace {

std::string rat_term(const Rat& v, const std::string& unit) {
    // renders v * unit, assuming v != 0
    if (unit.empty()) return rational_string(v);
    if (v == 1) return unit;
    if (v == -1) return "-" + unit;
    return rational_string(v) + " " + unit;
}

long long to_ll(const Int& v) {
    if (v > Int(std::numeric_limits<long long>::max()) ||
        v < Int(std::numeric_limits<long long>::min())) {
        throw std::domain_error("coordinate too large to serialize");
    }
    return v.convert_to<long long>();
}

json field_coords(const FieldElem& u) {
    return json::array({rational_string(u.x()), rational_string(u.y())});
}

json ring_coords(const RingElem& u) { return json::array({to_ll(u.a()), to_ll(u.b())}); }

}  // namespace

std::string field_string(const FieldElem& u) {
    const std::string unit = "sqrt(-" + std::to_string(u.d()) + ")";
    if (u.is_zero()) return "0";
    if (u.y() == 0) return rational_string(u.x());
    if (u.x() == 0) return rat_term(u.y(), unit);
    std::string s = rational_string(u.x());
    s += u.y() > 0 ? " + " + rat_term(u.y(), unit) : " - " + rat_term(-u.y(), unit);
    return s;
}

std::string ring_string(const RingElem& u) { return field_string(u.to_field()); }

std::string poly_string(const QuadPoly& poly) {
    std::string s = "x^2";
    FieldElem p = poly.p().to_field();
    FieldElem q = poly.q().to_field();
    if (!p.is_zero()) {
        bool negate = p.x() < 0 || (p.x() == 0 && p.y() < 0);
        FieldElem shown = negate ? -p : p;
        std::string coeff = field_string(shown);
        bool simple = shown.is_rational() || shown.x() == 0;
        if (coeff == "1") coeff.clear();
        else if (!simple) coeff = "(" + coeff + ") ";
        else coeff += " ";
        s += (negate ? " - " : " + ") + coeff + "x";
    }
    if (!q.is_zero()) {
        bool negate = q.x() < 0 || (q.x() == 0 && q.y() < 0);
        FieldElem shown = negate ? -q : q;
        std::string coeff = field_string(shown);
        bool simple = shown.is_rational() || shown.x() == 0;
        if (!simple) coeff = "(" + coeff + ")";
        s += (negate ? " - " : " + ") + coeff;
    }
    return s;
}

json to_json(const NormStatus& status) {
    json j;
    switch (status.verdict) {
        case NormVerdict::IsNorm: j["verdict"] = "IsNorm"; break;
        case NormVerdict::NotNorm: j["verdict"] = "NotNorm"; break;
        case NormVerdict::Unknown: j["verdict"] = "Unknown"; break;
    }
    if (status.witness) {
        j["witness_coords"] = {{"a", field_coords(status.witness->a())},
                               {"b", field_coords(status.witness->b())}};
    }
    if (status.obstruction) {
        j["obstruction"] = {{"prime", status.obstruction->prime},
                            {"congruence", status.obstruction->congruence}};
    }
    return j;
}

json to_json(const CodeSpec& spec) {
    json j;
    j["d"] = spec.d;
    j["p"] = ring_coords(spec.poly.p());
    j["q"] = ring_coords(spec.poly.q());
    j["gamma"] = ring_coords(spec.gamma);
    j["c_det_sq"] = rational_string(spec.c_det_sq);
    j["rho"] = rational_string(spec.rho);
    j["rho_float"] = to_double(spec.rho);
    j["norm_status"] = to_json(spec.norm_status);
    return j;
}

CodeSpec code_spec_from_json(const json& j, const SearchBudget& budget) {
    long d = j.at("d").get<long>();
    auto ring = [d](const json& coords) {
        return RingElem(d, Int(coords.at(0).get<long long>()), Int(coords.at(1).get<long long>()));
    };
    QuadPoly poly(ring(j.at("p")), ring(j.at("q")));
    return make_code(d, poly, ring(j.at("gamma")), budget);
}

json to_json(const SearchReport& report) {
    json j;
    j["d"] = report.d;
    j["bound_sq"] = rational_string(report.bound_sq);
    j["certified"] = report.certified;
    j["survivors"] = json::array();
    for (const GatedCandidate& g : report.survivors) {
        j["survivors"].push_back({{"p", ring_coords(g.poly.p())},
                                  {"q", ring_coords(g.poly.q())},
                                  {"polynomial", poly_string(g.poly)},
                                  {"gamma", ring_coords(g.gamma)},
                                  {"status", to_json(g.status)}});
    }
    j["best"] = report.best ? to_json(*report.best) : json(nullptr);
    return j;
}

json to_json(const TableRow& row) {
    json j;
    j["field"] = row.field_str;
    j["extension"] = row.extension_str;
    j["polynomial"] = row.polynomial_str;
    j["algebra"] = row.algebra_str;
    j["rho"] = rational_string(row.spec.rho);
    j["rho_float"] = to_double(row.spec.rho);
    j["rho_printed"] = row.printed_rho;
    j["flagged"] = row.flagged;
    j["spec"] = to_json(row.spec);
    j["notes"] = row.notes;
    return j;
}

json to_json(const std::vector<TableRow>& rows) {
    json j = json::array();
    for (const TableRow& r : rows) j.push_back(to_json(r));
    return j;
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

}  // namespace

std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "field,extension,polynomial,algebra,rho,rho_float,rho_printed,flagged,notes\n";
    for (const TableRow& r : rows) {
        std::string notes;
        for (std::size_t i = 0; i < r.notes.size(); ++i) {
            if (i) notes += "; ";
            notes += r.notes[i];
        }
        os << csv_quote(r.field_str) << ',' << csv_quote(r.extension_str) << ','
           << csv_quote(r.polynomial_str) << ',' << csv_quote(r.algebra_str) << ','
           << rational_string(r.spec.rho) << ',' << to_double(r.spec.rho) << ',' << r.printed_rho
           << ',' << (r.flagged ? "yes" : "no") << ',' << csv_quote(notes) << '\n';
    }
    return os.str();
}

std::string sim_csv(const SimResult& result) {
    std::ostringstream os;
    os << "snr_db,cer,halfwidth,trials\n";
    for (const SnrPoint& p : result.points) {
        os << p.snr_db << ',' << p.cer << ',' << p.halfwidth << ',' << p.trials << '\n';
    }
    return os.str();
}

std::string sim_plot_data(const SimResult& result) {
    std::ostringstream os;
    os << "# snr_db cer halfwidth trials\n";
    for (const SnrPoint& p : result.points) {
        os << p.snr_db << ' ' << p.cer << ' ' << p.halfwidth << ' ' << p.trials << '\n';
    }
    return os.str();
}

}  // namespace qstbc
