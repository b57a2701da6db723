#include "jacspec/report.hpp"

#include <sstream>

namespace jacspec {

Json to_json(const SpectralResult& r) {
    Json j;
    j["method"] = to_string(r.method);
    j["params"] = Json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["eigenvalues"] = Json::array();
    for (const EigenEntry& e : r.eigenvalues) {
        Json je;
        je["z_re"] = e.z.real();
        je["z_im"] = e.z.imag();
        if (e.bracket) {
            je["bracket_lo"] = (*e.bracket)[0];
            je["bracket_hi"] = (*e.bracket)[1];
        }
        je["residual"] = e.residual;
        j["eigenvalues"].push_back(je);
    }
    j["notes"] = r.notes;
    return j;
}

SpectralResult spectral_result_from_json(const Json& j) {
    SpectralResult r;
    r.method = j.at("method").get<std::string>() == "oracle" ? SpectralMethod::oracle
                                                             : SpectralMethod::char_zero;
    for (const auto& [k, v] : j.at("params").items()) r.params[k] = v.get<double>();
    for (const Json& je : j.at("eigenvalues")) {
        EigenEntry e;
        e.z = Cplx(je.at("z_re").get<double>(), je.at("z_im").get<double>());
        if (je.contains("bracket_lo"))
            e.bracket = {{je.at("bracket_lo").get<double>(), je.at("bracket_hi").get<double>()}};
        e.residual = je.at("residual").get<double>();
        r.eigenvalues.push_back(e);
    }
    if (j.contains("notes"))
        for (const Json& n : j.at("notes")) r.notes.push_back(n.get<std::string>());
    return r;
}

std::string to_csv(const SpectralResult& r) {
    std::ostringstream os;
    os << "z_re,z_im,bracket_lo,bracket_hi,residual\n";
    for (const EigenEntry& e : r.eigenvalues) {
        Json row = Json::array();
        row.push_back(e.z.real());
        row.push_back(e.z.imag());
        if (e.bracket) {
            row.push_back((*e.bracket)[0]);
            row.push_back((*e.bracket)[1]);
        }
        // reuse the JSON float emitter so CSV and JSON agree byte-for-byte
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i)
            line += row[i].dump() + ",";
        if (!e.bracket) line += ",,";
        os << line << Json(e.residual).dump() << "\n";
    }
    return os.str();
}

Json Report::to_json() const {
    Json j;
    j["command"] = command;
    j["model"] = model;
    j["params"] = params;
    j["tolerances"] = tolerances;
    j["results"] = results;
    j["errors"] = errors;
    j["wall_time_ms"] = wall_time_ms;
    return j;
}

bool operator==(const EigenEntry& a, const EigenEntry& b) {
    return a.z == b.z && a.bracket == b.bracket &&
           (a.residual == b.residual || (std::isnan(a.residual) && std::isnan(b.residual)));
}

bool operator==(const SpectralResult& a, const SpectralResult& b) {
    return a.eigenvalues == b.eigenvalues && a.method == b.method && a.params == b.params &&
           a.notes == b.notes;
}

} // namespace jacspec
