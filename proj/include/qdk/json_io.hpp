#ifndef QDK_JSON_IO_HPP
#define QDK_JSON_IO_HPP

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qdk/format.hpp"
#include "qdk/parse.hpp"
#include "qdk/qmod.hpp"
#include "qdk/report.hpp"

namespace qdk {

using Json = nlohmann::ordered_json;

inline Json report_to_json(const Report& rep) {
    Json j;
    j["schema"] = 1;
    j["suite"] = rep.suite;
    j["seed"] = rep.seed;
    Json rs = Json::array();
    for (const auto& r : rep.results) {
        Json e;
        e["identity"] = r.identity;
        e["status"] = r.pass ? "pass" : "fail";
        e["witness"] = r.witness;
        rs.push_back(std::move(e));
    }
    j["results"] = std::move(rs);
    return j;
}

inline Json module_to_json(const QDiffModule& v) {
    const FieldPtr& f = v.field();
    Json j;
    j["schema"] = 1;
    j["characteristic"] = f->characteristic();
    j["N"] = f->order();
    j["rank"] = v.rank();
    auto dump = [&](const RMat& m) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.rows; ++i) {
            Json row = Json::array();
            for (std::size_t k = 0; k < m.cols; ++k) row.push_back(to_string(m.at(i, k)));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["sigma"] = dump(v.msigma());
    j["d1"] = dump(v.md1());
    return j;
}

inline QDiffModule module_from_json(const Json& j) {
    if (!j.is_object() || j.value("schema", 0) != 1)
        throw std::invalid_argument("module file: unsupported schema");
    for (const char* key : {"characteristic", "N", "rank", "sigma", "d1"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("module file: missing field ") + key);
    FieldPtr f = Field::make(j["characteristic"].get<unsigned long>(),
                             j["N"].get<unsigned long>());
    const std::size_t n = j["rank"].get<std::size_t>();
    auto load = [&](const Json& rows, const char* name) {
        if (!rows.is_array() || rows.size() != n)
            throw std::invalid_argument(std::string("module file: bad matrix ") + name);
        RMat m = mat_zero(f, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!rows[i].is_array() || rows[i].size() != n)
                throw std::invalid_argument(std::string("module file: bad matrix ") + name);
            for (std::size_t k = 0; k < n; ++k)
                m.at(i, k) = parse_ratfunc(f, rows[i][k].get<std::string>());
        }
        return m;
    };
    return QDiffModule(f, load(j["sigma"], "sigma"), load(j["d1"], "d1"));
}

inline QDiffModule module_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j = Json::parse(in);
    return module_from_json(j);
}

inline void module_save(const QDiffModule& v, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path);
    out << module_to_json(v).dump(2) << "\n";
}

}  // namespace qdk

#endif  // QDK_JSON_IO_HPP
