#include "dataio/result.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "dataio/csv.hpp"
#include "json.hpp"

namespace dataio {
namespace {

using nlohmann::json;

void require_finite(double v, const char* field) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string("non-finite value in field '") + field + "'");
}

json to_json(const ResultDocument& doc) {
    json centroids = json::array();
    for (std::size_t i = 0; i < doc.centroids.rows(); ++i) {
        json row = json::array();
        for (const double v : doc.centroids.row(i)) {
            require_finite(v, "centroids");
            row.push_back(v);
        }
        centroids.push_back(std::move(row));
    }
    json history = json::array();
    for (const auto& h : doc.history) {
        require_finite(h.objective, "history.objective");
        history.push_back({{"t", h.t},
                           {"phase", h.phase},
                           {"k", h.k},
                           {"sample_size", h.sample_size},
                           {"objective", h.objective},
                           {"improved", h.improved},
                           {"elapsed_ms", h.elapsed_ms}});
    }
    require_finite(doc.objective, "objective");
    require_finite(doc.partition_objective, "partition_objective");
    return json{{"schema_version", kSchemaVersion},
                {"algorithm", doc.algorithm},
                {"config", doc.config},
                {"seed", doc.seed},
                {"centroid_dims", doc.centroids.cols()},
                {"centroids", std::move(centroids)},
                {"objective", doc.objective},
                {"partition_objective", doc.partition_objective},
                {"labels_path", doc.labels_path},
                {"history", std::move(history)},
                {"wall_time_ms", doc.wall_time_ms},
                {"notes", doc.notes}};
}

ResultDocument from_json(const json& j) {
    if (!j.contains("schema_version")) throw SchemaVersionError("result document has no schema_version");
    const int version = j.at("schema_version").get<int>();
    if (version != kSchemaVersion)
        throw SchemaVersionError("unsupported schema_version " + std::to_string(version) + " (expected " +
                                 std::to_string(kSchemaVersion) + ")");
    ResultDocument doc;
    doc.algorithm = j.at("algorithm").get<std::string>();
    doc.config = j.at("config").get<std::map<std::string, std::string>>();
    doc.seed = j.at("seed").get<std::uint64_t>();
    const auto& rows = j.at("centroids");
    const auto dims = j.at("centroid_dims").get<std::size_t>();
    doc.centroids = mssc::Matrix(rows.size(), dims);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != dims) throw std::runtime_error("centroid row width mismatch");
        for (std::size_t c = 0; c < dims; ++c) doc.centroids(i, c) = rows[i][c].get<double>();
    }
    doc.objective = j.at("objective").get<double>();
    doc.partition_objective = j.at("partition_objective").get<double>();
    doc.labels_path = j.at("labels_path").get<std::string>();
    for (const auto& h : j.at("history")) {
        doc.history.push_back(HistoryRow{h.at("t").get<std::int64_t>(), h.at("phase").get<std::string>(),
                                         h.at("k").get<int>(), h.at("sample_size").get<std::size_t>(),
                                         h.at("objective").get<double>(), h.at("improved").get<bool>(),
                                         h.at("elapsed_ms").get<double>()});
    }
    doc.wall_time_ms = j.at("wall_time_ms").get<double>();
    doc.notes = j.at("notes").get<std::vector<std::string>>();
    return doc;
}

} // namespace

std::vector<HistoryRow> history_rows(const vls::RunRecord& record) {
    std::vector<HistoryRow> rows;
    rows.reserve(record.iterations.size());
    for (const auto& it : record.iterations)
        rows.push_back(HistoryRow{it.t, vls::to_string(it.phase), it.k, it.sample_size, it.objective,
                                  it.improved, it.elapsed_ms});
    return rows;
}

std::filesystem::path labels_sidecar(const std::filesystem::path& document) {
    auto p = document;
    return p.replace_extension(".labels");
}

std::filesystem::path history_sidecar(const std::filesystem::path& document) {
    auto p = document;
    return p.replace_extension(".history.csv");
}

void write_labels(const std::vector<int>& labels, const std::filesystem::path& out_path) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path.string());
    for (const int l : labels) out << l << '\n';
    if (!out) throw std::runtime_error("write failed: " + out_path.string());
}

std::vector<int> read_labels(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<int> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(line, &used);
        } catch (const std::exception&) {
            throw ParseError(path.string(), line_no, "label is not an integer");
        }
        if (used != line.size()) throw ParseError(path.string(), line_no, "label is not an integer");
        labels.push_back(v);
    }
    return labels;
}

void write_result(ResultDocument& doc, const std::filesystem::path& out_path) {
    const auto sidecar = labels_sidecar(out_path);
    doc.labels_path = sidecar.filename().string();
    const auto body = to_json(doc).dump(2);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path.string());
    out << body << '\n';
    if (!out) throw std::runtime_error("write failed: " + out_path.string());
    write_labels(doc.labels, sidecar);
}

ResultDocument read_result(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
    auto doc = from_json(j);
    if (!doc.labels_path.empty()) doc.labels = read_labels(path.parent_path() / doc.labels_path);
    return doc;
}

void write_history_csv(const std::vector<HistoryRow>& rows, const std::filesystem::path& out_path) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path.string());
    out << "t,phase,k,sample_size,objective,improved,elapsed_ms\n";
    for (const auto& r : rows)
        out << r.t << ',' << r.phase << ',' << r.k << ',' << r.sample_size << ',' << format_double(r.objective)
            << ',' << (r.improved ? 1 : 0) << ',' << format_double(r.elapsed_ms) << '\n';
    if (!out) throw std::runtime_error("write failed: " + out_path.string());
}

} // namespace dataio
