#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mssc/matrix.hpp"
#include "vls/run_record.hpp"

namespace dataio {

inline constexpr int kSchemaVersion = 1;

struct HistoryRow {
    std::int64_t t = 0;
    std::string phase;
    int k = 0;
    std::size_t sample_size = 0;
    double objective = 0.0;
    bool improved = false;
    double elapsed_ms = 0.0;

    friend bool operator==(const HistoryRow&, const HistoryRow&) = default;
};

std::vector<HistoryRow> history_rows(const vls::RunRecord& record);

struct ResultDocument {
    std::string algorithm;
    std::map<std::string, std::string> config;
    std::uint64_t seed = 0;
    mssc::Matrix centroids;
    double objective = 0.0;
    double partition_objective = 0.0;
    /// Sidecar file name, relative to the document's directory.
    std::string labels_path;
    /// Kept in the sidecar, not in the document body.
    std::vector<int> labels;
    std::vector<HistoryRow> history;
    double wall_time_ms = 0.0;
    std::vector<std::string> notes;

    friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

class SchemaVersionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// `<dir>/<stem>.labels` and `<dir>/<stem>.history.csv` next to a document.
std::filesystem::path labels_sidecar(const std::filesystem::path& document);
std::filesystem::path history_sidecar(const std::filesystem::path& document);

/// Writes the JSON document and its labels sidecar; sets doc.labels_path.
/// Throws on non-finite objective or centroid values and on I/O failure.
void write_result(ResultDocument& doc, const std::filesystem::path& out_path);

/// Reads a document and its labels sidecar. Throws SchemaVersionError when
/// the version field is missing or differs from kSchemaVersion.
ResultDocument read_result(const std::filesystem::path& path);

/// One line per history row under the header
/// t,phase,k,sample_size,objective,improved,elapsed_ms.
void write_history_csv(const std::vector<HistoryRow>& rows, const std::filesystem::path& out_path);

void write_labels(const std::vector<int>& labels, const std::filesystem::path& out_path);
std::vector<int> read_labels(const std::filesystem::path& path);

} // namespace dataio
