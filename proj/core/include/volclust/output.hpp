#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace volclust {

enum class ArtifactKind { table, plotdata, summary };

std::string to_string(ArtifactKind kind);

/// One output artifact: a named numeric table, optionally with a leading
/// text-label column. Plot data is a two-or-three column table tagged
/// `plotdata`.
struct OutputTable {
    std::string name;  // file stem; written as <name>.csv
    ArtifactKind kind = ArtifactKind::table;
    std::vector<std::string> columns;        // numeric column headers
    std::vector<std::vector<double>> rows;   // each row matches columns
    std::string label_header;                // empty -> no label column
    std::vector<std::string> labels;         // size 0 or rows.size()
};

struct InputRecord {
    std::string name;
    std::string path;
    std::string digest;  // fnv1a64:<16 hex digits> of the raw bytes
};

struct ManifestArtifact {
    std::string name;
    std::string path;  // relative to the run directory
    ArtifactKind kind = ArtifactKind::table;
};

struct ResultManifest {
    std::string run_id;
    std::vector<InputRecord> inputs;
    std::vector<ManifestArtifact> artifacts;
    std::vector<std::string> errors;  // "<symbol>/<experiment>: message"
};

/// Everything a run produced, ready to persist.
struct RunResults {
    std::vector<OutputTable> tables;
    std::string summary_json;  // empty -> no summary artifact
};

/// Serialize a double in shortest round-trip form.
std::string format_double(double value);

std::uint64_t fnv1a64_bytes(std::span<const char> bytes);
std::string digest_string(std::uint64_t digest);
std::string file_digest(const std::filesystem::path& file);

std::string to_csv(const OutputTable& table);

/// Write one CSV per table, summary.json when a summary is present, and
/// manifest.json, all under <outdir>/<run_id>/. Refuses an existing run
/// directory unless overwrite is set. Output bytes are a pure function of
/// the inputs. Returns the manifest that was written.
ResultManifest write_outputs(const RunResults& results,
                             const std::filesystem::path& outdir,
                             const std::string& run_id,
                             bool overwrite,
                             std::vector<InputRecord> inputs = {},
                             std::vector<std::string> errors = {});

}  // namespace volclust
