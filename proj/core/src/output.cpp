#include "volclust/output.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"
#include "volclust/errors.hpp"

namespace volclust {

std::string to_string(ArtifactKind kind) {
    switch (kind) {
        case ArtifactKind::table: return "table";
        case ArtifactKind::plotdata: return "plotdata";
        case ArtifactKind::summary: return "summary";
    }
    return "table";
}

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::uint64_t fnv1a64_bytes(std::span<const char> bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_string(std::uint64_t digest) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4) {
        out += kHex[(digest >> shift) & 0xF];
    }
    return out;
}

std::string file_digest(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();
    return digest_string(fnv1a64_bytes(std::span<const char>(bytes.data(), bytes.size())));
}

std::string to_csv(const OutputTable& table) {
    if (!table.labels.empty() && table.labels.size() != table.rows.size()) {
        throw InvalidArgumentError("table '" + table.name + "': label/row count mismatch");
    }
    std::string out;
    bool first = true;
    if (!table.label_header.empty()) {
        out += table.label_header;
        first = false;
    }
    for (const auto& col : table.columns) {
        if (!first) out += ',';
        out += col;
        first = false;
    }
    out += '\n';
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        first = true;
        if (!table.label_header.empty()) {
            out += table.labels.empty() ? std::string() : table.labels[r];
            first = false;
        }
        for (double cell : table.rows[r]) {
            if (!first) out += ',';
            out += format_double(cell);
            first = false;
        }
        out += '\n';
    }
    return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

ResultManifest write_outputs(const RunResults& results, const std::filesystem::path& outdir,
                             const std::string& run_id, bool overwrite,
                             std::vector<InputRecord> inputs,
                             std::vector<std::string> errors) {
    if (run_id.empty()) throw InvalidArgumentError("run_id must not be empty");
    const std::filesystem::path run_dir = outdir / run_id;
    if (std::filesystem::exists(run_dir) && !overwrite) {
        throw IoError("run directory already exists: " + run_dir.string() +
                      " (pass overwrite to replace it)");
    }
    std::error_code ec;
    std::filesystem::create_directories(run_dir, ec);
    if (ec) throw IoError("cannot create " + run_dir.string() + ": " + ec.message());

    ResultManifest manifest;
    manifest.run_id = run_id;
    manifest.inputs = std::move(inputs);
    manifest.errors = std::move(errors);

    for (const auto& table : results.tables) {
        const std::string filename = table.name + ".csv";
        write_file(run_dir / filename, to_csv(table));
        manifest.artifacts.push_back(ManifestArtifact{table.name, filename, table.kind});
    }
    if (!results.summary_json.empty()) {
        write_file(run_dir / "summary.json", results.summary_json);
        manifest.artifacts.push_back(
            ManifestArtifact{"summary", "summary.json", ArtifactKind::summary});
    }

    nlohmann::json doc;
    doc["run_id"] = manifest.run_id;
    doc["inputs"] = nlohmann::json::array();
    for (const auto& input : manifest.inputs) {
        doc["inputs"].push_back(
            {{"name", input.name}, {"path", input.path}, {"digest", input.digest}});
    }
    doc["artifacts"] = nlohmann::json::array();
    for (const auto& artifact : manifest.artifacts) {
        doc["artifacts"].push_back({{"name", artifact.name},
                                    {"path", artifact.path},
                                    {"kind", to_string(artifact.kind)}});
    }
    doc["errors"] = manifest.errors;
    write_file(run_dir / "manifest.json", doc.dump(2) + "\n");
    return manifest;
}

}  // namespace volclust
