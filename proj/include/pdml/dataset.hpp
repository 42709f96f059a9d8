#pragma once

#include <array>
#include <cmath>
#include <fstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "pdml/csv.hpp"
#include "pdml/error.hpp"
#include "pdml/matrix.hpp"

namespace pdml {

inline constexpr std::size_t kFeatureCount = 22;

// Canonical order of the 22 dysphonia features, matching the UCI header.
inline const std::array<std::string, kFeatureCount>& feature_names() {
    static const std::array<std::string, kFeatureCount> names = {
        "MDVP:Fo(Hz)",       "MDVP:Fhi(Hz)",  "MDVP:Flo(Hz)",  "MDVP:Jitter(%)", "MDVP:Jitter(Abs)",
        "MDVP:RAP",          "MDVP:PPQ",      "Jitter:DDP",    "MDVP:Shimmer",   "MDVP:Shimmer(dB)",
        "Shimmer:APQ3",      "Shimmer:APQ5",  "MDVP:APQ",      "Shimmer:DDA",    "NHR",
        "HNR",               "RPDE",          "DFA",           "spread1",        "spread2",
        "D2",                "PPE"};
    return names;
}

struct VoiceRecord {
    std::string name;
    std::array<double, kFeatureCount> features{};
    int status = 0; // 0 = healthy, 1 = PD
};

struct Dataset {
    std::vector<VoiceRecord> records;
    // notes surfaced once at load (e.g. class counts disagreeing with the
    // published prose; the file is ground truth)
    std::vector<std::string> notes;

    std::size_t size() const { return records.size(); }
};

struct ClassTally {
    std::size_t healthy = 0;
    std::size_t pd = 0;
};

inline ClassTally class_tally(const Dataset& ds) {
    ClassTally t;
    for (const auto& r : ds.records) (r.status == 1 ? t.pd : t.healthy)++;
    return t;
}

inline Dataset load_dataset(const std::string& path) {
    const auto rows = read_csv(path);
    if (rows.empty()) fail(errc::empty_file, "file has no header row: " + path);

    const auto& header = rows.front();
    // strict schema: all 24 expected columns present, nothing else
    std::vector<std::ptrdiff_t> feature_col(kFeatureCount, -1);
    std::ptrdiff_t name_col = -1, status_col = -1;
    for (std::size_t j = 0; j < header.size(); ++j) {
        const std::string& h = header[j];
        if (h == "name") {
            name_col = static_cast<std::ptrdiff_t>(j);
            continue;
        }
        if (h == "status") {
            status_col = static_cast<std::ptrdiff_t>(j);
            continue;
        }
        bool known = false;
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            if (h == feature_names()[f]) {
                feature_col[f] = static_cast<std::ptrdiff_t>(j);
                known = true;
                break;
            }
        }
        if (!known) fail(errc::parse_error, "unknown column in header: '" + h + "'");
    }
    if (name_col < 0) fail(errc::missing_column, "missing column: name");
    if (status_col < 0) fail(errc::missing_column, "missing column: status");
    for (std::size_t f = 0; f < kFeatureCount; ++f)
        if (feature_col[f] < 0) fail(errc::missing_column, "missing column: " + feature_names()[f]);

    if (rows.size() == 1) fail(errc::empty_file, "file has a header but no data rows: " + path);

    Dataset ds;
    ds.records.reserve(rows.size() - 1);
    std::unordered_set<std::string> seen;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& fields = rows[i];
        const std::size_t line_no = i + 1;
        if (fields.size() != header.size())
            fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(header.size()) + " fields, got " +
                                        std::to_string(fields.size()));
        VoiceRecord rec;
        rec.name = fields[static_cast<std::size_t>(name_col)];
        if (!seen.insert(rec.name).second)
            fail(errc::duplicate_name, "line " + std::to_string(line_no) + ": duplicate name '" + rec.name + "'");
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            const double v =
                parse_double(fields[static_cast<std::size_t>(feature_col[f])], line_no, feature_names()[f]);
            if (!std::isfinite(v))
                fail(errc::non_finite_value,
                     "line " + std::to_string(line_no) + ", column '" + feature_names()[f] + "': non-finite value");
            rec.features[f] = v;
        }
        // the three frequency columns are physical quantities in Hz
        for (std::size_t f = 0; f < 3; ++f)
            if (rec.features[f] <= 0.0)
                fail(errc::parse_error, "line " + std::to_string(line_no) + ", column '" + feature_names()[f] +
                                            "': frequency must be strictly positive");
        const double sv = parse_double(fields[static_cast<std::size_t>(status_col)], line_no, "status");
        if (sv != 0.0 && sv != 1.0)
            fail(errc::parse_error, "line " + std::to_string(line_no) + ": status must be 0 or 1, got " +
                                        fields[static_cast<std::size_t>(status_col)]);
        rec.status = static_cast<int>(sv);
        ds.records.push_back(std::move(rec));
    }

    // The published prose says 48 PD / 147 healthy while defining status 1 =
    // PD; the file's own tally wins and any disagreement is reported here.
    const ClassTally t = class_tally(ds);
    if (ds.records.size() == 195 && !(t.pd == 48 && t.healthy == 147)) {
        ds.notes.push_back("class tally from file: " + std::to_string(t.pd) + " PD / " +
                           std::to_string(t.healthy) +
                           " healthy; published prose claims 48 PD / 147 healthy — the file is taken as ground truth");
    }
    return ds;
}

// canonical serialization; load(serialize(ds)) == ds
inline std::string serialize_dataset(const Dataset& ds) {
    std::string out = "name";
    for (const auto& n : feature_names()) out += "," + n;
    out += ",status\n";
    for (const auto& r : ds.records) {
        out += r.name;
        for (double v : r.features) out += "," + format_double(v);
        out += "," + std::to_string(r.status) + "\n";
    }
    return out;
}

inline void save_dataset(const Dataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_error, "cannot write file: " + path);
    out << serialize_dataset(ds);
}

struct LabeledMatrix {
    FeatureMatrix x;
    std::vector<int> y;
    std::vector<std::string> names; // row identifiers, aligned with x
};

inline LabeledMatrix to_matrix(const Dataset& ds) {
    LabeledMatrix m{FeatureMatrix(ds.size(), std::vector<std::string>(feature_names().begin(), feature_names().end())),
                    {},
                    {}};
    m.y.reserve(ds.size());
    m.names.reserve(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto& r = ds.records[i];
        for (std::size_t f = 0; f < kFeatureCount; ++f) m.x(i, f) = r.features[f];
        m.y.push_back(r.status);
        m.names.push_back(r.name);
    }
    return m;
}

} // namespace pdml
