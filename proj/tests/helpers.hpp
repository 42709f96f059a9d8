#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "pdml/dataset.hpp"

namespace test_support {

#ifndef PDML_SOURCE_DIR
#define PDML_SOURCE_DIR "."
#endif

inline std::string reference_data_path() {
    if (const char* env = std::getenv("PDBENCH_DATA")) return env;
    return std::string(PDML_SOURCE_DIR) + "/data/parkinsons.data";
}

inline bool have_reference_data() { return std::filesystem::exists(reference_data_path()); }

inline std::string write_temp(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << contents;
    return path.string();
}

// Small deterministic dataset with both classes; values are arbitrary but
// fixed so expectations can be frozen.
inline pdml::Dataset toy_dataset(std::size_t n = 12) {
    pdml::Dataset ds;
    for (std::size_t i = 0; i < n; ++i) {
        pdml::VoiceRecord r;
        r.name = "subj_" + std::to_string(i / 3) + "_" + std::to_string(i % 3);
        const double t = static_cast<double>(i);
        for (std::size_t f = 0; f < pdml::kFeatureCount; ++f) {
            const double base = 1.0 + static_cast<double>(f);
            r.features[f] = base + 0.25 * t + 0.5 * static_cast<double>((i * 7 + f * 3) % 5);
        }
        r.status = (i % 3 == 0) ? 0 : 1;
        ds.records.push_back(r);
    }
    return ds;
}

} // namespace test_support
