#pragma once
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lcx/features.hpp"

namespace lcx {

// Locale-independent float formatting (shortest round-trip form).
std::string format_double(double v);
// Fixed decimal places, locale-independent.
std::string format_fixed(double v, int decimals);

// FNV-1a 64-bit content hash, reported in run manifests.
std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

// Feature matrix serialization.  CSV columns: doc_id, one value column per
// registry feature, then one 0/1 availability column per feature (header
// "<id>_available").  JSON additionally carries degenerate-denominator
// flags.  Readers validate the header against the registry.
std::string features_to_csv(const std::vector<FeatureVector>& vectors);
std::vector<FeatureVector> features_from_csv(std::string_view text);

std::string features_to_json(const std::vector<FeatureVector>& vectors);
std::vector<FeatureVector> features_from_json(std::string_view text);

void write_text_file(const std::string& path, std::string_view content);
std::string read_text_file(const std::string& path);

// Loads a feature file by extension (.csv or .json).
std::vector<FeatureVector> read_feature_file(const std::string& path);

}  // namespace lcx
