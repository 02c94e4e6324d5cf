#pragma once
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcx/document.hpp"
#include "lcx/norms.hpp"

namespace lcx {

enum class Family : unsigned char {
  shallow,
  formula,
  pos,
  ttr,
  variation,
  phrasal,
  tree,
  psycho,
  discourse,
};
inline constexpr int kNumFamilies = 9;

std::string_view to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);

struct FeatureDef {
  std::string_view id;
  Family family;
  std::string_view label;        // table row label, reproduced verbatim
  std::string_view requires_tag; // "builtin", "full", or "lexicon:<name>"
};

// All 160 features in report order (families contiguous).
std::span<const FeatureDef> registry();
inline constexpr std::size_t kFeatureCount = 160;

// Index into the registry, or -1 for an unknown id.
int feature_index(std::string_view id);

struct FamilySlice {
  std::size_t offset = 0;
  std::size_t count = 0;
};
FamilySlice family_slice(Family family);

struct FeatureValue {
  double value = 0.0;
  bool available = false;
  bool degenerate = false;  // value forced to 0 by a zero denominator
};

struct FeatureVector {
  std::string doc_id;
  std::vector<FeatureValue> values;  // registry order, kFeatureCount entries
};

struct Ratio {
  double value = 0.0;
  bool degenerate = false;
};
// n/d, or 0 with the degenerate flag set when d == 0.
Ratio safe_ratio(double numerator, double denominator);

// Readability formulas over raw counts.  T tokens, S sentences, Syl
// syllables, Ch characters, Poly words of three or more syllables.
namespace formulas {
double flesch_kincaid(double T, double S, double Syl);
double new_ari(double Ch, double T, double S);
double coleman_liau(double Ch, double T, double S);
double smog(double Poly, double S);
double gunning_fog(double T, double S, double Poly);
double linsear(double easy, double hard, double S);
}  // namespace formulas

struct ExtractResources {
  const NormSet* norms = nullptr;
};

// Family extractors; each returns its slice of the registry, in order.
std::vector<FeatureValue> extract_shallow(const AnnotatedDocument& doc);
std::vector<FeatureValue> extract_formula(const AnnotatedDocument& doc);
std::vector<FeatureValue> extract_pos(const AnnotatedDocument& doc);
std::vector<FeatureValue> extract_ttr(const AnnotatedDocument& doc);
std::vector<FeatureValue> extract_variation(const AnnotatedDocument& doc);
std::vector<FeatureValue> extract_phrasal(const AnnotatedDocument& doc);
std::vector<FeatureValue> extract_tree(const AnnotatedDocument& doc);
std::vector<FeatureValue> extract_psycho(const AnnotatedDocument& doc,
                                         const NormSet* norms);
std::vector<FeatureValue> extract_discourse(const AnnotatedDocument& doc);

// All nine families, assembled in registry order.
FeatureVector extract(const AnnotatedDocument& doc,
                      const ExtractResources& res = {});

}  // namespace lcx
