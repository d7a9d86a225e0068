#pragma once

#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "netprio/network.hpp"

namespace netprio {

// Score provenance. The first six tag the individual components that can
// enter a fusion; `fused` marks a combined vector.
enum class Method {
    rwr,
    np,
    sp,
    symptom,
    comorbid,
    phenotype,
    fused,
};

inline constexpr Method kComponentMethods[] = {
    Method::rwr,      Method::np,       Method::sp,
    Method::symptom,  Method::comorbid, Method::phenotype,
};

const char* method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

// 0 for symptom, 1 for comorbid, 2 for phenotype; nullopt otherwise.
std::optional<std::size_t> knowledge_channel(Method m);

// One finite score per network node, aligned with node indices.
struct ScoreVector {
    Method tag = Method::fused;
    std::vector<double> values;
};

ScoreVector zero_scores(Method tag, std::int32_t n);

// Writes gene_symbol<TAB>score sorted by descending score, ties broken by
// symbol. Byte-identical output for identical inputs.
void write_scores_tsv(std::ostream& out, const Network& net, const ScoreVector& scores);

// Node indices ordered by (score descending, symbol ascending).
std::vector<std::int32_t> descending_order(const Network& net, const std::vector<double>& values);

}  // namespace netprio
