#include "netprio/score.hpp"

#include <algorithm>
#include <numeric>

#include "netprio/errors.hpp"
#include "netprio/tsv.hpp"

namespace netprio {

const char* method_name(Method m) {
    switch (m) {
        case Method::rwr:
            return "rwr";
        case Method::np:
            return "np";
        case Method::sp:
            return "sp";
        case Method::symptom:
            return "symptom";
        case Method::comorbid:
            return "comorbid";
        case Method::phenotype:
            return "phenotype";
        case Method::fused:
            return "fused";
    }
    return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
    for (const Method m : kComponentMethods) {
        if (name == method_name(m)) {
            return m;
        }
    }
    if (name == "fused") {
        return Method::fused;
    }
    return std::nullopt;
}

std::optional<std::size_t> knowledge_channel(Method m) {
    switch (m) {
        case Method::symptom:
            return 0;
        case Method::comorbid:
            return 1;
        case Method::phenotype:
            return 2;
        default:
            return std::nullopt;
    }
}

ScoreVector zero_scores(Method tag, std::int32_t n) {
    return ScoreVector{tag, std::vector<double>(static_cast<std::size_t>(n), 0.0)};
}

std::vector<std::int32_t> descending_order(const Network& net,
                                           const std::vector<double>& values) {
    if (values.size() != static_cast<std::size_t>(net.node_count())) {
        throw ValidationError("score vector length does not match the network");
    }
    std::vector<std::int32_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::int32_t l, std::int32_t r) {
        if (values[l] != values[r]) {
            return values[l] > values[r];
        }
        return net.symbol(l) < net.symbol(r);
    });
    return order;
}

void write_scores_tsv(std::ostream& out, const Network& net, const ScoreVector& scores) {
    for (const std::int32_t i : descending_order(net, scores.values)) {
        out << net.symbol(i) << '\t' << format_score(scores.values[i]) << '\n';
    }
}

}  // namespace netprio
