#pragma once

#include <map>
#include <string>
#include <vector>

namespace fahp {

/// Published results of the supply-chain 4.0 study: block weights, block
/// consistency indices and the composed global weights with ranks.
struct PaperReference {
    /// block (internal node id) -> item id -> local weight, in table order
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, double>>>> block_weights;
    std::map<std::string, double> block_lambda;
    std::map<std::string, double> global_weight;
    std::map<std::string, int> global_rank;
};

const PaperReference& paper_reference();

} // namespace fahp
