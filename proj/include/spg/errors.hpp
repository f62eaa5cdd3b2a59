#pragma once

#include <stdexcept>
#include <string>

namespace spg {

enum class errc {
    loop_edge,
    duplicate_edge,
    vertex_out_of_range,
    invalid_edge_id,
    budget_exceeded,
    parse_error,
    not_non_decreasing,
    partial_coloring,
    index_out_of_range,
    incompatible_target,
    invalid_coloring,
    inconsistent_pins,
    too_large,
    invalid_embedding,
    not_outerplane,
    infeasible_params,
    unknown_gadget,
    unknown_scheme,
    not_two_connected,
    not_subcubic,
    fallback_unsat,
    usage,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::loop_edge: return "LoopEdge";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::invalid_edge_id: return "InvalidEdgeId";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::parse_error: return "ParseError";
        case errc::not_non_decreasing: return "NotNonDecreasing";
        case errc::partial_coloring: return "PartialColoring";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::incompatible_target: return "IncompatibleTarget";
        case errc::invalid_coloring: return "InvalidColoring";
        case errc::inconsistent_pins: return "InconsistentPins";
        case errc::too_large: return "TooLarge";
        case errc::invalid_embedding: return "InvalidEmbedding";
        case errc::not_outerplane: return "NotOuterplane";
        case errc::infeasible_params: return "InfeasibleParams";
        case errc::unknown_gadget: return "UnknownGadget";
        case errc::unknown_scheme: return "UnknownScheme";
        case errc::not_two_connected: return "NotTwoConnected";
        case errc::not_subcubic: return "NotSubcubic";
        case errc::fallback_unsat: return "FallbackUnsat";
        case errc::usage: return "Usage";
    }
    return "Unknown";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace spg
