#include "polyrec/types.hpp"

namespace polyrec {

const char* errc_name(errc c) {
    switch (c) {
    case errc::bad_dimension: return "BadDimension";
    case errc::bad_index: return "BadIndex";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::not_polytopal: return "NotPolytopal";
    case errc::rank_out_of_range: return "RankOutOfRange";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::degree_too_low: return "DegreeTooLow";
    case errc::invalid_base: return "InvalidBase";
    case errc::unknown_fixture: return "UnknownFixture";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::unrecognized: return "Unrecognized";
    case errc::lemma_violated: return "LemmaViolated";
    case errc::excess_too_large: return "ExcessTooLarge";
    case errc::inconsistent_constraints: return "InconsistentConstraints";
    case errc::graph_mismatch: return "GraphMismatch";
    case errc::r_not_clique: return "RNotClique";
    case errc::not_balinski: return "NotBalinski";
    case errc::not_simple: return "NotSimple";
    case errc::core_unrecognized: return "CoreUnrecognized";
    case errc::validation_failed: return "ValidationFailed";
    case errc::no_completion: return "NoCompletion";
    case errc::ambiguous_completion: return "AmbiguousCompletion";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::parse_error: return "ParseError";
    case errc::unknown_suite: return "UnknownSuite";
    }
    return "Error";
}

bool lex_less(VertexSet a, VertexSet b) {
    // ascending vertex lists compare like the masks up to the point where
    // one is a prefix of the other; walk both from the low end
    while (!a.empty() && !b.empty()) {
        int x = a.lowest();
        int y = b.lowest();
        if (x != y) return x < y;
        a.erase(x);
        b.erase(y);
    }
    return !b.empty();
}

} // namespace polyrec
