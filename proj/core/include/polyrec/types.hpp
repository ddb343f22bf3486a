#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyrec {

enum class errc {
    bad_dimension,
    bad_index,
    degenerate_input,
    not_polytopal,
    rank_out_of_range,
    rank_mismatch,
    degree_too_low,
    invalid_base,
    unknown_fixture,
    hypothesis_violated,
    unrecognized,
    lemma_violated,
    excess_too_large,
    inconsistent_constraints,
    graph_mismatch,
    r_not_clique,
    not_balinski,
    not_simple,
    core_unrecognized,
    validation_failed,
    no_completion,
    ambiguous_completion,
    budget_exceeded,
    parse_error,
    unknown_suite,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Subset of vertices 0..63 as a bitmask.  All polytopes handled here are
// far below that bound; the constructor of VertexFacetIncidence enforces it.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    // lowest vertex, or -1 when empty
    constexpr int lowest() const { return bits_ ? std::countr_zero(bits_) : -1; }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }

    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }
    // mask order; see lex_less for the list order used in canonical output
    friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }

    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v : *this) out.push_back(v);
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

// ascending-vertex-list lexicographic order (the order used for facet lists)
bool lex_less(VertexSet a, VertexSet b);

} // namespace polyrec
