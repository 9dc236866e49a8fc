#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cleangraph/ring.hpp"

namespace cleangraph {

// Vertex (e, u): e a nonzero idempotent (0 included only in the full variant),
// u a unit. Distinct vertices are adjacent iff e*f = 0 (mod n) or u*v = 1 (mod n).
struct vertex {
    std::uint64_t e = 0;
    std::uint64_t u = 0;

    friend bool operator==(const vertex&, const vertex&) = default;
    friend auto operator<=>(const vertex&, const vertex&) = default;
};

// Contiguous run of vertices sharing one idempotent, in storage order.
struct block {
    std::uint64_t e = 0;
    std::uint32_t begin = 0;
    std::uint32_t end = 0;  // one past the last vertex index

    friend bool operator==(const block&, const block&) = default;
};

inline constexpr std::uint32_t default_vertex_cap = 50000;

struct build_options {
    bool include_zero_block = false;  // also admit e = 0 (adjacent to everything)
    std::uint32_t vertex_cap = default_vertex_cap;
};

class size_limit_error : public std::runtime_error {
  public:
    size_limit_error(std::uint64_t vertices, std::uint64_t cap)
        : std::runtime_error("graph would have " + std::to_string(vertices) +
                             " vertices, above the cap of " + std::to_string(cap)),
          vertices_(vertices),
          cap_(cap) {}

    std::uint64_t vertices() const { return vertices_; }
    std::uint64_t cap() const { return cap_; }

  private:
    std::uint64_t vertices_;
    std::uint64_t cap_;
};

class clean_graph {
  public:
    std::uint64_t n() const { return ring_.fact.n; }
    const ring_data& ring() const { return ring_; }
    bool has_zero_block() const { return has_zero_block_; }

    std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(vertices_.size()); }
    std::uint64_t edge_count() const { return edge_count_; }

    const std::vector<vertex>& vertices() const { return vertices_; }
    const std::vector<block>& blocks() const { return blocks_; }

    std::uint32_t block_of(std::uint32_t v) const { return block_of_[v]; }

    // Units are block-major with identical unit order per block, so a vertex
    // is (block, unit slot).
    std::uint32_t unit_slot(std::uint32_t v) const { return v % phi_; }
    std::uint32_t inverse_slot(std::uint32_t slot) const { return inverse_slot_[slot]; }

    bool zero_product(std::uint32_t block_a, std::uint32_t block_b) const {
        return zero_product_[block_a * blocks_.size() + block_b];
    }

    bool adjacent(std::uint32_t a, std::uint32_t b) const;
    std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
        return {adj_targets_.data() + adj_offsets_[v], adj_offsets_[v + 1] - adj_offsets_[v]};
    }

    // Structural equality: same n, variant, vertices, blocks and edge set.
    friend bool operator==(const clean_graph& a, const clean_graph& b);

  private:
    friend clean_graph build_cl2(std::uint64_t, const build_options&);

    ring_data ring_;
    bool has_zero_block_ = false;
    std::uint32_t phi_ = 0;  // units per block
    std::vector<vertex> vertices_;
    std::vector<block> blocks_;
    std::vector<std::uint32_t> block_of_;
    std::vector<std::uint32_t> inverse_slot_;
    std::vector<char> zero_product_;  // blocks x blocks
    std::uint64_t edge_count_ = 0;
    std::vector<std::uint64_t> adj_offsets_;   // CSR, sorted targets
    std::vector<std::uint32_t> adj_targets_;
    std::vector<std::uint64_t> adj_bits_;      // packed symmetric matrix when V <= 4096
    std::uint32_t bit_stride_ = 0;
};

// Builds Cl2(Z_n); requires n >= 2, throws size_limit_error when the vertex
// count would exceed options.vertex_cap.
clean_graph build_cl2(std::uint64_t n, const build_options& options = {});

// Deterministic serializations. Vertices keep storage order; edges are listed
// once as index pairs (i, j), i < j, ascending.
std::string to_dot(const clean_graph& g);
std::string to_edge_csv(const clean_graph& g);
std::string to_json_string(const clean_graph& g);

// Rebuilds the graph named by a JSON document and verifies the document's
// vertex/block/edge content against it; throws std::runtime_error on any
// mismatch, so parse(serialize(g)) == g is an identity, not a coincidence.
clean_graph graph_from_json_string(std::string_view text,
                                   std::uint32_t vertex_cap = default_vertex_cap);

}  // namespace cleangraph
