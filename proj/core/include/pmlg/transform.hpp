#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pmlg/reduction.hpp"

namespace pmlg {

/// Variable-length binary code: c -> 0000, d -> 1111, b -> 10, e -> 01.
std::string encode_symbol(char symbol);
std::string encode_alpha(std::string_view text);

struct EncodingTableReport {
  int cases_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Exhaustive sweep of the code's synchronization properties: over all 64
/// length-3 strings on {b,e,c,d}, the encoding contains 0110 iff the string
/// contains "eb"; and no length-3 shape that can occur in a revised pattern
/// encodes to contain 1001.
EncodingTableReport verify_encoding_table();

/// Revised pattern: "eb", then per block d^{n/2}, the block's symbols with
/// "dd" between consecutive ones, d^{n/2}, "eb".
std::string build_revised_pattern(const std::string& base_pattern, int n, int k);

/// Degree-3 form: the b/e fans of the formula gadget become uniform-depth
/// binary trees of d-labeled dummies (every root-to-leaf path has exactly
/// n/2 of them), every consecutive column pair in every row gains a 2-dummy
/// chain, the universal gadget gains n/2-dummy chains next to each b_i/e_i,
/// and the pattern is revised to match. Input must be the Base variant.
ReductionArtifacts to_degree3(const ReductionArtifacts& base);

/// Binary-alphabet form: every label is replaced by its code image and split
/// into a chain of 2 or 4 single-bit nodes (cross edges follow the
/// construction's left-to-right orientation, keeping degree <= 3); the
/// pattern becomes its code image. Input must be the Degree3 variant.
ReductionArtifacts encode_binary(const ReductionArtifacts& deg3);

/// Orients every edge left-to-right in construction order, yielding an
/// acyclic directed graph with indegree+outdegree <= 3 per node. Input must
/// be the Degree3 or Binary variant.
ReductionArtifacts orient_dag(const ReductionArtifacts& art);

}  // namespace pmlg
