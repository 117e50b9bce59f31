#pragma once

#include <string>
#include <string_view>

#include "nqga/chromosome.hpp"

namespace nqga {

inline constexpr int kDefaultRenderCap = 200;

/// Parses "c1,c2,...,cN", optionally wrapped in parentheses. Whitespace (including
/// newlines and tabs) around elements is ignored.
/// Throws ParseError for a malformed element and PermutationError for a non-permutation.
Chromosome parse_tuple(std::string_view text);

/// "c1,c2,...,cN" with no spaces, no parentheses, no trailing newline.
std::string format_tuple(const Chromosome& chrom);

/// Text board, one line per row from row N (top) down to row 1. 'Q' marks a queen,
/// '.' an empty square; cells are separated by single spaces.
/// Throws RenderLimitError when the board is wider than `cap`.
std::string render_board(const Chromosome& chrom, int cap = kDefaultRenderCap);

}  // namespace nqga
