#include "nqga/tuple_io.hpp"

#include <charconv>
#include <vector>

#include "nqga/error.hpp"

namespace nqga {

namespace {

constexpr std::string_view kSpace = " \t\r\n";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

int parse_element(std::string_view token, std::size_t position) {
  if (token.empty()) throw ParseError(position, std::string(token), "empty element");
  int value = 0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(position, std::string(token), "integer out of range");
  }
  if (ec != std::errc() || ptr != end || begin == end) {
    throw ParseError(position, std::string(token), "not a base-10 integer");
  }
  return value;
}

}  // namespace

Chromosome parse_tuple(std::string_view text) {
  std::string_view body = trim(text);
  const bool open = !body.empty() && body.front() == '(';
  const bool close = !body.empty() && body.back() == ')';
  if (open != close) {
    throw ParseError(1, std::string(body), "unbalanced parentheses");
  }
  if (open) body = trim(body.substr(1, body.size() - 2));
  if (body.empty()) throw ParseError(1, "", "empty tuple");

  std::vector<int> genes;
  std::size_t position = 1;
  while (true) {
    const auto comma = body.find(',');
    genes.push_back(parse_element(trim(body.substr(0, comma)), position));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    ++position;
  }
  return Chromosome(std::move(genes));
}

std::string format_tuple(const Chromosome& chrom) {
  std::string out;
  for (int g : chrom.genes()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(g);
  }
  return out;
}

std::string render_board(const Chromosome& chrom, int cap) {
  const int n = chrom.size();
  if (n > cap) {
    throw RenderLimitError("board of size " + std::to_string(n) + " exceeds render cap " +
                           std::to_string(cap));
  }
  std::string out;
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(2 * n));
  for (int row = n; row >= 1; --row) {
    for (int col = 1; col <= n; ++col) {
      if (col > 1) out.push_back(' ');
      out.push_back(chrom.row_of(col) == row ? 'Q' : '.');
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace nqga
