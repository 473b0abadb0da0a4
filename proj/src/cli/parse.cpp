#include "lyu/cli/parse.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lyu/errors.hpp"

namespace lyu::cli {

namespace {

class IdealParser {
 public:
  explicit IdealParser(std::string_view text) : text_(text) {}

  std::vector<std::vector<std::pair<std::size_t, int>>> parse() {
    std::vector<std::vector<std::pair<std::size_t, int>>> gens;
    skip_ws();
    if (at_end()) throw ParseError(pos_, "generator", "empty generator list");
    for (;;) {
      gens.push_back(generator());
      skip_ws();
      if (at_end()) break;
      expect(',', "',' or end of input");
    }
    return gens;
  }

 private:
  std::vector<std::pair<std::size_t, int>> generator() {
    std::vector<std::pair<std::size_t, int>> factors{factor()};
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') return factors;
      ++pos_;
      factors.push_back(factor());
    }
  }

  std::pair<std::size_t, int> factor() {
    skip_ws();
    if (at_end() || peek() != 'x') throw ParseError(pos_, "variable 'x<k>'", "syntax error");
    ++pos_;
    const auto at = pos_;
    const long index = number("variable index");
    if (index == 0) throw ParseError(at, "index >= 1", "variable index 0");
    int exp = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      exp = static_cast<int>(number("exponent"));
    }
    return {static_cast<std::size_t>(index - 1), exp};
  }

  long number(const char* what) {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, what, "syntax error");
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 100000) throw ParseError(pos_, what, "number too large");
      ++pos_;
    }
    return v;
  }

  void expect(char c, const char* what) {
    if (at_end() || peek() != c) throw ParseError(pos_, what, "syntax error");
    ++pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> nvars) {
  const auto gens = IdealParser(text).parse();
  std::size_t max_index = 0;
  for (const auto& g : gens)
    for (auto [i, e] : g) max_index = std::max(max_index, i + 1);
  const std::size_t n = nvars.value_or(max_index);
  if (n < max_index)
    throw DomainError("--vars " + std::to_string(n) + " is smaller than the largest index x" + std::to_string(max_index));
  VariableContext ctx(n);
  std::vector<Monomial> monomials;
  for (const auto& g : gens) {
    std::vector<int> exps(n, 0);
    for (auto [i, e] : g) exps[i] += e;
    monomials.emplace_back(std::move(exps));
  }
  return MonomialIdeal(ctx, std::move(monomials));
}

Graph parse_graph(std::istream& in) {
  std::string line;
  std::optional<int> n;
  std::vector<Graph::Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long> nums;
    long v;
    while (ls >> v) nums.push_back(v);
    if (!ls.eof()) throw ParseError(0, "integers", "graph file line " + std::to_string(lineno) + ": not a number");
    if (nums.empty()) continue;
    if (!n) {
      if (nums.size() != 1) throw ParseError(0, "vertex count", "graph file line " + std::to_string(lineno));
      n = static_cast<int>(nums[0]);
      continue;
    }
    if (nums.size() != 2) throw ParseError(0, "'u v'", "graph file line " + std::to_string(lineno));
    edges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
  }
  if (!n) throw ParseError(0, "vertex count", "empty graph file");
  return Graph(*n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open graph file " + path);
  return parse_graph(in);
}

MonomialIdeal resolve_input(const std::string& input, std::optional<std::size_t> nvars) {
  if (input.rfind("cycle:", 0) == 0) {
    const auto arg = input.substr(6);
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(6, "cycle length", "bad cycle shorthand");
    return edge_ideal(cycle(std::stoi(arg)));
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) return edge_ideal(read_graph_file(input));
  return parse_ideal(input, nvars);
}

}  // namespace lyu::cli
