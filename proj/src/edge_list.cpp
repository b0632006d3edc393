#include "opdiv/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "opdiv/error.hpp"

namespace opdiv {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

bool parse_int(const std::string& tok, int& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

} // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(std::move(tok));
    if (tokens.empty()) continue;
    if (tokens.size() != 2) parse_fail(line_no, "expected exactly two fields");

    if (n < 0) {
      if (tokens[0] != "n" || !parse_int(tokens[1], n) || n < 1) {
        parse_fail(line_no, "expected header `n <count>` with count >= 1");
      }
      continue;
    }
    Node u = 0, v = 0;
    if (!parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
      parse_fail(line_no, "expected two integer node labels");
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) throw Error(ErrorCode::ParseError, "missing header `n <count>`");
  return Graph(n, std::move(edges));
}

Graph read_edge_list(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string write_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.node_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

} // namespace opdiv
