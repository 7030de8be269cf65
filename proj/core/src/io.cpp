#include "signhom/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace signhom {

ParseError::ParseError(int line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_int(std::string_view token, int& out) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

SignedGraph read_sg(std::string_view text) {
  int line_no = 0;
  int order = -1;
  std::string name;
  std::vector<Edge> edges;
  std::vector<std::vector<char>> seen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    const std::string_view line = trim(text.substr(pos, next - pos));
    pos = next + 1;
    ++line_no;

    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kNameTag = "# name:";
      if (line.starts_with(kNameTag)) {
        name = std::string(trim(line.substr(kNameTag.size())));
      }
      continue;
    }

    const auto tokens = split_ws(line);
    if (order < 0) {
      if (tokens.size() != 2 || tokens[0] != "sg" ||
          !parse_int(tokens[1], order) || order < 0) {
        throw ParseError(line_no, "malformed header, expected 'sg <n>'");
      }
      seen.assign(order, std::vector<char>(order, 0));
      continue;
    }

    int u = 0;
    int v = 0;
    if (tokens.size() != 3 || !parse_int(tokens[0], u) ||
        !parse_int(tokens[1], v) ||
        (tokens[2] != "+" && tokens[2] != "-")) {
      throw ParseError(line_no, "malformed edge, expected '<u> <v> <+|->'");
    }
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw ParseError(line_no, "vertex index out of range");
    }
    if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
    if (u > v) throw ParseError(line_no, "edge endpoints must satisfy u < v");
    if (seen[u][v]) {
      throw ParseError(line_no, "duplicate edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
    }
    seen[u][v] = 1;
    edges.push_back(
        {u, v, tokens[2] == "+" ? Sign::kPositive : Sign::kNegative});
  }
  if (order < 0) throw ParseError(line_no, "missing 'sg <n>' header");
  return SignedGraph(order, edges, std::move(name));
}

std::string write_sg(const SignedGraph& g) {
  std::ostringstream out;
  out << "sg " << g.order() << '\n';
  if (!g.name().empty()) out << "# name: " << g.name() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << to_char(e.sign) << '\n';
  }
  return out.str();
}

SignedGraph load_sg(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_sg(buffer.str());
}

void save_sg(const std::filesystem::path& path, const SignedGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << write_sg(g);
}

std::string export_dot(const SignedGraph& g) {
  std::ostringstream out;
  if (g.order() == 0) return "graph { }\n";
  out << "graph ";
  if (!g.name().empty()) out << '"' << g.name() << "\" ";
  out << "{\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v << " [style="
        << (e.sign == Sign::kPositive ? "solid" : "dashed") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace signhom
