#include "pvc4/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pvc4::io {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_int(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

GraphFile parse(std::string_view text) {
  GraphFile file;
  bool have_header = false;
  long long declared_edges = 0;
  long long n = 0;
  int line_no = 0;
  int last_line = 0;

  auto vertex = [&](std::string_view token, int line) {
    auto id = to_int(token);
    if (!id) throw ParseError(line, "bad vertex id '" + std::string(token) + "'");
    if (*id < 1 || *id > n) throw ParseError(line, "vertex id " + std::to_string(*id) + " out of range 1.." + std::to_string(n));
    return static_cast<VertexId>(*id - 1);
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    auto words = split_words(raw);
    if (words.empty()) continue;
    last_line = line_no;
    const std::string_view tag = words[0];

    if (tag == "c") {
      std::string_view body = raw.substr(raw.find('c') + 1);
      if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      file.comments.emplace_back(body);
    } else if (tag == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (words.size() != 4 || words[1] != "pvc4") throw ParseError(line_no, "malformed header, expected 'p pvc4 <n> <m>'");
      auto nv = to_int(words[2]);
      auto mv = to_int(words[3]);
      if (!nv || !mv || *nv < 0 || *mv < 0) throw ParseError(line_no, "malformed header counts");
      n = *nv;
      declared_edges = *mv;
      file.graph = Graph(static_cast<std::size_t>(n));
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      if (words.size() != 3) throw ParseError(line_no, "malformed edge, expected 'e <u> <v>'");
      const VertexId u = vertex(words[1], line_no);
      const VertexId v = vertex(words[2], line_no);
      if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u + 1));
      if (!file.graph.add_edge(u, v)) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
      }
    } else if (tag == "v1") {
      if (!have_header) throw ParseError(line_no, "v1 line before header");
      if (words.size() != 2) throw ParseError(line_no, "malformed v1 line, expected 'v1 <u>'");
      const VertexId u = vertex(words[1], line_no);
      if (set_contains(file.v1, u)) throw ParseError(line_no, "duplicate v1 vertex " + std::to_string(u + 1));
      file.v1 = set_insert(file.v1, u);
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tag) + "'");
    }
  }
  if (!have_header) throw ParseError(std::max(last_line, 1), "missing header 'p pvc4 <n> <m>'");
  if (static_cast<long long>(file.graph.num_edges()) != declared_edges) {
    throw ParseError(last_line, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                    std::to_string(file.graph.num_edges()));
  }
  return file;
}

std::string render(const GraphFile& file) {
  const Graph& g = file.graph;
  if (g.num_vertices() != g.capacity()) throw std::invalid_argument("render: graph has removed vertices");
  std::ostringstream out;
  for (const auto& c : file.comments) out << (c.empty() ? "c" : "c " + c) << '\n';
  out << "p pvc4 " << g.capacity() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  for (VertexId v : file.v1) {
    if (!g.is_live(v)) throw std::invalid_argument("render: v1 vertex out of range");
    out << "v1 " << v + 1 << '\n';
  }
  return out.str();
}

std::optional<std::string> metadata_value(const GraphFile& file, std::string_view key) {
  for (const auto& c : file.comments) {
    for (auto word : split_words(c)) {
      if (word.size() > key.size() && word.substr(0, key.size()) == key && word[key.size()] == '=') {
        return std::string(word.substr(key.size() + 1));
      }
    }
  }
  return std::nullopt;
}

GraphFile read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_file(const std::string& path, const GraphFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << render(file);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace pvc4::io
