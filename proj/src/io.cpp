#include "gdh/io.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdh {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& message) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + message);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const Line& line, const std::string& tok) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(line.number, "expected an integer, got '" + tok + "'");
  }
}

Gdh parse_gdh_lines(const std::vector<Line>& lines, std::size_t lo,
                    std::size_t hi, const Theory& theory) {
  if (lo >= hi) throw std::invalid_argument("empty graph record");
  const Line& head = lines[lo];
  if (head.tokens.size() != 2 || head.tokens[0] != "n")
    fail(head.number, "expected 'n <count>'");
  const int n = parse_int(head, head.tokens[1]);
  if (n < 0) fail(head.number, "vertex count must be nonnegative");
  GdhBuilder b(theory, n);
  const int r = theory.arity();
  for (std::size_t i = lo + 1; i < hi; ++i) {
    const Line& line = lines[i];
    if (static_cast<int>(line.tokens.size()) != r)
      fail(line.number, "edge line must list exactly " + std::to_string(r) +
                            " vertex ids");
    std::vector<int> tuple;
    tuple.reserve(r);
    for (const auto& tok : line.tokens) tuple.push_back(parse_int(line, tok));
    try {
      b.add(tuple);
    } catch (const std::invalid_argument& e) {
      fail(line.number, e.what());
    }
  }
  return b.build();
}

}  // namespace

Theory parse_theory(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw std::invalid_argument("empty theory record");
  const Line& head = lines[0];
  if (head.tokens.size() != 2 || head.tokens[0] != "r")
    fail(head.number, "expected 'r <arity>'");
  const int r = parse_int(head, head.tokens[1]);
  if (r < 1 || r > 8) fail(head.number, "arity must be in [1, 8]");
  std::vector<Perm> generators;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "gen")
      fail(line.number, "expected 'gen <images...>'");
    if (static_cast<int>(line.tokens.size()) != r + 1)
      fail(line.number,
           "generator must list " + std::to_string(r) + " images");
    std::vector<int> images;
    for (std::size_t j = 1; j < line.tokens.size(); ++j)
      images.push_back(parse_int(line, line.tokens[j]));
    try {
      generators.emplace_back(std::move(images));
    } catch (const std::invalid_argument& e) {
      fail(line.number, e.what());
    }
  }
  return Theory(closure(r, generators));
}

std::string serialize_theory(const Theory& theory) {
  std::ostringstream out;
  out << "r " << theory.arity() << "\n";
  for (const auto& p : theory.group().elements()) {
    if (p.is_identity()) continue;
    out << "gen";
    for (int v : p.images()) out << ' ' << v;
    out << "\n";
  }
  return out.str();
}

Gdh parse_gdh(std::string_view text, const Theory& theory) {
  const auto lines = tokenize(text);
  return parse_gdh_lines(lines, 0, lines.size(), theory);
}

std::string serialize_gdh(const Gdh& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const auto& t : g.edges()) {
    for (std::size_t i = 0; i < t.size(); ++i)
      out << (i ? " " : "") << t[i];
    out << "\n";
  }
  return out.str();
}

Family parse_family(std::string_view text, const Theory& theory) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw std::invalid_argument("empty family record");
  const Line& head = lines[0];
  if (head.tokens.size() != 2 || head.tokens[0] != "family")
    fail(head.number, "expected 'family <count>'");
  const int count = parse_int(head, head.tokens[1]);
  if (count < 0) fail(head.number, "member count must be nonnegative");

  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::size_t begin = 1;
  for (std::size_t i = 1; i <= lines.size(); ++i) {
    const bool sep = i < lines.size() && lines[i].tokens.size() == 1 &&
                     lines[i].tokens[0] == "---";
    if (sep || i == lines.size()) {
      if (i > begin) spans.emplace_back(begin, i);
      begin = i + 1;
    }
  }
  if (static_cast<int>(spans.size()) != count)
    fail(head.number, "family declares " + std::to_string(count) +
                          " members but contains " +
                          std::to_string(spans.size()));
  Family fam(theory);
  for (auto [lo, hi] : spans)
    fam.members.push_back(parse_gdh_lines(lines, lo, hi, theory));
  return fam;
}

std::string serialize_family(const Family& family) {
  std::ostringstream out;
  out << "family " << family.members.size() << "\n";
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    if (i) out << "---\n";
    out << serialize_gdh(family.members[i]);
  }
  return out.str();
}

}  // namespace gdh
