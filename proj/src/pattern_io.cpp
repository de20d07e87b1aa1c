#include "mpat/pattern_io.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace mpat {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> split(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int to_int(const Token& t, int line) {
  if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(line, t.column, "expected a non-negative integer, found '" + t.text + "'");
  if (t.text.size() > 9) throw ParseError(line, t.column, "integer too large");
  return std::stoi(t.text);
}

}  // namespace

Tensor01 parse_pattern(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_nonblank = [&](std::vector<Token>& toks) {
    while (std::getline(in, line)) {
      ++lineno;
      toks = split(line);
      if (!toks.empty()) return true;
    }
    return false;
  };
  std::vector<Token> toks;
  if (!next_nonblank(toks) || toks[0].text != "dims:") throw ParseError(std::max(lineno, 1), 1, "expected 'dims:'");
  if (toks.size() < 2) throw ParseError(lineno, static_cast<int>(line.size()) + 1, "'dims:' needs at least one side length");
  if (toks.size() - 1 > kMaxDims) throw ParseError(lineno, toks[kMaxDims + 1].column, "more than 8 dimensions");
  Shape dims;
  for (std::size_t k = 1; k < toks.size(); ++k) {
    const int v = to_int(toks[k], lineno);
    if (v < 1) throw ParseError(lineno, toks[k].column, "side lengths must be positive");
    dims.push_back(v);
  }
  std::uint64_t cells = 1;
  for (int v : dims) {
    cells *= static_cast<std::uint64_t>(v);
    if (cells > kMaxCells) throw ParseError(lineno, 1, "tensor exceeds 2^32 cells");
  }
  if (!next_nonblank(toks) || toks.size() != 1 || toks[0].text != "ones:")
    throw ParseError(lineno, toks.empty() ? 1 : toks[0].column, "expected 'ones:'");
  TensorBuilder b(dims);
  while (next_nonblank(toks)) {
    if (static_cast<int>(toks.size()) != dims.size())
      throw ParseError(lineno, toks.front().column,
                       "expected " + std::to_string(dims.size()) + " coordinates, found " + std::to_string(toks.size()));
    Coord c;
    for (std::size_t k = 0; k < toks.size(); ++k) {
      const int v = to_int(toks[k], lineno);
      if (v < 1 || v > dims[static_cast<int>(k)])
        throw ParseError(lineno, toks[k].column, "coordinate " + toks[k].text + " out of range");
      c.push_back(v);
    }
    if (b.get(c)) throw ParseError(lineno, toks.front().column, "duplicate coordinate " + to_string(c));
    b.set(c);
  }
  return std::move(b).build();
}

std::string serialize_pattern(const Tensor01& t) {
  std::ostringstream os;
  os << "dims:";
  for (int v : t.dims()) os << ' ' << v;
  os << "\nones:\n";
  for (const Coord& c : t.ones()) {
    for (int i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << '\n';
  }
  return os.str();
}

nlohmann::json tensor_to_json(const Tensor01& t) {
  nlohmann::json ones = nlohmann::json::array();
  for (const Coord& c : t.ones()) ones.push_back(std::vector<int>(c.begin(), c.end()));
  return {{"dims", std::vector<int>(t.dims().begin(), t.dims().end())}, {"ones", ones}};
}

Tensor01 tensor_from_json(const nlohmann::json& j) {
  const auto dims_v = j.at("dims").get<std::vector<int>>();
  if (dims_v.empty()) throw std::invalid_argument("empty dims vector");
  const Shape dims{std::span<const int>(dims_v)};
  std::vector<Coord> ones;
  for (const auto& c : j.at("ones")) {
    const auto v = c.get<std::vector<int>>();
    if (v.size() != dims_v.size()) throw std::invalid_argument("coordinate length does not match dims");
    ones.emplace_back(std::span<const int>(v));
  }
  return make_tensor(dims, ones);
}

nlohmann::json family_to_json(const Family& fam) {
  nlohmann::json pats = nlohmann::json::array();
  for (const Tensor01& p : fam) pats.push_back(tensor_to_json(p));
  return {{"d", fam.rank()}, {"patterns", pats}};
}

Family family_from_json(const nlohmann::json& j) {
  const int d = j.at("d").get<int>();
  std::vector<Tensor01> pats;
  for (const auto& p : j.at("patterns")) {
    pats.push_back(tensor_from_json(p));
    if (pats.back().rank() != d) throw std::invalid_argument("pattern dimensionality differs from \"d\"");
  }
  return Family(std::move(pats));
}

std::string family_hash(const Family& fam) {
  const std::string canon = family_to_json(fam).dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(canon.data(), canon.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

Tensor01 load_pattern(const std::string& path) { return parse_pattern(slurp(path)); }

Family load_family(const std::string& path) {
  const std::string text = slurp(path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return family_from_json(nlohmann::json::parse(text));
  return Family{parse_pattern(text)};
}

}  // namespace mpat
