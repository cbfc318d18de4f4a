#include "spqg/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "spqg/catalog.hpp"

namespace spqg {

namespace {

std::uint32_t json_count(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw Error(ErrorCode::Parse, std::string("missing integer field '") + key + "'");
  const auto v = j[key].get<std::int64_t>();
  if (v < 0) throw Error(ErrorCode::Range, std::string("field '") + key + "' is negative");
  return std::uint32_t(v);
}

PointRef point_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_string() || !j[1].is_number_integer() ||
      !j[2].is_number_integer())
    throw Error(ErrorCode::Parse, "point must be [\"u\"|\"l\", col, level], got " + j.dump());
  const auto side = j[0].get<std::string>();
  if (side != "u" && side != "l") throw Error(ErrorCode::Parse, "point side must be \"u\" or \"l\"");
  const auto col = j[1].get<std::int64_t>(), level = j[2].get<std::int64_t>();
  if (col < 1 || level < 1) throw Error(ErrorCode::Range, "point coordinates start at 1");
  return {side == "u" ? Side::Upper : Side::Lower, std::uint32_t(col), std::uint32_t(level)};
}

class TextParser {
 public:
  explicit TextParser(std::string_view s) : s_(s) {}

  SpatialPartition parse() {
    skip_ws();
    expect('P');
    expect('(');
    const auto k = number();
    expect(',');
    const auto l = number();
    expect(';');
    const auto m = number();
    expect(')');
    expect('{');
    std::vector<SpatialPartition::Block> blocks;
    skip_ws();
    if (peek() != '}') {
      blocks.emplace_back();
      while (true) {
        blocks.back().push_back(point());
        skip_ws();
        const char c = next();
        if (c == ',') continue;
        if (c == '|') {
          blocks.emplace_back();
          continue;
        }
        if (c == '}') break;
        fail("expected ',', '|' or '}'");
      }
    } else {
      next();
    }
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return SpatialPartition::from_blocks(k, l, m, blocks);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, what + " at offset " + std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char next() {
    if (pos_ >= s_.size()) fail("unexpected end of input");
    return s_[pos_++];
  }
  void expect(char c) {
    skip_ws();
    if (next() != c) fail(std::string("expected '") + c + "'");
  }
  std::uint32_t number() {
    skip_ws();
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected a number");
    pos_ = std::size_t(ptr - s_.data());
    return v;
  }
  PointRef point() {
    skip_ws();
    const char c = next();
    if (c != 'u' && c != 'l') fail("expected point starting with 'u' or 'l'");
    const auto col = number();
    expect('.');
    const auto level = number();
    if (col < 1 || level < 1) throw Error(ErrorCode::Range, "point coordinates start at 1");
    return {c == 'u' ? Side::Upper : Side::Lower, col, level};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

char block_letter(std::size_t b) {
  static const char* kLetters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  return b < 52 ? kLetters[b] : '#';
}

}  // namespace

nlohmann::json to_json(const SpatialPartition& p) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& block : p.blocks()) {
    nlohmann::json jb = nlohmann::json::array();
    for (const auto& pt : block) jb.push_back({pt.side == Side::Upper ? "u" : "l", pt.col, pt.level});
    blocks.push_back(std::move(jb));
  }
  return {{"k", p.k()}, {"l", p.l()}, {"m", p.m()}, {"blocks", std::move(blocks)}};
}

SpatialPartition partition_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "partition JSON must be an object");
  const auto k = json_count(j, "k"), l = json_count(j, "l"), m = json_count(j, "m");
  if (!j.contains("blocks") || !j["blocks"].is_array())
    throw Error(ErrorCode::Parse, "missing array field 'blocks'");
  std::vector<SpatialPartition::Block> blocks;
  for (const auto& jb : j["blocks"]) {
    if (!jb.is_array()) throw Error(ErrorCode::Parse, "each block must be an array of points");
    auto& block = blocks.emplace_back();
    for (const auto& jp : jb) block.push_back(point_from_json(jp));
  }
  return SpatialPartition::from_blocks(k, l, m, blocks);
}

std::string to_text(const SpatialPartition& p) {
  std::ostringstream out;
  out << "P(" << p.k() << "," << p.l() << ";" << p.m() << "){";
  bool first_block = true;
  for (const auto& block : p.blocks()) {
    if (!first_block) out << "|";
    first_block = false;
    bool first = true;
    for (const auto& pt : block) {
      if (!first) out << ",";
      first = false;
      out << (pt.side == Side::Upper ? 'u' : 'l') << pt.col << "." << pt.level;
    }
  }
  out << "}";
  return out.str();
}

SpatialPartition parse_text(std::string_view text) { return TextParser(text).parse(); }

std::string render_ascii(const SpatialPartition& p) {
  const auto flat = flatten(p);
  const auto labels = flat.labels();
  const std::uint32_t m = p.m();
  std::ostringstream out;
  auto row = [&](const char* name, std::size_t begin, std::uint32_t cols) {
    out << name;
    for (std::uint32_t c = 0; c < cols; ++c) {
      out << ' ';
      for (std::uint32_t y = 0; y < m; ++y) out << block_letter(labels[begin + std::size_t(c) * m + y]);
    }
    out << '\n';
  };
  row("upper:", 0, p.k());
  row("lower:", p.upper_point_count(), p.l());
  return out.str();
}

SpatialPartition parse_partition(std::string_view input) {
  std::size_t i = 0;
  while (i < input.size() && std::isspace(static_cast<unsigned char>(input[i]))) ++i;
  const auto body = input.substr(i);
  if (body.empty()) throw Error(ErrorCode::Parse, "empty partition description");
  if (body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Parse, e.what());
    }
    return partition_from_json(j);
  }
  if (body.front() == 'P' && body.size() > 1 && body[1] == '(') return parse_text(body);
  std::string name(body);
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
  return catalog::named(name);
}

}  // namespace spqg
