#include "uhqft/io.hpp"

#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "uhqft/errors.hpp"

namespace uhqft {

namespace {

using nlohmann::json;

constexpr const char* kLineKey = "__line";

// Forward iterator over the text that counts the newlines it steps over.
class LineCountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  LineCountingIterator(const char* p, int* line) : p_(p), line_(line) {}
  reference operator*() const { return *p_; }
  LineCountingIterator& operator++() {
    if (*p_ == '\n') ++*line_;
    ++p_;
    return *this;
  }
  LineCountingIterator operator++(int) {
    auto old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const LineCountingIterator& a, const LineCountingIterator& b) { return a.p_ == b.p_; }

 private:
  const char* p_;
  int* line_;
};

int line_at_byte(std::string_view text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

// Parses JSON and records the starting line of every object under kLineKey.
json parse_with_lines(std::string_view text) {
  int line = 1;
  std::vector<int> starts;
  const json::parser_callback_t cb = [&](int, json::parse_event_t event, json& parsed) {
    if (event == json::parse_event_t::object_start) {
      starts.push_back(line);
    } else if (event == json::parse_event_t::object_end) {
      parsed[kLineKey] = starts.back();
      starts.pop_back();
    }
    return true;
  };
  try {
    return json::parse(LineCountingIterator(text.data(), &line),
                       LineCountingIterator(text.data() + text.size(), &line), cb);
  } catch (const json::parse_error& e) {
    const std::string what = e.what();
    const auto pos = what.find("parse error");
    throw ParseError(pos == std::string::npos ? what : what.substr(pos), line_at_byte(text, e.byte));
  }
}

int line_of(const json& j, int fallback) {
  if (j.is_object() && j.contains(kLineKey)) return j.at(kLineKey).get<int>();
  return fallback;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& what) {
  for (const auto& [key, value] : obj.items()) {
    if (key == kLineKey) continue;
    if (!allowed.count(key)) throw ParseError("unknown key '" + key + "' in " + what, line_of(obj, 0));
  }
}

long long get_integer(const json& j, const std::string& what, int line) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer", line);
  return j.get<long long>();
}

const json& require(const json& obj, const char* key, const std::string& what) {
  if (!obj.contains(key)) throw ParseError(what + " is missing \"" + key + "\"", line_of(obj, 0));
  return obj.at(key);
}

const json& require_array(const json& j, const std::string& what, int line) {
  if (!j.is_array()) throw ParseError(what + " must be a list", line);
  return j;
}

H1Label parse_label(const json& j, int k, const std::string& what, int line) {
  require_array(j, what, line);
  if (j.size() != static_cast<std::size_t>(k))
    throw ParseError(what + " has " + std::to_string(j.size()) + " coordinates, expected k = " + std::to_string(k),
                     line);
  H1Label l;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const long long v = get_integer(j[i], what + " coordinate", line);
    if (v != 0 && v != 1) throw ParseError(what + " coordinates must be 0 or 1", line);
    if (v == 1) l.bits |= 1u << i;
  }
  return l;
}

H1Label parse_label_key(const std::string& s, int k, int line) {
  if (s.size() != static_cast<std::size_t>(k))
    throw ParseError("label '" + s + "' must have " + std::to_string(k) + " digits", line);
  H1Label l;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw ParseError("label '" + s + "' must consist of 0 and 1", line);
    if (s[i] == '1') l.bits |= 1u << i;
  }
  return l;
}

BasisGenerator parse_gen(const std::string& s, int k, int line) {
  try {
    return parse_generator(s, k);
  } catch (const InputError& e) {
    throw ParseError(e.what(), line);
  }
}

AlgebraElement parse_element(const json& j, int k, const std::string& what, int line) {
  require_array(j, what, line);
  AlgebraElement out;
  for (const json& g : j) {
    if (!g.is_string()) throw ParseError(what + " entries must be generator names", line);
    out += AlgebraElement(parse_gen(g.get<std::string>(), k, line));
  }
  return out;
}

std::pair<BasisGenerator, BasisGenerator> parse_pair(const std::string& key, int k, int line) {
  const auto star = key.find('*');
  if (star == std::string::npos) throw ParseError("key '" + key + "' must have the form a*b", line);
  return {parse_gen(key.substr(0, star), k, line), parse_gen(key.substr(star + 1), k, line)};
}

AlgebraSpec parse_algebra_json(const json& obj) {
  const int line = line_of(obj, 0);
  if (!obj.is_object()) throw ParseError("algebra must be an object", line);
  check_keys(obj, {"k", "name", "base", "mult", "eta", "theta", "phi", "Phi"}, "algebra");
  const long long k = get_integer(require(obj, "k", "algebra"), "algebra k", line);
  if (k < 0 || k > kMaxAlgebraLabelDim)
    throw ParseError("algebra k must be in [0, " + std::to_string(kMaxAlgebraLabelDim) + "]", line);
  const int ki = static_cast<int>(k);
  std::string name = "custom";
  if (obj.contains("name")) {
    if (!obj.at("name").is_string()) throw ParseError("algebra name must be a string", line);
    name = obj.at("name").get<std::string>();
  }
  try {
    std::optional<AlgebraSpec::Builder> builder;
    if (obj.contains("base")) {
      if (!obj.at("base").is_string()) throw ParseError("algebra base must be a string", line);
      builder.emplace(AlgebraSpec::builtin(parse_algebra_name(obj.at("base").get<std::string>()), ki));
      builder->rename(name);
    } else {
      builder.emplace(ki, name);
    }
    const auto section = [&](const char* key) -> const json* {
      if (!obj.contains(key)) return nullptr;
      if (!obj.at(key).is_object()) throw ParseError(std::string("\"") + key + "\" must be an object", line);
      return &obj.at(key);
    };
    if (const json* mult = section("mult")) {
      for (const auto& [key, value] : mult->items()) {
        if (key == kLineKey) continue;
        const auto [a, b] = parse_pair(key, ki, line);
        builder->set_product(a, b, parse_element(value, ki, "product " + key, line));
      }
    }
    if (const json* eta = section("eta")) {
      for (const auto& [key, value] : eta->items()) {
        if (key == kLineKey) continue;
        const auto [a, b] = parse_pair(key, ki, line);
        const long long v = get_integer(value, "eta " + key, line);
        if (v != 0 && v != 1) throw ParseError("eta values must be 0 or 1", line);
        builder->set_eta(a, b, v == 1);
      }
    }
    if (const json* theta = section("theta")) {
      for (const auto& [key, value] : theta->items()) {
        if (key == kLineKey) continue;
        builder->set_theta(parse_label_key(key, ki, line), parse_element(value, ki, "theta " + key, line));
      }
    }
    if (const json* phi = section("phi")) {
      for (const auto& [key, value] : phi->items()) {
        if (key == kLineKey) continue;
        const H1Label beta = parse_label_key(key, ki, line);
        if (!value.is_object()) throw ParseError("phi entries must be objects", line);
        for (const auto& [gen, img] : value.items()) {
          if (gen == kLineKey) continue;
          builder->set_phi(beta, parse_gen(gen, ki, line), parse_element(img, ki, "phi " + key, line));
        }
      }
    }
    if (const json* Phi = section("Phi")) {
      for (const auto& [gen, img] : Phi->items()) {
        if (gen == kLineKey) continue;
        builder->set_Phi(parse_gen(gen, ki, line), parse_element(img, ki, "Phi " + gen, line));
      }
    }
    return builder->build();
  } catch (const InputError& e) {
    throw ParseError(e.what(), line);
  }
}

std::string label_json(H1Label l, int k) {
  std::string s = "[";
  for (int i = 0; i < k; ++i) {
    if (i > 0) s += ", ";
    s += l.coord(i) ? "1" : "0";
  }
  return s + "]";
}

}  // namespace

ParsedDiagram parse_diagram(std::string_view text) {
  const json root = parse_with_lines(text);
  if (!root.is_object()) throw ParseError("a diagram file must contain one JSON object", 1);
  const int root_line = line_of(root, 1);
  check_keys(root, {"k", "arcs", "crossings", "free_circles", "algebra"}, "diagram");
  const long long k = get_integer(require(root, "k", "diagram"), "k", root_line);
  if (k < 0 || k > kMaxLabelDim) throw ParseError("k must be in [0, " + std::to_string(kMaxLabelDim) + "]", root_line);
  const int ki = static_cast<int>(k);

  std::vector<Arc> arcs;
  std::map<std::uint32_t, int> arc_line;
  if (root.contains("arcs")) {
    for (const json& a : require_array(root.at("arcs"), "arcs", root_line)) {
      const int line = line_of(a, root_line);
      if (!a.is_object()) throw ParseError("each arc must be an object", line);
      check_keys(a, {"id", "label"}, "arc");
      const long long id = get_integer(require(a, "id", "arc"), "arc id", line);
      if (id < 0 || id > UINT32_MAX) throw ParseError("arc id out of range", line);
      if (!arc_line.emplace(static_cast<std::uint32_t>(id), line).second)
        throw ParseError("duplicate arc id " + std::to_string(id), line);
      arcs.push_back({static_cast<std::uint32_t>(id), parse_label(require(a, "label", "arc"), ki, "arc label", line)});
    }
  }

  std::vector<Crossing> crossings;
  std::map<std::pair<std::uint32_t, int>, int> used;
  if (root.contains("crossings")) {
    for (const json& c : require_array(root.at("crossings"), "crossings", root_line)) {
      const int line = line_of(c, root_line);
      if (!c.is_object()) throw ParseError("each crossing must be an object", line);
      check_keys(c, {"ends", "sign"}, "crossing");
      const json& ends = require_array(require(c, "ends", "crossing"), "crossing ends", line);
      if (ends.size() != 4) throw ParseError("a crossing needs exactly four ends", line);
      Crossing x;
      for (std::size_t s = 0; s < 4; ++s) {
        const json& pr = require_array(ends[s], "crossing end", line);
        if (pr.size() != 2) throw ParseError("a crossing end is a pair [arc, end]", line);
        const long long arc = get_integer(pr[0], "arc id", line);
        const long long end = get_integer(pr[1], "end index", line);
        if (arc < 0 || arc > UINT32_MAX || !arc_line.count(static_cast<std::uint32_t>(arc)))
          throw ParseError("crossing references unknown arc " + std::to_string(arc), line);
        if (end != 0 && end != 1) throw ParseError("end index must be 0 or 1", line);
        const std::pair<std::uint32_t, int> key{static_cast<std::uint32_t>(arc), static_cast<int>(end)};
        if (auto [it, fresh] = used.emplace(key, line); !fresh)
          throw ParseError("end " + std::to_string(end) + " of arc " + std::to_string(arc) +
                               " is already used by the crossing on line " + std::to_string(it->second),
                           line);
        x.ends[s] = ArcEnd{key.first, static_cast<std::uint8_t>(end)};
      }
      const long long sign = get_integer(require(c, "sign", "crossing"), "sign", line);
      if (sign != 1 && sign != -1) throw ParseError("sign must be 1 or -1", line);
      x.sign = static_cast<int>(sign);
      crossings.push_back(x);
    }
  }
  for (const auto& [id, line] : arc_line) {
    const bool e0 = used.count({id, 0}) > 0;
    const bool e1 = used.count({id, 1}) > 0;
    if (e0 != e1)
      throw ParseError("arc " + std::to_string(id) + " has a dangling end " + (e0 ? "1" : "0"), line);
  }

  std::vector<H1Label> free;
  if (root.contains("free_circles"))
    for (const json& l : require_array(root.at("free_circles"), "free_circles", root_line))
      free.push_back(parse_label(l, ki, "free circle label", root_line));

  ParsedDiagram out;
  try {
    out.diagram = SurfaceDiagram(ki, std::move(arcs), std::move(crossings), std::move(free));
  } catch (const InputError& e) {
    throw ParseError(e.what(), root_line);
  }
  if (root.contains("algebra")) {
    AlgebraSpec alg = parse_algebra_json(root.at("algebra"));
    if (alg.k() != ki)
      throw ParseError("algebra block has k = " + std::to_string(alg.k()) + ", diagram has k = " + std::to_string(ki),
                       line_of(root.at("algebra"), root_line));
    out.algebra = std::move(alg);
  }
  return out;
}

AlgebraSpec parse_algebra(std::string_view text) { return parse_algebra_json(parse_with_lines(text)); }

f2::Matrix parse_projection(std::string_view text) {
  std::vector<std::string> rows;
  std::vector<int> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::string bits;
    for (char c : raw) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c != '0' && c != '1') throw ParseError(std::string("unexpected character '") + c + "' in matrix", line);
      bits += c;
    }
    if (bits.empty()) continue;
    if (!rows.empty() && bits.size() != rows.front().size())
      throw ParseError("row has " + std::to_string(bits.size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       line);
    rows.push_back(bits);
    lines.push_back(line);
  }
  if (rows.empty()) throw ParseError("projection matrix has no rows", line);
  f2::Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c] == '1');
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

ParsedDiagram load_diagram(const std::string& path) { return parse_diagram(read_file(path)); }
AlgebraSpec load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }
f2::Matrix load_projection(const std::string& path) { return parse_projection(read_file(path)); }

std::string serialize_diagram(const SurfaceDiagram& d) {
  std::ostringstream out;
  out << "{\n  \"k\": " << d.k() << ",\n  \"arcs\": [";
  for (std::size_t i = 0; i < d.arcs().size(); ++i) {
    const Arc& a = d.arcs()[i];
    out << (i == 0 ? "\n" : ",\n") << "    {\"id\": " << a.id << ", \"label\": " << label_json(a.label, d.k()) << "}";
  }
  out << (d.arcs().empty() ? "]" : "\n  ]") << ",\n  \"crossings\": [";
  for (std::size_t i = 0; i < d.crossings().size(); ++i) {
    const Crossing& c = d.crossings()[i];
    out << (i == 0 ? "\n" : ",\n") << "    {\"ends\": [";
    for (std::size_t s = 0; s < 4; ++s)
      out << (s == 0 ? "" : ", ") << "[" << c.ends[s].arc << ", " << static_cast<int>(c.ends[s].end) << "]";
    out << "], \"sign\": " << c.sign << "}";
  }
  out << (d.crossings().empty() ? "]" : "\n  ]") << ",\n  \"free_circles\": [";
  for (std::size_t i = 0; i < d.free_circles().size(); ++i)
    out << (i == 0 ? "" : ", ") << label_json(d.free_circles()[i], d.k());
  out << "]\n}\n";
  return out.str();
}

}  // namespace uhqft
