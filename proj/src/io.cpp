#include "spq/io.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

namespace spq {

namespace {

std::vector<std::int64_t> int_array(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array()) throw ParseError(std::string("missing integer array \"") + field + "\"");
  std::vector<std::int64_t> out;
  for (const auto& v : j.at(field)) {
    if (!v.is_number_integer()) throw ParseError(std::string("non-integer entry in \"") + field + "\"");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) throw ParseError("not an integer: '" + std::string(s) + "'");
  return v;
}

std::vector<std::int64_t> parse_int_list(std::string_view s) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

RotationData rotation_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("space must be a JSON object");
  RawRotationData raw;
  if (!j.contains("p") || !j.at("p").is_number_integer()) throw ParseError("missing integer \"p\"");
  raw.p = j.at("p").get<std::int64_t>();
  raw.R = int_array(j, "R");
  raw.Q = int_array(j, "Q");
  if (j.contains("n")) {
    if (!j.at("n").is_number_integer()) throw ParseError("\"n\" must be an integer");
    raw.n = j.at("n").get<std::int64_t>();
  } else {
    raw.n = static_cast<std::int64_t>(raw.R.size() / 2);
  }
  return validate(raw);
}

json to_json(const RotationData& data) {
  return {{"p", data.prime().value()}, {"n", data.n()}, {"R", data.R()}, {"Q", data.Q()}};
}

json to_json(const HomogeneousForm& f) { return {{"deg", f.degree()}, {"coeffs", f.coeffs()}}; }

json to_json(const KInvariant& k) { return {{"first", to_json(k.first)}, {"second", to_json(k.second)}}; }

json to_json(const TotalClass& cls) {
  json out = json::object();
  for (const auto& [degree, form] : cls.components) out[std::to_string(degree)] = to_json(form);
  return out;
}

json to_json(const Mat2& m) { return json::array({{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}); }

json to_json(const FreenessReport& report) {
  json out{{"free", report.free}};
  if (report.violating_element) {
    out["violating_element"] = *report.violating_element;
    out["violating_pair"] = {report.violating_pair->first, report.violating_pair->second};
  } else {
    out["violating_element"] = nullptr;
    out["violating_pair"] = nullptr;
  }
  return out;
}

json to_json(const Verdict& verdict) {
  json out{{"equivalent", verdict.equivalent}, {"level", to_string(verdict.level)}};
  if (verdict.witness) {
    out["witness"] = {{"A", to_json(verdict.witness->A())}, {"B", to_json(verdict.witness->B())}};
  } else {
    out["witness"] = nullptr;
  }
  out["checked_pairs"] = verdict.checked_pairs;
  if (verdict.level == Level::homeomorphism) {
    out["pontrjagin_match"] = verdict.pontrjagin_match ? json(*verdict.pontrjagin_match) : json(nullptr);
  }
  return out;
}

RotationData parse_space(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) throw ParseError("empty space description");
  if (text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return rotation_from_json(j);
  }

  std::istringstream in{std::string(text)};
  std::string token;
  bool lens = false;
  std::map<std::string, std::string, std::less<>> fields;
  while (in >> token) {
    if (token == "lens") {
      lens = true;
      continue;
    }
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value, got '" + token + "'");
    if (!fields.emplace(token.substr(0, eq), token.substr(eq + 1)).second)
      throw ParseError("duplicate key '" + token.substr(0, eq) + "'");
  }
  auto take = [&](const std::string& key) -> std::string {
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError("missing key '" + key + "'");
    std::string v = it->second;
    fields.erase(it);
    return v;
  };

  const std::int64_t p = parse_int(take("p"));
  if (lens) {
    const auto r = parse_int_list(take("r"));
    const auto rp = parse_int_list(take("rp"));
    if (!fields.empty()) throw ParseError("unknown key '" + fields.begin()->first + "'");
    return product_of_lens_spaces(Prime(p), r, rp);
  }
  RawRotationData raw;
  raw.p = p;
  raw.R = parse_int_list(take("R"));
  raw.Q = parse_int_list(take("Q"));
  raw.n = fields.contains("n") ? parse_int(take("n")) : static_cast<std::int64_t>(raw.R.size() / 2);
  if (!fields.empty()) throw ParseError("unknown key '" + fields.begin()->first + "'");
  return validate(raw);
}

}  // namespace spq
