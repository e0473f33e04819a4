#include "signedfam/family_io.hpp"

#include <fstream>

namespace signedfam {

using nlohmann::json;

json to_json(const SignedSet& s) {
  json arr = json::array();
  for (Point p : s.points()) arr.push_back(json::array({p.x, p.y}));
  return arr;
}

json to_json(const Params& params) {
  return json{{"n", params.n()}, {"r", params.r()}, {"k", params.k()}, {"t", params.t()}};
}

json to_json(const Family& fam) {
  json j = to_json(fam.params());
  json members = json::array();
  for (const auto& m : fam.members()) members.push_back(to_json(m));
  j["members"] = std::move(members);
  return j;
}

SignedSet signed_set_from_json(const json& j) {
  if (!j.is_array()) throw ValidityError("signed set must be a JSON array of [x,y] pairs");
  std::vector<Point> pts;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ValidityError("signed-set point must be an [x,y] integer pair, got " + e.dump());
    pts.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return SignedSet(pts);
}

Family family_from_json(const json& j) {
  if (!j.is_object()) throw ValidityError("family must be a JSON object");
  for (const char* key : {"n", "r", "k", "t"})
    if (!j.contains(key) || !j[key].is_number_integer())
      throw ValidityError(std::string("family is missing integer field '") + key + "'");
  if (!j.contains("members") || !j["members"].is_array()) throw ValidityError("family is missing 'members' array");
  Params params(j["n"].get<int>(), j["r"].get<int>(), j["k"].get<int>(), j["t"].get<int>());
  std::vector<SignedSet> members;
  members.reserve(j["members"].size());
  for (const auto& m : j["members"]) members.push_back(signed_set_from_json(m));
  return Family(params, std::move(members));
}

std::string canonical_json(const Family& fam) { return to_json(fam).dump(); }

Family read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidityError("cannot open family file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidityError("family file " + path.string() + " is not valid JSON: " + e.what());
  }
  return family_from_json(j);
}

void write_family_file(const std::filesystem::path& path, const Family& fam) {
  std::ofstream out(path);
  if (!out) throw ValidityError("cannot write family file " + path.string());
  out << canonical_json(fam) << '\n';
}

} // namespace signedfam
