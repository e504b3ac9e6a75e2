#include "gnepdeg/instance_spec.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "gnepdeg/errors.hpp"

namespace gnepdeg {

namespace {

MultiDegree multidegree_field(const nlohmann::json& j, const std::string& what,
                              std::size_t expected_len) {
  if (!j.is_array()) throw SpecError(what + ": expected an array of integers");
  std::vector<int> v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw SpecError(what + ": expected an array of integers");
    const long long x = e.get<long long>();
    if (x < 0) throw SpecError(what + ": negative entry");
    v.push_back(static_cast<int>(x));
  }
  if (v.size() != expected_len)
    throw SpecError(what + ": expected " + std::to_string(expected_len) + " entries, got " +
                    std::to_string(v.size()));
  return MultiDegree(std::move(v));
}

SlotSpec parse_slot(const nlohmann::json& j, const std::string& what,
                    const std::vector<int>& dims, bool is_constraint) {
  if (!j.is_object()) throw SpecError(what + ": expected an object");
  static const char* known[] = {"kind", "multidegree", "polynomial", "check_multidegree"};
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw SpecError(what + ": unknown field '" + key + "'");
  }
  SlotSpec slot;
  if (j.contains("multidegree"))
    slot.declared = multidegree_field(j["multidegree"], what + ".multidegree", dims.size());
  if (j.contains("polynomial")) {
    if (!j["polynomial"].is_string()) throw SpecError(what + ".polynomial: expected a string");
    try {
      slot.polynomial = parse_polynomial(j["polynomial"].get<std::string>(), dims);
    } catch (const ParseError& e) {
      throw SpecError(what + ".polynomial: " + e.what());
    }
  }
  if (j.contains("check_multidegree"))
    slot.check_declared =
        multidegree_field(j["check_multidegree"], what + ".check_multidegree", dims.size());
  if (is_constraint) {
    if (!j.contains("kind")) throw SpecError(what + ": missing 'kind' (\"eq\" or \"ineq\")");
    const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    if (kind == "eq")
      slot.kind = ConstraintKind::Equality;
    else if (kind == "ineq")
      slot.kind = ConstraintKind::Inequality;
    else
      throw SpecError(what + ".kind: expected \"eq\" or \"ineq\"");
  } else if (j.contains("kind")) {
    throw SpecError(what + ": objectives take no 'kind'");
  }
  if (!slot.declared && !slot.polynomial)
    throw SpecError(what + ": needs a multidegree or a polynomial");
  return slot;
}

}  // namespace

InstanceSpec parse_instance_spec(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("instance spec: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("players") || !doc["players"].is_array())
    throw SpecError("instance spec: expected an object with a 'players' array");
  const auto& players = doc["players"];
  if (players.empty()) throw SpecError("instance spec: no players");

  InstanceSpec spec;
  for (std::size_t i = 0; i < players.size(); ++i) {
    const auto& p = players[i];
    const std::string who = "players[" + std::to_string(i) + "]";
    if (!p.is_object() || !p.contains("dim") || !p["dim"].is_number_integer())
      throw SpecError(who + ": expected an object with an integer 'dim'");
    const long long dim = p["dim"].get<long long>();
    if (dim < 1) throw SpecError(who + ".dim: must be at least 1");
    spec.dims.push_back(static_cast<int>(dim));
  }
  for (std::size_t i = 0; i < players.size(); ++i) {
    const auto& p = players[i];
    const std::string who = "players[" + std::to_string(i) + "]";
    for (const auto& [key, _] : p.items())
      if (key != "dim" && key != "objective" && key != "constraints")
        throw SpecError(who + ": unknown field '" + key + "'");
    if (!p.contains("objective"))
      throw SpecError(who + ": missing 'objective'");
    spec.objectives.push_back(parse_slot(p["objective"], who + ".objective", spec.dims, false));
    std::vector<SlotSpec> cons;
    if (p.contains("constraints")) {
      if (!p["constraints"].is_array()) throw SpecError(who + ".constraints: expected an array");
      for (std::size_t j = 0; j < p["constraints"].size(); ++j)
        cons.push_back(parse_slot(p["constraints"][j],
                                  who + ".constraints[" + std::to_string(j) + "]", spec.dims,
                                  true));
    }
    spec.constraints.push_back(std::move(cons));
  }
  return spec;
}

InstanceSpec load_instance_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_spec(buf.str());
}

namespace {

nlohmann::json slot_to_json(const SlotSpec& slot) {
  nlohmann::json j = nlohmann::json::object();
  if (slot.kind)
    j["kind"] = *slot.kind == ConstraintKind::Equality ? "eq" : "ineq";
  if (slot.declared) j["multidegree"] = slot.declared->entries();
  if (slot.polynomial) j["polynomial"] = format_polynomial(*slot.polynomial);
  if (slot.check_declared) j["check_multidegree"] = slot.check_declared->entries();
  return j;
}

}  // namespace

std::string write_instance_spec(const InstanceSpec& spec) {
  nlohmann::json players = nlohmann::json::array();
  for (std::size_t i = 0; i < spec.dims.size(); ++i) {
    nlohmann::json p;
    p["dim"] = spec.dims[i];
    p["objective"] = slot_to_json(spec.objectives[i]);
    nlohmann::json cons = nlohmann::json::array();
    for (const SlotSpec& slot : spec.constraints[i]) cons.push_back(slot_to_json(slot));
    p["constraints"] = cons;
    players.push_back(p);
  }
  nlohmann::json doc;
  doc["players"] = players;
  return doc.dump(2) + "\n";
}

namespace {

MultiDegree resolve_multidegree(const SlotSpec& slot, const std::string& what) {
  if (slot.polynomial && slot.polynomial->is_zero())
    throw SpecError(what + ": the zero polynomial has no multi-degree");
  if (slot.declared && slot.polynomial) {
    MultiDegree computed = multidegree(*slot.polynomial);
    if (!(computed == *slot.declared))
      throw SpecError(what + ": declared multi-degree " + slot.declared->str() +
                      " disagrees with the polynomial's " + computed.str());
    return *slot.declared;
  }
  if (slot.declared) return *slot.declared;
  return multidegree(*slot.polynomial);
}

}  // namespace

GnepShape spec_shape(const InstanceSpec& spec) {
  std::vector<GnepShape::Player> players;
  for (std::size_t i = 0; i < spec.dims.size(); ++i) {
    GnepShape::Player p;
    p.dim = spec.dims[i];
    const std::string who = "players[" + std::to_string(i) + "]";
    p.objective = resolve_multidegree(spec.objectives[i], who + ".objective");
    for (std::size_t j = 0; j < spec.constraints[i].size(); ++j) {
      const SlotSpec& slot = spec.constraints[i][j];
      p.constraints.push_back(Constraint{
          *slot.kind,
          resolve_multidegree(slot, who + ".constraints[" + std::to_string(j) + "]")});
    }
    players.push_back(std::move(p));
  }
  return GnepShape(std::move(players));
}

std::optional<GnepInstance> spec_instance(const InstanceSpec& spec) {
  std::vector<IntPolynomial> objectives;
  std::vector<std::vector<IntPolynomial>> constraints;
  for (std::size_t i = 0; i < spec.dims.size(); ++i) {
    if (!spec.objectives[i].polynomial) return std::nullopt;
    objectives.push_back(*spec.objectives[i].polynomial);
    std::vector<IntPolynomial> row;
    for (const SlotSpec& slot : spec.constraints[i]) {
      if (!slot.polynomial) return std::nullopt;
      row.push_back(*slot.polynomial);
    }
    constraints.push_back(std::move(row));
  }
  return GnepInstance(spec_shape(spec), std::move(objectives), std::move(constraints));
}

ResolvedGradients spec_gradient_degrees(const InstanceSpec& spec) {
  ResolvedGradients out;
  const GnepShape shape = spec_shape(spec);
  auto resolve = [&](const SlotSpec& slot, const MultiDegree& declared,
                     std::size_t player) -> MultiDegree {
    if (slot.check_declared) {
      out.any_sharpening = true;
      return *slot.check_declared;
    }
    if (slot.polynomial) {
      out.any_sharpening = true;
      return gradient_multidegree(*slot.polynomial, player);
    }
    return hat_degree(declared, player);
  };
  for (std::size_t i = 0; i < spec.dims.size(); ++i) {
    out.grads.objective.push_back(
        resolve(spec.objectives[i], shape.player(i).objective, i));
    std::vector<MultiDegree> row;
    for (std::size_t j = 0; j < spec.constraints[i].size(); ++j)
      row.push_back(resolve(spec.constraints[i][j], shape.player(i).constraints[j].degree, i));
    out.grads.constraint.push_back(std::move(row));
  }
  return out;
}

namespace {

struct TupleLexer {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("active tuple, position " + std::to_string(pos) + ": " + msg);
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    long long v = std::stoll(text.substr(start, pos - start));
    if (v > 1000000) fail("index too large");
    return static_cast<int>(v);
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
};

}  // namespace

ActiveTuple parse_active_tuple(const std::string& text, std::size_t num_players) {
  TupleLexer lex{text};
  std::vector<std::vector<int>> sets(num_players);
  std::vector<bool> seen(num_players, false);
  while (true) {
    int player = lex.integer();
    if (player < 1 || player > static_cast<int>(num_players))
      lex.fail("player " + std::to_string(player) + " out of range 1.." +
               std::to_string(num_players));
    if (seen[player - 1]) lex.fail("player " + std::to_string(player) + " listed twice");
    seen[player - 1] = true;
    lex.expect(':');
    lex.expect('{');
    std::vector<int> indices;
    if (!lex.accept('}')) {
      while (true) {
        int j = lex.integer();
        if (j < 1) lex.fail("constraint indices are 1-based");
        indices.push_back(j - 1);
        if (lex.accept(',')) continue;
        lex.expect('}');
        break;
      }
    }
    sets[player - 1] = std::move(indices);
    if (lex.eof()) break;
    lex.expect(';');
    if (lex.eof()) lex.fail("trailing ';'");
  }
  for (std::size_t i = 0; i < num_players; ++i)
    if (!seen[i])
      throw ParseError("active tuple: player " + std::to_string(i + 1) + " is missing");
  try {
    return ActiveTuple(std::move(sets));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("active tuple: ") + e.what());
  }
}

std::string format_active_tuple(const ActiveTuple& tuple) {
  std::ostringstream os;
  for (std::size_t i = 0; i < tuple.num_players(); ++i) {
    if (i) os << ';';
    os << (i + 1) << ":{";
    const auto& s = tuple.set(i);
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k) os << ',';
      os << s[k] + 1;
    }
    os << '}';
  }
  return os.str();
}

}  // namespace gnepdeg
