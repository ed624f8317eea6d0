#include "sumfree/serialize.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "sumfree/error.hpp"

namespace sumfree {

Json to_json(const GroupSpec& g) { return Json{{"moduli", g.moduli()}}; }

GroupSpec group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("moduli") || !j["moduli"].is_array())
    throw Error(ErrorCode::kInvalidArgument, "group spec must be {\"moduli\": [...]}");
  std::vector<std::uint64_t> moduli;
  for (const auto& m : j["moduli"]) {
    if (!m.is_number_integer())
      throw Error(ErrorCode::kInvalidArgument, "group moduli must be integers");
    const auto v = m.get<std::int64_t>();
    if (v <= 1) throw Error(ErrorCode::kInvalidModulus, "modulus must be at least 2");
    moduli.push_back(static_cast<std::uint64_t>(v));
  }
  return make_group(std::move(moduli));
}

Json to_json(const ElemSet& s) { return Json(s.labels()); }

ElemSet set_from_json(const Universe& u, const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kInvalidArgument, "set must be a JSON array");
  ElemSet s(u);
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw Error(ErrorCode::kInvalidArgument, "set members must be integers");
    s.insert(x.get<std::int64_t>());
  }
  return s;
}

Json to_json(const KolountzakisTrace& t) {
  Json weights = Json::object();
  for (const auto& [r, c] : t.weights) weights[std::to_string(r)] = c;
  return Json{{"input", t.input},
              {"n", t.n},
              {"l", t.l},
              {"p", t.p},
              {"k", t.k},
              {"weights", weights},
              {"total_weight", t.total_weight},
              {"t", t.t},
              {"t_inverse", t.t_inverse},
              {"S_prime", t.s_prime},
              {"S", t.result},
              {"prime_bound", t.prime_bound},
              {"bound_satisfied", t.bound_satisfied}};
}

Json to_json(const DensityReport& r) {
  return Json{{"group", to_json(r.group)},
              {"mu", to_string(r.mu)},
              {"witness", to_json(r.witness)},
              {"max_cardinality", r.max_cardinality},
              {"v", to_string(r.v)},
              {"v_case", r.v_case},
              {"agree", r.agree}};
}

Json to_json(const CountRecord& r) {
  Json j{{"universe", r.universe}, {"ground_size", r.ground_size}, {"f", r.f},
         {"ratio_half", r.ratio_half}};
  if (r.f_max) j["f_max"] = *r.f_max;
  if (r.f_odd) j["f_odd"] = *r.f_odd;
  if (r.f_interval) j["f_interval"] = *r.f_interval;
  if (r.f_2wise) j["f_2wise"] = *r.f_2wise;
  if (!r.f_by_cardinality.empty()) {
    Json hist = Json::object();
    for (const auto& [m, c] : r.f_by_cardinality) hist[std::to_string(m)] = c;
    j["f_by_cardinality"] = hist;
  }
  return j;
}

std::string format_double(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

std::string format_fixed(double x, int digits) {
  std::array<char, 64> buf{};
  auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::fixed, digits);
  return std::string(buf.data(), end);
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string q = "\"";
  for (char c : v) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string count_csv_header() {
  return "universe,ground_size,f,f_max,f_odd,f_interval,f_2wise,ratio_half,f_by_cardinality";
}

std::string count_csv_row(const CountRecord& r) {
  auto opt = [](const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  std::ostringstream os;
  os << csv_field(r.universe) << ',' << r.ground_size << ',' << r.f << ',' << opt(r.f_max) << ','
     << opt(r.f_odd) << ',' << opt(r.f_interval) << ',' << opt(r.f_2wise) << ','
     << format_fixed(r.ratio_half, 6) << ',';
  // m:count pairs separated by ';' so the column stays a single CSV field.
  bool first = true;
  for (const auto& [m, c] : r.f_by_cardinality) {
    if (!first) os << ';';
    os << m << ':' << c;
    first = false;
  }
  return os.str();
}

}  // namespace sumfree
