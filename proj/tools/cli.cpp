#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sumfree/analysis.hpp"
#include "sumfree/construct.hpp"
#include "sumfree/enumerate.hpp"
#include "sumfree/error.hpp"
#include "sumfree/generate.hpp"
#include "sumfree/group.hpp"
#include "sumfree/serialize.hpp"
#include "sumfree/universe.hpp"

namespace sumfree::cli {

namespace {

using Row = nlohmann::ordered_json;

constexpr std::size_t kDefaultCliGround = 40;

struct UniverseFlags {
  std::optional<std::int64_t> interval;
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;
  std::string group;

  void attach(CLI::App* app) {
    app->add_option("--interval", interval, "Interval universe [1,N]");
    app->add_option("--interval-lo", lo, "Interval lower end T");
    app->add_option("--interval-hi", hi, "Interval upper end N");
    app->add_option("--group", group, "Group moduli m1,m2,...");
  }

  Universe build() const {
    const int chosen = (interval ? 1 : 0) + (lo || hi ? 1 : 0) + (group.empty() ? 0 : 1);
    if (chosen != 1)
      throw Error(ErrorCode::kInvalidArgument,
                  "choose exactly one of --interval, --interval-lo/--interval-hi, --group");
    if (interval) return Universe::interval(1, *interval);
    if (lo || hi) {
      if (!lo || !hi)
        throw Error(ErrorCode::kInvalidArgument, "--interval-lo and --interval-hi go together");
      return Universe::interval(*lo, *hi);
    }
    std::vector<std::uint64_t> moduli;
    std::stringstream ss(group);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != tok.size())
        throw Error(ErrorCode::kInvalidArgument, "bad modulus '" + tok + "'");
      if (v <= 1) throw Error(ErrorCode::kInvalidModulus, "modulus must be at least 2");
      moduli.push_back(static_cast<std::uint64_t>(v));
    }
    return Universe::group(make_group(std::move(moduli)));
  }
};

struct OutputFlags {
  std::string out_path;
  std::string format = "csv";

  void attach(CLI::App* app, bool with_format = true) {
    app->add_option("--out", out_path, "Write output to PATH instead of stdout");
    if (with_format)
      app->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  }
};

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path + " for writing");
    }
    os_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& get() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidArgument, path + ": malformed JSON: " + e.what());
  }
}

std::string csv_value(const Row& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return csv_field(v.get<std::string>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_fixed(v.get<double>(), 6);
  return csv_field(v.dump());
}

void emit_rows(std::ostream& os, const std::vector<Row>& rows, const std::string& format) {
  if (format == "json") {
    Row arr = Row::array();
    for (const auto& r : rows) arr.push_back(r);
    os << arr.dump(2) << '\n';
    return;
  }
  if (rows.empty()) return;
  bool first = true;
  for (const auto& [key, value] : rows.front().items()) {
    os << (first ? "" : ",") << key;
    first = false;
  }
  os << '\n';
  for (const auto& r : rows) {
    first = true;
    for (const auto& [key, value] : r.items()) {
      os << (first ? "" : ",") << csv_value(value);
      first = false;
    }
    os << '\n';
  }
}

std::string join_labels(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ";" : "") + std::to_string(xs[i]);
  return s;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& set_file, const UniverseFlags& uf, const OutputFlags& of,
               std::ostream& out) {
  const auto u = uf.build();
  const auto j = read_json_file(set_file);
  if (!j.is_array()) throw Error(ErrorCode::kInvalidArgument, "set file must hold a JSON array");
  // The identity is outside a group universe's ground set but a set
  // holding it is a well-formed input that simply fails e + e = e.
  bool has_identity = false;
  Json members = Json::array();
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw Error(ErrorCode::kInvalidArgument, "set members must be integers");
    if (!u.is_interval() && x.get<std::int64_t>() == 0)
      has_identity = true;
    else
      members.push_back(x);
  }
  const auto s = set_from_json(u, members);
  Row r;
  r["universe"] = u.describe();
  std::vector<std::int64_t> labels = s.labels();
  if (has_identity) labels.insert(labels.begin(), 0);
  r["set"] = labels;
  const bool free = !has_identity && is_sum_free(u, s);
  r["sum_free"] = free;
  r["maximal"] = !has_identity && is_maximal_sum_free(u, s);
  r["two_wise"] = !has_identity && is_2wise_sum_free(u, s);
  r["schur_triples"] = has_identity ? Row(nullptr) : Row(count_schur_triples(u, s));
  if (of.format == "json") {
    out << r.dump(2) << '\n';
  } else {
    out << "universe: " << u.describe() << '\n'
        << "set: " << r["set"].dump() << '\n'
        << "sum-free: " << (free ? "true" : "false") << '\n'
        << "maximal: " << (r["maximal"].get<bool>() ? "true" : "false") << '\n'
        << "2-wise: " << (r["two_wise"].get<bool>() ? "true" : "false") << '\n'
        << "schur-triples: "
        << (has_identity ? std::string("n/a (identity)") : r["schur_triples"].dump()) << '\n';
  }
  return free ? kOk : kFalseVerdict;
}

// ----------------------------------------------------------------- count

int cmd_count(const UniverseFlags& uf, const CountOptions& opts, const OutputFlags& of,
              std::ostream& out) {
  const auto u = uf.build();
  const auto rec = count_record(u, opts);
  if (of.format == "json")
    out << to_json(rec).dump(2) << '\n';
  else
    out << count_csv_header() << '\n' << count_csv_row(rec) << '\n';
  return kOk;
}

// --------------------------------------------------------------- figure1

int cmd_figure1(std::int64_t n_max, std::uint64_t shards, std::size_t max_ground,
                std::ostream& out) {
  if (n_max < 1) throw Error(ErrorCode::kInvalidArgument, "--n-max must be at least 1");
  if (static_cast<std::size_t>(n_max) > max_ground)
    throw Error(ErrorCode::kCapacity, "--n-max exceeds the ground-set cap");
  out << "n,f,log2_f,half_n,ratio,parity\n";
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto f = count_sum_free_parallel(Universe::interval(1, n), shards, max_ground);
    const double fd = static_cast<double>(f);
    out << n << ',' << f << ',' << format_fixed(std::log2(fd), 6) << ','
        << format_double(static_cast<double>(n) / 2) << ','
        << format_fixed(fd / std::pow(2.0, static_cast<double>(n) / 2), 6) << ','
        << (n % 2 ? "odd" : "even") << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------- sweep-groups

std::vector<Row> sweep_rows(std::uint64_t max_order, const std::string& check,
                            std::size_t max_ground) {
  std::vector<Row> rows;
  if (check == "giudici2") {
    const auto scan = giudici_size2_scan(max_order);
    for (std::uint64_t n = 2; n <= max_order; ++n)
      for (const auto& g : abelian_groups_of_order(n)) {
        Row r;
        r["group"] = g.label();
        r["order"] = n;
        std::vector<std::string> sets;
        for (const auto& [h, s] : scan)
          if (h == g) sets.push_back(join_labels(s.labels()));
        r["count"] = sets.size();
        std::string joined;
        for (std::size_t i = 0; i < sets.size(); ++i) joined += (i ? "|" : "") + sets[i];
        r["sets"] = joined;
        rows.push_back(std::move(r));
      }
    return rows;
  }
  for (std::uint64_t n = 2; n <= max_order; ++n)
    for (const auto& g : abelian_groups_of_order(n)) {
      Row r;
      r["group"] = g.label();
      r["order"] = n;
      if (check == "mu") {
        const auto d = mu_of(g, max_ground);
        r["max_cardinality"] = d.max_cardinality;
        r["mu"] = to_string(d.mu);
        r["mu_float"] = to_double(d.mu);
        r["v"] = to_string(d.v);
        r["v_float"] = to_double(d.v);
        r["v_case"] = d.v_case;
        r["agree"] = d.agree;
      } else if (check == "index2") {
        const bool even = n % 2 == 0;
        r["applicable"] = even;
        r["V"] = even_component_count(g);
        r["index2_count"] = index2_subgroups(g).size();
        r["expected_count"] = (std::uint64_t{1} << even_component_count(g)) - 1;
        if (even) {
          const auto rep = index2_report(g, max_ground);
          r["half_size_sets"] = rep.half_size_sets;
          r["equality"] = rep.equality;
        } else {
          r["half_size_sets"] = nullptr;
          r["equality"] = nullptr;
        }
      } else if (check == "lev") {
        const bool even = n % 2 == 0;
        r["applicable"] = even;
        r["V"] = even_component_count(g);
        if (even) {
          const auto t = lev_leading_term(g, max_ground);
          r["leading"] = t.leading;
          r["f"] = t.f;
          r["ratio"] = to_string(t.ratio);
          r["ratio_float"] = to_double(t.ratio);
        } else {
          r["leading"] = nullptr;
          r["f"] = nullptr;
          r["ratio"] = nullptr;
          r["ratio_float"] = nullptr;
        }
      } else {  // giudici1
        auto u = Universe::group(g);
        std::vector<std::int64_t> witnesses;
        bool prime_order = true;
        for (std::uint64_t x = 1; x < n; ++x) {
          ElemSet s(u);
          s.insert(static_cast<std::int64_t>(x));
          if (!is_maximal_sum_free(u, s)) continue;
          witnesses.push_back(static_cast<std::int64_t>(x));
          prime_order = prime_order && is_prime(element_order(g, {x}));
        }
        r["has_size1"] = !witnesses.empty();
        r["witnesses"] = join_labels(witnesses);
        r["witness_prime_order"] = witnesses.empty() ? Row(nullptr) : Row(prime_order);
      }
      rows.push_back(std::move(r));
    }
  return rows;
}

// ---------------------------------------------------- kolountzakis/random

int cmd_kolountzakis(const std::string& file, bool trace, std::ostream& out) {
  const auto j = read_json_file(file);
  if (!j.is_array()) throw Error(ErrorCode::kInvalidArgument, "input must be a JSON array");
  std::vector<std::uint64_t> a;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 1)
      throw Error(ErrorCode::kInvalidArgument, "inputs must be positive integers");
    a.push_back(x.get<std::uint64_t>());
  }
  const auto t = kolountzakis(a);
  if (trace)
    out << to_json(t).dump(2) << '\n';
  else
    out << Json{{"S", t.result}, {"p", t.p}, {"t", t.t}}.dump() << '\n';
  return kOk;
}

int cmd_random(const RandomGenConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto s = cameron_random(cfg);
  if (!s) {
    err << "timeout: no sum-free set of size " << cfg.target_cardinality << " after "
        << cfg.max_iterations << " passes\n";
    return kResourceCap;
  }
  out << to_json(*s).dump() << '\n';
  return kOk;
}

// ------------------------------------------------------------- construct

int cmd_construct(const std::string& kind, std::int64_t n, std::int64_t m, std::int64_t window,
                  const std::string& set_file, std::ostream& out) {
  std::vector<ElemSet> sets;
  if (kind == "odds") {
    sets.push_back(odds(n));
  } else if (kind == "extremal") {
    sets = extremal_intervals(n);
  } else if (kind == "a1") {
    sets.push_back(middle_third_A1(static_cast<std::uint64_t>(n)));
  } else if (kind == "a2") {
    sets.push_back(middle_third_A2(static_cast<std::uint64_t>(n)));
  } else if (kind == "kolountzakis-b") {
    sets.push_back(kolountzakis_B(static_cast<std::uint64_t>(n)));
  } else if (kind == "periodic") {
    sets.push_back(periodic_residues(m, n, window));
  } else if (kind == "lift") {
    if (set_file.empty()) throw Error(ErrorCode::kInvalidArgument, "lift needs --set-file");
    auto u = Universe::group(make_group({static_cast<std::uint64_t>(n)}));
    sets.push_back(lift_mod_sumfree(set_from_json(u, read_json_file(set_file)), window));
  }
  for (const auto& s : sets) {
    const auto& u = s.universe();
    out << Json{{"universe", u.describe()},
                {"set", to_json(s)},
                {"sum_free", is_sum_free(u, s)}}
               .dump()
        << '\n';
  }
  return kOk;
}

int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::kCapacity ? kResourceCap : kInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum-free set toolkit: construct, verify, generate, enumerate and count"};
  app.require_subcommand(1);

  std::size_t max_ground = kDefaultCliGround;
  app.add_option("--max-ground", max_ground, "Ground-set cap for exhaustive searches")
      ->capture_default_str();

  std::function<int()> action;

  // verify
  auto* verify = app.add_subcommand("verify", "Check a set file against a universe");
  std::string set_file;
  UniverseFlags verify_u;
  OutputFlags verify_o;
  verify_o.format = "text";
  verify->add_option("set-file", set_file, "JSON array of labels")->required();
  verify_u.attach(verify);
  verify->add_option("--format", verify_o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", verify_o.out_path, "Write output to PATH");
  verify->callback([&] {
    action = [&] {
      Sink sink(verify_o.out_path, out);
      return cmd_verify(set_file, verify_u, verify_o, sink.get());
    };
  });

  // count
  auto* count = app.add_subcommand("count", "Count sum-free sets of a universe");
  UniverseFlags count_u;
  OutputFlags count_o;
  CountOptions count_opts;
  count_u.attach(count);
  count_o.attach(count);
  count->add_flag("--maximal", count_opts.maximal, "Also count maximal sum-free sets");
  count->add_flag("--by-cardinality", count_opts.by_cardinality, "Histogram by cardinality");
  count->add_flag("--2wise", count_opts.two_wise, "Also count 2-wise sum-free sets");
  count->add_option("--shards", count_opts.shard_count, "Power-of-two shard count");
  count->callback([&] {
    action = [&] {
      count_opts.max_ground = max_ground;
      Sink sink(count_o.out_path, out);
      return cmd_count(count_u, count_opts, count_o, sink.get());
    };
  });

  // figure1
  auto* fig = app.add_subcommand("figure1", "f(n) against 2^(n/2) for n = 1..n_max");
  std::int64_t n_max = 33;
  std::uint64_t fig_shards = 1;
  OutputFlags fig_o;
  fig->add_option("--n-max", n_max, "Largest n")->capture_default_str();
  fig->add_option("--shards", fig_shards, "Power-of-two shard count");
  fig_o.attach(fig, false);
  fig->callback([&] {
    action = [&] {
      Sink sink(fig_o.out_path, out);
      return cmd_figure1(n_max, fig_shards, max_ground, sink.get());
    };
  });

  // sweep-groups
  auto* sweep = app.add_subcommand("sweep-groups", "Run a check over all abelian groups");
  std::uint64_t max_order = 16;
  std::string check = "mu";
  OutputFlags sweep_o;
  sweep->add_option("--max-order", max_order, "Largest group order")->capture_default_str();
  sweep->add_option("--check", check, "mu|index2|lev|giudici1|giudici2")
      ->check(CLI::IsMember({"mu", "index2", "lev", "giudici1", "giudici2"}));
  sweep_o.attach(sweep);
  sweep->callback([&] {
    action = [&] {
      if (max_order > max_ground + 1)
        throw Error(ErrorCode::kCapacity, "--max-order exceeds the ground-set cap");
      auto rows = sweep_rows(max_order, check, max_ground);
      Sink sink(sweep_o.out_path, out);
      emit_rows(sink.get(), rows, sweep_o.format);
      return kOk;
    };
  });

  // kolountzakis
  auto* kol = app.add_subcommand("kolountzakis", "Extract a sum-free subset of size > |A|/3");
  std::string kol_file;
  bool kol_trace = false;
  std::string kol_out;
  kol->add_option("input", kol_file, "JSON array of distinct positive integers")->required();
  kol->add_flag("--trace", kol_trace, "Dump every intermediate");
  kol->add_option("--out", kol_out, "Write output to PATH");
  kol->callback([&] {
    action = [&] {
      Sink sink(kol_out, out);
      return cmd_kolountzakis(kol_file, kol_trace, sink.get());
    };
  });

  // random
  auto* rnd = app.add_subcommand("random", "Randomised nested sum-free set growth");
  RandomGenConfig cfg;
  std::string rnd_out;
  rnd->add_option("--a", cfg.seed_element, "Initial element")->required();
  rnd->add_option("--b", cfg.target_cardinality, "Target cardinality")->required();
  rnd->add_option("--range", cfg.sample_hi, "Sample uniformly from [1, range]")
      ->capture_default_str();
  rnd->add_option("--seed", cfg.rng_seed, "RNG seed")->capture_default_str();
  rnd->add_option("--max-iterations", cfg.max_iterations, "Pass budget")->capture_default_str();
  rnd->add_option("--out", rnd_out, "Write output to PATH");
  rnd->callback([&] {
    action = [&] {
      Sink sink(rnd_out, out);
      return cmd_random(cfg, sink.get(), err);
    };
  });

  // construct
  auto* con = app.add_subcommand("construct", "Build a named sum-free construction");
  std::string kind;
  std::int64_t con_n = 0, con_m = 0, con_window = 0;
  std::string con_set;
  con->add_option("kind", kind, "odds|extremal|a1|a2|kolountzakis-b|periodic|lift")
      ->required()
      ->check(CLI::IsMember({"odds", "extremal", "a1", "a2", "kolountzakis-b", "periodic", "lift"}));
  con->add_option("--n", con_n, "n (or the prime p, or the modulus)")->required();
  con->add_option("--m", con_m, "Residue for periodic");
  con->add_option("--window", con_window, "Window upper end for periodic/lift");
  con->add_option("--set-file", con_set, "Residue set for lift");
  con->callback([&] {
    action = [&] { return cmd_construct(kind, con_n, con_m, con_window, con_set, out); };
  });

  // ak
  auto* ak = app.add_subcommand("ak", "Weighted middle-third density inequality over divisors");
  std::uint64_t ak_max = 2000;
  OutputFlags ak_o;
  ak->add_option("--n-max", ak_max, "Check 2 <= n <= n_max")->capture_default_str();
  ak_o.attach(ak);
  ak->callback([&] {
    action = [&] {
      std::vector<Row> rows;
      bool all = true;
      for (std::uint64_t n = 2; n <= ak_max; ++n) {
        const auto rep = ak_report(n);
        all = all && rep.holds;
        Row r;
        r["n"] = n;
        r["holds"] = rep.holds;
        r["min_slack"] = to_string(rep.min_slack);
        r["min_divisor"] = rep.min_divisor;
        std::string tight;
        for (const auto& d : rep.divisors)
          if (d.slack == Rational(0)) tight += (tight.empty() ? "" : ";") + std::to_string(d.d);
        r["tight_divisors"] = tight;
        rows.push_back(std::move(r));
      }
      Sink sink(ak_o.out_path, out);
      emit_rows(sink.get(), rows, ak_o.format);
      return all ? kOk : kFalseVerdict;
    };
  });

  // sapozhenko
  auto* sap = app.add_subcommand("sapozhenko", "f(n) / (f(n/3, n) + 2^ceil(n/2)) per n");
  std::int64_t sap_from = 10, sap_to = 33;
  OutputFlags sap_o;
  sap->add_option("--n-from", sap_from)->capture_default_str();
  sap->add_option("--n-to", sap_to)->capture_default_str();
  sap_o.attach(sap);
  sap->callback([&] {
    action = [&] {
      std::vector<Row> rows;
      for (auto n = sap_from; n <= sap_to; ++n) {
        const auto r = sapozhenko_ratio(n, max_ground);
        Row row;
        row["n"] = n;
        row["ratio"] = to_string(r);
        row["ratio_float"] = to_double(r);
        rows.push_back(std::move(row));
      }
      Sink sink(sap_o.out_path, out);
      emit_rows(sink.get(), rows, sap_o.format);
      return kOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e);
  }

  try {
    return action ? action() : kInputError;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace sumfree::cli
