#include "brauerq/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "brauerq/error.hpp"
#include "brauerq/json_codec.hpp"

namespace brauerq {

// ---------------------------------------------------------------------------
// Config and defaults

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

u64 parse_u64(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used, 0);
    if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "bad " + what + " '" + text + "'");
  }
}

}  // namespace

Config Config::parse(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::ParseError, "config line " + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw Error(ErrorKind::ParseError, "config line " + std::to_string(number) + ": empty key");
    cfg.values[key] = trim(line.substr(eq + 1));
  }
  return cfg;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const std::string* Config::get(const std::string& key) const {
  auto it = values.find(key);
  return it == values.end() ? nullptr : &it->second;
}

std::filesystem::path default_cache_path() {
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg != nullptr && *xdg != '\0') {
    return std::filesystem::path(xdg) / "brauerq" / "splitting.cache";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".local" / "share" / "brauerq" / "splitting.cache";
  }
  return {};
}

u64 default_prime_bound() {
  if (const char* env = std::getenv("BRAUER_PRIME_BOUND"); env != nullptr && *env != '\0') {
    try {
      const u64 v = parse_u64(env, "bound");
      if (v >= 2) return v;
    } catch (const Error&) {
    }
  }
  return kDefaultPrimeBound;
}

// ---------------------------------------------------------------------------
// Command plumbing

namespace {

struct Args {
  // global
  std::optional<u64> bound;
  std::optional<u64> seed;
  std::string config;
  std::string cache;
  bool no_cache = false;
  std::string flags;
  // per command
  std::string poly;
  std::string f1;
  std::string f2;
  std::string base;
  std::vector<u64> primes;
  std::optional<u64> upto;
  std::vector<std::string> inv;
  std::string class_json;
  std::string ram;
  std::string ram_k;
  std::string ram1;
  std::string ram2;
  bool indefinite = false;
  std::size_t max_list = 1000;
  std::string preset;
  int which = 1;
};

struct Context {
  Args args;
  Config config;
  FieldOptions base;
  u64 bound = kDefaultPrimeBound;
  std::set<std::string> flags_used;
  int code = kExitDefinite;
  std::filesystem::path cache_path;
  bool use_cache = false;
};

NumberField field_from(Context& ctx, const std::string& text) {
  std::string poly = text;
  TrustedFlags flags = TrustedFlags::parse(ctx.args.flags);
  if (!text.empty() && text.front() == '@') {
    const std::string name = text.substr(1);
    const std::string* p = ctx.config.get("field." + name);
    if (p == nullptr) throw Error(ErrorKind::InvalidArgument, "no field '" + name + "' in the config file");
    poly = *p;
    if (const std::string* f = ctx.config.get("field." + name + ".flags")) {
      const TrustedFlags extra = TrustedFlags::parse(*f);
      flags.narrow_class_number_one |= extra.narrow_class_number_one;
      flags.primitive |= extra.primitive;
      flags.only_totally_real_subfield_is_q |= extra.only_totally_real_subfield_is_q;
      flags.irreducible |= extra.irreducible;
    }
  }
  if (trim(poly).empty()) throw Error(ErrorKind::InvalidArgument, "missing polynomial");
  FieldOptions options = ctx.base;
  options.flags = flags;
  NumberField k = build_field(poly, options);
  if (k.irreducibility().method == IrreducibilityEvidence::Method::Trusted) ctx.flags_used.insert("claimed_irreducible");
  return k;
}

std::vector<Place> parse_places(const std::string& text) {
  std::vector<Place> out;
  if (text == "{}" || text == "none") return out;
  for (const auto& item : split(text, ',')) out.push_back(Place::parse(item));
  return out;
}

QuaternionAlgebra rational_algebra(const Context& ctx, const std::string& text) {
  return quat_make(rationals(ctx.base), parse_places(text));
}

BrauerClass class_from_args(Context& ctx, const NumberField& k) {
  if (!ctx.args.class_json.empty()) {
    Json j;
    try {
      j = Json::parse(ctx.args.class_json);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, std::string("bad --class JSON: ") + e.what());
    }
    return class_from_json(k, j);
  }
  std::vector<std::pair<Place, QmodZ>> assignments;
  for (const auto& group : ctx.args.inv) {
    for (const auto& item : split(group, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected PLACE=VALUE, got '" + item + "'");
      assignments.emplace_back(Place::parse(trim(item.substr(0, eq))), QmodZ::parse(trim(item.substr(eq + 1))));
    }
  }
  return make_class(k, assignments);
}

std::vector<u64> primes_from_args(const Args& a) {
  std::vector<u64> out = a.primes;
  if (a.upto) {
    for (u64 p : primes_up_to(*a.upto)) out.push_back(p);
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "give --prime or --upto");
  return out;
}

void use_surface_flags(Context& ctx, const NumberField& k) {
  for (const auto& name : surface_flags_used(k)) ctx.flags_used.insert(name);
}

// ---------------------------------------------------------------------------
// Handlers

Json cmd_field_info(Context& ctx) {
  const NumberField k = field_from(ctx, ctx.args.poly);
  return field_summary(k);
}

Json cmd_field_split(Context& ctx) {
  const NumberField k = field_from(ctx, ctx.args.poly);
  Json rows = Json::array();
  for (u64 p : primes_from_args(ctx.args)) {
    PrimeModulus check(p);
    auto type = try_splitting_type(k, p);
    if (!type) {
      rows.push_back(Json{{"p", p}, {"index_prime", true}});
      continue;
    }
    Json row = to_json(*type);
    row["index_prime"] = false;
    row["good"] = k.is_good_prime(p);
    rows.push_back(row);
  }
  return Json{{"polynomial", k.defining_poly().to_string()}, {"splitting", rows}};
}

Json cmd_field_gcd(Context& ctx) {
  const NumberField k = field_from(ctx, ctx.args.poly);
  Json rows = Json::array();
  for (u64 p : primes_from_args(ctx.args)) {
    PrimeModulus check(p);
    if (!try_splitting_type(k, p)) {
      rows.push_back(Json{{"p", p}, {"index_prime", true}});
      continue;
    }
    rows.push_back(Json{{"p", p}, {"inertia_gcd", inertia_gcd(k, p)}});
  }
  return Json{{"polynomial", k.defining_poly().to_string()}, {"inertia_gcd", rows}};
}

Json cmd_brauer_make(Context& ctx) {
  const NumberField k = field_from(ctx, ctx.args.poly.empty() ? "x" : ctx.args.poly);
  const BrauerClass c = class_from_args(ctx, k);
  return Json{{"class", to_json(c)}, {"index", class_index(c).get_str()}, {"trivial", c.is_trivial()}};
}

Json cmd_brauer_index(Context& ctx) {
  const NumberField k = field_from(ctx, ctx.args.poly.empty() ? "x" : ctx.args.poly);
  const BrauerClass c = class_from_args(ctx, k);
  return Json{{"index", class_index(c).get_str()}, {"exponent", class_index(c).get_str()}, {"class", to_json(c)}};
}

Json cmd_brauer_restrict(Context& ctx) {
  const NumberField f = field_from(ctx, ctx.args.base.empty() ? "x" : ctx.args.base);
  const NumberField l = field_from(ctx, ctx.args.poly);
  const BrauerClass c = class_from_args(ctx, f);
  const BrauerClass r = restrict_relative(c, l, ctx.bound);
  return Json{{"method", f.is_rationals() ? "from_Q" : "relative"},
              {"source", to_json(c)},
              {"target_field", l.defining_poly().to_string()},
              {"restricted", to_json(r)},
              {"index_before", class_index(c).get_str()},
              {"index_after", class_index(r).get_str()}};
}

Json cmd_brauer_transport(Context& ctx) {
  const NumberField k1 = field_from(ctx, ctx.args.f1);
  const NumberField k2 = field_from(ctx, ctx.args.f2);
  const BrauerClass c = class_from_args(ctx, k1);
  const BrauerClass t = transport_phi(c, k2, ctx.bound);
  return Json{{"source", to_json(c)},
              {"transported", to_json(t)},
              {"matching", "canonical order within each (p,(e,f)) block"}};
}

Json cmd_quat_basechange(Context& ctx) {
  const NumberField k = field_from(ctx, ctx.args.poly);
  const QuaternionAlgebra b = rational_algebra(ctx, ctx.args.ram);
  const QuaternionAlgebra a = base_change(b, k);
  Json out{{"B", to_json(b)}, {"B_tensor_K", to_json(a)}, {"ramified_places", a.ram().size()}, {"split", a.is_split()}};
  if (!ctx.args.ram_k.empty()) {
    const QuaternionAlgebra target = quat_make(k, parse_places(ctx.args.ram_k));
    out["matches"] = tensor_matches(b, target);
  }
  return out;
}

Json cmd_quat_match(Context& ctx) {
  const NumberField k1 = field_from(ctx, ctx.args.f1);
  const NumberField k2 = field_from(ctx, ctx.args.f2);
  const QuaternionAlgebra a1 = quat_make(k1, parse_places(ctx.args.ram1));
  const QuaternionAlgebra a2 = quat_make(k2, parse_places(ctx.args.ram2));
  return to_json(same_subalgebra_report(a1, a2, ctx.bound));
}

Json cmd_quat_enumerate(Context& ctx) {
  const NumberField k = field_from(ctx, ctx.args.poly);
  const QuaternionAlgebra a = quat_make(k, parse_places(ctx.args.ram_k));
  const auto e = enumerate_matching(a, ctx.bound, ctx.args.indefinite, kMaxRamPlaces, ctx.args.max_list);
  Json list = Json::array();
  for (const auto& b : e.matching) list.push_back(to_json(b));
  return Json{{"classification", to_json(e.space)},
              {"total", e.total.get_str()},
              {"listed", e.matching.size()},
              {"truncated", e.truncated},
              {"max_ram_places", kMaxRamPlaces},
              {"algebras", list}};
}

Json cmd_quat_distinguish(Context& ctx) {
  const NumberField k1 = field_from(ctx, ctx.args.f1);
  const NumberField k2 = field_from(ctx, ctx.args.f2);
  const QuaternionAlgebra b0 = rational_algebra(ctx, ctx.args.ram);
  const auto t = distinguisher_search(b0, k1, k2, ctx.bound);
  if (!t) {
    ctx.code = kExitInconclusive;
    return Json{{"found", false}, {"bound", ctx.bound}, {"transcript", nullptr}};
  }
  return Json{{"found", true}, {"bound", ctx.bound}, {"transcript", to_json(*t)}};
}

Json cmd_equiv_gcd(Context& ctx) {
  const NumberField k1 = field_from(ctx, ctx.args.f1);
  const NumberField k2 = field_from(ctx, ctx.args.f2);
  return to_json(compare_inertia_gcds(k1, k2, ctx.bound));
}

Json cmd_equiv_split(Context& ctx) {
  const NumberField k1 = field_from(ctx, ctx.args.f1);
  const NumberField k2 = field_from(ctx, ctx.args.f2);
  Json out = to_json(compare_splitting_types(k1, k2, ctx.bound));
  out["same_degree"] = k1.degree() == k2.degree();
  out["same_signature"] = k1.signature() == k2.signature();
  return out;
}

Json cmd_equiv_fingerprint(Context& ctx) {
  const NumberField k = field_from(ctx, ctx.args.poly);
  const u64 bound = std::max<u64>(ctx.bound, 1000);
  Json out = to_json(galois_fingerprint(k, bound));
  out["uniformity"] = to_json(uniform_splitting_evidence(k, bound));
  return out;
}

Json cmd_surfaces_list(Context& ctx) {
  std::optional<NumberField> k;
  std::string ram_text = ctx.args.ram_k;
  if (!ctx.args.preset.empty()) {
    const Preset& preset = find_preset(ctx.args.preset);
    if (ctx.args.which != 1 && ctx.args.which != 2) throw Error(ErrorKind::InvalidArgument, "--which must be 1 or 2");
    FieldOptions options = ctx.base;
    options.flags = preset.flags;
    k = build_field(ctx.args.which == 1 ? preset.poly1 : preset.poly2, options);
  } else {
    k = field_from(ctx, ctx.args.poly);
  }
  const CommClass m(quat_make(*k, parse_places(ram_text)));
  const SurfaceCensus census = surface_classes(m, ctx.bound, ctx.args.max_list);
  use_surface_flags(ctx, *k);
  Json list = Json::array();
  for (const auto& s : census.classes) {
    Json entry = to_json(s.b);
    entry["cocompact"] = s.cocompact;
    list.push_back(entry);
  }
  return Json{{"field", k->defining_poly().to_string()},
              {"shape", Json{{"s", m.shape().s}, {"r2", m.shape().r2}}},
              {"bound", ctx.bound},
              {"total", census.enumeration.total.get_str()},
              {"listed", census.classes.size()},
              {"truncated", census.enumeration.truncated},
              {"classification", to_json(census.enumeration.space)},
              {"surface_classes", list},
              {"flag_audit", audit_trusted_flags(*k, ctx.bound)}};
}

Json cmd_surfaces_compare(Context& ctx) {
  std::optional<NumberField> k1;
  std::optional<NumberField> k2;
  Json audit = nullptr;
  if (!ctx.args.preset.empty()) {
    const Preset& preset = find_preset(ctx.args.preset);
    const PresetAudit pa = run_preset_audit(preset, ctx.base, ctx.bound);
    audit = to_json(pa);
    FieldOptions options = ctx.base;
    options.flags = preset.flags;
    k1 = build_field(preset.poly1, options);
    k2 = build_field(preset.poly2, options);
  } else {
    k1 = field_from(ctx, ctx.args.f1);
    k2 = field_from(ctx, ctx.args.f2);
  }
  const CommClass m1(quat_make(*k1, parse_places(ctx.args.ram1)));
  const CommClass m2(quat_make(*k2, parse_places(ctx.args.ram2)));
  const SurfaceComparison cmp = compare_surface_sets(m1, m2, ctx.bound);
  use_surface_flags(ctx, *k1);
  use_surface_flags(ctx, *k2);

  Json out = to_json(cmp.match);
  Json flag_audit = Json::array();
  for (const auto* k : {&*k1, &*k2}) {
    for (const auto& finding : audit_trusted_flags(*k, ctx.bound)) flag_audit.push_back(k->input_poly().to_string() + ": " + finding);
  }
  out["commensurable"] = to_json(commensurable(m1, m2));
  out["shapes"] = Json::array({Json{{"s", m1.shape().s}, {"r2", m1.shape().r2}}, Json{{"s", m2.shape().s}, {"r2", m2.shape().r2}}});
  out["flag_audit"] = flag_audit;
  if (!audit.is_null()) out["audit"] = audit;
  return out;
}

Json cmd_cache_stats(Context& ctx) {
  Json out{{"path", ctx.cache_path.string()}, {"enabled", ctx.use_cache}};
  SplittingCache probe;
  const bool exists = !ctx.cache_path.empty() && std::filesystem::exists(ctx.cache_path);
  out["exists"] = exists;
  out["records"] = exists ? probe.load(ctx.cache_path) : 0;
  return out;
}

Json cmd_cache_clear(Context& ctx) {
  bool removed = false;
  if (!ctx.cache_path.empty()) {
    std::error_code ec;
    removed = std::filesystem::remove(ctx.cache_path, ec);
    std::filesystem::remove(ctx.cache_path.string() + ".lock", ec);
  }
  return Json{{"path", ctx.cache_path.string()}, {"removed", removed}};
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InconclusiveIrreducibility:
    case ErrorKind::AmbiguousTransport:
      return kExitInconclusive;
    default:
      return kExitUsage;
  }
}

using Handler = Json (*)(Context&);

struct Leaf {
  CLI::App* app;
  Handler handler;
  bool uses_bound;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  Args& a = ctx.args;

  CLI::App app{"Brauer classes, quaternion algebras and surface censuses over number fields", "brauerq"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  app.add_option("--bound", a.bound, "prime bound (default: BRAUER_PRIME_BOUND or 10000)");
  app.add_option("--seed", a.seed, "RNG seed for factorization");
  app.add_option("--config", a.config, "config file with key = value lines");
  app.add_option("--cache", a.cache, "splitting cache file");
  app.add_flag("--no-cache", a.no_cache, "do not read or write the persistent cache");
  app.add_option("--flags", a.flags, "trusted flags for the fields, comma separated");

  std::map<std::string, Leaf> leaves;
  auto group = [&](const std::string& name, const std::string& desc) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->fallthrough();
    g->require_subcommand(1);
    return g;
  };
  auto leaf = [&](CLI::App* g, const std::string& name, const std::string& desc, Handler h, bool uses_bound) {
    CLI::App* l = g->add_subcommand(name, desc);
    l->fallthrough();
    leaves[g->get_name() + " " + name] = {l, h, uses_bound};
    return l;
  };
  auto poly_opt = [&](CLI::App* l, bool required) {
    auto* o = l->add_option("--poly", a.poly, "defining polynomial, e.g. x^8+6561 or [1,0,1], or @name from the config");
    if (required) o->required();
  };
  auto pair_opts = [&](CLI::App* l, bool required) {
    auto* o1 = l->add_option("--f1", a.f1, "first field");
    auto* o2 = l->add_option("--f2", a.f2, "second field");
    if (required) {
      o1->required();
      o2->required();
    }
  };
  auto class_opts = [&](CLI::App* l) {
    l->add_option("--inv", a.inv, "local invariants PLACE=VALUE, e.g. 7=1/3,13=2/3 or inf=1/2");
    l->add_option("--class", a.class_json, "class as JSON");
  };
  auto prime_opts = [&](CLI::App* l) {
    l->add_option("--prime", a.primes, "primes")->delimiter(',');
    l->add_option("--upto", a.upto, "all primes up to N");
  };

  CLI::App* field = group("field", "number field data");
  poly_opt(leaf(field, "info", "degree, signature, reduction, discriminant", cmd_field_info, false), true);
  {
    CLI::App* l = leaf(field, "split", "splitting types", cmd_field_split, false);
    poly_opt(l, true);
    prime_opts(l);
  }
  {
    CLI::App* l = leaf(field, "gcd", "inertia-degree gcds", cmd_field_gcd, false);
    poly_opt(l, true);
    prime_opts(l);
  }

  CLI::App* brauer = group("brauer", "Brauer classes");
  for (auto [name, desc, h] : {std::tuple{"make", "validate a class", cmd_brauer_make},
                               std::tuple{"index", "index of a class", cmd_brauer_index}}) {
    CLI::App* l = leaf(brauer, name, desc, h, false);
    poly_opt(l, false);
    class_opts(l);
  }
  {
    CLI::App* l = leaf(brauer, "restrict", "extension of scalars", cmd_brauer_restrict, true);
    poly_opt(l, true);
    l->add_option("--base", a.base, "base field (default Q)");
    class_opts(l);
  }
  {
    CLI::App* l = leaf(brauer, "transport", "move a class between splitting-equivalent fields", cmd_brauer_transport, true);
    pair_opts(l, true);
    class_opts(l);
  }

  CLI::App* quat = group("quat", "quaternion algebras");
  {
    CLI::App* l = leaf(quat, "basechange", "tensor a rational algebra up to a field", cmd_quat_basechange, false);
    poly_opt(l, true);
    l->add_option("--ram", a.ram, "ramification of B over Q, e.g. 2,3,inf");
    l->add_option("--ram-k", a.ram_k, "compare with this ramification over the field");
  }
  {
    CLI::App* l = leaf(quat, "match", "same rational subalgebras over two fields", cmd_quat_match, true);
    pair_opts(l, true);
    l->add_option("--ram1", a.ram1, "ramification over the first field");
    l->add_option("--ram2", a.ram2, "ramification over the second field");
  }
  {
    CLI::App* l = leaf(quat, "enumerate", "rational algebras B with B tensor K = A", cmd_quat_enumerate, true);
    poly_opt(l, true);
    l->add_option("--ram-k", a.ram_k, "ramification of A over the field");
    l->add_flag("--indefinite", a.indefinite, "only B unramified at infinity");
    l->add_option("--max-list", a.max_list, "list at most this many algebras");
  }
  {
    CLI::App* l = leaf(quat, "distinguish", "distinguisher for two 2-power Galois fields", cmd_quat_distinguish, true);
    pair_opts(l, true);
    l->add_option("--ram", a.ram, "ramification of B0 over Q");
  }

  CLI::App* equiv = group("equiv", "bounded-prime equivalence evidence");
  pair_opts(leaf(equiv, "gcd-check", "inertia gcds agree", cmd_equiv_gcd, true), true);
  pair_opts(leaf(equiv, "splitcheck", "splitting types agree", cmd_equiv_split, true), true);
  poly_opt(leaf(equiv, "fingerprint", "roots of unity and catalog subfields", cmd_equiv_fingerprint, true), true);

  CLI::App* surfaces = group("surfaces", "totally geodesic surface classes");
  {
    CLI::App* l = leaf(surfaces, "list", "surface classes of one commensurability class", cmd_surfaces_list, true);
    poly_opt(l, false);
    l->add_option("--ram-k", a.ram_k, "ramification of the algebra over the field");
    l->add_option("--preset", a.preset, "built-in field pair");
    l->add_option("--which", a.which, "field of the preset (1 or 2)");
    l->add_option("--max-list", a.max_list, "list at most this many classes");
  }
  {
    CLI::App* l = leaf(surfaces, "compare", "compare surface classes of two commensurability classes", cmd_surfaces_compare, true);
    pair_opts(l, false);
    l->add_option("--ram1", a.ram1, "ramification over the first field");
    l->add_option("--ram2", a.ram2, "ramification over the second field");
    l->add_option("--preset", a.preset, "built-in field pair (paper-k1k2, arith-equiv-x8)");
  }

  CLI::App* cache = group("cache", "persistent splitting cache");
  leaf(cache, "stats", "cache location and size", cmd_cache_stats, false);
  leaf(cache, "clear", "delete the cache file", cmd_cache_clear, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitDefinite : kExitUsage;
  }

  std::string command;
  const Leaf* chosen = nullptr;
  for (auto& [name, l] : leaves) {
    if (l.app->parsed()) {
      command = name;
      chosen = &l;
    }
  }
  if (chosen == nullptr) {
    err << "error: no command given\n";
    return kExitUsage;
  }

  try {
    if (!a.config.empty()) ctx.config = Config::load(a.config);
    const std::string* cfg_bound = ctx.config.get("bound");
    ctx.bound = a.bound ? *a.bound : cfg_bound ? parse_u64(*cfg_bound, "bound") : default_prime_bound();
    if (ctx.bound < 2) throw Error(ErrorKind::InvalidArgument, "bound must be at least 2");
    const std::string* cfg_seed = ctx.config.get("seed");
    ctx.base.seed = a.seed ? *a.seed : cfg_seed ? parse_u64(*cfg_seed, "seed") : kDefaultSeed;
    const std::string* cfg_cache = ctx.config.get("cache");
    ctx.cache_path = !a.cache.empty() ? std::filesystem::path(a.cache)
                     : cfg_cache     ? std::filesystem::path(*cfg_cache)
                                     : default_cache_path();
    ctx.use_cache = !a.no_cache && !ctx.cache_path.empty();
    ctx.base.cache = std::make_shared<SplittingCache>();
    const bool cache_command = command.rfind("cache ", 0) == 0;
    if (ctx.use_cache && !cache_command) ctx.base.cache->load(ctx.cache_path);

    Json result = chosen->handler(ctx);

    Json inputs = Json::object();
    for (const CLI::Option* opt : chosen->app->get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help") continue;
      std::string name = opt->get_name();
      while (!name.empty() && name.front() == '-') name.erase(0, 1);
      const auto& res = opt->results();
      if (opt->get_expected_max() > 1 || res.size() > 1) inputs[name] = res;
      else if (opt->get_type_size() == 0) inputs[name] = true;
      else inputs[name] = res.empty() ? "" : res.front();
    }
    if (!a.flags.empty()) inputs["flags"] = a.flags;
    if (chosen->uses_bound) inputs["bound"] = ctx.bound;

    Json report{{"schema", kReportSchema},
                {"tool_version", kToolVersion},
                {"command", command},
                {"inputs", inputs},
                {"seed", ctx.base.seed},
                {"result", result},
                {"trusted_flags_used", Json(std::vector<std::string>(ctx.flags_used.begin(), ctx.flags_used.end()))}};
    out << report.dump(2) << '\n';
    if (ctx.use_cache && !cache_command) {
      try {
        ctx.base.cache->save(ctx.cache_path);
      } catch (const std::exception& e) {
        err << "warning: could not save cache: " << e.what() << '\n';
      }
    }
    return ctx.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace brauerq
