#include "chebyknot/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "chebyknot/recursions.hpp"
#include "chebyknot/skein.hpp"
#include "chebyknot/tables.hpp"
#include "chebyknot/tiling.hpp"

namespace chebyknot::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "chebyknot/1";

struct BadArgs : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TableSpec make_spec(int a, int b, int bumpers) {
  switch (bumpers) {
    case 0: return TableSpec::rectangle(a, b);
    case 1:
    case 2:
      if (a != 5) throw BadArgs("--bumpers needs --a 5");
      return bumpers == 2 ? TableSpec::b2(b) : TableSpec::b1(b);
    default: throw BadArgs("--bumpers must be 0, 1 or 2");
  }
}

std::optional<SkeletonSum> recursion_for(const TableSpec& spec) {
  if (spec.bumpers == 2) return b_skeletons(spec.b);
  if (spec.bumpers == 1) return bt_skeletons(spec.b);
  if (spec.a == 3) return f_skeletons(spec.b);
  if (spec.a == 5) {
    if (spec.b >= 4) return h_skeletons(spec.b);
    return SkeletonSum{{Skeleton{h_block(spec.b)}}};
  }
  return std::nullopt;
}

SkeletonSum family_skeletons(const std::string& family, int n) {
  if (family == "f") return f_skeletons(n);
  if (family == "h") return n >= 4 ? h_skeletons(n) : SkeletonSum{{Skeleton{h_block(n)}}};
  if (family == "b") return b_skeletons(n);
  if (family == "bt") return bt_skeletons(n);
  throw BadArgs("unknown family '" + family + "'");
}

TableSpec family_spec(const std::string& family, int n) {
  if (family == "f") return TableSpec::rectangle(3, n);
  if (family == "h") return TableSpec::rectangle(5, n);
  if (family == "b") return TableSpec::b2(n);
  if (family == "bt") return TableSpec::b1(n);
  throw BadArgs("unknown family '" + family + "'");
}

SignSequence default_signs(const BilliardDiagram& d) {
  std::string s;
  for (const auto& slot : d.slots()) s += slot ? '+' : '_';
  return SignSequence::parse(s);
}

json header(const std::string& command) { return {{"schema", kSchema}, {"command", command}}; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Options {
  bool json = false;
  int a = 3;
  int b = 4;
  int bumpers = 0;
  std::string signs;
  std::string method = "recursion";
  std::string family = "f";
  int n = 4;
  int min_n = 0;
  int max_n = 6;
  int slot_limit = kDefaultSweepLimit;
  bool flat = false;
  int which = 1;
  int repeat = 20;
  std::string q_tail = "N";
  std::string p_fill = "N~";
};

int cmd_bracket(const Options& o, std::ostream& out) {
  auto spec = make_spec(o.a, o.b, o.bumpers);
  auto d = build_table(spec);
  auto s = o.signs.empty() ? default_signs(d) : SignSequence::parse(o.signs);
  auto sd = assign_signs(d, s);
  LaurentPoly p;
  if (o.method == "oracle") {
    p = bracket_bruteforce(sd);
  } else if (o.method == "recursion") {
    auto sk = recursion_for(spec);
    if (!sk) throw BadArgs("no recursion for " + spec.name() + "; use --method oracle");
    p = eval_skeletons(*sk, s);
  } else {
    throw BadArgs("--method must be recursion or oracle");
  }
  if (o.json) {
    auto j = header("bracket");
    j["table"] = spec.name();
    j["signs"] = s.to_string();
    j["method"] = o.method;
    j["bracket"] = p.to_string();
    j["terms"] = p.to_json();
    j["coefficients"] = p.is_zero() ? json::array() : json(coefficient_string(p));
    emit(out, j);
  } else {
    out << p.to_string() << '\n';
  }
  return 0;
}

int cmd_jones(const Options& o, std::ostream& out) {
  auto spec = make_spec(o.a, o.b, o.bumpers);
  auto d = build_table(spec);
  auto s = o.signs.empty() ? default_signs(d) : SignSequence::parse(o.signs);
  auto sd = assign_signs(d, s);
  auto sk = recursion_for(spec);
  LaurentPoly p = sk ? eval_skeletons(*sk, s) : bracket_bruteforce(sd);
  int w = writhe_direct(sd);
  auto v = jones_normalize(p, w);
  if (o.json) {
    auto j = header("jones");
    j["table"] = spec.name();
    j["signs"] = s.to_string();
    j["components"] = component_count(d);
    j["writhe"] = w;
    j["bracket"] = p.to_string();
    j["jones"] = v.to_string();
    j["jones_terms"] = v.to_json();
    emit(out, j);
  } else {
    out << v.to_string() << '\n';
  }
  return 0;
}

int cmd_terms(const Options& o, std::ostream& out) {
  auto sk = family_skeletons(o.family, o.n);
  TermSum flat = flatten(sk);
  std::size_t width = sk.terms.empty() ? 0 : slot_width(sk.terms.front());
  if (o.json) {
    auto j = header("terms");
    j["family"] = o.family;
    j["n"] = o.n;
    j["width"] = width;
    j["summands"] = summand_strings(sk);
    j["summand_count"] = sk.terms.size();
    j["flat_term_count"] = flat.size();
    if (o.family == "h" && o.n >= 4) {
      j["skeleton_count"] = count_h_skeletons(o.n);
      j["skeletons"] = h_skeletons_json(o.n)["skeletons"];
    }
    if (o.family == "f" && o.n >= 4) j["padovan_count"] = count_f_terms(o.n);
    if (o.flat) j["flat"] = render(flat);
    emit(out, j);
    return 0;
  }
  out << o.family << "_" << o.n << " = " << render(sk) << '\n';
  out << "width: " << width << '\n';
  out << "summands: " << sk.terms.size() << '\n';
  out << "flat terms: " << flat.size() << '\n';
  if (o.family == "h" && o.n >= 4) out << "skeletons (i, composition): " << count_h_skeletons(o.n) << '\n';
  if (o.flat) out << render(flat) << '\n';
  return 0;
}

int cmd_pd(const Options& o, std::ostream& out) {
  auto spec = make_spec(o.a, o.b, o.bumpers);
  auto d = build_table(spec);
  auto s = o.signs.empty() ? default_signs(d) : SignSequence::parse(o.signs);
  auto sd = assign_signs(d, s);
  auto pd = export_pd(sd);
  if (o.json) {
    auto j = header("pd");
    j["table"] = spec.name();
    j["signs"] = s.to_string();
    j["pd"] = pd.to_string();
    j["pd_crossings"] = pd.crossings;
    j["gauss"] = gauss_code(sd);
    j["writhe"] = writhe_direct(sd);
    j["diagram"] = d.to_json();
    emit(out, j);
  } else {
    out << pd.to_string() << '\n' << gauss_code_string(sd) << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  int lo = o.min_n > 0 ? o.min_n : (o.family == "f" || o.family == "h" ? 2 : 1);
  BlockVariants v;
  v.q_tail = o.q_tail == "K" ? QEvenTail::K : QEvenTail::N;
  v.p_fill = o.p_fill == "N" ? PEvenFill::N : PEvenFill::NTilde;
  if ((o.q_tail != "N" && o.q_tail != "K") || (o.p_fill != "N" && o.p_fill != "N~")) {
    throw BadArgs("--q-tail takes N or K, --p-fill takes N~ or N");
  }
  bool variants = v.q_tail != QEvenTail::N || v.p_fill != PEvenFill::NTilde;
  if (variants && o.family != "h") throw BadArgs("block variants apply to --family h only");

  json rows = json::array();
  std::uint64_t total_bad = 0;
  for (int n = lo; n <= o.max_n; ++n) {
    auto spec = family_spec(o.family, n);
    auto d = build_table(spec);
    auto t0 = std::chrono::steady_clock::now();
    auto oracle = bracket_all_signs(d, o.slot_limit);
    double oracle_s = seconds_since(t0);
    SkeletonSum sk;
    if (o.family == "h" && n >= 4) {
      HOptions opt;
      opt.blocks = v;
      sk = h_skeletons(n, opt);
    } else {
      sk = family_skeletons(o.family, n);
    }
    t0 = std::chrono::steady_clock::now();
    std::uint64_t bad = 0;
    std::string first_bad;
    for (const auto& [s, p] : oracle) {
      if (eval_skeletons(sk, s) != p) {
        if (bad == 0) first_bad = s.to_string();
        ++bad;
      }
    }
    double rec_s = seconds_since(t0);
    total_bad += bad;
    if (o.json) {
      json row = {{"n", n}, {"table", spec.name()}, {"sign_sequences", oracle.size()},
                  {"mismatches", bad}, {"oracle_seconds", oracle_s}, {"recursion_seconds", rec_s}};
      if (bad) row["first_mismatch"] = first_bad;
      rows.push_back(row);
    } else {
      out << o.family << "_" << n << "  " << spec.name() << "  sign sequences: " << oracle.size()
          << "  mismatches: " << bad;
      if (bad) out << "  first: " << first_bad;
      out << '\n';
    }
  }
  if (o.json) {
    auto j = header("verify");
    j["family"] = o.family;
    j["q_even_tail"] = o.q_tail;
    j["p_even_fill"] = o.p_fill;
    j["rows"] = rows;
    j["ok"] = total_bad == 0;
    emit(out, j);
  } else {
    out << (total_bad == 0 ? "all match" : "MISMATCH") << '\n';
  }
  return total_bad == 0 ? 0 : 1;
}

int cmd_table(const Options& o, std::ostream& out) {
  json rows = json::array();
  if (!o.json) out << "b | knot | coefficients\n";
  for (const auto& row : table_rows(o.which)) {
    auto p = table_bracket(o.which, row.b);
    auto c = oriented_like(coefficient_string(p), row.printed);
    bool ok = coefficients_match(c, row.printed);
    if (o.json) {
      rows.push_back({{"b", row.b}, {"knot", row.knot}, {"signs", table_signs(o.which, row.b).to_string()},
                      {"coefficients", c}, {"printed", row.printed}, {"matches_printed", ok}});
    } else {
      out << row.b << " | " << row.knot << " | " << tuple_string(c);
      if (!ok) out << " | printed " << tuple_string(row.printed);
      out << '\n';
    }
  }
  if (o.json) {
    auto j = header("table");
    j["which"] = o.which;
    j["rows"] = rows;
    emit(out, j);
  }
  return 0;
}

int cmd_bench(const Options& o, std::ostream& out) {
  auto spec = make_spec(o.a, o.b, o.bumpers);
  auto d = build_table(spec);
  auto s = o.signs.empty() ? default_signs(d) : SignSequence::parse(o.signs);
  auto sd = assign_signs(d, s);
  auto t0 = std::chrono::steady_clock::now();
  auto sk = recursion_for(spec);
  double build_s = seconds_since(t0);
  if (!sk) throw BadArgs("no recursion for " + spec.name());

  const int reps = std::max(1, o.repeat);
  double rec_best = 1e300;
  LaurentPoly rec;
  for (int k = 0; k < reps; ++k) {
    t0 = std::chrono::steady_clock::now();
    rec = eval_skeletons(*sk, s);
    rec_best = std::min(rec_best, seconds_since(t0));
  }
  double oracle_best = 1e300;
  LaurentPoly orc;
  for (int k = 0; k < std::min(reps, 3); ++k) {
    t0 = std::chrono::steady_clock::now();
    orc = bracket_bruteforce(sd);
    oracle_best = std::min(oracle_best, seconds_since(t0));
  }
  std::size_t flat = flatten(*sk).size();
  std::uint64_t states = std::uint64_t{1} << d.crossing_count();
  std::optional<std::uint64_t> skeleton_count;
  if (spec.a == 5 && spec.bumpers == 0 && spec.b >= 4) skeleton_count = count_h_skeletons(spec.b);
  double speedup = oracle_best / rec_best;
  bool agree = rec == orc;
  if (o.json) {
    auto j = header("bench");
    j["table"] = spec.name();
    j["signs"] = s.to_string();
    j["crossings"] = d.crossing_count();
    j["oracle_states"] = states;
    j["summands"] = sk->terms.size();
    j["flat_terms"] = flat;
    if (skeleton_count) j["skeletons"] = *skeleton_count;
    j["recursion_build_seconds"] = build_s;
    j["recursion_eval_seconds"] = rec_best;
    j["oracle_seconds"] = oracle_best;
    j["speedup"] = speedup;
    j["agree"] = agree;
    emit(out, j);
  } else {
    out << spec.name() << "  signs " << s.to_string() << '\n';
    out << "crossings: " << d.crossing_count() << "  oracle states: " << states << '\n';
    if (skeleton_count) out << "skeletons (i, composition): " << *skeleton_count << '\n';
    out << "block summands: " << sk->terms.size() << "  flat terms: " << flat << '\n';
    out << "recursion: " << rec_best * 1e3 << " ms per evaluation (" << build_s * 1e3 << " ms to build)\n";
    out << "oracle: " << oracle_best * 1e3 << " ms\n";
    out << "speedup: " << speedup << "x  results " << (agree ? "agree" : "DIFFER") << '\n';
  }
  return agree ? 0 : 1;
}

int cmd_tilings(const Options& o, std::ostream& out) {
  auto tilings = enumerate_term_tilings(o.b);
  auto report = check_tiling_bijection(o.b);
  bool ok = report.widths_ok && report.injective && report.matches_f_terms && report.covers_dominoes &&
            report.tilings == report.f_term_count;
  if (o.json) {
    auto j = header("tilings");
    j["b"] = o.b;
    json list = json::array();
    for (const auto& t : tilings) list.push_back({{"tiles", render(t)}, {"summand", render(tiling_to_skeleton(t))}});
    j["tilings"] = list;
    j["count"] = report.tilings;
    j["count_f_terms"] = report.f_term_count;
    j["domino_tilings"] = count_domino_tilings(o.b - 1);
    j["injective"] = report.injective;
    j["matches_f_terms"] = report.matches_f_terms;
    j["covers_domino_tilings"] = report.covers_dominoes;
    j["ok"] = ok;
    emit(out, j);
  } else {
    for (const auto& t : tilings) out << render(t) << "  ->  " << render(tiling_to_skeleton(t)) << '\n';
    out << "tilings: " << report.tilings << "  f_b summands: " << report.f_term_count
        << "  domino tilings of 2x" << o.b - 1 << ": " << count_domino_tilings(o.b - 1) << '\n';
    out << "bijection: " << (ok ? "yes" : "NO") << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kauffman bracket and Jones polynomials of billiard-table knot diagrams"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");

  auto table_opts = [&](CLI::App* c, bool signs) {
    c->add_option("--a", o.a, "Table height (3, 4 or 5)")->required();
    c->add_option("--b", o.b, "Table width")->required();
    c->add_option("--bumpers", o.bumpers, "Cells removed from the last column (a = 5)")
        ->check(CLI::IsMember({0, 1, 2}));
    if (signs) c->add_option("--signs", o.signs, "One of + - _ per slot");
  };

  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket");
  table_opts(bracket, true);
  bracket->add_option("--method", o.method, "recursion or oracle")
      ->check(CLI::IsMember({"recursion", "oracle"}));

  auto* jones = app.add_subcommand("jones", "Jones polynomial");
  table_opts(jones, true);

  auto* terms = app.add_subcommand("terms", "Compressed expansion of a family");
  terms->add_option("--family", o.family, "f, h, b or bt")->required()->check(CLI::IsMember({"f", "h", "b", "bt"}));
  terms->add_option("--n", o.n, "Index")->required()->check(CLI::PositiveNumber);
  terms->add_flag("--flat", o.flat, "Also print the flat term sum");

  auto* pd = app.add_subcommand("pd", "PD and Gauss codes");
  table_opts(pd, true);

  auto* verify = app.add_subcommand("verify", "Compare a family with the state sum over all signs");
  verify->add_option("--family", o.family, "f, h, b or bt")->required()->check(CLI::IsMember({"f", "h", "b", "bt"}));
  verify->add_option("--max-n", o.max_n, "Largest index")->required()->check(CLI::PositiveNumber);
  verify->add_option("--min-n", o.min_n, "Smallest index");
  verify->add_option("--slot-limit", o.slot_limit, "Refuse tables with more slots");
  verify->add_option("--q-tail", o.q_tail, "Even Q_i tail block: N or K");
  verify->add_option("--p-fill", o.p_fill, "Even P'_i filler block: N~ or N");

  auto* table = app.add_subcommand("table", "Alternating families");
  table->add_option("--which", o.which, "1: T(3,b), 2: T(5,b)")->required()->check(CLI::IsMember({1, 2}));

  auto* bench = app.add_subcommand("bench", "Recursion against state sum timing");
  table_opts(bench, true);
  bench->add_option("--repeat", o.repeat, "Timing repetitions");

  auto* tilings = app.add_subcommand("tilings", "Tile sequences for f_b");
  tilings->add_option("--b", o.b, "Width (>= 4)")->required();

  for (auto* c : app.get_subcommands({})) c->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (bracket->parsed()) return cmd_bracket(o, out);
    if (jones->parsed()) return cmd_jones(o, out);
    if (terms->parsed()) return cmd_terms(o, out);
    if (pd->parsed()) return cmd_pd(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
    if (tilings->parsed()) return cmd_tilings(o, out);
  } catch (const BadArgs& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace chebyknot::cli
