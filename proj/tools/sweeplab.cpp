#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sweeplab/classical.hpp"
#include "sweeplab/error.hpp"
#include "sweeplab/harness.hpp"
#include "sweeplab/inversion.hpp"
#include "sweeplab/laurent.hpp"
#include "sweeplab/paths.hpp"
#include "sweeplab/stats.hpp"
#include "sweeplab/sweep.hpp"

using namespace sweeplab;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kDomain = 3, kBudget = 4 };

struct Globals {
  std::string format = "text";
  std::string config;
};

std::string join(const std::vector<std::int64_t>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<std::int64_t> as_int(const std::vector<std::size_t>& v) {
  return {v.begin(), v.end()};
}

// Coefficients that fit an int64 are written as JSON numbers, larger ones as strings.
Json coeff_json(const LaurentPoly2::Coeff& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

Json poly_json(const LaurentPoly2& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"q", e.first}, {"t", e.second}, {"c", coeff_json(c)}});
  return terms;
}

ParamList parse_point(const std::string& text) {
  ParamList out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("point entries look like a=3, got '" + item + "'");
    try {
      std::size_t used = 0;
      auto v = std::stoll(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
      out.emplace_back(item.substr(0, eq), v);
    } catch (const std::logic_error&) {
      throw ParseError("bad integer in point entry '" + item + "'");
    }
  }
  if (out.empty()) throw ParseError("empty --point");
  return out;
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

// Fill options of `sub` the user did not give on the command line or via
// the environment from the config file. Keys for other subcommands are ignored.
void apply_config(CLI::App* sub, const std::map<std::string, std::string>& cfg) {
  for (const auto& [key, value] : cfg) {
    auto* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr || opt->count() > 0) continue;
    opt->add_result(value);
    opt->run_callback();
  }
}

// ---- sweep ----

struct SweepArgs {
  std::int64_t r = 0, s = 0;
  std::string variant = "minus";
  std::string word;
  std::string weights;
  bool trace = false;
};

int emit_sweep(const Globals& g, const Word& w, const Word& out, const SweepTrace* tr) {
  if (g.format == "json") {
    Json j{{"input", w.str()}, {"output", out.str()}};
    if (tr) {
      j["levels"] = tr->step_levels;
      j["order"] = tr->order;
    }
    std::cout << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    std::cout << "input,output" << (tr ? ",levels,order" : "") << '\n'
              << w.str() << ',' << out.str();
    if (tr) std::cout << ',' << join(tr->step_levels) << ',' << join(as_int(tr->order));
    std::cout << '\n';
  } else {
    std::cout << out.str() << '\n';
    if (tr) {
      std::cout << "levels: " << join(tr->step_levels) << '\n'
                << "order:  " << join(as_int(tr->order)) << '\n';
    }
  }
  return kOk;
}

int cmd_sweep(const Globals& g, const SweepArgs& a) {
  Word w(a.word);
  SweepParams params{a.r, a.s};
  auto v = parse_variant(a.variant);
  auto out = sweep_variant(w, params, v);
  if (!a.trace) return emit_sweep(g, w, out, nullptr);
  // The trace is of the inner sweep; rev-variants reverse around it.
  auto spec = variant_spec(v, params, {static_cast<std::int64_t>(w.count('N')),
                                       static_cast<std::int64_t>(w.count('E'))});
  bool pre_rev = v == NamedVariant::kMinusRev || v == NamedVariant::kPlusRev ||
                 v == NamedVariant::kRevMinusRev || v == NamedVariant::kRevPlusRev;
  auto tr = trace_sweep(pre_rev ? rev(w) : w, WeightFn::from_params(params), spec);
  return emit_sweep(g, w, out, &tr);
}

int cmd_sweep_general(const Globals& g, const SweepArgs& a) {
  auto wt = WeightFn::parse(a.weights);
  Word w(a.word, wt.alphabet());
  auto out = sweep_general(w, wt);
  if (!a.trace) return emit_sweep(g, w, out, nullptr);
  auto tr = trace_sweep(w, wt, SweepSpec{});
  return emit_sweep(g, w, out, &tr);
}

// ---- invert ----

struct InvertArgs {
  std::string method;
  std::string word;
  std::int64_t n = 0, k = 0, m = 1, sign = 1, r = 1, s = -1;
  std::string variant = "minus";
  std::uint64_t budget = 10'000'000;
  unsigned parallelism = 1;
};

int cmd_invert(const Globals& g, const InvertArgs& a) {
  std::vector<Word> pre;
  std::optional<StepLabeling> labels;
  if (a.method == "haglund") {
    Word q(a.word);
    labels = haglund_labels(q);
    pre.push_back(invert_haglund(q));
  } else if (a.method == "trapezoid") {
    Word q(a.word);
    TrapezoidShape sh{a.n > 0 ? a.n : static_cast<std::int64_t>(q.count('N')), a.k, a.m};
    labels = trapezoid_labels(q, sh);
    pre.push_back(invert_phi_prime(q, sh));
  } else if (a.method == "square") {
    Word q(a.word);
    labels = square_labels(q);
    pre.push_back(invert_phi_lw(q));
  } else if (a.method == "gm") {
    Word q(a.word);
    auto n = a.n > 0 ? a.n : static_cast<std::int64_t>(q.count('N'));
    auto sign = a.sign > 0 ? GmSign::kPlus : GmSign::kMinus;
    labels = gm_labels(q, n, a.m, sign);
    pre.push_back(invert_gm(q, n, a.m, sign));
  } else if (a.method == "brute") {
    Word q(a.word);
    SweepParams params{a.r, a.s};
    auto v = parse_variant(a.variant);
    BruteDomain dom{WordSpace::rect({static_cast<std::int64_t>(q.count('N')),
                                     static_cast<std::int64_t>(q.count('E'))}),
                    {}};
    pre = brute_force_inverse(q, [&](const Word& w) { return sweep_variant(w, params, v); }, dom,
                              a.budget, a.parallelism);
  } else {
    throw ParseError("unknown method '" + a.method + "'");
  }
  if (g.format == "json") {
    Json j{{"method", a.method}, {"input", a.word}};
    Json p = Json::array();
    for (const auto& w : pre) p.push_back(w.str());
    j["preimages"] = p;
    if (labels) j["labels"] = *labels;
    std::cout << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    std::cout << "input,preimage" << (labels ? ",labels" : "") << '\n';
    for (const auto& w : pre) {
      std::cout << a.word << ',' << w.str();
      if (labels) std::cout << ',' << join(*labels);
      std::cout << '\n';
    }
  } else {
    for (const auto& w : pre) std::cout << w.str() << '\n';
    if (labels) std::cout << "labels: " << join(*labels) << '\n';
  }
  if (pre.empty()) {
    std::cerr << "sweeplab: " << a.word << " has no preimage\n";
    return kDomain;
  }
  return kOk;
}

// ---- map ----

struct MapArgs {
  std::string name;
  std::string word;
  std::string partition;
  std::int64_t a = 0, b = 0, n = 0, k = 0, m = 1;
  bool trace = false;
};

std::string map_string(const std::map<std::int64_t, std::string>& blocks) {
  std::string out;
  for (const auto& [i, s] : blocks) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i) + ":" + (s.empty() ? "-" : s);
  }
  return out;
}

int cmd_map(const Globals& g, const MapArgs& a) {
  std::string input, output;
  std::vector<std::pair<std::string, std::string>> trace;
  auto need_word = [&] {
    if (a.word.empty()) throw ParseError("map " + a.name + " needs --word");
    return Word(a.word);
  };
  if (a.name == "phi" || a.name == "phi-prime") {
    auto p = need_word();
    TrapezoidShape sh{a.n > 0 ? a.n : static_cast<std::int64_t>(p.count('N')), a.k, a.m};
    if (a.name == "phi" && (sh.k != 0 || sh.m != 1)) {
      throw ParameterError("phi is defined here for k = 0, m = 1; use phi-prime");
    }
    input = p.str();
    output = (a.name == "phi" ? phi_trapezoid(p, sh) : phi_prime_trapezoid(p, sh)).str();
    auto blocks = trapezoid_blocks(p, sh);
    trace = {{"g", join(blocks.g)}, {"sigma", map_string(blocks.sigma)}, {"tau", map_string(blocks.tau)}};
  } else if (a.name == "phi-hl") {
    auto p = need_word();
    input = p.str();
    output = phi_hl(p).str();
    auto blocks = trapezoid_blocks(p, {static_cast<std::int64_t>(p.count('N')), 0, 1});
    trace = {{"g", join(blocks.g)}, {"sigma", map_string(blocks.sigma)}, {"tau", map_string(blocks.tau)}};
  } else if (a.name == "phi-lw") {
    auto p = need_word();
    input = p.str();
    output = phi_lw(p).str();
    auto blocks = square_blocks(p);
    trace = {{"g", join(blocks.g)}, {"tau", map_string(blocks.tau)}};
  } else if (a.name == "schroder") {
    Word w(a.word, Alphabet::schroder());
    input = w.str();
    output = schroder_sweep(w).str();
    auto tr = trace_sweep(w, schroder_weights(), SweepSpec{});
    trace = {{"levels", join(tr.step_levels)}, {"order", join(as_int(tr.order))}};
  } else if (a.name == "zeta" || a.name == "gm") {
    if (a.a <= 0 || a.b <= 0) throw ParameterError("map " + a.name + " needs --a and --b");
    Partition pi = !a.partition.empty() ? Partition::parse(a.partition) : mkptn(need_word());
    input = pi.to_string();
    if (a.name == "zeta") {
      output = zeta(pi, a.a, a.b).to_string();
      trace = {{"delta-complement", join(delta_complement(pi, a.a, a.b))},
               {"zeta-f", zeta_f(pi, a.a, a.b).to_string()},
               {"retained-rows", join(zeta_retained_rows(pi, a.a, a.b))}};
    } else {
      output = gorsky_mazin(pi, a.a, a.b).to_string();
      auto gd = generator_data(pi, a.a, a.b);
      trace = {{"generators", join(gd.generators)},
               {"delta-complement", join(gd.delta_complement)},
               {"column-lengths", join(gm_column_lengths(pi, a.a, a.b))}};
    }
  } else {
    throw ParseError("unknown map '" + a.name + "'");
  }
  if (g.format == "json") {
    Json j{{"map", a.name}, {"input", input}, {"output", output}};
    if (a.trace) {
      Json t = Json::object();
      for (const auto& [k, v] : trace) t[k] = v;
      j["trace"] = t;
    }
    std::cout << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    std::cout << "map,input,output\n" << a.name << ",\"" << input << "\",\"" << output << "\"\n";
  } else {
    std::cout << output << '\n';
    if (a.trace) {
      for (const auto& [k, v] : trace) std::cout << k << ": " << v << '\n';
    }
  }
  return kOk;
}

// ---- poly ----

struct PolyArgs {
  std::string kind = "catalan";
  std::int64_t r = 0, s = 0, a = 0, b = 0, n = 0;
  std::string subst = "none";
  std::uint64_t budget = 50'000'000;
  unsigned parallelism = 1;
};

int cmd_poly(const Globals& g, const PolyArgs& a) {
  EnumLimits lim{a.budget, a.parallelism};
  LaurentPoly2 p;
  if (a.kind == "catalan") {
    p = qt_catalan({a.r, a.s}, {a.a, a.b}, lim);
  } else if (a.kind == "catalan-plus-rev") {
    p = qt_catalan_plus_rev({a.r, a.s}, {a.a, a.b}, lim);
  } else if (a.kind == "square") {
    p = qt_square({a.a, a.b}, lim);
  } else if (a.kind == "classical") {
    p = classical_qt_catalan(a.n, lim);
  } else if (a.kind == "qbinomial") {
    p = q_binomial(a.a, a.b);
  } else if (a.kind == "qint") {
    p = q_int(a.n);
  } else {
    throw ParseError("unknown polynomial kind '" + a.kind + "'");
  }
  if (a.subst == "t=1/q") {
    p = p.t_to_inverse_q();
  } else if (a.subst == "q=1") {
    p = p.q_at_one();
  } else if (a.subst == "t=1") {
    p = p.t_at_one();
  } else if (a.subst == "swap") {
    p = p.swap_qt();
  } else if (a.subst != "none") {
    throw ParseError("unknown substitution '" + a.subst + "'");
  }
  if (g.format == "json") {
    Json j{{"kind", a.kind}, {"subst", a.subst}, {"poly", p.to_string()}, {"terms", poly_json(p)}};
    std::cout << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    std::cout << p.to_csv();
  } else {
    std::cout << p.to_string() << '\n';
  }
  return kOk;
}

// ---- verify ----

struct VerifyArgs {
  CampaignConfig cfg;
  std::string point;
  std::string out;
  bool quiet = false;
  bool timing = false;
};

int cmd_verify(const Globals& g, VerifyArgs a) {
  if (!a.point.empty()) a.cfg.point = parse_point(a.point);
  a.cfg.format = g.format;
  ProgressFn progress;
  if (!a.quiet) {
    progress = [](std::size_t done, std::size_t total, const ReportEntry& e) {
      std::cerr << '[' << done << '/' << total << "] " << status_name(e.status) << ' '
                << format_params(e.params) << '\n';
    };
  }
  auto report = run_campaign(a.cfg, progress);
  std::string text = g.format == "json"  ? report_json(report, a.timing)
                     : g.format == "csv" ? report_csv(report)
                                         : report_text(report, a.timing);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out);
    if (!f) throw ParseError("cannot write '" + a.out + "'");
    f << text;
    if (!a.quiet) {
      std::cerr << report.campaign << ": " << report.entries.size() << " points, "
                << report.count(PointStatus::kFail) << " fail, "
                << report.count(PointStatus::kSkipped) << " skipped\n";
    }
  }
  if (!report.passed()) return kFailed;
  if (report.count(PointStatus::kSkipped) > 0) return kBudget;
  return kOk;
}

// ---- enumerate ----

struct EnumArgs {
  std::string domain = "words";
  std::int64_t a = 0, b = 0, r = 1, s = -1, n = 0, k = 0, m = 1;
  bool stats = false;
  std::uint64_t budget = 10'000'000;
};

int cmd_enumerate(const Globals& g, const EnumArgs& a) {
  std::vector<Word> words;
  SweepParams params{a.r, a.s};
  auto guard = [&](std::uint64_t size) {
    if (size > a.budget) throw BudgetError("domain has " + std::to_string(size) + " words, budget is " + std::to_string(a.budget));
  };
  if (a.domain == "words") {
    guard(WordSpace::rect({a.a, a.b}).size());
    words = enumerate_words({a.a, a.b});
  } else if (a.domain == "dyck") {
    guard(WordSpace::rect({a.a, a.b}).size());
    words = enumerate_dyck({a.a, a.b}, params);
  } else if (a.domain == "trapezoid") {
    TrapezoidShape sh{a.n, a.k, a.m};
    guard(WordSpace::rect({sh.n, sh.k + sh.m * sh.n}).size());
    words = enumerate_trapezoid(sh);
  } else {
    throw ParseError("unknown domain '" + a.domain + "'");
  }
  if (g.format == "json") {
    Json arr = Json::array();
    for (const auto& w : words) {
      Json j{{"word", w.str()}};
      if (a.stats) {
        auto st = stat_bundle(w, params);
        j["area"] = st.area;
        j["ml"] = st.ml;
        j["area_star"] = st.area_star;
        if (st.dyck_area) j["dyck_area"] = *st.dyck_area;
        if (st.dinv) j["dinv"] = *st.dinv;
      }
      arr.push_back(j);
    }
    std::cout << Json{{"domain", a.domain}, {"count", words.size()}, {"words", arr}}.dump(2) << '\n';
    return kOk;
  }
  bool csv = g.format == "csv";
  if (csv) std::cout << "word" << (a.stats ? ",area,ml,area_star,dyck_area,dinv" : "") << '\n';
  for (const auto& w : words) {
    std::cout << w.str();
    if (a.stats) {
      auto st = stat_bundle(w, params);
      auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
      if (csv) {
        std::cout << ',' << st.area << ',' << st.ml << ',' << st.area_star << ',' << opt(st.dyck_area) << ','
                  << opt(st.dinv);
      } else {
        std::cout << " area=" << st.area << " ml=" << st.ml << " area*=" << st.area_star;
        if (st.dyck_area) std::cout << " Area=" << *st.dyck_area << " dinv=" << *st.dinv;
      }
    }
    std::cout << '\n';
  }
  if (!csv) std::cerr << words.size() << " words\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sweeplab: sweep maps on lattice words"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--config", g.config, "key=value file; flags take precedence");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "sweep an NE word");
  sweep->add_option("--r", sw.r)->required();
  sweep->add_option("--s", sw.s)->required();
  sweep->add_option("--variant", sw.variant)
      ->check(CLI::IsMember({"minus", "plus", "rev-minus", "rev-plus", "minus-rev", "plus-rev",
                             "rev-minus-rev", "rev-plus-rev"}))
      ->capture_default_str();
  sweep->add_option("--word", sw.word)->required();
  sweep->add_flag("--trace", sw.trace, "also print step levels and sweep order");

  SweepArgs swg;
  auto* sweep_gen = app.add_subcommand("sweep-general", "sweep a word over any alphabet");
  sweep_gen->add_option("--weights", swg.weights, "e.g. N=1,D=0,E=-1")->required();
  sweep_gen->add_option("--word", swg.word)->required();
  sweep_gen->add_flag("--trace", swg.trace);

  InvertArgs inv;
  auto* invert = app.add_subcommand("invert", "recover the preimage of a swept word");
  invert->add_option("--method", inv.method)
      ->required()
      ->check(CLI::IsMember({"haglund", "trapezoid", "square", "gm", "brute"}));
  invert->add_option("--word", inv.word)->required();
  invert->add_option("--n", inv.n);
  invert->add_option("--k", inv.k);
  invert->add_option("--m", inv.m);
  invert->add_option("--sign", inv.sign, "gm: +1 for b = nm+1, -1 for b = nm-1");
  invert->add_option("--r", inv.r);
  invert->add_option("--s", inv.s);
  invert->add_option("--variant", inv.variant);
  invert->add_option("--budget", inv.budget);
  invert->add_option("--parallelism", inv.parallelism)->envname("SWEEPLAB_PARALLELISM");

  MapArgs mp;
  auto* map = app.add_subcommand("map", "run a classical map");
  map->add_option("name", mp.name)
      ->required()
      ->check(CLI::IsMember({"phi", "phi-prime", "phi-hl", "phi-lw", "schroder", "zeta", "gm"}));
  map->add_option("--word", mp.word);
  map->add_option("--partition", mp.partition);
  map->add_option("--a", mp.a);
  map->add_option("--b", mp.b);
  map->add_option("--n", mp.n);
  map->add_option("--k", mp.k);
  map->add_option("--m", mp.m);
  map->add_flag("--trace", mp.trace, "print intermediate data");

  PolyArgs pa;
  auto* poly = app.add_subcommand("poly", "compute a q,t-polynomial");
  poly->add_option("--kind", pa.kind)
      ->check(CLI::IsMember({"catalan", "catalan-plus-rev", "square", "classical", "qbinomial", "qint"}))
      ->capture_default_str();
  poly->add_option("--r", pa.r);
  poly->add_option("--s", pa.s);
  poly->add_option("--a", pa.a);
  poly->add_option("--b", pa.b);
  poly->add_option("--n", pa.n);
  poly->add_option("--subst", pa.subst)
      ->check(CLI::IsMember({"none", "t=1/q", "q=1", "t=1", "swap"}))
      ->capture_default_str();
  poly->add_option("--budget", pa.budget);
  poly->add_option("--parallelism", pa.parallelism)->envname("SWEEPLAB_PARALLELISM");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("suite", va.cfg.suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--rmax", va.cfg.rmax)->capture_default_str();
  verify->add_option("--smax", va.cfg.smax)->capture_default_str();
  verify->add_option("--sizemax", va.cfg.sizemax)->capture_default_str();
  verify->add_option("--kmax", va.cfg.kmax)->capture_default_str();
  verify->add_option("--mmax", va.cfg.mmax)->capture_default_str();
  verify->add_option("--wmax", va.cfg.wmax)->capture_default_str();
  verify->add_option("--budget", va.cfg.budget)->capture_default_str();
  verify->add_option("--samples", va.cfg.samples, "random elements per point, 0 = exhaustive");
  verify->add_option("--seed", va.cfg.seed)->capture_default_str();
  verify->add_option("--parallelism", va.cfg.parallelism)->envname("SWEEPLAB_PARALLELISM");
  verify->add_option("--point", va.point, "run one point, e.g. a=3,b=5");
  verify->add_option("--out", va.out, "write the report to a file");
  verify->add_flag("--quiet", va.quiet, "no progress on stderr");
  verify->add_flag("--timing", va.timing, "include wall time in the report");

  EnumArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "list the words of a domain");
  enumerate->add_option("--domain", ea.domain)
      ->check(CLI::IsMember({"words", "dyck", "trapezoid"}))
      ->capture_default_str();
  enumerate->add_option("--a", ea.a);
  enumerate->add_option("--b", ea.b);
  enumerate->add_option("--r", ea.r);
  enumerate->add_option("--s", ea.s);
  enumerate->add_option("--n", ea.n);
  enumerate->add_option("--k", ea.k);
  enumerate->add_option("--m", ea.m);
  enumerate->add_option("--budget", ea.budget);
  enumerate->add_flag("--stats", ea.stats, "print area, ml, area* and Dyck statistics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    auto* sub = app.get_subcommands().front();
    if (!g.config.empty()) apply_config(sub, read_config(g.config));
    if (sub == sweep) return cmd_sweep(g, sw);
    if (sub == sweep_gen) return cmd_sweep_general(g, swg);
    if (sub == invert) return cmd_invert(g, inv);
    if (sub == map) return cmd_map(g, mp);
    if (sub == poly) return cmd_poly(g, pa);
    if (sub == verify) return cmd_verify(g, va);
    if (sub == enumerate) return cmd_enumerate(g, ea);
  } catch (const CLI::Error& e) {
    std::cerr << "sweeplab: config: " << e.what() << '\n';
    return kParse;
  } catch (const ParseError& e) {
    std::cerr << "sweeplab: " << e.what() << '\n';
    return kParse;
  } catch (const AlphabetError& e) {
    std::cerr << "sweeplab: " << e.what() << '\n';
    return kParse;
  } catch (const BudgetError& e) {
    std::cerr << "sweeplab: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "sweeplab: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}
