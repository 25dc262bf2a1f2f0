#include "sweeplab/harness.hpp"

#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sweeplab/classical.hpp"
#include "sweeplab/error.hpp"
#include "sweeplab/inversion.hpp"
#include "sweeplab/paths.hpp"
#include "sweeplab/sweep.hpp"

namespace sweeplab {

namespace {

using Json = nlohmann::ordered_json;

struct SuitePoint {
  ParamList params;
  std::function<ReportEntry()> run;
};

// A parameter family inside a suite: its keys, its points for a config and
// how to build the check for one parameter list.
struct Family {
  std::vector<std::string> keys;
  std::function<std::vector<ParamList>(const CampaignConfig&)> points;
  std::function<std::function<ReportEntry()>(const ParamList&, const CampaignConfig&)> make;
};

std::int64_t get(const ParamList& params, const std::string& key) {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  throw ParseError("missing parameter '" + key + "'");
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Exhaustive or sampled traversal of a domain. `check` returns a mismatch
// or nothing; traversal stops at the first mismatch.
struct DomainRun {
  WordSpace space;
  std::function<bool(const Word&)> member;  // empty = whole space
};

struct Mismatch {
  std::string input;
  std::string expected;
  std::string actual;
};

using Check = std::function<std::optional<Mismatch>(const Word&)>;

ReportEntry run_domain(const DomainRun& d, const CampaignConfig& cfg, const ParamList& params,
                       const Check& check) {
  ReportEntry entry;
  auto visit = [&](const Word& w) {
    if (entry.status == PointStatus::kFail) return;
    if (d.member && !d.member(w)) return;
    ++entry.checked;
    std::optional<Mismatch> bad;
    try {
      bad = check(w);
    } catch (const Error& e) {
      bad = Mismatch{w.str(), "", std::string("error: ") + e.what()};
    }
    if (bad) {
      entry.status = PointStatus::kFail;
      entry.counterexample = {bad->input, bad->expected, bad->actual};
    }
  };
  auto total = d.space.size();
  if (cfg.samples == 0) {
    if (total > cfg.budget) {
      throw BudgetError("domain has " + std::to_string(total) + " words, budget is " +
                        std::to_string(cfg.budget));
    }
    d.space.for_each(visit);
  } else {
    std::mt19937_64 rng(cfg.seed ^ fnv1a(format_params(params)));
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    auto draws = std::min(cfg.samples, cfg.budget);
    for (std::uint64_t i = 0; i < draws && entry.status != PointStatus::kFail; ++i) {
      visit(d.space.unrank(pick(rng)));
    }
  }
  return entry;
}

std::optional<Mismatch> differ(const Word& input, const std::string& expected,
                               const std::string& actual) {
  if (expected == actual) return std::nullopt;
  return Mismatch{input.str(), expected, actual};
}

std::string join_levels(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

// Sweep levels of p listed in output order.
StepLabeling true_labels(const Word& p, const WeightFn& wt, const SweepSpec& spec,
                         std::int64_t origin) {
  auto tr = trace_sweep(p, wt, spec, origin);
  StepLabeling out;
  for (auto idx : tr.order) out.push_back(tr.step_levels[idx]);
  return out;
}

const SweepSpec kMinusSpec{LevelConvention::kEastNorth, LevelOrder::kDecreasing,
                           ScanDirection::kLeftward, -1};

DomainRun dyck_domain(std::int64_t n) {
  return {WordSpace::rect({n, n}), [](const Word& w) { return is_dyck(w, SweepParams{1, -1}); }};
}

DomainRun rational_dyck_domain(std::int64_t a, std::int64_t b) {
  return {WordSpace::rect({a, b}),
          [a, b](const Word& w) { return is_dyck(w, SweepParams{b, -a}); }};
}

DomainRun trapezoid_domain(const TrapezoidShape& sh) {
  return {WordSpace::rect({sh.n, sh.k + sh.m * sh.n}),
          [sh](const Word& w) { return in_trapezoid(w, sh); }};
}

// ---- parameter grids ----

std::vector<ParamList> rs_grid(const CampaignConfig& c) {
  std::vector<ParamList> out;
  for (auto r = -c.rmax; r <= c.rmax; ++r) {
    for (auto s = -c.smax; s <= c.smax; ++s) {
      for (std::int64_t total = 1; total <= c.sizemax; ++total) {
        for (std::int64_t a = 0; a <= total; ++a) {
          out.push_back({{"r", r}, {"s", s}, {"a", a}, {"b", total - a}});
        }
      }
    }
  }
  return out;
}

std::vector<ParamList> n_grid(const CampaignConfig& c) {
  std::vector<ParamList> out;
  for (std::int64_t n = 1; n <= c.sizemax; ++n) out.push_back({{"n", n}});
  return out;
}

std::vector<ParamList> nkm_grid(const CampaignConfig& c) {
  std::vector<ParamList> out;
  for (std::int64_t n = 1; n <= c.sizemax; ++n) {
    for (std::int64_t k = 0; k <= c.kmax; ++k) {
      for (std::int64_t m = 1; m <= c.mmax; ++m) out.push_back({{"n", n}, {"k", k}, {"m", m}});
    }
  }
  return out;
}

std::vector<ParamList> coprime_grid(const CampaignConfig& c) {
  std::vector<ParamList> out;
  for (std::int64_t total = 2; total <= c.sizemax; ++total) {
    for (std::int64_t a = 1; a < total; ++a) {
      if (std::gcd(a, total - a) == 1) out.push_back({{"a", a}, {"b", total - a}});
    }
  }
  return out;
}

// ---- bijectivity ----

ReportEntry injective_entry(const std::vector<Word>& domain, const std::function<Word(const Word&)>& f) {
  ReportEntry entry;
  std::map<std::string, std::string> seen;
  for (const auto& w : domain) {
    ++entry.checked;
    auto img = f(w).str();
    auto [it, fresh] = seen.emplace(img, w.str());
    if (!fresh) {
      entry.status = PointStatus::kFail;
      entry.counterexample = {it->second + " " + w.str(), "distinct images", img};
      break;
    }
  }
  return entry;
}

Family rect_bijectivity() {
  return {{"r", "s", "a", "b"}, rs_grid, [](const ParamList& p, const CampaignConfig& c) {
            return std::function<ReportEntry()>([p, c] {
              SweepParams rs{get(p, "r"), get(p, "s")};
              WordSpace space = WordSpace::rect({get(p, "a"), get(p, "b")});
              if (space.size() > c.budget) throw BudgetError("domain exceeds budget");
              return injective_entry(space.all(), [rs](const Word& w) { return sweep_minus(w, rs); });
            });
          }};
}

Family letter_bijectivity() {
  return {{"wD", "wE", "wN", "cD", "cE", "cN"},
          [](const CampaignConfig& c) {
            std::vector<ParamList> out;
            for (auto wd = -c.wmax; wd <= c.wmax; ++wd)
              for (auto we = -c.wmax; we <= c.wmax; ++we)
                for (auto wn = -c.wmax; wn <= c.wmax; ++wn)
                  for (std::int64_t cd = 1; cd <= c.sizemax; ++cd)
                    for (std::int64_t ce = 1; cd + ce <= c.sizemax; ++ce)
                      for (std::int64_t cn = 1; cd + ce + cn <= c.sizemax; ++cn)
                        out.push_back({{"wD", wd}, {"wE", we}, {"wN", wn},
                                       {"cD", cd}, {"cE", ce}, {"cN", cn}});
            return out;
          },
          [](const ParamList& p, const CampaignConfig& c) {
            return std::function<ReportEntry()>([p, c] {
              WeightFn wt(Alphabet::schroder(), {get(p, "wD"), get(p, "wE"), get(p, "wN")});
              WordSpace space(Alphabet::schroder(), {get(p, "cD"), get(p, "cE"), get(p, "cN")});
              if (space.size() > c.budget) throw BudgetError("domain exceeds budget");
              return injective_entry(space.all(),
                                     [wt](const Word& w) { return sweep_general(w, wt); });
            });
          }};
}

// Negative control: plain descending level order, which is not injective.
// Every campaign over it must report failures with replayable payloads.
Family wrong_order_control() {
  return {{"r", "s", "a", "b"}, rs_grid, [](const ParamList& p, const CampaignConfig& c) {
            return std::function<ReportEntry()>([p, c] {
              auto wt = WeightFn::from_params({get(p, "r"), get(p, "s")});
              SweepSpec spec{LevelConvention::kEastNorth, LevelOrder::kDecreasing,
                             ScanDirection::kLeftward, std::numeric_limits<std::int64_t>::max()};
              WordSpace space = WordSpace::rect({get(p, "a"), get(p, "b")});
              if (space.size() > c.budget) throw BudgetError("domain exceeds budget");
              return injective_entry(space.all(),
                                     [wt, spec](const Word& w) { return sweep_with(w, wt, spec); });
            });
          }};
}

// ---- equivalence ----

Family equivalence_family(const std::string& map) {
  if (map == "phi") {
    return {{"n"}, n_grid, [](const ParamList& p, const CampaignConfig& c) {
              return std::function<ReportEntry()>([p, c] {
                auto n = get(p, "n");
                return run_domain(dyck_domain(n), c, p, [n](const Word& w) {
                  return differ(w, rev(flip(sweep_minus(w, {1, -1}))).str(),
                                phi_trapezoid(w, {n, 0, 1}).str());
                });
              });
            }};
  }
  if (map == "phi-prime") {
    return {{"n", "k", "m"}, nkm_grid, [](const ParamList& p, const CampaignConfig& c) {
              return std::function<ReportEntry()>([p, c] {
                TrapezoidShape sh{get(p, "n"), get(p, "k"), get(p, "m")};
                return run_domain(trapezoid_domain(sh), c, p, [sh](const Word& w) {
                  auto composite = flip(rev(sweep_minus(rev(flip(w)), {1, -sh.m})));
                  return differ(w, composite.str(), phi_prime_trapezoid(w, sh).str());
                });
              });
            }};
  }
  if (map == "phi-hl") {
    return {{"n"}, n_grid, [](const ParamList& p, const CampaignConfig& c) {
              return std::function<ReportEntry()>([p, c] {
                return run_domain(dyck_domain(get(p, "n")), c, p, [](const Word& w) {
                  return differ(w, sweep_minus(w, {1, -1}).str(), phi_hl(w).str());
                });
              });
            }};
  }
  if (map == "phi-lw") {
    return {{"n"}, n_grid, [](const ParamList& p, const CampaignConfig& c) {
              return std::function<ReportEntry()>([p, c] {
                auto n = get(p, "n");
                return run_domain({WordSpace::rect({n, n}), {}}, c, p, [](const Word& w) {
                  return differ(w, sweep_minus(w, {1, -1}).str(), phi_lw(w).str());
                });
              });
            }};
  }
  if (map == "schroder") {
    // Injective on each multiset, and equal to sw-_{1,-1} on D-free words.
    return {{"n", "e", "d"},
            [](const CampaignConfig& c) {
              std::vector<ParamList> out;
              for (std::int64_t n = 0; 2 * n <= c.sizemax; ++n)
                for (std::int64_t e = 0; 2 * e <= c.sizemax; ++e)
                  for (std::int64_t d = 0; d <= 2; ++d)
                    if (n + e + d > 0) out.push_back({{"n", n}, {"e", e}, {"d", d}});
              return out;
            },
            [](const ParamList& p, const CampaignConfig& c) {
              return std::function<ReportEntry()>([p, c] {
                WordSpace space(Alphabet::schroder(), {get(p, "d"), get(p, "e"), get(p, "n")});
                if (space.size() > c.budget) throw BudgetError("domain exceeds budget");
                auto entry = injective_entry(space.all(), schroder_sweep);
                if (entry.status == PointStatus::kFail || get(p, "d") != 0) return entry;
                for (const auto& w : space.all()) {
                  Word ne(w.str());
                  auto expected = sweep_minus(ne, {1, -1}).str();
                  auto actual = schroder_sweep(w).str();
                  if (expected != actual) {
                    entry.status = PointStatus::kFail;
                    entry.counterexample = {w.str(), expected, actual};
                    break;
                  }
                }
                return entry;
              });
            }};
  }
  if (map == "zeta" || map == "gm") {
    bool zeta_map = map == "zeta";
    return {{"a", "b"}, coprime_grid, [zeta_map](const ParamList& p, const CampaignConfig& c) {
              return std::function<ReportEntry()>([p, c, zeta_map] {
                auto a = get(p, "a"), b = get(p, "b");
                return run_domain(rational_dyck_domain(a, b), c, p, [=](const Word& w) {
                  auto pi = mkptn(w);
                  auto expected = mkptn(sweep_plus(rev(w), {b, -a})).to_string();
                  if (!zeta_map) return differ(w, expected, gorsky_mazin(pi, a, b).to_string());
                  if (auto bad = differ(w, zeta_f(pi, a, b).to_string(),
                                        zeta_f_frontier(pi, a, b).to_string())) {
                    return bad;
                  }
                  if (auto bad = differ(w, expected, zeta(pi, a, b).to_string())) return bad;
                  return differ(w, expected, zeta_frontier(pi, a, b).to_string());
                });
              });
            }};
  }
  throw ParseError("unknown map '" + map + "' for equivalence");
}

// ---- inversion ----

Family inversion_family(const std::string& method) {
  if (method == "haglund") {
    return {{"n"}, n_grid, [](const ParamList& p, const CampaignConfig& c) {
              return std::function<ReportEntry()>([p, c] {
                return run_domain(dyck_domain(get(p, "n")), c, p,
                                  [](const Word& w) -> std::optional<Mismatch> {
                  auto q = sweep_minus(w, {1, -1});
                  auto truth = true_labels(w, WeightFn::from_params({1, -1}), kMinusSpec, 0);
                  if (auto bad = differ(q, join_levels(truth), join_levels(haglund_labels(q))))
                    return bad;
                  return differ(q, w.str(), invert_haglund(q).str());
                });
              });
            }};
  }
  if (method == "trapezoid") {
    return {{"n", "k", "m"}, nkm_grid, [](const ParamList& p, const CampaignConfig& c) {
              return std::function<ReportEntry()>([p, c] {
                TrapezoidShape sh{get(p, "n"), get(p, "k"), get(p, "m")};
                return run_domain(trapezoid_domain(sh), c, p,
                                  [sh](const Word& w) -> std::optional<Mismatch> {
                  auto q = phi_prime_trapezoid(w, sh);
                  auto spec = trapezoid_replay_spec(sh);
                  auto truth = true_labels(w, spec.weights, trapezoid_sweep_spec(), sh.k);
                  if (auto bad = differ(q, join_levels(truth), join_levels(trapezoid_labels(q, sh))))
                    return bad;
                  return differ(q, w.str(), invert_phi_prime(q, sh).str());
                });
              });
            }};
  }
  if (method == "square") {
    return {{"n"}, n_grid, [](const ParamList& p, const CampaignConfig& c) {
              return std::function<ReportEntry()>([p, c] {
                auto n = get(p, "n");
                return run_domain({WordSpace::rect({n, n}), {}}, c, p,
                                  [](const Word& w) -> std::optional<Mismatch> {
                  auto q = sweep_minus(w, {1, -1});
                  auto truth = true_labels(w, WeightFn::from_params({1, -1}), kMinusSpec, 0);
                  if (auto bad = differ(q, join_levels(truth), join_levels(square_labels(q))))
                    return bad;
                  return differ(q, w.str(), invert_phi_lw(q).str());
                });
              });
            }};
  }
  if (method == "gm") {
    return {{"n", "m", "sign"},
            [](const CampaignConfig& c) {
              std::vector<ParamList> out;
              for (std::int64_t n = 1; n < c.sizemax; ++n)
                for (std::int64_t m = 1; n * m + n - 1 <= c.sizemax; ++m)
                  for (std::int64_t sign : {1, -1})
                    if (n * m + sign >= 1 && n + n * m + sign <= c.sizemax)
                      out.push_back({{"n", n}, {"m", m}, {"sign", sign}});
              return out;
            },
            [](const ParamList& p, const CampaignConfig& c) {
              return std::function<ReportEntry()>([p, c] {
                auto n = get(p, "n"), m = get(p, "m");
                auto sign = get(p, "sign") > 0 ? GmSign::kPlus : GmSign::kMinus;
                auto b = n * m + (sign == GmSign::kPlus ? 1 : -1);
                return run_domain(rational_dyck_domain(n, b), c, p,
                                  [=](const Word& w) -> std::optional<Mismatch> {
                  auto q = gm_sweep(w, n, b);
                  // Block labels are the coarse levels m*y - x of the preimage.
                  std::vector<std::int64_t> coarse;
                  std::int64_t x = 0, y = 0;
                  for (char ch : w.str()) {
                    coarse.push_back(m * y - x);
                    (ch == 'N' ? y : x) += 1;
                  }
                  auto tr = trace_sweep(rev(w), WeightFn::from_params({b, -n}),
                                        {LevelConvention::kEastNorth, LevelOrder::kDecreasing,
                                         ScanDirection::kRightward, 0});
                  StepLabeling truth;
                  for (auto idx : tr.order) truth.push_back(coarse[w.size() - 1 - idx]);
                  if (auto bad = differ(q, join_levels(truth), join_levels(gm_labels(q, n, m, sign))))
                    return bad;
                  return differ(q, w.str(), invert_gm(q, n, m, sign).str());
                });
              });
            }};
  }
  if (method == "brute") {
    return {{"r", "s", "a", "b"}, rs_grid, [](const ParamList& p, const CampaignConfig& c) {
              return std::function<ReportEntry()>([p, c] {
                SweepParams rs{get(p, "r"), get(p, "s")};
                auto space = WordSpace::rect({get(p, "a"), get(p, "b")});
                if (space.size() > 0 && space.size() > c.budget / space.size()) {
                  throw BudgetError("brute force over this domain exceeds budget");
                }
                ReportEntry entry;
                BruteDomain dom{space, {}};
                auto f = [rs](const Word& w) { return sweep_minus(w, rs); };
                for (const auto& q : space.all()) {
                  ++entry.checked;
                  auto pre = brute_force_inverse(q, f, dom, c.budget);
                  if (pre.size() != 1) {
                    std::string found;
                    for (const auto& w : pre) found += (found.empty() ? "" : " ") + w.str();
                    entry.status = PointStatus::kFail;
                    entry.counterexample = {q.str(), "exactly one preimage",
                                            found.empty() ? "no preimage" : found};
                    break;
                  }
                }
                return entry;
              });
            }};
  }
  throw ParseError("unknown inversion method '" + method + "'");
}

// ---- conjectures ----

Family conjecture_family(const std::string& name) {
  auto probe = conjecture_points(name, CheckRange{1, 1, 4, {}});
  std::vector<std::string> keys;
  for (const auto& [k, v] : probe.front()) keys.push_back(k);
  return {keys,
          [name](const CampaignConfig& c) {
            return conjecture_points(name, CheckRange{c.rmax, c.smax, c.sizemax, {}});
          },
          [name](const ParamList& p, const CampaignConfig& c) {
            return std::function<ReportEntry()>([p, c, name] {
              auto cp = check_conjecture_point(name, p, EnumLimits{c.budget, 1});
              ReportEntry entry;
              entry.status = cp.status;
              entry.note = cp.note;
              entry.checked = cp.status == PointStatus::kSkipped ? 0 : 1;
              if (cp.status == PointStatus::kFail) {
                entry.counterexample = {format_params(p), cp.expected, cp.actual};
                if (!cp.note.empty()) entry.counterexample.actual += " (" + cp.note + ")";
              }
              return entry;
            });
          }};
}

std::vector<Family> families(const std::string& suite) {
  if (suite == "bijectivity") return {rect_bijectivity(), letter_bijectivity()};
  if (suite == "control:wrong-order") return {wrong_order_control()};
  auto colon = suite.find(':');
  if (colon != std::string::npos) {
    auto kind = suite.substr(0, colon), arg = suite.substr(colon + 1);
    if (kind == "equivalence") return {equivalence_family(arg)};
    if (kind == "inversion") return {inversion_family(arg)};
    if (kind == "conjecture") return {conjecture_family(arg)};
  }
  throw ParseError("unknown suite '" + suite + "'");
}

std::string replay_command(const CampaignConfig& c, const ParamList& params) {
  std::string cmd = "sweeplab verify " + c.suite + " --point " + format_params(params);
  if (c.samples > 0) {
    cmd += " --samples " + std::to_string(c.samples) + " --seed " + std::to_string(c.seed);
  }
  return cmd;
}

std::vector<SuitePoint> build_points(const CampaignConfig& cfg) {
  std::vector<SuitePoint> out;
  for (auto& fam : families(cfg.suite)) {
    if (!cfg.point.empty()) {
      std::set<std::string> want, have(fam.keys.begin(), fam.keys.end());
      for (const auto& [k, v] : cfg.point) want.insert(k);
      if (want != have) continue;
      // Reorder to the family's key order so reports look the same.
      ParamList p;
      for (const auto& k : fam.keys) p.push_back({k, get(cfg.point, k)});
      out.push_back({p, fam.make(p, cfg)});
      continue;
    }
    for (auto& p : fam.points(cfg)) out.push_back({p, fam.make(p, cfg)});
  }
  if (!cfg.point.empty() && out.empty()) {
    throw ParseError("point " + format_params(cfg.point) + " does not match suite " + cfg.suite);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_params(const ParamList& params, char sep) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += sep;
    out += k + "=" + std::to_string(v);
  }
  return out;
}

std::size_t VerificationReport::count(PointStatus s) const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.status == s;
  return n;
}

std::uint64_t VerificationReport::checked() const {
  std::uint64_t n = 0;
  for (const auto& e : entries) n += e.checked;
  return n;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out{"bijectivity"};
  for (const char* m : {"phi", "phi-prime", "phi-hl", "phi-lw", "schroder", "zeta", "gm"}) {
    out.push_back(std::string("equivalence:") + m);
  }
  for (const auto& c : conjecture_names()) out.push_back("conjecture:" + c);
  for (const char* m : {"haglund", "trapezoid", "square", "gm", "brute"}) {
    out.push_back(std::string("inversion:") + m);
  }
  out.push_back("control:wrong-order");
  return out;
}

VerificationReport run_campaign(const CampaignConfig& config, const ProgressFn& progress) {
  if (config.budget == 0) throw ParameterError("budget must be positive");
  if (config.sizemax < 1 || config.rmax < 0 || config.smax < 0 || config.kmax < 0 ||
      config.mmax < 1 || config.wmax < 0) {
    throw ParameterError("parameter ranges must be nonempty");
  }
  auto start = std::chrono::steady_clock::now();
  auto points = build_points(config);
  VerificationReport report;
  report.campaign = config.suite;
  report.config = config;
  report.entries.resize(points.size());

  std::atomic<std::size_t> next{0}, done{0};
  std::mutex mu;
  auto worker = [&] {
    for (auto i = next++; i < points.size(); i = next++) {
      ReportEntry entry;
      try {
        entry = points[i].run();
      } catch (const BudgetError& e) {
        entry = ReportEntry{};
        entry.status = PointStatus::kSkipped;
        entry.note = e.what();
      } catch (const Error& e) {
        entry = ReportEntry{};
        entry.status = PointStatus::kFail;
        entry.counterexample = {format_params(points[i].params), "", std::string("error: ") + e.what()};
      }
      entry.params = points[i].params;
      if (entry.status == PointStatus::kFail) entry.replay = replay_command(config, entry.params);
      report.entries[i] = std::move(entry);
      auto d = ++done;
      if (progress) {
        std::lock_guard<std::mutex> lock(mu);
        progress(d, points.size(), report.entries[i]);
      }
    }
  };
  auto workers = std::max(1u, config.parallelism);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_json(const VerificationReport& r, bool timing) {
  const auto& c = r.config;
  Json j;
  j["schema"] = "sweeplab-report/1";
  j["campaign"] = r.campaign;
  j["config"] = {{"rmax", c.rmax},       {"smax", c.smax},     {"sizemax", c.sizemax},
                 {"kmax", c.kmax},       {"mmax", c.mmax},     {"wmax", c.wmax},
                 {"budget", c.budget},   {"samples", c.samples}, {"seed", c.seed}};
  if (!c.point.empty()) j["config"]["point"] = format_params(c.point);
  j["totals"] = {{"points", r.entries.size()},
                 {"pass", r.count(PointStatus::kPass)},
                 {"fail", r.count(PointStatus::kFail)},
                 {"skipped", r.count(PointStatus::kSkipped)},
                 {"checked", r.checked()}};
  j["entries"] = Json::array();
  for (const auto& e : r.entries) {
    Json je;
    Json params = Json::object();
    for (const auto& [k, v] : e.params) params[k] = v;
    je["params"] = params;
    je["status"] = std::string(status_name(e.status));
    je["checked"] = e.checked;
    if (!e.note.empty()) je["note"] = e.note;
    if (e.status == PointStatus::kFail) {
      je["counterexample"] = {{"input", e.counterexample.input},
                              {"expected", e.counterexample.expected},
                              {"actual", e.counterexample.actual}};
      je["replay"] = e.replay;
    }
    j["entries"].push_back(je);
  }
  if (timing) j["wall_seconds"] = r.wall_seconds;
  return j.dump(2) + "\n";
}

std::string report_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "campaign,params,status,checked,input,expected,actual,replay,note\n";
  for (const auto& e : r.entries) {
    out << csv_field(r.campaign) << ',' << csv_field(format_params(e.params, ';')) << ','
        << status_name(e.status) << ',' << e.checked << ',' << csv_field(e.counterexample.input)
        << ',' << csv_field(e.counterexample.expected) << ','
        << csv_field(e.counterexample.actual) << ',' << csv_field(e.replay) << ','
        << csv_field(e.note) << '\n';
  }
  return out.str();
}

std::string report_text(const VerificationReport& r, bool timing) {
  std::ostringstream out;
  for (const auto& e : r.entries) {
    out << status_name(e.status) << ' ' << format_params(e.params) << " checked=" << e.checked;
    if (!e.note.empty()) out << " (" << e.note << ")";
    out << '\n';
    if (e.status == PointStatus::kFail) {
      out << "  input:    " << e.counterexample.input << '\n'
          << "  expected: " << e.counterexample.expected << '\n'
          << "  actual:   " << e.counterexample.actual << '\n'
          << "  replay:   " << e.replay << '\n';
    }
  }
  out << r.campaign << ": " << r.entries.size() << " points, " << r.count(PointStatus::kPass)
      << " pass, " << r.count(PointStatus::kFail) << " fail, "
      << r.count(PointStatus::kSkipped) << " skipped, " << r.checked() << " checked";
  if (timing) out << ", " << r.wall_seconds << " s";
  out << '\n';
  return out.str();
}

}  // namespace sweeplab
