// fmzv: command-line front end for the char-0 and char-p computations.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fmzv/fmzv.hpp"

using json = nlohmann::ordered_json;
using namespace fmzv;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tabular payload plus its structured JSON form.
struct Report {
  json result = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> text;  // extra lines shown before the table in text mode
  bool ok = true;
  std::string counterexample;

  void fail(const std::string& what) {
    if (ok) counterexample = what;
    ok = false;
  }
};

// ---- parsing -------------------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

long parse_int(const std::string& tok, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw UsageError("cannot read '" + tok + "' in " + what + " as an integer");
  }
}

std::vector<int> parse_ints(const std::string& s, const std::string& what) {
  std::vector<int> out;
  for (const auto& t : split(s)) out.push_back(static_cast<int>(parse_int(t, what)));
  return out;
}

char0::Signs parse_signs0(const std::string& s, std::size_t depth) {
  if (s.empty()) return char0::Signs::all_plus(depth);
  std::vector<int> e;
  for (const auto& t : split(s)) {
    if (t == "+" || t == "1" || t == "+1")
      e.push_back(1);
    else if (t == "-" || t == "-1")
      e.push_back(-1);
    else
      throw UsageError("--signs entries must be + or -, got '" + t + "'");
  }
  if (e.size() != depth) throw UsageError("--signs needs one entry per index entry");
  return char0::Signs(e);
}

std::vector<charp::GfElem> parse_codes(const std::string& s, std::size_t depth, std::uint64_t order, bool units,
                                       const std::string& what) {
  std::vector<charp::GfElem> out;
  if (s.empty()) return std::vector<charp::GfElem>(depth, charp::FiniteField::one());
  for (int c : parse_ints(s, what)) {
    if (c < (units ? 1 : 0) || static_cast<std::uint64_t>(c) >= order)
      throw UsageError(what + " code " + std::to_string(c) + " outside 1.." + std::to_string(order - 1));
    out.emplace_back(static_cast<std::uint16_t>(c));
  }
  if (out.size() != depth) throw UsageError(what + " needs one entry per index entry");
  return out;
}

unsigned env_budget(const char* name, unsigned fallback) {
  if (const char* v = std::getenv(name)) {
    try {
      return static_cast<unsigned>(std::stoul(v));
    } catch (const std::exception&) {
      throw UsageError(std::string("environment variable ") + name + " is not a number");
    }
  }
  return fallback;
}

void require_deg(unsigned deg) {
  const unsigned cap = env_budget("FMZV_MAX_DEG", 6);
  if (deg > cap)
    throw UsageError("degree bound " + std::to_string(deg) + " exceeds FMZV_MAX_DEG=" + std::to_string(cap) +
                     "; raise the environment variable to allow it");
}

void require_n(std::size_t n) {
  const unsigned cap = env_budget("FMZV_MAX_N", 256);
  if (n > cap)
    throw UsageError("order " + std::to_string(n) + " exceeds FMZV_MAX_N=" + std::to_string(cap) +
                     "; raise the environment variable to allow it");
}

// ---- formatting ----------------------------------------------------------

json poly_json(const charp::Poly& p) { return p.codes(); }

json rat_json(const charp::RatFunc& x) { return {{"num", x.num().codes()}, {"den", x.den().codes()}}; }

std::string rat_text(const charp::RatFunc& x) {
  if (x.den().is_one()) return x.num().str("θ");
  return "(" + x.num().str("θ") + ")/(" + x.den().str("θ") + ")";
}

json zeta_json(const charp::ZetaCombination& z) {
  json terms = json::array();
  for (const auto& t : z.terms())
    terms.push_back({{"coeff_num", t.coeff.num().codes()},
                     {"coeff_den", t.coeff.den().codes()},
                     {"index", t.index.entries()},
                     {"signs", [&] {
                        std::vector<int> v;
                        for (auto e : t.signs) v.push_back(e.code);
                        return v;
                      }()}});
  return {{"terms", terms},
          {"constant_num", z.constant().num().codes()},
          {"constant_den", z.constant().den().codes()},
          {"text", z.str()}};
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// Display width counting UTF-8 code points.
std::size_t width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) w += (c & 0xC0) != 0x80;
  return w;
}

void emit(const Report& rep, const json& config, const std::string& format) {
  if (format == "json") {
    json doc;
    doc["schema"] = 1;
    doc["config"] = config;
    doc["ok"] = rep.ok;
    if (!rep.ok) doc["counterexample"] = rep.counterexample;
    doc["result"] = rep.result;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::cout << "# schema=1 config=" << config.dump() << "\n";
    for (std::size_t i = 0; i < rep.columns.size(); ++i) std::cout << (i ? "," : "") << csv_cell(rep.columns[i]);
    std::cout << "\n";
    for (const auto& row : rep.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_cell(row[i]);
      std::cout << "\n";
    }
    return;
  }
  std::cout << "config: " << config.dump() << "\n";
  for (const auto& line : rep.text) std::cout << line << "\n";
  if (!rep.columns.empty()) {
    std::vector<std::size_t> w(rep.columns.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = width(rep.columns[i]);
    for (const auto& row : rep.rows)
      for (std::size_t i = 0; i < row.size() && i < w.size(); ++i) w[i] = std::max(w[i], width(row[i]));
    auto line = [&](const std::vector<std::string>& cells) {
      std::string out;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out += cells[i];
        if (i + 1 < cells.size()) out += std::string(w[i] - width(cells[i]) + 2, ' ');
      }
      std::cout << out << "\n";
    };
    line(rep.columns);
    for (const auto& row : rep.rows) line(row);
  }
  std::cout << (rep.ok ? "status: ok" : "status: FAILED") << "\n";
}

// ---- options -------------------------------------------------------------

struct Common {
  std::string format = "json";
  unsigned jobs = 1;
  std::uint64_t seed = 20240517;
};

struct FieldOpts {
  unsigned p = 2, q_exp = 1;
  unsigned q = 0;
  std::string prime_poly;

  std::unique_ptr<charp::FieldCtx> make() const {
    unsigned pp = p, e = q_exp;
    if (q != 0) {
      pp = 0;
      for (unsigned c = 2; c <= q; ++c)
        if (q % c == 0) {
          pp = c;
          break;
        }
      e = 0;
      unsigned v = q;
      while (pp && v % pp == 0) {
        v /= pp;
        ++e;
      }
      if (pp == 0 || v != 1) throw UsageError("--q must be a prime power");
    }
    if (!is_prime(pp)) throw UsageError("--p must be prime");
    return std::make_unique<charp::FieldCtx>(pp, e);
  }

  // The primes to sweep: the one given by --prime-poly, else all of degree 1..deg_max.
  std::vector<charp::Poly> primes(const charp::FieldCtx& ctx, unsigned deg_max) const {
    if (!prime_poly.empty()) {
      auto P = charp::Poly::from_codes(ctx.field(), parse_ints(prime_poly, "--prime-poly"));
      if (!ctx.is_irreducible_in_A(P) || P.leading() != charp::FiniteField::one())
        throw UsageError("--prime-poly must be a monic irreducible polynomial over F_q (codes, constant term first)");
      require_deg(static_cast<unsigned>(P.degree()));
      return {P};
    }
    require_deg(deg_max);
    std::vector<charp::Poly> out;
    for (unsigned d = 1; d <= deg_max; ++d)
      for (auto& P : ctx.monic_irreducibles(d)) out.push_back(P);
    return out;
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  sub->add_option("--jobs", c.jobs, "Worker threads for sweeps")->check(CLI::Range(1u, 256u))->capture_default_str();
  sub->add_option("--seed", c.seed, "Seed for sampled grids")->capture_default_str();
}

void add_field(CLI::App* sub, FieldOpts& f) {
  sub->add_option("--p", f.p, "Characteristic")->capture_default_str();
  sub->add_option("--q-exp", f.q_exp, "q = p^q_exp")->capture_default_str();
  sub->add_option("--q", f.q, "Field size (overrides --p/--q-exp)")->capture_default_str();
  sub->add_option("--prime-poly", f.prime_poly,
                  "Single prime P as coefficient codes, constant term first (e.g. 1,1,1)");
}

// Full configuration of the selected command: every option with its value or default.
json config_of(const std::vector<CLI::App*>& chain) {
  json cfg = json::object();
  std::string command;
  for (auto* app : chain) {
    if (!app->get_parent()) continue;
    command += (command.empty() ? "" : " ") + app->get_name();
  }
  cfg["command"] = command;
  for (auto* app : chain)
    for (const auto* opt : app->get_options()) {
      if (opt->get_name() == "--help" || opt->get_name() == "--help-all" || opt->get_name().empty()) continue;
      std::string key = opt->get_name();
      key.erase(0, key.find_first_not_of('-'));
      std::string value;
      if (opt->count() > 0) {
        for (const auto& r : opt->results()) value += (value.empty() ? "" : " ") + r;
      } else {
        value = opt->get_default_str();
      }
      cfg[key] = value;
    }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite multiple zeta values in characteristic 0 and p"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Common common;
  FieldOpts field;
  std::string index_s, signs_s, gamma_s, j_s, kind = "both", suite, method = "series";
  std::size_t n = 16, x_order = 6, y_order = 3;
  unsigned n_max = 3, deg_max = 3, check_deg = 3, r_prime = 0, check_d = 2, bound = 8;
  int lower = 0;
  long l_min = 3, l_max = 31;
  std::string selftest_suites;

  std::vector<CLI::App*> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    auto* s = parent->add_subcommand(name, desc);
    add_common(s, common);
    leaves.push_back(s);
    return s;
  };

  auto* c0 = app.add_subcommand("char0", "Characteristic zero")->require_subcommand(1);
  auto* cp = app.add_subcommand("charp", "Positive characteristic")->require_subcommand(1);

  auto* c0_stirling = leaf(c0, "stirling", "Stirling numbers of both kinds");
  c0_stirling->add_option("--n", n, "Table bound")->capture_default_str();
  c0_stirling->add_option("--kind", kind, "first | second | both")->check(CLI::IsMember({"first", "second", "both"}))->capture_default_str();

  auto* c0_mpbn = leaf(c0, "mpbn", "Alternating multiple poly-Bernoulli numbers B_n, C_n");
  c0_mpbn->add_option("--index", index_s, "Index, e.g. 2,1 or -1,0")->required();
  c0_mpbn->add_option("--signs", signs_s, "Signs, e.g. +,- (default all +)");
  c0_mpbn->add_option("--n", n, "Largest n")->capture_default_str();
  c0_mpbn->add_option("--method", method, "series | closed | both (both compares)")->check(CLI::IsMember({"series", "closed", "both"}))->capture_default_str();

  auto* c0_genfun = leaf(c0, "genfun-check", "Generating-function identity for negative indices");
  c0_genfun->add_option("--signs", signs_s, "Signs; the depth is their count")->required();
  c0_genfun->add_option("--x-order", x_order, "Truncation in x")->capture_default_str();
  c0_genfun->add_option("--y-order", y_order, "Truncation in each y_i")->capture_default_str();
  c0_genfun->add_option("--lower", lower, "Lower summation bound for s_i")->capture_default_str();

  auto* c0_fmzv = leaf(c0, "fmzv", "Components of alternating finite MZVs");
  c0_fmzv->add_option("--index", index_s, "Index")->required();
  c0_fmzv->add_option("--signs", signs_s, "Signs (default all +)");
  c0_fmzv->add_option("--l-min", l_min, "Smallest prime")->capture_default_str();
  c0_fmzv->add_option("--l-max", l_max, "Largest prime")->capture_default_str();

  auto* c0_verify = leaf(c0, "verify", "Congruence between AFMZVs and C-numbers");
  c0_verify->add_option("--index", index_s, "Index")->required();
  c0_verify->add_option("--signs", signs_s, "Signs (default all +)");
  c0_verify->add_option("--r-prime", r_prime, "Number of leading ones")->capture_default_str();
  c0_verify->add_option("--l-min", l_min, "Smallest prime")->capture_default_str();
  c0_verify->add_option("--l-max", l_max, "Largest prime")->capture_default_str();

  auto* cp_const = leaf(cp, "constants", "[n], D_n, L_n and Carlitz factorials");
  add_field(cp_const, field);
  cp_const->add_option("--n-max", n_max, "Largest n")->capture_default_str();

  auto* cp_at = leaf(cp, "at", "Anderson-Thakur polynomials H_0..H_n");
  add_field(cp_at, field);
  cp_at->add_option("--n-max", n_max, "Largest n")->capture_default_str();
  cp_at->add_option("--check-d", check_d, "Check the power-sum identity for d <= this")->capture_default_str();

  auto* cp_stir = leaf(cp, "stirling-c", "Stirling-Carlitz numbers");
  add_field(cp_stir, field);
  cp_stir->add_option("--bound", bound, "Table bound")->capture_default_str();

  auto* cp_mpbcn = leaf(cp, "mpbcn", "Alternating multiple poly-Bernoulli-Carlitz numbers");
  add_field(cp_mpbcn, field);
  cp_mpbcn->add_option("--index", index_s, "Index (entries >= 1)")->required();
  cp_mpbcn->add_option("--gamma", gamma_s, "Twists as F_{q'} codes (default all 1)");
  cp_mpbcn->add_option("--j", j_s, "Selector j (default all 0)");
  cp_mpbcn->add_option("--n", n, "Largest n")->capture_default_str();

  auto* cp_fmzv = leaf(cp, "fmzv", "Components of alternating finite MZVs at primes P");
  add_field(cp_fmzv, field);
  cp_fmzv->add_option("--index", index_s, "Index")->required();
  cp_fmzv->add_option("--signs", signs_s, "Signs as F_q codes (default all 1)");
  cp_fmzv->add_option("--deg-max", deg_max, "Largest deg P")->capture_default_str();

  auto* cp_verify = leaf(cp, "verify", "Sweep the char-p theorems over primes P");
  add_field(cp_verify, field);
  cp_verify->add_option("--suite", suite, "famzv-mcpl | famzv-mpbcn")->required()->check(CLI::IsMember({"famzv-mcpl", "famzv-mpbcn"}));
  cp_verify->add_option("--index", index_s, "Single index (default: all of {1,2}^r, r <= 2)");
  cp_verify->add_option("--r-prime", r_prime, "Largest number of leading ones (famzv-mpbcn)")->capture_default_str();
  cp_verify->add_option("--deg-max", deg_max, "Largest deg P")->capture_default_str();

  auto* cp_reduce = leaf(cp, "reduce", "Rewrite an integer index in positive indices");
  add_field(cp_reduce, field);
  cp_reduce->add_option("--index", index_s, "Index")->required();
  cp_reduce->add_option("--signs", signs_s, "Signs as F_q codes (default all 1)");
  cp_reduce->add_option("--check-deg", check_deg, "Verify at primes up to this degree")->capture_default_str();

  auto* selftest = leaf(&app, "selftest", "Run every acceptance suite");
  selftest->add_option("--suites", selftest_suites, "Comma-separated suite ids (default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* chosen = nullptr;
  for (auto* s : leaves)
    if (s->parsed()) chosen = s;
  std::vector<CLI::App*> chain;
  for (auto* a = chosen; a; a = a->get_parent()) chain.insert(chain.begin(), a);
  const json config = config_of(chain);

  Report rep;
  try {
    if (chosen == c0_stirling) {
      require_n(n);
      const char0::StirlingTable T(n);
      rep.columns = {"n", "m"};
      if (kind != "second") rep.columns.push_back("first");
      if (kind != "first") rep.columns.push_back("second");
      json rows = json::array();
      for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = 0; b <= a; ++b) {
          std::vector<std::string> row{std::to_string(a), std::to_string(b)};
          json r = {{"n", a}, {"m", b}};
          if (kind != "second") {
            row.push_back(T.first(a, b).get_str());
            r["first"] = T.first(a, b).get_str();
          }
          if (kind != "first") {
            row.push_back(T.second(a, b).get_str());
            r["second"] = T.second(a, b).get_str();
          }
          rep.rows.push_back(row);
          rows.push_back(r);
        }
      rep.result["table"] = rows;
    } else if (chosen == c0_mpbn) {
      require_n(n);
      const Index s(parse_ints(index_s, "--index"));
      const auto eps = parse_signs0(signs_s, s.depth());
      std::vector<BigRat> B, C;
      std::optional<char0::AmpbnSeries> ser;
      if (method != "closed") {
        ser = char0::ampbn_series(s, eps, n);
        B = ser->B;
        C = ser->C;
      }
      if (method != "series") {
        const char0::StirlingTable T(n + 1);
        std::vector<BigRat> Bc, Cc;
        for (std::size_t k = 0; k <= n; ++k) {
          Cc.push_back(char0::ampbn_closed(s, eps, k, char0::MpbnVariant::C, T));
          if (eps.all_plus()) Bc.push_back(char0::ampbn_closed(s, eps, k, char0::MpbnVariant::B, T));
        }
        if (ser) {
          for (std::size_t k = 0; k <= n; ++k) {
            if (Cc[k] != C[k]) rep.fail("C_" + std::to_string(k) + ": closed " + Cc[k].get_str() + " != series " + C[k].get_str());
            if (!Bc.empty() && Bc[k] != B[k]) rep.fail("B_" + std::to_string(k) + ": closed " + Bc[k].get_str() + " != series " + B[k].get_str());
          }
        } else {
          B = Bc;
          C = Cc;
        }
      }
      rep.columns = {"n", "B", "C"};
      std::vector<std::string> bs, cs;
      for (std::size_t k = 0; k <= n; ++k) {
        bs.push_back(k < B.size() ? B[k].get_str() : "");
        cs.push_back(C[k].get_str());
        rep.rows.push_back({std::to_string(k), bs.back(), cs.back()});
      }
      rep.result["B"] = B.empty() ? json(nullptr) : json(bs);
      rep.result["C"] = cs;
    } else if (chosen == c0_genfun) {
      const auto raw = split(signs_s);
      const auto eps = parse_signs0(signs_s, raw.size());
      require_n(x_order);
      const auto g = char0::genfun_dual_check(eps, x_order, std::vector<std::size_t>(eps.size(), y_order), lower);
      auto mism = [](const std::optional<std::vector<std::size_t>>& m) {
        if (!m) return json(nullptr);
        return json(*m);
      };
      rep.result = {{"b_identity", !g.b_mismatch}, {"c_identity", !g.c_mismatch}, {"b_first_mismatch", mism(g.b_mismatch)},
                    {"c_first_mismatch", mism(g.c_mismatch)}};
      rep.columns = {"identity", "holds"};
      rep.rows = {{"B", g.b_mismatch ? "no" : "yes"}, {"C", g.c_mismatch ? "no" : "yes"}};
      auto exps = [](const std::vector<std::size_t>& v) {
        std::string s;
        for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
        return "(" + s + ")";
      };
      if (g.b_mismatch) rep.fail("B identity differs at exponents " + exps(*g.b_mismatch));
      if (g.c_mismatch) rep.fail("C identity differs at exponents " + exps(*g.c_mismatch));
    } else if (chosen == c0_fmzv || chosen == c0_verify) {
      const Index s(parse_ints(index_s, "--index"));
      const auto eps = parse_signs0(signs_s, s.depth());
      if (l_max > 2000) throw UsageError("--l-max above 2000 is not supported");
      const auto primes = primes_between(std::max(2L, l_min), l_max);
      json rows = json::array();
      if (chosen == c0_fmzv) {
        rep.columns = {"l", "value"};
        for (auto l : primes) {
          const auto v = char0::fmzv_component(s, eps, l);
          rep.rows.push_back({std::to_string(l), std::to_string(v.value())});
          rows.push_back({{"l", l}, {"value", v.value()}});
        }
      } else {
        const char0::StirlingTable T(static_cast<std::size_t>(std::max(l_max, 3L)));
        rep.columns = {"l", "lhs", "rhs", "status"};
        for (auto l : primes) {
          if (l == 2 || static_cast<long>(r_prime) + 2 > l) continue;
          const auto c = char0::verify_0result(s, eps, r_prime, l, T);
          const std::string st = c.exceptional() ? "excluded" : c.holds() ? "ok" : "FAIL";
          const std::string rhs = c.rhs ? std::to_string(c.rhs->value()) : "";
          rep.rows.push_back({std::to_string(l), std::to_string(c.lhs.value()), rhs, st});
          rows.push_back({{"l", l}, {"lhs", c.lhs.value()}, {"rhs", c.rhs ? json(c.rhs->value()) : json(nullptr)}, {"status", st}});
          if (st == "FAIL") rep.fail("l=" + std::to_string(l) + ": lhs " + std::to_string(c.lhs.value()) + " != rhs " + rhs);
        }
      }
      rep.result["primes"] = rows;
    } else if (chosen == selftest) {
      acceptance::Config cfg{common.jobs, common.seed};
      std::vector<int> ids;
      if (!selftest_suites.empty()) ids = parse_ints(selftest_suites, "--suites");
      std::vector<acceptance::SuiteResult> results;
      for (const auto& s : acceptance::suites()) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), s.id) == ids.end()) continue;
        results.push_back(acceptance::run_suite(s, cfg));
        std::cerr << "suite " << s.id << ": " << results.back().seconds << " s\n";
      }
      json arr = json::array();
      rep.columns = {"suite", "title", "status", "checks", "failures", "excluded"};
      for (const auto& r : results) {
        arr.push_back({{"suite", r.id}, {"title", r.title}, {"pass", r.pass()}, {"checks", r.checks}, {"failures", r.failures},
                       {"excluded", r.excluded}, {"first_counterexample", r.pass() ? json(nullptr) : json(r.first_failure)},
                       {"notes", r.notes}});
        rep.rows.push_back({std::to_string(r.id), r.title, r.pass() ? "PASS" : "FAIL", std::to_string(r.checks),
                            std::to_string(r.failures), std::to_string(r.excluded)});
        if (!r.pass()) rep.fail("suite " + std::to_string(r.id) + ": " + r.first_failure);
      }
      rep.result["suites"] = arr;
      if (common.format == "text") {
        rep.text.push_back(acceptance::render(results));
        rep.columns.clear();
      }
    } else {
      // Char p commands.
      const auto ctx = field.make();
      const std::uint64_t q = ctx->q();
      rep.text.push_back("field: " + ctx->describe());
      rep.result["field"] = {{"p", ctx->p()}, {"q", q}, {"q_prime", ctx->q_prime()}, {"describe", ctx->describe()}};
      if (chosen == cp_const) {
        if (charp::ipow(q, n_max) > 4096) throw UsageError("--n-max too large: q^n_max exceeds 4096");
        const charp::CarlitzConstants K(*ctx, n_max);
        rep.columns = {"n", "[n]", "D_n", "L_n"};
        json rows = json::array();
        for (unsigned k = 0; k <= n_max; ++k) {
          const std::string b = k ? K.bracket(k).str("θ") : "";
          rep.rows.push_back({std::to_string(k), b, K.D(k).str("θ"), K.L(k).str("θ")});
          rows.push_back({{"n", k}, {"bracket", k ? poly_json(K.bracket(k)) : json(nullptr)}, {"D", poly_json(K.D(k))},
                          {"L", poly_json(K.L(k))}});
        }
        json pi = json::array();
        for (std::uint64_t m = 0; m <= K.pi_max(); ++m) pi.push_back(poly_json(K.Pi(m)));
        rep.result["constants"] = rows;
        rep.result["Pi"] = pi;
      } else if (chosen == cp_at) {
        require_n(n_max);
        const auto H = charp::anderson_thakur(n_max, *ctx);
        rep.columns = {"n", "H_n"};
        json rows = json::array();
        for (unsigned k = 0; k <= n_max; ++k) {
          rep.rows.push_back({std::to_string(k), H[k].str()});
          json u = json::array();
          for (const auto& c : H[k].u) u.push_back(poly_json(c));
          rows.push_back({{"n", k}, {"u", u}, {"text", H[k].str()}});
          for (unsigned d = 0; d <= check_d; ++d) {
            const auto c = charp::at_identity_check(H[k], d, *ctx);
            if (!c.holds()) rep.fail("power-sum identity fails at n=" + std::to_string(k + 1) + " d=" + std::to_string(d));
          }
        }
        rep.result["H"] = rows;
      } else if (chosen == cp_stir) {
        require_n(bound);
        const charp::CarlitzConstants K(*ctx, std::max(charp::floor_log(bound + 1, q), charp::CarlitzConstants::n_max_for_pi(bound, q)));
        const charp::StirlingCarlitzTable S(K, bound);
        rep.columns = {"n", "m", "value"};
        json rows = json::array();
        for (std::size_t a = 0; a <= bound; ++a)
          for (std::size_t b = 0; b <= a; ++b) {
            if (S(a, b).is_zero()) continue;
            rep.rows.push_back({std::to_string(a), std::to_string(b), rat_text(S(a, b))});
            rows.push_back({{"n", a}, {"m", b}, {"value", rat_json(S(a, b))}});
          }
        rep.result["nonzero"] = rows;
      } else if (chosen == cp_mpbcn) {
        require_n(n);
        const Index s(parse_ints(index_s, "--index"));
        const auto gamma = parse_codes(gamma_s, s.depth(), ctx->q_prime(), true, "--gamma");
        std::vector<unsigned> j(s.depth(), 0);
        if (!j_s.empty()) {
          j.clear();
          for (int x : parse_ints(j_s, "--j")) {
            if (x < 0) throw UsageError("--j entries must be >= 0");
            j.push_back(static_cast<unsigned>(x));
          }
        }
        int smax = 1;
        for (int x : s.entries()) smax = std::max(smax, x);
        const charp::SpecialTables T(*ctx, n, static_cast<unsigned>(smax));
        const charp::AmpbcnArgs args{s, gamma, j};
        const auto ser = charp::ampbcn_series(args, n, T);
        rep.columns = {"n", "BC_n"};
        json rows = json::array();
        for (std::size_t k = 0; k <= n; ++k) {
          const auto closed = charp::ampbcn_closed(args, k, T);
          if (!(closed == ser[k])) rep.fail("BC_" + std::to_string(k) + ": closed form differs from the series");
          rep.rows.push_back({std::to_string(k), rat_text(ser[k])});
          rows.push_back(rat_json(ser[k]));
        }
        rep.result["BC"] = rows;
      } else if (chosen == cp_fmzv) {
        const Index s(parse_ints(index_s, "--index"));
        const auto eps = parse_codes(signs_s, s.depth(), q, true, "--signs");
        rep.columns = {"P", "value"};
        json rows = json::array();
        for (const auto& P : field.primes(*ctx, deg_max)) {
          const charp::QuotCtx Q(*ctx, P);
          const auto v = charp::fmzv_p_component(s, eps, Q);
          rep.rows.push_back({P.str("θ"), v.str("θ")});
          rows.push_back({{"P", poly_json(P)}, {"value", poly_json(v)}});
        }
        rep.result["primes"] = rows;
      } else if (chosen == cp_verify) {
        std::vector<Index> idx;
        if (!index_s.empty())
          idx.emplace_back(parse_ints(index_s, "--index"));
        else
          idx = acceptance::detail::indices({1, 2}, 1, 2);
        int smax = 1;
        for (const auto& s : idx)
          for (int x : s.entries()) smax = std::max(smax, x);
        const auto primes = field.primes(*ctx, deg_max);
        unsigned dmax = 1;
        for (const auto& P : primes) dmax = std::max(dmax, static_cast<unsigned>(P.degree()));
        const charp::SpecialTables T(*ctx, static_cast<std::size_t>(charp::ipow(q, dmax) - 1), static_cast<unsigned>(smax));
        struct Row {
          std::size_t checks = 0, excluded = 0, failures = 0;
          std::string first;
        };
        auto rows = parallel_map<Row>(primes.size(), common.jobs, [&](std::size_t i) {
          Row row;
          const charp::QuotCtx Q(*ctx, primes[i]);
          for (const auto& s : idx)
            for (const auto& eps : charp::all_sign_tuples(s.depth(), *ctx)) {
              const auto g = charp::gamma_roots_of(eps, *ctx);
              std::vector<charp::FamzvCheckReport> reps;
              if (suite == "famzv-mcpl")
                reps.push_back(charp::verify_famzv_mcpl(s, eps, g, Q, T));
              else
                for (unsigned rp = 0; rp <= r_prime; ++rp) reps.push_back(charp::verify_famzv_mpbcn(s, eps, g, rp, Q, T));
              for (const auto& r : reps) {
                ++row.checks;
                if (r.excluded) {
                  ++row.excluded;
                } else if (!r.holds()) {
                  if (row.failures++ == 0)
                    row.first = "P=" + primes[i].str("θ") + " s=" + s.str() + " eps=(" + charp::signs_str(eps) +
                                ") r'=" + std::to_string(r.leading_ones) + ": lhs " + (r.lhs ? r.lhs->str("θ") : "?") +
                                " rhs " + (r.rhs ? r.rhs->str("θ") : "?");
                }
              }
            }
          return row;
        });
        rep.columns = {"P", "checks", "excluded", "failures", "status"};
        json arr = json::array();
        for (std::size_t i = 0; i < primes.size(); ++i) {
          const auto& r = rows[i];
          const std::string st = r.failures ? "FAIL" : "ok";
          rep.rows.push_back({primes[i].str("θ"), std::to_string(r.checks), std::to_string(r.excluded), std::to_string(r.failures), st});
          arr.push_back({{"P", poly_json(primes[i])}, {"checks", r.checks}, {"excluded", r.excluded}, {"failures", r.failures}});
          if (r.failures) rep.fail(r.first);
        }
        rep.result["primes"] = arr;
      } else if (chosen == cp_reduce) {
        const Index s(parse_ints(index_s, "--index"));
        const auto eps = parse_codes(signs_s, s.depth(), q, true, "--signs");
        const auto z = charp::reduce_index(s, eps, *ctx);
        rep.result["combination"] = zeta_json(z);
        rep.result["min_prime_degree"] = z.min_prime_degree();
        rep.text.push_back("combination: " + z.str());
        rep.text.push_back("valid for deg P >= " + std::to_string(z.min_prime_degree()));
        require_deg(check_deg);
        const auto primes = field.prime_poly.empty() ? std::vector<charp::Poly>{} : field.primes(*ctx, check_deg);
        const auto check = charp::verify_reduction(s, eps, z, *ctx, check_deg);
        rep.columns = {"P", "status", "original", "combined"};
        json arr = json::array();
        for (const auto& pr : check.primes) {
          if (!primes.empty() && !(pr.P == primes.front())) continue;
          const std::string st = pr.excluded ? "excluded" : pr.holds() ? "ok" : "FAIL";
          rep.rows.push_back({pr.P.str("θ"), st, pr.original ? pr.original->str("θ") : "", pr.combined ? pr.combined->str("θ") : ""});
          arr.push_back({{"P", poly_json(pr.P)}, {"status", st}, {"note", pr.note},
                         {"original", pr.original ? poly_json(*pr.original) : json(nullptr)},
                         {"combined", pr.combined ? poly_json(*pr.combined) : json(nullptr)}});
          if (st == "FAIL") rep.fail("P=" + pr.P.str("θ") + ": original " + pr.original->str("θ") + " != combined " + pr.combined->str("θ"));
        }
        rep.result["primes"] = arr;
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "usage error: " << e.what() << " (lower the degree or order bound)\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  emit(rep, config, common.format);
  if (!rep.ok) {
    std::cerr << "verification failed: " << rep.counterexample << "\n";
    return 1;
  }
  return 0;
}
