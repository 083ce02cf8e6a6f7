// minram: command-line front end for the minimal-ramification toolkit.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "minram/bivar.hpp"
#include "minram/carlitz.hpp"
#include "minram/conjecture.hpp"
#include "minram/construct.hpp"
#include "minram/curves.hpp"
#include "minram/errors.hpp"
#include "minram/factor.hpp"
#include "minram/galois_id.hpp"
#include "minram/ramify.hpp"
#include "minram/tables.hpp"
#include "minram/text.hpp"

#ifndef MINRAM_DATA_DIR
#define MINRAM_DATA_DIR "data"
#endif

using nlohmann::json;
using namespace minram;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kPrecondition = 2, kBudget = 3 };

struct Common {
  std::uint64_t p = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000000;
  bool json = false;
};

std::uint64_t default_seed() {
  if (const char* s = std::getenv("CARLITZ_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring non-numeric CARLITZ_SEED\n";
    }
  }
  return 0;
}

void emit(const Common& c, const json& j, const std::function<void()>& human) {
  if (c.json) {
    std::cout << j.dump() << "\n";
  } else {
    human();
  }
}

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

template <class T>
std::string join_nums(const std::vector<T>& v) {
  std::vector<std::string> s;
  for (auto x : v) s.push_back(std::to_string(x));
  return "[" + join(s) + "]";
}

void print_verification(const Verification& v) {
  for (const auto& c : v.checks) std::cout << (c.ok ? "  ok    " : "  FAIL  ") << c.name << "\n";
  for (const auto& n : v.notes) std::cout << "  NOTE  " << n << "\n";
}

json verification_json(const Verification& v) {
  json checks = json::object();
  for (const auto& c : v.checks) checks[c.name] = c.ok;
  return {{"ok", v.ok()}, {"checks", checks}, {"notes", v.notes}};
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const SearchExhausted& e) {
    std::cerr << "search exhausted after " << e.examined() << " candidates: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DomainError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ResourceError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InternalError& e) {
    std::cerr << "internal consistency check failed: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return kPrecondition;
  }
}

json ram_json(const RamReport& r) { return r.to_json(); }

void print_ram(const RamReport& r) {
  std::vector<std::string> places;
  for (std::size_t i = 0; i < r.finite.size(); ++i) {
    places.push_back(to_string(r.finite[i].place) + " (" + std::string(to_string(r.finite[i].method)) + ")");
  }
  std::cout << "finite:   {" << join(places) << "}\n"
            << "infinity: " << to_string(r.infinity) << " (" << to_string(r.infinity_method) << ")\n"
            << "total:    " << r.total_count() << "\n";
}

int report_table(const Common& c, const std::string& path, bool& all_ok, json& out) {
  Table t = read_table_file(path);
  TableReport rep = verify_table(t);
  out.push_back({{"file", path}, {"report", rep.to_json()}});
  if (!c.json) {
    std::cout << "== " << path << " (table " << rep.table << ")\n";
    for (const auto& r : rep.rows) {
      std::cout << (r.pass() ? "PASS" : "FAIL") << "  p=" << r.p;
      if (!r.pass()) std::cout << "  failed: " << join(r.failed);
      std::cout << "\n";
      for (const auto& w : r.warnings) std::cout << "  WARN  " << w << "\n";
      for (const auto& n : r.notes) std::cout << "  NOTE  " << n << "\n";
    }
    std::cout << rep.passed() << "/" << rep.rows.size() << " rows pass\n";
  }
  all_ok = all_ok && rep.ok();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal ramification of Galois extensions of F_p(t): algebra, searches and table replay"};
  app.require_subcommand(1);
  Common c;
  c.seed = default_seed();

  auto add_p = [&](CLI::App* sub) { sub->add_option("--p", c.p, "characteristic (prime)")->required(); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", c.json, "machine-readable output"); };

  int rc = 0;

  // factor
  std::string f_text;
  auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial in F_p[t]");
  add_p(factor_cmd);
  add_json(factor_cmd);
  factor_cmd->add_option("--f", f_text, "polynomial in t")->required();
  factor_cmd->callback([&] {
    rc = run_guarded([&] {
      PrimeField field(c.p);
      auto fac = factor(parse_poly(f_text, field), c.seed ? c.seed : kDefaultFactorSeed);
      json fs = json::array();
      for (const auto& [g, e] : fac.factors) fs.push_back({{"factor", to_string(g)}, {"multiplicity", e}});
      emit(c, {{"unit", fac.unit}, {"factors", fs}}, [&] {
        std::cout << fac.unit;
        for (const auto& [g, e] : fac.factors) std::cout << " * (" << to_string(g) << ")" << (e > 1 ? "^" + std::to_string(e) : "");
        std::cout << "\n";
      });
      return kOk;
    });
  });

  // phi
  std::string m_text;
  auto* phi_cmd = app.add_subcommand("phi", "order of (F_p[t]/M)^x");
  add_p(phi_cmd);
  add_json(phi_cmd);
  phi_cmd->add_option("--M", m_text, "modulus")->required();
  phi_cmd->callback([&] {
    rc = run_guarded([&] {
      PrimeField field(c.p);
      auto v = phi(parse_poly(m_text, field));
      emit(c, {{"M", m_text}, {"phi", v}}, [&] { std::cout << v << "\n"; });
      return kOk;
    });
  });

  // carlitz
  std::string alpha_text, mod_text;
  auto* carlitz_cmd = app.add_subcommand("carlitz", "Carlitz polynomial [M](x), or its action on alpha mod N");
  add_p(carlitz_cmd);
  add_json(carlitz_cmd);
  carlitz_cmd->add_option("--M", m_text, "element of F_p[t]")->required();
  carlitz_cmd->add_option("--alpha", alpha_text, "evaluate at alpha (needs --modulus)");
  carlitz_cmd->add_option("--modulus", mod_text, "modulus for the action");
  carlitz_cmd->callback([&] {
    rc = run_guarded([&] {
      PrimeField field(c.p);
      FpPoly m = parse_poly(m_text, field);
      if (!alpha_text.empty()) {
        if (mod_text.empty()) throw DomainError("--alpha needs --modulus");
        FpPoly r = carlitz_action(m, parse_poly(alpha_text, field), parse_poly(mod_text, field));
        emit(c, {{"action", to_string(r)}}, [&] { std::cout << to_string(r) << "\n"; });
        return kOk;
      }
      AdditivePoly cp = carlitz_poly(m);
      json taus = json::array();
      for (const auto& t : cp.taus()) taus.push_back(to_string(t));
      emit(c, {{"taus", taus}, {"text", cp.to_string()}}, [&] { std::cout << cp.to_string() << "\n"; });
      return kOk;
    });
  });

  // ram
  std::string xf_text;
  auto* ram_cmd = app.add_subcommand("ram", "ramified places of F_p(t)[x]/(f)");
  add_p(ram_cmd);
  add_json(ram_cmd);
  ram_cmd->add_option("--f", xf_text, "monic polynomial in x over F_p[t]")->required();
  ram_cmd->callback([&] {
    rc = run_guarded([&] {
      PrimeField field(c.p);
      RamReport r = ramification_report(parse_xpoly(xf_text, field));
      emit(c, ram_json(r), [&] { print_ram(r); });
      return kOk;
    });
  });

  // quadplaces
  std::string d_text;
  auto* quad_cmd = app.add_subcommand("quadplaces", "exact ramification of F_p(t)(sqrt D), p odd");
  add_p(quad_cmd);
  add_json(quad_cmd);
  quad_cmd->add_option("--D", d_text, "D in F_p[t]")->required();
  quad_cmd->callback([&] {
    rc = run_guarded([&] {
      PrimeField field(c.p);
      RamReport r = quadratic_places(parse_poly(d_text, field));
      emit(c, ram_json(r), [&] { print_ram(r); });
      return kOk;
    });
  });

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Galois group of a quadratic, cubic or biquadratic");
  add_p(classify_cmd);
  add_json(classify_cmd);
  classify_cmd->add_option("--f", xf_text, "monic polynomial in x over F_p[t]")->required();
  classify_cmd->callback([&] {
    rc = run_guarded([&] {
      PrimeField field(c.p);
      Classification cl = classify(parse_xpoly(xf_text, field));
      json w = json::array();
      for (const auto& g : cl.witness) w.push_back(to_string(g));
      emit(c, {{"group", std::string(to_string(cl.tag))}, {"witness", w}}, [&] {
        std::cout << to_string(cl.tag);
        for (const auto& g : cl.witness) std::cout << "  (" << to_string(g) << ")";
        std::cout << "\n";
      });
      return kOk;
    });
  });

  // search-d8 / search-s3
  unsigned deg_b = 4, deg_w = 2, threads = 1;
  std::string out_path;
  auto* d8_cmd = app.add_subcommand("search-d8", "find x^4+ax^2+b with group D8 ramified at two places");
  add_p(d8_cmd);
  add_json(d8_cmd);
  d8_cmd->add_option("--seed", c.seed, "search seed (default $CARLITZ_SEED or 0)");
  d8_cmd->add_option("--budget", c.budget, "candidate cap");
  d8_cmd->add_option("--deg-b", deg_b, "degree of b")->capture_default_str();
  d8_cmd->add_option("--threads", threads, "worker threads")->capture_default_str();
  d8_cmd->add_option("--out", out_path, "append the witness as a JSON line");
  d8_cmd->callback([&] {
    rc = run_guarded([&] {
      SearchStats st;
      D8Witness w = search_d8(c.p, deg_b, {c.budget, c.seed, threads}, &st);
      Verification v = verify_d8(w);
      if (!out_path.empty()) std::ofstream(out_path, std::ios::app) << w.to_json().dump() << "\n";
      json j = w.to_json();
      j["examined"] = st.examined;
      j["verification"] = verification_json(v);
      emit(c, j, [&] {
        std::cout << "p=" << w.p << "  A=" << w.A << "  A^2-4B=" << w.disc_AB << "  a=" << to_string(w.a)
                  << "  b=" << to_string(w.b) << "  (" << st.examined << " candidates)\n";
        print_verification(v);
      });
      return v.ok() ? kOk : kVerifyFailed;
    });
  });

  auto* s3_cmd = app.add_subcommand("search-s3", "find x^3-uwx-u^2 with group S3 ramified at one place");
  add_p(s3_cmd);
  add_json(s3_cmd);
  s3_cmd->add_option("--seed", c.seed, "search seed (default $CARLITZ_SEED or 0)");
  s3_cmd->add_option("--budget", c.budget, "candidate cap");
  s3_cmd->add_option("--deg-w", deg_w, "degree of w (even)")->capture_default_str();
  s3_cmd->add_option("--threads", threads, "worker threads")->capture_default_str();
  s3_cmd->add_option("--out", out_path, "append the witness as a JSON line");
  s3_cmd->callback([&] {
    rc = run_guarded([&] {
      if (c.p == 2 || c.p == 3) {
        SpecialS3 s = special_s3(c.p);
        Verification v = verify_special_s3(s);
        emit(c, {{"p", s.p}, {"f", to_string(s.f)}, {"description", s.description}, {"verification", verification_json(v)}},
             [&] {
               std::cout << "p=" << s.p << "  fixed construction: " << to_string(s.f) << "\n  " << s.description << "\n";
               print_verification(v);
             });
        return v.ok() ? kOk : kVerifyFailed;
      }
      if (c.p % 3 != 1) {
        std::cerr << "no construction: the searched family needs p = 1 mod 3, and no explicit S3 witness with one "
                     "ramified place is known to this tool for p = "
                  << c.p << "\n";
        return kPrecondition;
      }
      SearchStats st;
      S3Witness w = search_s3(c.p, deg_w, {c.budget, c.seed, threads}, &st);
      Verification v = verify_s3(w);
      if (!out_path.empty()) std::ofstream(out_path, std::ios::app) << w.to_json().dump() << "\n";
      json j = w.to_json();
      j["examined"] = st.examined;
      j["verification"] = verification_json(v);
      emit(c, j, [&] {
        std::cout << "p=" << w.p << "  u=" << w.u << "  w=" << to_string(w.w) << "  pi=" << to_string(w.pi) << "  ("
                  << st.examined << " candidates)\n";
        print_verification(v);
      });
      return v.ok() ? kOk : kVerifyFailed;
    });
  });

  // pollack
  unsigned n = 0;
  std::vector<std::string> f_list;
  std::string field_mod;
  auto* pollack_cmd = app.add_subcommand("pollack", "count monic g of degree n with every f_i(g) irreducible");
  pollack_cmd->add_option("--q", c.p, "prime p (base field)")->required();
  pollack_cmd->add_option("--modulus", field_mod, "irreducible in t defining F_q = F_p[t]/(modulus)");
  pollack_cmd->add_option("--n", n, "degree of g")->required();
  pollack_cmd->add_option("--f", f_list, "polynomial in x over F_p (repeatable)")->required();
  add_json(pollack_cmd);
  pollack_cmd->callback([&] {
    rc = run_guarded([&] {
      PrimeField field(c.p);
      FieldSpec spec{c.p, std::nullopt};
      if (!field_mod.empty()) spec.modulus = parse_poly(field_mod, field);
      std::vector<FpPoly> fs;
      for (const auto& s : f_list) fs.push_back(parse_univariate(s, field, 'x'));
      PollackResult r = pollack_count(spec, n, fs);
      json j = {{"q", spec.q()},
                {"n", n},
                {"count", r.count},
                {"main_term", r.main_term},
                {"ratio", r.ratio},
                {"lower_bound",
                 {{"threshold", r.lower.threshold},
                  {"value", r.lower.value},
                  {"first", r.lower.first},
                  {"second", r.lower.second},
                  {"certifies_positive", r.lower.certifies_positive}}}};
      emit(c, j, [&] {
        std::cout << "count " << r.count << ", main term " << r.main_term << ", ratio " << r.ratio << "\n"
                  << "explicit lower bound " << r.lower.value << " (threshold q > " << r.lower.threshold << ", "
                  << (r.lower.certifies_positive ? "certifies a solution" : "does not certify") << ")\n";
      });
      return kOk;
    });
  });

  // classnum
  std::string rhs_text;
  auto* cn_cmd = app.add_subcommand("classnum", "divisor class number of a quadratic function field");
  add_p(cn_cmd);
  add_json(cn_cmd);
  cn_cmd->add_option("--D", d_text, "y^2 = D (p odd)");
  cn_cmd->add_option("--rhs", rhs_text, "y^2 + y = R (p = 2)");
  cn_cmd->callback([&] {
    rc = run_guarded([&] {
      PrimeField field(c.p);
      if (d_text.empty() == rhs_text.empty()) throw DomainError("give exactly one of --D and --rhs");
      QuadraticModel m = d_text.empty() ? QuadraticModel::artin_schreier(parse_poly(rhs_text, field))
                                        : QuadraticModel::hyperelliptic(parse_poly(d_text, field));
      ClassNumber cn = class_number(m);
      emit(c, cn.to_json(), [&] {
        std::cout << "model " << to_string(m.kind()) << ": " << to_string(m.poly()) << "  genus " << cn.genus << "\n"
                  << "N = " << join_nums(cn.N) << "\nL = " << join_nums(cn.L) << "\nh = " << cn.h
                  << (cn.h % 3 == 0 ? "  (divisible by 3)" : "") << "\n";
      });
      return kOk;
    });
  });

  // bound
  std::string group_text;
  int observed = -1;
  auto* bound_cmd = app.add_subcommand("bound", "conjectured minimal number of ramified places");
  add_p(bound_cmd);
  add_json(bound_cmd);
  bound_cmd->add_option("--group", group_text, "abelian:2,2 | dihedral:8 | s3 | wreath:l=3:3,3 | explicit:...")
      ->required();
  bound_cmd->add_option("--observed", observed, "compare against an observed ramified-place count");
  bound_cmd->callback([&] {
    rc = run_guarded([&] {
      GroupDescriptor g = parse_group(group_text);
      if (observed >= 0) {
        BoundVerdict v = verdict(g, c.p, static_cast<unsigned>(observed));
        emit(c, v.to_json(), [&] {
          std::cout << "bound " << v.bound << ", observed " << v.observed << ": " << to_string(v.status) << "\n";
        });
        return v.status == BoundStatus::Violation ? kVerifyFailed : kOk;
      }
      unsigned b = bound(g, c.p);
      emit(c, {{"group", to_string(g)}, {"p", c.p}, {"bound", b}, {"quotient_ab", p_quotient_abelianization(g, c.p)}},
           [&] { std::cout << b << "\n"; });
      return kOk;
    });
  });

  // verify-tables
  std::vector<std::string> paths;
  auto* vt_cmd = app.add_subcommand("verify-tables", "replay the shipped tables and the fixed constructions");
  add_json(vt_cmd);
  vt_cmd->add_option("paths", paths, "table files (default: shipped tables)");
  vt_cmd->callback([&] {
    rc = run_guarded([&] {
      const bool defaults = paths.empty();
      if (defaults) paths = {std::string(MINRAM_DATA_DIR) + "/table1.tsv", std::string(MINRAM_DATA_DIR) + "/table2.tsv"};
      bool all_ok = true;
      json out = json::array();
      for (const auto& path : paths) report_table(c, path, all_ok, out);
      if (defaults) {
        json specials = json::array();
        for (std::uint64_t p : {3, 2}) {
          SpecialS3 s = special_s3(p);
          Verification v = verify_special_s3(s);
          all_ok = all_ok && v.ok();
          specials.push_back({{"p", p}, {"f", to_string(s.f)}, {"verification", verification_json(v)}});
          if (!c.json) {
            std::cout << "== special S3 construction, p=" << p << ": " << to_string(s.f) << "\n";
            print_verification(v);
          }
        }
        out.push_back({{"special", specials}});
      }
      if (c.json) std::cout << out.dump() << "\n";
      return all_ok ? kOk : kVerifyFailed;
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kPrecondition;
  }
  return rc;
}
