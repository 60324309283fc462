// Command-line front end.  Results go to stdout, logs to stderr.
// Exit codes: 0 = verified true / success, 1 = verified false, 2 = usage
// or I/O errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "critset/completion.hpp"
#include "critset/constructions.hpp"
#include "critset/defsets.hpp"
#include "critset/extremal.hpp"
#include "critset/fixtures.hpp"
#include "critset/json_io.hpp"

using namespace critset;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

PartialMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  if (!text.empty() && text[0] == '{') return matrix_from_json(json::parse(text));
  return parse_text(text);
}

struct Inputs {
  std::string matrix_path, set_path, fixture;

  PartialMatrix matrix() const {
    if (!fixture.empty()) return load_fixture(fixture).matrix;
    return read_matrix_file(matrix_path);
  }
  PartialMatrix set() const {
    if (!fixture.empty()) return load_fixture(fixture).marked;
    return read_matrix_file(set_path);
  }
};

void add_matrix_set_options(CLI::App* cmd, Inputs& in, bool need_set = true) {
  auto* mx = cmd->add_option("--matrix", in.matrix_path, "complete matrix file (text or JSON)");
  CLI::Option* st = nullptr;
  if (need_set) st = cmd->add_option("--set", in.set_path, "partial matrix file");
  auto* fx = cmd->add_option("--fixture", in.fixture, "named reference fixture")
                 ->check(CLI::IsMember(fixture_names()));
  fx->excludes(mx);
  if (st) fx->excludes(st);
  cmd->callback([&in, cmd]() {
    if (in.fixture.empty() && in.matrix_path.empty())
      throw CLI::ValidationError(cmd->get_name(), "need --matrix/--set or --fixture");
  });
}

std::string cell_list(const PartialMatrix& m) {
  std::string out;
  for (const Triple& t : m.triples()) {
    if (!out.empty()) out += " ";
    out += "(" + std::to_string(t.row) + "," + std::to_string(t.col) + "," +
           std::to_string(t.value) + ")";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"defining and critical sets of (0,1)-matrices with prescribed line sums"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  bool as_json = false;
  int threads = 1;
  std::uint64_t seed = 1;
  app.add_flag("--json", as_json, "JSON output");
  app.add_option("--threads", threads, "worker threads (results are thread-count independent)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for randomized modes");

  // verify-defining / verify-critical
  Inputs vd_in, vc_in;
  auto* vd = app.add_subcommand("verify-defining", "is the set a defining set of the matrix?");
  add_matrix_set_options(vd, vd_in);
  auto* vc = app.add_subcommand("verify-critical", "is the set a critical set of the matrix?");
  add_matrix_set_options(vc, vc_in);

  // complete
  Inputs co_in;
  bool co_all = false;
  long long co_limit = 1000000;
  auto* co = app.add_subcommand("complete", "complete a partial matrix");
  co->add_option("--set", co_in.set_path, "partial matrix file")->required();
  co->add_flag("--all", co_all, "enumerate every completion (up to --limit)");
  co->add_option("--limit", co_limit, "enumeration limit");

  // count
  Inputs cn_in;
  long long cn_limit = 1000000000LL, cn_node_cap = 0;
  auto* cn = app.add_subcommand("count", "count completions (saturating at --limit)");
  cn->add_option("--set", cn_in.set_path, "partial matrix file")->required();
  cn->add_option("--limit", cn_limit, "saturation limit");
  cn->add_option("--node-cap", cn_node_cap, "abort after this many search nodes");

  // minimize
  Inputs mi_in;
  auto* mi = app.add_subcommand("minimize", "greedily shrink a defining set to a critical set");
  add_matrix_set_options(mi, mi_in);

  // decompose
  std::string de_a, de_b;
  auto* de = app.add_subcommand("decompose", "cycle decomposition of the trade between two matrices");
  de->add_option("--a", de_a, "first complete matrix")->required();
  de->add_option("--b", de_b, "second complete matrix")->required();

  // cycle-through
  Inputs cy_in;
  std::string cy_cell;
  auto* cy = app.add_subcommand("cycle-through",
                                "shortest cycle meeting the set exactly at one cell");
  add_matrix_set_options(cy, cy_in);
  cy->add_option("--cell", cy_cell, "cell as i,j")->required();

  // construct
  std::string ct_name;
  int ct_m = 0, ct_k = -1;
  bool ct_with_critical = false;
  auto* ct = app.add_subcommand("construct", "build X_2m, Y_2m, M(k) or B_2m");
  ct->add_option("family", ct_name, "one of x, y, mk, b")
      ->required()
      ->check(CLI::IsMember({"x", "y", "mk", "b"}));
  ct->add_option("--m", ct_m, "half order m")->required()->check(CLI::PositiveNumber);
  ct->add_option("--k", ct_k, "target critical size (mk only)");
  ct->add_flag("--with-critical", ct_with_critical, "also output a certified critical set");

  // spectrum
  int sp_m = 0;
  bool sp_verify = false;
  auto* sp = app.add_subcommand("spectrum", "critical sets of every size m^2..3m^2-4m+2");
  sp->add_option("--m", sp_m, "half order m")->required()->check(CLI::PositiveNumber);
  sp->add_flag("--verify", sp_verify, "re-verify every set (counts for m<=3, certificates above)");

  // b-analysis
  int ba_m = 0;
  auto* ba = app.add_subcommand("b-analysis",
                                "exhaustive composition analysis of critical sets in B_2m");
  ba->add_option("--m", ba_m, "half order m")->required()->check(CLI::PositiveNumber);

  // sup-pair
  Inputs su_in;
  std::string su_class;
  int su_count = 1;
  auto* su = app.add_subcommand("sup-pair", "disjoint critical pair with |C1|+|C2| >= 3m^2-2m+1");
  su->add_option("--matrix", su_in.matrix_path, "complete matrix file");
  su->add_option("--fixture", su_in.fixture, "named reference fixture")
      ->check(CLI::IsMember(fixture_names()));
  su->add_option("--class", su_class, "uniform class as n,x (seeded-random members)");
  su->add_option("--count", su_count, "number of random members with --class");

  // extremal
  int ex_n = 0, ex_x = -1, ex_sample = 100;
  std::string ex_mode = "full";
  auto* ex = app.add_subcommand("extremal", "class statistics scs/lcs/inf/sup");
  ex->add_option("--n", ex_n, "order")->required()->check(CLI::PositiveNumber);
  ex->add_option("--x", ex_x, "uniform line sum")->required();
  ex->add_option("--mode", ex_mode, "full (n<=4) or spot (n<=6)")
      ->check(CLI::IsMember({"full", "spot"}));
  ex->add_option("--sample", ex_sample, "sample size in spot mode");

  // certify-walk
  Inputs cw_in;
  auto* cw = app.add_subcommand("certify-walk", "search a walk certificate for a defining set");
  add_matrix_set_options(cw, cw_in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  }

  SearchOptions opts = SearchOptions::with_threads(threads);

  try {
    if (*vd) {
      PartialMatrix m = vd_in.matrix(), d = vd_in.set();
      bool ok = is_defining(m, d, opts);
      if (as_json)
        std::cout << json{{"defining", ok}, {"size", d.size()}} << "\n";
      else
        std::cout << (ok ? "defining" : "not defining") << ", size " << d.size() << "\n";
      return ok ? kTrue : kFalse;
    }

    if (*vc) {
      PartialMatrix m = vc_in.matrix(), d = vc_in.set();
      bool ok = is_critical(m, d, opts);
      if (as_json)
        std::cout << json{{"critical", ok}, {"size", d.size()}} << "\n";
      else
        std::cout << (ok ? "critical" : "not critical") << ", size " << d.size() << "\n";
      return ok ? kTrue : kFalse;
    }

    if (*co) {
      PartialMatrix d = read_matrix_file(co_in.set_path);
      if (co_all) {
        auto all = enumerate_completions(d, CompletionBudget::up_to(co_limit), opts);
        if (as_json) {
          json out = json::array();
          for (const auto& m : all) out.push_back(matrix_json(m));
          std::cout << out << "\n";
        } else {
          std::cout << all.size() << " completion(s)\n";
          for (const auto& m : all) std::cout << to_text(m) << "\n";
        }
        return all.empty() ? kFalse : kTrue;
      }
      auto u = complete_unique(d, opts);
      if (u.status == UniqueStatus::Unique) {
        std::cout << (as_json ? matrix_json(*u.matrix).dump() + "\n" : to_text(*u.matrix));
        return kTrue;
      }
      std::cout << (u.status == UniqueStatus::None ? "no completion\n" : "ambiguous\n");
      return kFalse;
    }

    if (*cn) {
      PartialMatrix d = read_matrix_file(cn_in.set_path);
      long long n = count_completions(d, CompletionBudget{cn_limit, cn_node_cap}, opts);
      if (as_json)
        std::cout << json{{"count", n}, {"saturated", n == cn_limit}} << "\n";
      else
        std::cout << n << (n == cn_limit ? " (limit reached)" : "") << "\n";
      return kTrue;
    }

    if (*mi) {
      PartialMatrix m = mi_in.matrix(), d = mi_in.set();
      auto c = minimize_to_critical(m, d, row_major_cells(d), opts);
      if (as_json)
        std::cout << certified_set_json(c) << "\n";
      else
        std::cout << "critical set of size " << c.cells.size() << "\n" << to_text(c.cells);
      return kTrue;
    }

    if (*de) {
      PartialMatrix a = read_matrix_file(de_a), b = read_matrix_file(de_b);
      auto t = trade_between(a, b);
      if (!t) {
        std::cout << (as_json ? "[]\n" : "matrices are equal; empty trade\n");
        return kTrue;
      }
      auto cycles = decompose_cycles(*t);
      if (as_json) {
        json out = json::array();
        for (const auto& c : cycles) out.push_back(cycle_json(c));
        std::cout << out << "\n";
      } else {
        std::cout << cycles.size() << " cycle(s) over " << t->body.size() << " cells\n";
        for (const auto& c : cycles) {
          for (const Triple& cell : c.circuit)
            std::cout << "(" << cell.row << "," << cell.col << "," << cell.value << ") ";
          std::cout << "\n";
        }
      }
      return kTrue;
    }

    if (*cy) {
      PartialMatrix m = cy_in.matrix(), d = cy_in.set();
      int ci = 0, cj = 0;
      if (std::sscanf(cy_cell.c_str(), "%d,%d", &ci, &cj) != 2)
        throw std::runtime_error("--cell expects i,j");
      auto c = find_cycle_through(m, d, {ci, cj});
      if (!c) {
        std::cout << (as_json ? "null\n" : "no cycle\n");
        return kFalse;
      }
      if (as_json)
        std::cout << cycle_json(*c) << "\n";
      else {
        for (const Triple& cell : c->circuit)
          std::cout << "(" << cell.row << "," << cell.col << "," << cell.value << ") ";
        std::cout << "\n";
      }
      return kTrue;
    }

    if (*ct) {
      PartialMatrix m(1, 1, Margins{{0}, {0}});
      std::optional<CertifiedCriticalSet> cert;
      if (ct_name == "x") {
        m = build_x(ct_m);
        if (ct_with_critical) cert = critical_x(ct_m);
      } else if (ct_name == "y") {
        m = build_y(ct_m);
        if (ct_with_critical) cert = critical_y(ct_m);
      } else if (ct_name == "mk") {
        if (ct_k < 0) throw std::runtime_error("construct mk requires --k");
        cert = build_m_k(ct_m, ct_k);
        m = cert->matrix;
        if (!ct_with_critical) cert.reset();
      } else {
        m = build_b(ct_m);
        if (ct_with_critical) {
          CompositionPair unit{std::vector<int>(2 * ct_m, 1), std::vector<int>(2 * ct_m, 1)};
          cert = realize_b_composition(ct_m, unit);
        }
      }
      if (as_json) {
        json out{{"matrix", matrix_json(m)}};
        if (cert) out["critical"] = certified_set_json(*cert);
        std::cout << out << "\n";
      } else {
        std::cout << to_text(m);
        if (cert) {
          std::cout << "critical set, size " << cert->cells.size() << "\n"
                    << to_text(cert->cells);
        }
      }
      return kTrue;
    }

    if (*sp) {
      auto spec = spectrum(sp_m);
      bool all_ok = true;
      json jout = json::array();
      for (auto& [k, c] : spec) {
        bool ok = true;
        if (sp_verify) {
          if (sp_m <= 3) {
            ok = is_critical(c.matrix, c.cells, opts);
          } else {
            attach_cell_cycles(c);
            ok = cycles_certify(c);
          }
          all_ok &= ok;
        }
        if (as_json) {
          json entry{{"k", k}, {"set", certified_set_json(c)}};
          if (sp_verify) entry["verified"] = ok;
          jout.push_back(std::move(entry));
        } else {
          std::cout << "k=" << k << " size=" << c.cells.size();
          if (sp_verify) std::cout << (ok ? " verified" : " FAILED");
          std::cout << "\n";
        }
      }
      if (as_json) std::cout << jout << "\n";
      return all_ok ? kTrue : kFalse;
    }

    if (*ba) {
      auto r = b_max_critical(ba_m, threads);
      long long closed_form = 2LL * ba_m * ba_m - ba_m;
      if (as_json) {
        std::cout << json{{"m", ba_m},
                          {"max", r.best},
                          {"closedForm", closed_form},
                          {"examined", r.examined},
                          {"argmax", {{"s", r.argmax.s}, {"t", r.argmax.t}}}}
                  << "\n";
      } else {
        std::cout << "largest composition value: " << r.best << " over " << r.examined
                  << " pairs (2m^2-m = " << closed_form << ")\n";
        std::cout << "argmax s:";
        for (int v : r.argmax.s) std::cout << " " << v;
        std::cout << "  t:";
        for (int v : r.argmax.t) std::cout << " " << v;
        std::cout << "\n";
      }
      return kTrue;
    }

    if (*su) {
      std::vector<PartialMatrix> targets;
      if (!su_class.empty()) {
        int n = 0, x = 0;
        if (std::sscanf(su_class.c_str(), "%d,%d", &n, &x) != 2)
          throw std::runtime_error("--class expects n,x");
        for (int i = 0; i < su_count; ++i)
          targets.push_back(random_member(ClassSpec::uniform(n, x), seed + i));
      } else if (!su_in.fixture.empty() || !su_in.matrix_path.empty()) {
        targets.push_back(su_in.matrix());
      } else {
        throw std::runtime_error("sup-pair needs --matrix, --fixture or --class");
      }
      bool all_ok = true;
      json jout = json::array();
      for (const auto& m : targets) {
        int half = m.rows() / 2;
        auto [c1, c2] = sup_pair(m, opts);
        bool ok = is_critical(m, c1.cells, opts) && is_critical(m, c2.cells, opts);
        long long bound = 3LL * half * half - 2 * half + 1;
        bool big_enough = c1.cells.size() + c2.cells.size() >= bound;
        all_ok &= ok && big_enough;
        if (as_json)
          jout.push_back(json{{"c1", triples_json(c1.cells.triples())},
                              {"c2", triples_json(c2.cells.triples())},
                              {"sizes", {c1.cells.size(), c2.cells.size()}},
                              {"bound", bound},
                              {"verified", ok && big_enough}});
        else
          std::cout << "|C1|=" << c1.cells.size() << " |C2|=" << c2.cells.size()
                    << " sum=" << c1.cells.size() + c2.cells.size() << " bound=" << bound
                    << (ok && big_enough ? " verified" : " FAILED") << "\n";
      }
      if (as_json) std::cout << jout << "\n";
      return all_ok ? kTrue : kFalse;
    }

    if (*ex) {
      ClassSpec spec = ClassSpec::uniform(ex_n, ex_x);
      if (ex_mode == "full") {
        auto rep = class_report(spec, threads);
        if (as_json)
          std::cout << report_json(rep) << "\n";
        else {
          std::cout << rep.spec.label() << " over " << rep.matrices_examined << " matrices\n"
                    << "scs = " << rep.scs << "\nlcs = " << rep.lcs << "\ninf = " << rep.inf
                    << "\nsup = " << rep.sup << "\n"
                    << "scs witness: " << cell_list(rep.scs_witness.set) << "\n"
                    << "sup witness: " << cell_list(rep.sup_witness.set) << "\n";
        }
      } else {
        auto rep = class_scs_spot(spec, ex_sample, seed, threads);
        if (as_json)
          std::cout << spot_report_json(rep) << "\n";
        else
          std::cout << rep.spec.label() << " spot check over " << rep.sample
                    << " seeded members\nmin scs = " << rep.min_scs
                    << "\nmax scs = " << rep.max_scs << "\n";
      }
      return kTrue;
    }

    if (*cw) {
      PartialMatrix m = cw_in.matrix(), d = cw_in.set();
      auto cert = search_walk_certificate(m, d);
      if (!cert) {
        std::cout << (as_json ? "null\n" : "no certificate (not a defining set)\n");
        return kFalse;
      }
      if (as_json)
        std::cout << certificate_json(*cert) << "\n";
      else {
        std::cout << "rowPerm:";
        for (int v : cert->row_perm) std::cout << " " << v;
        std::cout << "\ncolPerm:";
        for (int v : cert->col_perm) std::cout << " " << v;
        std::cout << "\ndepth:";
        for (int v : cert->walk.depths()) std::cout << " " << v;
        std::cout << "\n";
      }
      return kTrue;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
