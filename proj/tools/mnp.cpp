#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "monopole.h"

namespace {

int report_error(mnp_status st) {
  std::fprintf(stderr, "error: %s\n", mnp_last_error());
  return static_cast<int>(st);
}

// ---- dim ----

struct DimArgs {
  std::string group;
  std::string mass;
  std::string charge;
  std::string tiebreak;
  bool json = false;
};

int run_dim(const DimArgs& a) {
  mnp_rootsys* rs = nullptr;
  mnp_status st = mnp_rootsys_create(a.group.c_str(), &rs);
  if (st != MNP_OK) return report_error(st);
  mnp_report* rep = nullptr;
  st = mnp_dim(rs, a.mass.c_str(), a.charge.c_str(),
               a.tiebreak.empty() ? nullptr : a.tiebreak.c_str(), &rep);
  if (st != MNP_OK) {
    mnp_rootsys_free(rs);
    return report_error(st);
  }

  if (a.json) {
    nlohmann::ordered_json j;
    j["group"] = mnp_rootsys_group(rs);
    nlohmann::ordered_json mass = nlohmann::ordered_json::array();
    {
      std::string m = mnp_report_mass(rep);
      size_t pos = 0;
      while (pos <= m.size()) {
        size_t comma = m.find(',', pos);
        mass.push_back(m.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    j["mass"] = mass;
    nlohmann::ordered_json charge = nlohmann::ordered_json::array();
    {
      std::string c = mnp_report_charge(rep);
      size_t pos = 0;
      while (pos <= c.size()) {
        size_t comma = c.find(',', pos);
        charge.push_back(std::stoll(
            c.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    j["charge"] = charge;
    j["dimension"] = mnp_report_dimension(rep);
    j["scattering"] = mnp_report_scattering(rep);
    j["defect"] = mnp_report_defect(rep);
    nlohmann::ordered_json charges = nlohmann::ordered_json::array();
    for (int i = 0; i < mnp_report_charge_count(rep); ++i) {
      nlohmann::ordered_json e;
      e["index"] = i;
      e["value"] = mnp_report_charge_value(rep, i);
      e["kind"] = mnp_report_charge_is_magnetic(rep, i) ? "magnetic" : "holomorphic";
      charges.push_back(e);
    }
    j["charges"] = charges;
    j["stratum_dim"] = mnp_report_stratum_dim(rep);
    j["base_dim"] = mnp_report_base_dim(rep);
    j["empty_flag"] = mnp_report_empty_flag(rep) != 0;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("%-19s %s\n", "group", mnp_rootsys_group(rs));
    std::printf("%-19s %d\n", "rank", mnp_rootsys_rank(rs));
    std::printf("%-19s %d\n", "roots", mnp_rootsys_root_count(rs));
    std::printf("%-19s %s\n", "mass", mnp_report_mass(rep));
    std::printf("%-19s %s\n", "charge", mnp_report_charge(rep));
    std::printf("%-19s %lld\n", "dimension", mnp_report_dimension(rep));
    std::printf("%-19s %lld\n", "scattering", mnp_report_scattering(rep));
    std::printf("%-19s %lld\n", "defect", mnp_report_defect(rep));
    std::printf("%-19s %s\n", "empty", mnp_report_empty_flag(rep) ? "yes" : "no");
    std::printf("%-19s %lld\n", "stratum dimension", mnp_report_stratum_dim(rep));
    std::printf("%-19s %lld\n", "base dimension", mnp_report_base_dim(rep));
    std::printf("%-19s %lld\n", "centralizer dim", mnp_report_centralizer_mu_dim(rep));
    std::printf("%-19s %lld\n", "stabilizer dim", mnp_report_stabilizer_mu_kappa_dim(rep));
    std::printf("%-19s mu>0 %lld, mu=0 %lld, mu=0 kappa!=0 %lld\n", "root counts",
                mnp_report_roots_mu_positive(rep), mnp_report_roots_mu_zero(rep),
                mnp_report_roots_mu_zero_kappa_nonzero(rep));
    std::printf("charges\n");
    for (int i = 0; i < mnp_report_charge_count(rep); ++i)
      std::printf("  #%d  base %s  value %lld  %s\n", i, mnp_report_base_coords(rep, i),
                  mnp_report_charge_value(rep, i),
                  mnp_report_charge_is_magnetic(rep, i) ? "magnetic" : "holomorphic");
  }
  mnp_report_free(rep);
  mnp_rootsys_free(rs);
  return 0;
}

// ---- bspec ----

struct BspecArgs {
  long long d = 0;
  std::string t;
  std::string max;
};

int run_bspec(const BspecArgs& a) {
  mnp_bspec* bs = nullptr;
  mnp_status st = mnp_bspec_create(a.d, a.t.c_str(), a.max.c_str(), &bs);
  if (st != MNP_OK) return report_error(st);
  std::printf("d,t,j,sign,lambda\n");
  for (int i = 0; i < mnp_bspec_count(bs); ++i)
    std::printf("%lld,%s,%lld,%d,%.12g\n", a.d, a.t.c_str(), mnp_bspec_j(bs, i),
                mnp_bspec_sign(bs, i), mnp_bspec_lambda(bs, i));
  mnp_bspec_free(bs);
  return 0;
}

// ---- defect ----

struct DefectArgs {
  long long d = 0;
  std::string t;
  std::string delta;
  int tsteps = 8;
  int dsteps = 15;
};

int run_defect(const DefectArgs& a) {
  if (!a.t.empty() && !a.delta.empty()) {
    long long num = 0, den = 1;
    mnp_status st = mnp_defect_region(a.d, a.t.c_str(), a.delta.c_str(), &num, &den);
    if (st != MNP_OK) return report_error(st);
    std::printf("%g\n", double(num) / double(den));
    return 0;
  }
  if (!a.t.empty() || !a.delta.empty()) {
    std::fprintf(stderr, "error: --t and --delta must be given together\n");
    return 2;
  }
  if (a.tsteps < 1 || a.dsteps < 1) {
    std::fprintf(stderr, "error: sweep step counts must be positive\n");
    return 2;
  }
  std::printf("d,t,delta,defect\n");
  for (int k = 0; k <= a.tsteps; ++k) {
    std::string t = std::to_string(k) + "/" + std::to_string(a.tsteps);
    for (int j = 0; j < a.dsteps; ++j) {
      long long dnum = 2 * (j + 1) - (a.dsteps + 1);
      std::string delta = std::to_string(dnum) + "/" + std::to_string(a.dsteps + 1);
      long long num = 0, den = 1;
      mnp_status st = mnp_defect_region(a.d, t.c_str(), delta.c_str(), &num, &den);
      if (st == MNP_ERR_INVALID) continue;  // weight on an indicial line
      if (st != MNP_OK) return report_error(st);
      std::printf("%lld,%.12g,%.12g,%g\n", a.d, double(k) / a.tsteps,
                  double(dnum) / (a.dsteps + 1), double(num) / double(den));
    }
  }
  return 0;
}

// ---- model ----

struct ModelArgs {
  long long d = 0;
  std::string m = "0";
  double rmin = 1.0;
  double rmax = 10.0;
  int n = 64;
  int nchern = 256;
  bool profile = false;
};

bool parse_double_or_fraction(const std::string& s, double* out) {
  try {
    size_t slash = s.find('/');
    size_t used = 0;
    if (slash == std::string::npos) {
      *out = std::stod(s, &used);
      return used == s.size();
    }
    double num = std::stod(s.substr(0, slash), &used);
    if (used != slash) return false;
    double den = std::stod(s.substr(slash + 1), &used);
    if (used != s.size() - slash - 1 || den == 0.0) return false;
    *out = num / den;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

int run_model(const ModelArgs& a) {
  double m = 0.0;
  if (!parse_double_or_fraction(a.m, &m)) {
    std::fprintf(stderr, "error: cannot parse mass '%s'\n", a.m.c_str());
    return 2;
  }
  if (a.profile) {
    if (a.n < 3) {
      std::fprintf(stderr, "error: grid too small\n");
      return 2;
    }
    const double pi = 3.14159265358979323846;
    const double hr = (a.rmax - a.rmin) / (a.n - 1);
    const double ht = pi / (a.n + 1);
    std::printf("r,theta,A_phi,F_thetaphi,Phi\n");
    for (int k = 0; k < a.n; ++k) {
      for (int i = 0; i < a.n; ++i) {
        double r = a.rmin + k * hr;
        double theta = (i + 1) * ht;
        double a_phi = 0, phi = 0, f = 0;
        mnp_status st = mnp_model_fields(a.d, m, MNP_PATCH_NORTH, r, theta, &a_phi, &phi, &f);
        if (st != MNP_OK) return report_error(st);
        std::printf("%.12g,%.12g,%.12g,%.12g,%.12g\n", r, theta, a_phi, f, phi);
      }
    }
    return 0;
  }
  double chern = 0.0;
  mnp_status st = mnp_chern_number(a.d, a.nchern, a.nchern, &chern);
  if (st != MNP_OK) return report_error(st);
  double res = 0.0, res2 = 0.0;
  st = mnp_bogomolny_residual(a.d, m, a.rmin, a.rmax, a.n, a.n, a.n, &res);
  if (st != MNP_OK) return report_error(st);
  st = mnp_bogomolny_residual(a.d, m, a.rmin, a.rmax, 2 * a.n - 1, 2 * a.n + 1, 2 * a.n, &res2);
  if (st != MNP_OK) return report_error(st);
  std::printf("%-19s %.9f\n", "chern_number", chern);
  std::printf("%-19s %.6e\n", "bogomolny_residual", res);
  std::printf("%-19s %.6e\n", "halved_h_residual", res2);
  if (res2 > 0.0)
    std::printf("%-19s %.3f\n", "convergence_ratio", res / res2);
  else
    std::printf("%-19s %s\n", "convergence_ratio", "n/a");
  return 0;
}

// ---- batch ----

struct BatchJob {
  std::map<std::string, std::string> kv;
  std::map<std::string, int> lines;
};

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int run_job(const BatchJob& job) {
  auto get = [&](const std::string& key) -> std::string {
    auto it = job.kv.find(key);
    return it == job.kv.end() ? "" : it->second;
  };
  auto where = [&](const std::string& key) {
    auto it = job.lines.find(key);
    return it == job.lines.end() ? 0 : it->second;
  };
  auto allow = [&](std::initializer_list<const char*> keys) -> int {
    for (const auto& [k, v] : job.kv) {
      bool ok = false;
      for (const char* a : keys)
        if (k == a) ok = true;
      if (!ok) {
        std::fprintf(stderr, "error: line %d: unknown key '%s' for command '%s'\n", where(k),
                     k.c_str(), get("command").c_str());
        return 2;
      }
    }
    return 0;
  };
  auto get_ll = [&](const std::string& key, long long def, long long* out) -> bool {
    std::string v = get(key);
    if (v.empty()) {
      *out = def;
      return true;
    }
    try {
      size_t used = 0;
      *out = std::stoll(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return true;
    } catch (const std::exception&) {
      std::fprintf(stderr, "error: line %d: '%s' is not an integer\n", where(key), v.c_str());
      return false;
    }
  };
  auto get_double = [&](const std::string& key, double def, double* out) -> bool {
    std::string v = get(key);
    if (v.empty()) {
      *out = def;
      return true;
    }
    if (!parse_double_or_fraction(v, out)) {
      std::fprintf(stderr, "error: line %d: '%s' is not a number\n", where(key), v.c_str());
      return false;
    }
    return true;
  };

  const std::string cmd = get("command");
  if (cmd == "dim") {
    if (int rc = allow({"command", "group", "mass", "charge", "tiebreak", "json"})) return rc;
    DimArgs a;
    a.group = get("group");
    a.mass = get("mass");
    a.charge = get("charge");
    a.tiebreak = get("tiebreak");
    a.json = get("json") == "true" || get("json") == "1";
    return run_dim(a);
  }
  if (cmd == "bspec") {
    if (int rc = allow({"command", "d", "t", "max"})) return rc;
    BspecArgs a;
    if (!get_ll("d", 0, &a.d)) return 2;
    a.t = get("t").empty() ? "1" : get("t");
    a.max = get("max").empty() ? "2" : get("max");
    return run_bspec(a);
  }
  if (cmd == "defect") {
    if (int rc = allow({"command", "d", "t", "delta", "tsteps", "dsteps"})) return rc;
    DefectArgs a;
    if (!get_ll("d", 0, &a.d)) return 2;
    a.t = get("t");
    a.delta = get("delta");
    long long v = 0;
    if (!get_ll("tsteps", a.tsteps, &v)) return 2;
    a.tsteps = static_cast<int>(v);
    if (!get_ll("dsteps", a.dsteps, &v)) return 2;
    a.dsteps = static_cast<int>(v);
    return run_defect(a);
  }
  if (cmd == "model") {
    if (int rc = allow({"command", "d", "m", "rmin", "rmax", "n", "nchern", "profile"})) return rc;
    ModelArgs a;
    if (!get_ll("d", 0, &a.d)) return 2;
    if (!get("m").empty()) a.m = get("m");
    if (!get_double("rmin", a.rmin, &a.rmin)) return 2;
    if (!get_double("rmax", a.rmax, &a.rmax)) return 2;
    long long v = 0;
    if (!get_ll("n", a.n, &v)) return 2;
    a.n = static_cast<int>(v);
    if (!get_ll("nchern", a.nchern, &v)) return 2;
    a.nchern = static_cast<int>(v);
    a.profile = get("profile") == "true" || get("profile") == "1";
    return run_model(a);
  }
  std::fprintf(stderr, "error: line %d: unknown command '%s'\n", where("command"), cmd.c_str());
  return 2;
}

int run_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::fprintf(stderr, "error: cannot open '%s'\n", path.c_str());
    return 2;
  }
  std::vector<BatchJob> jobs;
  BatchJob cur;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (!t.empty() && t[0] == '#') continue;
    if (t.empty()) {
      if (!cur.kv.empty()) jobs.push_back(std::move(cur));
      cur = BatchJob{};
      continue;
    }
    size_t eq = t.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "error: line %d: expected 'key = value'\n", line_no);
      return 2;
    }
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty()) {
      std::fprintf(stderr, "error: line %d: empty key\n", line_no);
      return 2;
    }
    if (cur.kv.count(key)) {
      std::fprintf(stderr, "error: line %d: duplicate key '%s'\n", line_no, key.c_str());
      return 2;
    }
    if (cur.kv.empty() && key != "command") {
      std::fprintf(stderr, "error: line %d: each job must start with 'command = ...'\n", line_no);
      return 2;
    }
    cur.kv[key] = value;
    cur.lines[key] = line_no;
  }
  if (!cur.kv.empty()) jobs.push_back(std::move(cur));
  for (size_t i = 0; i < jobs.size(); ++i) {
    if (i) std::printf("\n");
    if (int rc = run_job(jobs[i])) return rc;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monopole moduli toolkit"};
  app.require_subcommand(1);

  DimArgs dim;
  auto* cdim = app.add_subcommand("dim", "dimension, charges and breaking report");
  cdim->add_option("--group", dim.group, "group spec, e.g. A2 or A1,B3")->required();
  cdim->add_option("--mass", dim.mass, "mass coweight coordinates, e.g. 0,3")->required();
  cdim->add_option("--charge", dim.charge, "charge coroot coordinates, e.g. 0,2")->required();
  cdim->add_option("--tiebreak", dim.tiebreak, "tiebreak functional, rank rationals");
  cdim->add_flag("--json", dim.json, "emit a JSON object instead of the table");

  BspecArgs bs;
  auto* cbspec = app.add_subcommand("bspec", "b-spectrum rows as CSV");
  cbspec->add_option("-d", bs.d, "line bundle degree")->required();
  cbspec->add_option("-t", bs.t, "deformation parameter in [0,1]")->required();
  cbspec->add_option("--max", bs.max, "largest |lambda| to list")->required();

  DefectArgs df;
  auto* cdefect = app.add_subcommand("defect", "defect value or (t, delta) sweep as CSV");
  cdefect->add_option("-d", df.d, "line bundle degree")->required();
  cdefect->add_option("--t", df.t, "deformation parameter (with --delta)");
  cdefect->add_option("--delta", df.delta, "weight (with --t)");
  cdefect->add_option("--tsteps", df.tsteps, "sweep: number of t intervals");
  cdefect->add_option("--dsteps", df.dsteps, "sweep: number of delta samples");

  ModelArgs md;
  auto* cmodel = app.add_subcommand("model", "abelian model verification report");
  cmodel->add_option("-d", md.d, "line bundle degree")->required();
  cmodel->add_option("-m", md.m, "mass value (number or p/q)");
  cmodel->add_option("--rmin", md.rmin, "inner radius (>= 1)");
  cmodel->add_option("--rmax", md.rmax, "outer radius");
  cmodel->add_option("-n", md.n, "grid nodes per direction");
  cmodel->add_option("--nchern", md.nchern, "quadrature resolution");
  cmodel->add_flag("--profile", md.profile, "emit r,theta field profile CSV");

  std::string batch_path;
  auto* cbatch = app.add_subcommand("batch", "run jobs from a key = value config file");
  cbatch->add_option("file", batch_path, "config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (cdim->parsed()) return run_dim(dim);
  if (cbspec->parsed()) return run_bspec(bs);
  if (cdefect->parsed()) return run_defect(df);
  if (cmodel->parsed()) return run_model(md);
  if (cbatch->parsed()) return run_batch(batch_path);
  return 2;
}
