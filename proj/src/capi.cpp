#include "monopole.h"

#include <string>
#include <vector>

#include "abelian_model.hpp"
#include "errors.hpp"
#include "index.hpp"
#include "indicial.hpp"
#include "masscharge.hpp"
#include "rootsys.hpp"

namespace {

thread_local std::string g_error;

template <typename F>
mnp_status guard(F&& f) {
  try {
    f();
    return MNP_OK;
  } catch (const mnp::IntegralityError& e) {
    g_error = e.what();
    return MNP_ERR_INTEGRALITY;
  } catch (const mnp::InvalidInput& e) {
    g_error = e.what();
    return MNP_ERR_INVALID;
  } catch (const mnp::InternalError& e) {
    g_error = e.what();
    return MNP_ERR_INTERNAL;
  } catch (const std::invalid_argument& e) {
    g_error = e.what();
    return MNP_ERR_INVALID;
  } catch (const std::overflow_error& e) {
    g_error = e.what();
    return MNP_ERR_INVALID;
  } catch (const std::exception& e) {
    g_error = e.what();
    return MNP_ERR_INTERNAL;
  }
}

mnp::RatVec parse_rat_vec(const char* s, const char* what) {
  if (s == nullptr) throw mnp::InvalidInput(std::string(what) + ": missing vector");
  std::string str(s);
  mnp::RatVec out;
  size_t pos = 0;
  int idx = 0;
  while (pos <= str.size()) {
    size_t comma = str.find(',', pos);
    std::string tok =
        str.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      out.push_back(mnp::Rat::parse(tok));
    } catch (const std::invalid_argument& e) {
      throw mnp::InvalidInput(std::string(what) + "[" + std::to_string(idx) + "]: " + e.what());
    }
    ++idx;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

mnp::Rat parse_rat(const char* s, const char* what) {
  if (s == nullptr) throw mnp::InvalidInput(std::string(what) + ": missing value");
  try {
    return mnp::Rat::parse(s);
  } catch (const std::invalid_argument& e) {
    throw mnp::InvalidInput(std::string(what) + ": " + e.what());
  }
}

std::string join_rats(const mnp::RatVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].str();
  }
  return s;
}

std::string join_coords(const mnp::Coords& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

struct mnp_rootsys {
  mnp::RootSystem rs;
  std::string group;
};

struct mnp_report {
  long long dimension = 0;
  long long scattering = 0;
  long long defect = 0;
  long long stratum_dim = 0;
  long long base_dim = 0;
  long long centralizer = 0;
  long long stabilizer = 0;
  long long mu_positive = 0;
  long long mu_zero = 0;
  long long mu_zero_kappa_nonzero = 0;
  bool empty_flag = false;
  struct Entry {
    long long value;
    bool magnetic;
    std::string base_coords;
  };
  std::vector<Entry> entries;
  std::string mass;
  std::string charge;
};

struct mnp_bspec {
  struct Row {
    long long j;
    int sign;
    mnp::Rat lambda_sq;
    double lambda;
  };
  std::vector<Row> rows;
};

extern "C" {

const char* mnp_last_error(void) { return g_error.c_str(); }

mnp_status mnp_rootsys_create(const char* group, mnp_rootsys** out) {
  return guard([&] {
    if (group == nullptr || out == nullptr) throw mnp::InvalidInput("group spec is required");
    auto components = mnp::parse_group(group);
    auto* h = new mnp_rootsys{mnp::build_root_system(components),
                              mnp::group_to_string(components)};
    *out = h;
  });
}

void mnp_rootsys_free(mnp_rootsys* rs) { delete rs; }

int mnp_rootsys_rank(const mnp_rootsys* rs) { return rs->rs.rank; }

int mnp_rootsys_root_count(const mnp_rootsys* rs) {
  return static_cast<int>(rs->rs.roots.size());
}

long long mnp_rootsys_cartan(const mnp_rootsys* rs, int i, int j) {
  if (i < 0 || j < 0 || i >= rs->rs.rank || j >= rs->rs.rank) return 0;
  return rs->rs.cartan[i][j];
}

const char* mnp_rootsys_group(const mnp_rootsys* rs) { return rs->group.c_str(); }

mnp_status mnp_dim(const mnp_rootsys* rs, const char* mass, const char* charge,
                   const char* tiebreak, mnp_report** out) {
  return guard([&] {
    if (rs == nullptr || out == nullptr) throw mnp::InvalidInput("root system is required");
    auto mu = parse_rat_vec(mass, "mass");
    auto kappa = parse_rat_vec(charge, "charge");
    mnp::RatVec tb =
        tiebreak ? parse_rat_vec(tiebreak, "tiebreak") : mnp::default_tiebreak(rs->rs.rank);
    auto pair = mnp::make_pair(rs->rs, mu, kappa);
    if (static_cast<int>(tb.size()) != rs->rs.rank)
      throw mnp::InvalidInput("tiebreak length does not match the rank");

    mnp::IndexBreakdown idx = mnp::moduli_dimension(pair, tb);
    mnp::PositiveSystem ps = mnp::positive_system(rs->rs, pair.mu, pair.kappa, tb);
    mnp::ChargeReport charges = mnp::charge_report(pair, ps);
    mnp::BreakingReport brk = mnp::breaking_report(pair);

    auto* rep = new mnp_report;
    rep->dimension = idx.total;
    rep->scattering = idx.scattering;
    rep->defect = idx.defect;
    rep->base_dim = brk.base_dim;
    rep->stratum_dim = idx.total + brk.base_dim;
    rep->centralizer = brk.centralizer_mu_dim;
    rep->stabilizer = brk.stabilizer_mu_kappa_dim;
    rep->mu_positive = brk.roots_mu_positive;
    rep->mu_zero = brk.roots_mu_zero;
    rep->mu_zero_kappa_nonzero = brk.roots_mu_zero_kappa_nonzero;
    rep->empty_flag = idx.empty_flag;
    for (const auto& e : charges.entries)
      rep->entries.push_back(mnp_report::Entry{e.value, e.kind == mnp::ChargeKind::Magnetic,
                                               join_coords(charges.adapted_base[e.base_index])});
    rep->mass = join_rats(pair.mu.coeffs);
    rep->charge = join_rats(pair.kappa.coeffs);
    *out = rep;
  });
}

void mnp_report_free(mnp_report* rep) { delete rep; }

long long mnp_report_dimension(const mnp_report* rep) { return rep->dimension; }
long long mnp_report_scattering(const mnp_report* rep) { return rep->scattering; }
long long mnp_report_defect(const mnp_report* rep) { return rep->defect; }
long long mnp_report_stratum_dim(const mnp_report* rep) { return rep->stratum_dim; }
long long mnp_report_base_dim(const mnp_report* rep) { return rep->base_dim; }
long long mnp_report_centralizer_mu_dim(const mnp_report* rep) { return rep->centralizer; }
long long mnp_report_stabilizer_mu_kappa_dim(const mnp_report* rep) { return rep->stabilizer; }
int mnp_report_empty_flag(const mnp_report* rep) { return rep->empty_flag ? 1 : 0; }
long long mnp_report_roots_mu_positive(const mnp_report* rep) { return rep->mu_positive; }
long long mnp_report_roots_mu_zero(const mnp_report* rep) { return rep->mu_zero; }
long long mnp_report_roots_mu_zero_kappa_nonzero(const mnp_report* rep) {
  return rep->mu_zero_kappa_nonzero;
}

int mnp_report_charge_count(const mnp_report* rep) {
  return static_cast<int>(rep->entries.size());
}

long long mnp_report_charge_value(const mnp_report* rep, int i) {
  if (i < 0 || i >= static_cast<int>(rep->entries.size())) return 0;
  return rep->entries[i].value;
}

int mnp_report_charge_is_magnetic(const mnp_report* rep, int i) {
  if (i < 0 || i >= static_cast<int>(rep->entries.size())) return 0;
  return rep->entries[i].magnetic ? 1 : 0;
}

const char* mnp_report_base_coords(const mnp_report* rep, int i) {
  if (i < 0 || i >= static_cast<int>(rep->entries.size())) return "";
  return rep->entries[i].base_coords.c_str();
}

const char* mnp_report_mass(const mnp_report* rep) { return rep->mass.c_str(); }
const char* mnp_report_charge(const mnp_report* rep) { return rep->charge.c_str(); }

mnp_status mnp_bspec_create(long long d, const char* t, const char* lambda_max,
                            mnp_bspec** out) {
  return guard([&] {
    if (out == nullptr) throw mnp::InvalidInput("output handle is required");
    mnp::Rat rt = parse_rat(t, "t");
    mnp::Rat lmax = parse_rat(lambda_max, "lambda_max");
    auto roots = mnp::bspec(d, rt, lmax);
    auto* h = new mnp_bspec;
    for (const auto& root : roots) {
      if (root.sign == 0) {
        for (long long j : root.js) {
          h->rows.push_back(mnp_bspec::Row{j, -1, root.lambda_sq, 0.0});
          h->rows.push_back(mnp_bspec::Row{j, +1, root.lambda_sq, 0.0});
        }
      } else {
        for (long long j : root.js)
          h->rows.push_back(mnp_bspec::Row{j, root.sign, root.lambda_sq,
                                           root.lambda()});
      }
    }
    *out = h;
  });
}

void mnp_bspec_free(mnp_bspec* bs) { delete bs; }

int mnp_bspec_count(const mnp_bspec* bs) { return static_cast<int>(bs->rows.size()); }

long long mnp_bspec_j(const mnp_bspec* bs, int row) {
  if (row < 0 || row >= static_cast<int>(bs->rows.size())) return 0;
  return bs->rows[row].j;
}

int mnp_bspec_sign(const mnp_bspec* bs, int row) {
  if (row < 0 || row >= static_cast<int>(bs->rows.size())) return 0;
  return bs->rows[row].sign;
}

double mnp_bspec_lambda(const mnp_bspec* bs, int row) {
  if (row < 0 || row >= static_cast<int>(bs->rows.size())) return 0.0;
  return bs->rows[row].lambda;
}

mnp_status mnp_bspec_lambda_sq(const mnp_bspec* bs, int row, long long* num, long long* den) {
  return guard([&] {
    if (bs == nullptr || num == nullptr || den == nullptr || row < 0 ||
        row >= static_cast<int>(bs->rows.size()))
      throw mnp::InvalidInput("bspec row out of range");
    *num = bs->rows[row].lambda_sq.num();
    *den = bs->rows[row].lambda_sq.den();
  });
}

mnp_status mnp_j0_nullity(long long d, const char* t, int sign, long long* out) {
  return guard([&] {
    if (out == nullptr) throw mnp::InvalidInput("output pointer is required");
    *out = mnp::j0_nullity(d, parse_rat(t, "t"), sign);
  });
}

mnp_status mnp_defect_region(long long d, const char* t, const char* delta, long long* num,
                             long long* den) {
  return guard([&] {
    if (num == nullptr || den == nullptr) throw mnp::InvalidInput("output pointers are required");
    mnp::Rat v = mnp::defect_region(d, parse_rat(t, "t"), parse_rat(delta, "delta"));
    *num = v.num();
    *den = v.den();
  });
}

mnp_status mnp_dirac_specsq(long long d, long long jmax, long long* js, long long* eigs,
                            int cap, int* count) {
  return guard([&] {
    if (js == nullptr || eigs == nullptr || count == nullptr)
      throw mnp::InvalidInput("output pointers are required");
    auto rows = mnp::dirac_sphere_specsq(d, jmax);
    if (static_cast<int>(rows.size()) > cap)
      throw mnp::InvalidInput("buffer too small for the requested jmax");
    for (size_t i = 0; i < rows.size(); ++i) {
      js[i] = rows[i].first;
      eigs[i] = rows[i].second;
    }
    *count = static_cast<int>(rows.size());
  });
}

mnp_status mnp_model_fields(long long d, double m, mnp_patch patch, double r, double theta,
                            double* a_phi, double* phi, double* f_thetaphi) {
  return guard([&] {
    if (a_phi == nullptr || phi == nullptr || f_thetaphi == nullptr)
      throw mnp::InvalidInput("output pointers are required");
    mnp::FieldSample f = mnp::model_fields(
        d, m, patch == MNP_PATCH_NORTH ? mnp::Patch::North : mnp::Patch::South, r, theta);
    *a_phi = f.a_phi;
    *phi = f.phi;
    *f_thetaphi = f.f_thetaphi;
  });
}

mnp_status mnp_chern_number(long long d, int n_theta, int n_phi, double* out) {
  return guard([&] {
    if (out == nullptr) throw mnp::InvalidInput("output pointer is required");
    *out = mnp::chern_number(d, n_theta, n_phi);
  });
}

mnp_status mnp_bogomolny_residual(long long d, double m, double r_min, double r_max, int n_r,
                                  int n_theta, int n_phi, double* out) {
  return guard([&] {
    if (out == nullptr) throw mnp::InvalidInput("output pointer is required");
    mnp::GridSpec g;
    g.r_min = r_min;
    g.r_max = r_max;
    g.n_r = n_r;
    g.n_theta = n_theta;
    g.n_phi = n_phi;
    *out = mnp::bogomolny_residual(d, m, g);
  });
}

}  // extern "C"
