#include "bhdimer/bhdimer.h"

#include <exception>
#include <memory>
#include <new>
#include <string>

#include "bhdimer/config.hpp"
#include "bhdimer/dynamics.hpp"
#include "bhdimer/entanglement.hpp"
#include "bhdimer/error.hpp"
#include "bhdimer/families.hpp"
#include "bhdimer/simplex.hpp"
#include "bhdimer/spectral.hpp"
#include "bhdimer/verify.hpp"

struct bhd_model_s {
  bhdimer::HamiltonianParams params;
  bhdimer::SymmetricMatrix3 matrix;
  bhdimer::SpectralDecomposition decomp;
};

namespace {

using namespace bhdimer;

thread_local std::string last_error;

bhd_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return BHD_ERR_INVALID_ARGUMENT;
    case ErrorCode::SymmetryViolation: return BHD_ERR_SYMMETRY_VIOLATION;
    case ErrorCode::SiteAsymmetry: return BHD_ERR_SITE_ASYMMETRY;
    case ErrorCode::DegenerateSpectrum: return BHD_ERR_DEGENERATE_SPECTRUM;
    case ErrorCode::InvalidDistribution: return BHD_ERR_INVALID_DISTRIBUTION;
    case ErrorCode::DomainError: return BHD_ERR_DOMAIN;
    case ErrorCode::ParseError: return BHD_ERR_PARSE;
    case ErrorCode::IoError: return BHD_ERR_IO;
    case ErrorCode::Internal: return BHD_ERR_INTERNAL;
  }
  return BHD_ERR_INTERNAL;
}

template <typename F>
bhd_status try_(F&& f) {
  try {
    f();
    last_error.clear();
    return BHD_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BHD_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BHD_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return BHD_ERR_INTERNAL;
  }
}

template <typename T>
T& deref(T* p, const char* name) {
  if (p == nullptr)
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " is null");
  return *p;
}

FamilyKind to_family(bhd_family f) {
  switch (f) {
    case BHD_FAMILY_FAST: return FamilyKind::Fast;
    case BHD_FAMILY_SLOW: return FamilyKind::Slow;
    case BHD_FAMILY_EW: return FamilyKind::EquallyWeighted;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

Regime to_regime(bhd_regime r) {
  switch (r) {
    case BHD_REGIME_STRONG_J: return Regime::StrongJ;
    case BHD_REGIME_STRONG_K: return Regime::StrongK;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown regime");
}

bhd_region to_c(Region r) {
  switch (r) {
    case Region::InsideDelta2: return BHD_REGION_INSIDE;
    case Region::OnDelta2Boundary: return BHD_REGION_BOUNDARY;
    case Region::OutsideDelta2: return BHD_REGION_OUTSIDE;
  }
  return BHD_REGION_OUTSIDE;
}

HamiltonianParams from_c(const bhd_params& p) {
  return {p.eps0, p.eps1, p.eps01, p.U, p.J, p.K};
}

EnergyDistribution from_c(const bhd_distribution& d) {
  return EnergyDistribution({d.r[0], d.r[1], d.r[2]},
                            {d.theta[0], d.theta[1], d.theta[2]});
}

void to_c(const EnergyDistribution& d, bhd_distribution& out) {
  for (int i = 0; i < 3; ++i) {
    out.r[i] = d.r()[i];
    out.theta[i] = d.theta()[i];
  }
}

}  // namespace

extern "C" {

const char* bhd_version(void) { return "1.0.0"; }

const char* bhd_status_string(bhd_status status) {
  switch (status) {
    case BHD_OK: return "ok";
    case BHD_ERR_INVALID_ARGUMENT: return to_string(ErrorCode::InvalidArgument);
    case BHD_ERR_SYMMETRY_VIOLATION: return to_string(ErrorCode::SymmetryViolation);
    case BHD_ERR_SITE_ASYMMETRY: return to_string(ErrorCode::SiteAsymmetry);
    case BHD_ERR_DEGENERATE_SPECTRUM: return to_string(ErrorCode::DegenerateSpectrum);
    case BHD_ERR_INVALID_DISTRIBUTION: return to_string(ErrorCode::InvalidDistribution);
    case BHD_ERR_DOMAIN: return to_string(ErrorCode::DomainError);
    case BHD_ERR_PARSE: return to_string(ErrorCode::ParseError);
    case BHD_ERR_IO: return to_string(ErrorCode::IoError);
    case BHD_ERR_INTERNAL: return to_string(ErrorCode::Internal);
  }
  return "unknown status";
}

const char* bhd_last_error(void) { return last_error.c_str(); }

void bhd_params_default(bhd_params* out) {
  if (out != nullptr) *out = bhd_params{0.0, 1.0, 0.0, 0.0, 0.0, 0.0};
}

bhd_status bhd_config_load(const char* path, bhd_params* params,
                           bhd_distribution* dist, int* has_dist) {
  return try_([&] {
    const ConfigFile cfg = load_config(std::string(&deref(path, "path")));
    const HamiltonianParams& p = cfg.params;
    deref(params, "params") = bhd_params{p.eps0, p.eps1, p.eps01, p.U, p.J, p.K};
    if (has_dist != nullptr) *has_dist = cfg.r ? 1 : 0;
    if (dist != nullptr && cfg.r) {
      for (int i = 0; i < 3; ++i) {
        dist->r[i] = (*cfg.r)[i];
        dist->theta[i] = cfg.theta[i];
      }
    }
  });
}

bhd_status bhd_model_create(const bhd_params* params, bhd_model* out) {
  return try_([&] {
    bhd_model& slot = deref(out, "out");
    slot = nullptr;
    auto model = std::make_unique<bhd_model_s>();
    model->params = from_c(deref(params, "params"));
    model->matrix = build_extended_matrix(model->params);
    model->decomp = decompose(model->matrix);
    slot = model.release();
  });
}

void bhd_model_destroy(bhd_model model) { delete model; }

bhd_status bhd_model_matrix(bhd_model model, double out[9]) {
  return try_([&] {
    const bhd_model_s& m = deref(model, "model");
    deref(out, "out");
    for (int n = 0; n < 3; ++n)
      for (int k = 0; k < 3; ++k) out[3 * n + k] = m.matrix(n, k);
  });
}

bhd_status bhd_model_spectrum(bhd_model model, bhd_spectrum* out) {
  return try_([&] {
    const SpectralDecomposition& d = deref(model, "model").decomp;
    bhd_spectrum& s = deref(out, "out");
    for (int k = 0; k < 3; ++k) {
      s.energies[k] = d.energies[k];
      for (int n = 0; n < 3; ++n) s.eigvecs[3 * k + n] = d.eigvecs[k][n];
    }
    s.p = d.p;
    s.q = d.q;
    s.phi = d.phi;
    s.omega21 = d.freqs.w21;
    s.omega32 = d.freqs.w32;
    s.omega31 = d.freqs.w31;
  });
}

bhd_status bhd_model_evolve(bhd_model model, const bhd_distribution* dist,
                            const double* times, size_t count, bhd_sample* out) {
  return try_([&] {
    const SpectralDecomposition& d = deref(model, "model").decomp;
    const EnergyDistribution ed = from_c(deref(dist, "dist"));
    if (count > 0) {
      deref(times, "times");
      deref(out, "out");
    }
    const QutritState initial = prepare_state(ed);
    for (size_t j = 0; j < count; ++j) {
      const double t = times[j];
      const QutritState fock = to_fock(evolve(initial, d.energies, t), d.eigvecs);
      const Populations pops = populations(fock);
      const OccupationStats stats = mode_occupation_stats(fock);
      bhd_sample& s = out[j];
      s.t = t;
      for (int n = 0; n < 3; ++n) s.R[n] = pops.R[n];
      s.concurrence = concurrence(pops);
      s.mean_n1 = stats.mean;
      s.var_n1 = stats.variance;
      s.survival = std::abs(survival_amplitude(ed, d.energies, t));
    }
  });
}

bhd_status bhd_model_orthogonality_time(bhd_model model,
                                        const bhd_distribution* dist,
                                        double t_max, double tol, double* tau,
                                        int* found) {
  return try_([&] {
    const SpectralDecomposition& d = deref(model, "model").decomp;
    const auto result = find_orthogonality_time(from_c(deref(dist, "dist")),
                                                d.energies, t_max, tol);
    deref(found, "found") = result ? 1 : 0;
    deref(tau, "tau") = result.value_or(0.0);
  });
}

bhd_status bhd_model_characteristic_time(bhd_model model, bhd_family family,
                                         double* tau) {
  return try_([&] {
    deref(tau, "tau") =
        characteristic_time(to_family(family), deref(model, "model").decomp.freqs);
  });
}

bhd_status bhd_family_distribution(bhd_family family, bhd_distribution* out) {
  return try_([&] { to_c(family_distribution(to_family(family)), deref(out, "out")); });
}

bhd_status bhd_limit_concurrence(bhd_family family, bhd_regime regime,
                                 double tau, double t, double* out) {
  return try_([&] {
    deref(out, "out") =
        limit_concurrence(RegimeLimit{to_family(family), to_regime(regime), tau}, t);
  });
}

bhd_status bhd_regime_deviation(bhd_family family, bhd_regime regime,
                                double eps1, double amp, const double* t_over_tau,
                                size_t count, double* out) {
  return try_([&] {
    if (count > 0) deref(t_over_tau, "t_over_tau");
    deref(out, "out") = regime_deviation(to_family(family), to_regime(regime),
                                         eps1, amp, {t_over_tau, count});
  });
}

bhd_status bhd_classify(const double r[3], bhd_region* out) {
  return try_([&] {
    deref(r, "r");
    deref(out, "out") = to_c(classify({r[0], r[1], r[2]}));
  });
}

bhd_status bhd_simplex_count(int n, size_t* out) {
  return try_([&] {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "grid resolution must be >= 2");
    deref(out, "out") = static_cast<size_t>(n + 1) * static_cast<size_t>(n + 2) / 2;
  });
}

bhd_status bhd_simplex_sample(int n, bhd_simplex_point* out, size_t capacity) {
  return try_([&] {
    const std::vector<SimplexPoint> pts = sample_simplex(n);
    if (capacity < pts.size())
      throw Error(ErrorCode::InvalidArgument, "output buffer too small");
    deref(out, "out");
    for (size_t j = 0; j < pts.size(); ++j) {
      for (int i = 0; i < 3; ++i) out[j].r[i] = pts[j].r[i];
      out[j].region = to_c(pts[j].region);
      out[j].concurrence = pts[j].concurrence;
    }
  });
}

bhd_status bhd_verify(unsigned flags, bhd_verify_callback callback, void* user,
                      int* all_passed) {
  return try_([&] {
    VerifyOptions options;
    options.inject_h02_sign_error = (flags & BHD_VERIFY_INJECT_H02_SIGN_ERROR) != 0;
    bool ok = true;
    for (const VerifyGroupResult& g : run_verification(options)) {
      ok = ok && g.passed;
      if (callback != nullptr)
        callback(g.name.c_str(), g.passed ? 1 : 0, g.detail.c_str(), user);
    }
    deref(all_passed, "all_passed") = ok ? 1 : 0;
  });
}

}  // extern "C"
