// Copyright 2026 The latticecd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "latticecd.h"

#include <cstring>
#include <fstream>
#include <iostream>
#include <new>
#include <string>
#include <vector>

#include "latticecd/certify.hpp"
#include "latticecd/csv.hpp"
#include "latticecd/dynamics.hpp"
#include "latticecd/error.hpp"
#include "latticecd/spectral.hpp"

using namespace latticecd;

struct lcd_lattice {
  LatticeSpec spec;
};
struct lcd_matrix {
  HermitianMatrix m;
};
struct lcd_state {
  EigenStateRecord record;
};
struct lcd_basis {
  std::vector<EigenStateRecord> states;
};
struct lcd_sweep {
  SweepResult result;
};
struct lcd_spectrum {
  SpectrumTable table;
};
struct lcd_report {
  std::vector<CheckResult> checks;
};

namespace {

thread_local std::string g_last_error;

lcd_status fail(lcd_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
lcd_status guarded(F&& body) {
  try {
    body();
    return LCD_OK;
  } catch (const Error& e) {
    return fail(static_cast<lcd_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LCD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LCD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LCD_ERR_INTERNAL, "unknown exception");
  }
}

template <class T>
void require(const T* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string(what) + " is NULL");
}

lcd_complex to_c(cplx z) { return {z.real(), z.imag()}; }
cplx from_c(lcd_complex z) { return {z.re, z.im}; }

CdMode to_mode(lcd_cd_mode m) {
  switch (m) {
    case LCD_CD_NONE: return CdMode::kNone;
    case LCD_CD_FULL: return CdMode::kFull;
    case LCD_CD_TARGETED: return CdMode::kTargeted;
  }
  throw InvalidArgument("unknown cd mode");
}

Protocol to_protocol(const lcd_protocol* p) {
  require(p, "protocol");
  Protocol out{p->lambda0, p->lambdaf, p->total_time, to_mode(p->cd_mode), std::nullopt};
  if (p->band_limit >= 0) out.band_limit = p->band_limit;
  return out;
}

// Writes to stdout for NULL or "-", otherwise to a file.
template <class F>
void with_output(const char* path, F&& write) {
  if (path == nullptr || std::strcmp(path, "-") == 0) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream os(path);
  if (!os) throw IoError(std::string("cannot open ") + path);
  write(os);
  if (!os) throw IoError(std::string("write failed: ") + path);
}

}  // namespace

extern "C" {

const char* lcd_version(void) { return LATTICECD_VERSION; }
const char* lcd_last_error(void) { return g_last_error.c_str(); }

const char* lcd_status_string(lcd_status s) {
  switch (s) {
    case LCD_OK: return "ok";
    case LCD_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LCD_ERR_SINGULAR: return "singular";
    case LCD_ERR_DOMAIN: return "domain error";
    case LCD_ERR_UNSUPPORTED: return "unsupported";
    case LCD_ERR_NOT_CONVERGED: return "not converged";
    case LCD_ERR_IO: return "i/o error";
    case LCD_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

lcd_status lcd_lattice_ssh(int L, int x0, double lambda, lcd_lattice** out) {
  return guarded([&] {
    require(out, "out");
    *out = new lcd_lattice{ssh_spec(L, x0, lambda)};
  });
}

lcd_status lcd_lattice_create(int x0, int L, const lcd_complex* hopping, size_t n_hopping,
                              const double* potential, size_t n_potential, int tau,
                              lcd_lattice** out) {
  return guarded([&] {
    require(out, "out");
    if (n_hopping > 0) require(hopping, "hopping");
    if (n_potential > 0) require(potential, "potential");
    std::vector<cplx> hop(n_hopping);
    for (size_t i = 0; i < n_hopping; ++i) hop[i] = from_c(hopping[i]);
    std::vector<double> pot(potential, potential + n_potential);
    *out = new lcd_lattice{LatticeSpec(x0, L, std::move(hop), std::move(pot), tau)};
  });
}

void lcd_lattice_free(lcd_lattice* lattice) { delete lattice; }
int lcd_lattice_sites(const lcd_lattice* lattice) { return lattice ? lattice->spec.sites() : 0; }
int lcd_lattice_site_of(const lcd_lattice* lattice, int index) {
  return lattice ? lattice->spec.first_site() + index : 0;
}

lcd_status lcd_hamiltonian(const lcd_lattice* lattice, lcd_matrix** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = new lcd_matrix{build_hamiltonian(lattice->spec)};
  });
}

lcd_status lcd_matrix_hermitize(int dim, const lcd_complex* entries, lcd_matrix** out,
                                double* residual) {
  return guarded([&] {
    require(out, "out");
    if (dim < 0) throw InvalidArgument("negative dimension");
    if (dim > 0) require(entries, "entries");
    CMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) m(i, j) = from_c(entries[static_cast<size_t>(i) * dim + j]);
    }
    Hermitized h = hermitize(m);
    if (residual) *residual = h.residual;
    *out = new lcd_matrix{std::move(h.matrix)};
  });
}

void lcd_matrix_free(lcd_matrix* m) { delete m; }
int lcd_matrix_dim(const lcd_matrix* m) { return m ? m->m.dim() : 0; }

lcd_status lcd_matrix_entries(const lcd_matrix* m, lcd_complex* out, size_t n) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    const int d = m->m.dim();
    if (n < static_cast<size_t>(d) * d) throw InvalidArgument("output buffer too small");
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) out[static_cast<size_t>(i) * d + j] = to_c(m->m(i, j));
    }
  });
}

lcd_status lcd_matrix_band_limit(const lcd_matrix* m, int d, lcd_matrix** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = new lcd_matrix{band_limit(m->m, d)};
  });
}

lcd_status lcd_matrix_axpy(const lcd_matrix* a, double s, const lcd_matrix* b, lcd_matrix** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    if (a->m.dim() != b->m.dim()) throw InvalidArgument("dimension mismatch");
    *out = new lcd_matrix{HermitianMatrix(a->m.matrix() + s * b->m.matrix())};
  });
}

double lcd_matrix_frobenius(const lcd_matrix* m) { return m ? frobenius_norm(m->m) : 0.0; }

lcd_status lcd_matrix_diagonal_ratio(const lcd_matrix* m, int d, double* out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = diagonal_norm_ratio(m->m, d);
  });
}

lcd_status lcd_eigh(const lcd_matrix* m, double* values, lcd_complex* vectors) {
  return guarded([&] {
    require(m, "matrix");
    require(values, "values");
    const EigenDecomposition eig = eigh(m->m);
    const int d = m->m.dim();
    for (int i = 0; i < d; ++i) values[i] = eig.values(i);
    if (vectors) {
      for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) vectors[static_cast<size_t>(j) * d + i] = to_c(eig.vectors(i, j));
      }
    }
  });
}

lcd_status lcd_gap_to_zero_mode(const double* values, size_t n, double* out) {
  return guarded([&] {
    require(out, "out");
    if (n > 0) require(values, "values");
    *out = gap_to_zero_mode(std::vector<double>(values, values + n));
  });
}

double lcd_ssh_gap_formula(double lambda, int L) { return ssh_gap_formula(lambda, L); }

lcd_status lcd_edge_alpha(const lcd_lattice* lattice, double lambda, lcd_complex* out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = to_c(edge_alpha(lattice->spec, lambda));
  });
}

double lcd_edge_alpha_closed_form(double lambda) { return edge_alpha_closed_form(lambda); }

lcd_status lcd_in_gap_state(const lcd_lattice* lattice, double lambda, lcd_state** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = new lcd_state{in_gap_state(lattice->spec, lambda)};
  });
}

lcd_status lcd_full_basis(const lcd_lattice* lattice, double lambda, lcd_basis** out) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    *out = new lcd_basis{full_basis(lattice->spec, lambda)};
  });
}

void lcd_basis_free(lcd_basis* basis) { delete basis; }
size_t lcd_basis_size(const lcd_basis* basis) { return basis ? basis->states.size() : 0; }

lcd_status lcd_basis_state(const lcd_basis* basis, size_t n, lcd_state** out) {
  return guarded([&] {
    require(basis, "basis");
    require(out, "out");
    if (n >= basis->states.size()) throw InvalidArgument("state index out of range");
    *out = new lcd_state{basis->states[n]};
  });
}

void lcd_state_free(lcd_state* state) { delete state; }

lcd_status lcd_state_get_info(const lcd_state* state, lcd_state_info* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    const EigenStateRecord& r = state->record;
    out->alpha = to_c(r.alpha);
    out->energy = r.energy;
    out->norm = r.norm;
    out->band = r.band;
    out->in_gap = r.kind == StateKind::kInGap;
    out->quasimomentum = r.quasimomentum();
    out->boundary_residual = r.boundary_residual;
  });
}

lcd_status lcd_state_coeffs(const lcd_state* state, lcd_complex* out, size_t n) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    const CVector& c = state->record.coeffs;
    if (n < static_cast<size_t>(c.size())) throw InvalidArgument("output buffer too small");
    for (Eigen::Index i = 0; i < c.size(); ++i) out[i] = to_c(c(i));
  });
}

lcd_status lcd_state_write_csv(const lcd_state* state, const lcd_lattice* lattice, double lambda,
                               const char* manifest, const char* path) {
  return guarded([&] {
    require(state, "state");
    require(lattice, "lattice");
    if (state->record.coeffs.size() != lattice->spec.sites()) {
      throw InvalidArgument("state does not belong to the lattice");
    }
    with_output(path, [&](std::ostream& os) {
      write_state_csv(os, manifest ? manifest : "", lattice->spec, lambda, state->record);
    });
  });
}

lcd_status lcd_zero_mode(const lcd_lattice* lattice, lcd_complex* out, size_t n) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    const CVector z = sublattice_zero_mode(lattice->spec);
    if (n < static_cast<size_t>(z.size())) throw InvalidArgument("output buffer too small");
    for (Eigen::Index i = 0; i < z.size(); ++i) out[i] = to_c(z(i));
  });
}

namespace {
GaugePotentialMatrix build_cd(const LatticeSpec& spec, double lambda, lcd_cd_mode mode) {
  switch (to_mode(mode)) {
    case CdMode::kFull: return full_cd(spec, lambda);
    case CdMode::kTargeted: return targeted_cd(spec, lambda);
    case CdMode::kNone: break;
  }
  GaugePotentialMatrix g;
  g.matrix = HermitianMatrix::zero(spec.sites());
  g.mode = CdMode::kNone;
  g.lambda = lambda;
  return g;
}
}  // namespace

lcd_status lcd_cd_generator(const lcd_lattice* lattice, double lambda, lcd_cd_mode mode,
                            lcd_matrix** out, double* antihermitian_residual,
                            double* diagonal_residual) {
  return guarded([&] {
    require(lattice, "lattice");
    require(out, "out");
    GaugePotentialMatrix g = build_cd(lattice->spec, lambda, mode);
    if (antihermitian_residual) *antihermitian_residual = g.antihermitian_residual;
    if (diagonal_residual) *diagonal_residual = g.diagonal_residual;
    *out = new lcd_matrix{std::move(g.matrix)};
  });
}

lcd_status lcd_cd_write_csv(const lcd_lattice* lattice, double lambda, lcd_cd_mode mode,
                            const char* manifest, const char* path) {
  return guarded([&] {
    require(lattice, "lattice");
    const GaugePotentialMatrix g = build_cd(lattice->spec, lambda, mode);
    with_output(path, [&](std::ostream& os) {
      write_cd_csv(os, manifest ? manifest : "", lattice->spec, g);
    });
  });
}

lcd_status lcd_propagate(int L, int x0, const lcd_protocol* protocol, double dt,
                         lcd_trace_fn trace, void* user, lcd_evolution* out,
                         lcd_complex* final_state) {
  return guarded([&] {
    require(out, "out");
    const Protocol p = to_protocol(protocol);
    TraceObserver observer;
    if (trace) {
      observer = [trace, user](const TracePoint& tp) {
        const lcd_trace_point c{tp.t, tp.lambda, tp.fidelity_to_instantaneous, tp.norm, tp.energy};
        trace(&c, user);
      };
    }
    const EvolutionResult r = propagate(ssh_builder(L, x0), p, dt, observer);
    out->fidelity = r.fidelity;
    out->norm_drift = r.norm_drift;
    out->steps = r.steps;
    if (final_state) {
      for (Eigen::Index i = 0; i < r.final_state.size(); ++i) final_state[i] = to_c(r.final_state(i));
    }
  });
}

lcd_status lcd_convergence_sweep(int L, int x0, const lcd_protocol* protocol, double dt0,
                                 lcd_sweep** out) {
  return guarded([&] {
    require(out, "out");
    *out = new lcd_sweep{convergence_sweep(ssh_builder(L, x0), to_protocol(protocol), dt0)};
  });
}

void lcd_sweep_free(lcd_sweep* sweep) { delete sweep; }
size_t lcd_sweep_size(const lcd_sweep* sweep) { return sweep ? sweep->result.points.size() : 0; }
int lcd_sweep_converged(const lcd_sweep* sweep) { return sweep && sweep->result.converged; }

lcd_status lcd_sweep_point_at(const lcd_sweep* sweep, size_t i, lcd_sweep_point* out) {
  return guarded([&] {
    require(sweep, "sweep");
    require(out, "out");
    if (i >= sweep->result.points.size()) throw InvalidArgument("sweep index out of range");
    const SweepPoint& p = sweep->result.points[i];
    *out = {p.dt, p.steps, p.fidelity, p.norm_drift};
  });
}

lcd_status lcd_spectrum_sweep(int L, int x0, const double* grid, size_t n, lcd_spectrum_mode mode,
                              double lambda_dot, lcd_spectrum** out) {
  return guarded([&] {
    require(out, "out");
    if (n > 0) require(grid, "grid");
    SpectrumMode m;
    switch (mode) {
      case LCD_SPECTRUM_BARE: m = SpectrumMode::kBare; break;
      case LCD_SPECTRUM_FULL_CD: m = SpectrumMode::kFullCd; break;
      case LCD_SPECTRUM_TARGETED_CD: m = SpectrumMode::kTargetedCd; break;
      default: throw InvalidArgument("unknown spectrum mode");
    }
    *out = new lcd_spectrum{spectrum_sweep(L, x0, std::vector<double>(grid, grid + n), m, lambda_dot)};
  });
}

void lcd_spectrum_free(lcd_spectrum* spectrum) { delete spectrum; }
size_t lcd_spectrum_rows(const lcd_spectrum* s) { return s ? s->table.rows.size() : 0; }
int lcd_spectrum_sites(const lcd_spectrum* s) { return s ? s->table.sites : 0; }

lcd_status lcd_spectrum_row(const lcd_spectrum* s, size_t row, double* lambda, int* skipped,
                            double* energies, const char** reason) {
  return guarded([&] {
    require(s, "spectrum");
    if (row >= s->table.rows.size()) throw InvalidArgument("row out of range");
    const SpectrumRow& r = s->table.rows[row];
    if (lambda) *lambda = r.lambda;
    if (skipped) *skipped = r.skipped;
    if (reason) *reason = r.reason.c_str();
    if (energies && !r.skipped) std::copy(r.energies.begin(), r.energies.end(), energies);
  });
}

lcd_status lcd_certify(int sites, double lambda0, double lambdaf, double total_time,
                       lcd_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = new lcd_report{certify(CertifyOptions{sites, lambda0, lambdaf, total_time})};
  });
}

void lcd_report_free(lcd_report* report) { delete report; }
size_t lcd_report_size(const lcd_report* report) { return report ? report->checks.size() : 0; }

lcd_status lcd_report_check(const lcd_report* report, size_t i, lcd_check* out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    if (i >= report->checks.size()) throw InvalidArgument("check index out of range");
    const CheckResult& c = report->checks[i];
    *out = {c.name.c_str(), c.passed, c.value, c.bound, c.detail.c_str()};
  });
}

}  // extern "C"
