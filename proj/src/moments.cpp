#include "mollify/moments.hpp"

#include <cmath>

#include "mollify/arith.hpp"
#include "mollify/characters.hpp"
#include "mollify/errors.hpp"
#include "mollify/parallel.hpp"
#include "mollify/summation.hpp"

namespace mollify {

WeightFunction default_psi() {
  return {[](double x) {
    if (!(x > 0.5 && x < 2.0)) return 0.0;
    return std::exp(-1.0 / ((x - 0.5) * (2.0 - x)));
  }};
}

std::vector<int> sweep_moduli(double Q, int stride) {
  if (stride < 1) throw PreconditionError("stride must be at least 1");
  std::vector<int> qs;
  const int lo = static_cast<int>(std::floor(Q / 2.0)) + 1;
  const int hi = static_cast<int>(std::ceil(2.0 * Q)) - 1;
  for (int q = lo; q <= hi; q += stride) {
    if (q > Q / 2.0 && q < 2.0 * Q) qs.push_back(q);
  }
  return qs;
}

namespace {

ModulusPartial sweep_modulus(int q, double Q, const WeightFunction& psi,
                             const MollifierCoefficients* coeffs, const LFunctionEngine& engine,
                             double threshold) {
  ModulusPartial part;
  part.q = q;
  part.weight = psi(q / Q) * static_cast<double>(q) / static_cast<double>(euler_phi(q));
  const CharacterGroup group(q);
  const auto indices = group.even_primitive_indices();
  part.phi_plus = static_cast<int>(indices.size());
  if (indices.empty()) return part;

  const auto weights = engine.v1_weights(q);
  CompensatedComplexSum s1;
  CompensatedSum s2;
  for (int idx : indices) {
    const DirichletCharacter chi = group.character(idx);
    const auto eps = root_number(chi);
    const auto L = central_value(chi, eps, weights);
    if (std::abs(L) > threshold) ++part.nonzero;
    if (coeffs == nullptr) continue;
    // Even chi: eps(conj chi) = conj eps(chi).
    const auto psi_val = coeffs->evaluate(chi, std::conj(eps)).total();
    const auto lp = L * psi_val;
    s1 += lp;
    s2 += std::norm(lp);
  }
  part.s1 = s1.value();
  part.s2 = s2.value();
  return part;
}

}  // namespace

MomentReport compute_moments(double Q, const MollifierSpec& spec, const WeightFunction& psi,
                             const SweepOptions& opts) {
  if (!(Q >= 20.0)) throw PreconditionError("moment sweeps need Q >= 20");
  validate(spec, ThetaDomain::kFormal);
  const MollifierCoefficients coeffs(spec, Q);
  const LFunctionEngine engine(opts.lfun);

  MomentReport rep;
  rep.Q = Q;
  const auto qs = sweep_moduli(Q, opts.stride);
  rep.partials.resize(qs.size());
  parallel_for(qs.size(), opts.workers, [&](std::size_t i) {
    rep.partials[i] = sweep_modulus(qs[i], Q, psi, &coeffs, engine, opts.vanishing_threshold);
  });

  CompensatedComplexSum s1;
  CompensatedSum s2, norm, weighted;
  for (const auto& p : rep.partials) {
    s1 += p.weight * p.s1;
    s2 += p.weight * p.s2;
    norm += p.weight * p.phi_plus;
    weighted += p.weight * p.nonzero;
    if (p.weight > 0.0) {
      rep.census_total += p.phi_plus;
      rep.census_nonzero += p.nonzero;
    }
  }
  rep.S1 = s1.value();
  rep.S2 = s2.value();
  rep.norm = norm.value();
  rep.weighted_nonzero = weighted.value();
  rep.predicted_s1 = s1_constant(spec) * rep.norm;
  rep.predicted_s2 = s2_constant(spec) * rep.norm;
  rep.lower_bound = rep.S2 > 0.0 ? rep.S1.real() * rep.S1.real() / rep.S2 : 0.0;
  return rep;
}

Census nonvanishing_census(double Q, const SweepOptions& opts) {
  if (!(Q >= 20.0)) throw PreconditionError("census needs Q >= 20");
  const LFunctionEngine engine(opts.lfun);
  const auto psi = default_psi();
  const auto qs = sweep_moduli(Q, opts.stride);
  std::vector<ModulusPartial> parts(qs.size());
  parallel_for(qs.size(), opts.workers, [&](std::size_t i) {
    parts[i] = sweep_modulus(qs[i], Q, psi, nullptr, engine, opts.vanishing_threshold);
  });
  Census c;
  for (const auto& p : parts) {
    if (p.weight <= 0.0) continue;
    c.total += p.phi_plus;
    c.nonzero += p.nonzero;
  }
  return c;
}

}  // namespace mollify
