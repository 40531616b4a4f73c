#include "lincert/cremona.hpp"

#include <algorithm>

#include "lincert/literal.hpp"

namespace lincert {

RawSystem apply_quadratic_law(RawSystem raw, const Triple& indices) {
  const std::size_t top = *std::max_element(indices.begin(), indices.end());
  if (raw.multiplicities.size() <= top) raw.multiplicities.resize(top + 1, 0);
  auto& m = raw.multiplicities;
  const Int d = raw.degree;
  const Int mi = m[indices[0]];
  const Int mj = m[indices[1]];
  const Int mk = m[indices[2]];
  const Int sum = checked::add(checked::add(mi, mj), mk);
  raw.degree = checked::sub(checked::mul(2, d), sum);
  m[indices[0]] = d - mj - mk;
  m[indices[1]] = d - mi - mk;
  m[indices[2]] = d - mi - mj;
  return raw;
}

QuadraticStep quadratic_step(const LinearSystem& system, const Triple& indices) {
  if (indices[0] == indices[1] || indices[0] == indices[2] || indices[1] == indices[2]) {
    throw Error(Errc::InvalidIndex, "quadratic transformation needs three distinct points");
  }
  RawSystem raw{system.degree(), {system.multiplicities().begin(), system.multiplicities().end()}};
  raw = apply_quadratic_law(std::move(raw), indices);
  for (std::size_t idx : indices) {
    if (raw.multiplicities[idx] < 0) {
      throw Error(Errc::NegativeMultiplicity, "quadratic transformation of " + format_system(system) +
                                                  " produces multiplicity " +
                                                  std::to_string(raw.multiplicities[idx]));
    }
  }
  if (raw.degree < 1) {
    throw Error(Errc::DegenerateDegree, "quadratic transformation of " + format_system(system) +
                                            " produces degree " + std::to_string(raw.degree));
  }
  const Int zeros = std::count(raw.multiplicities.begin(), raw.multiplicities.end(), Int{0});
  return {system, indices, LinearSystem::normalize(raw.degree, std::move(raw.multiplicities)), zeros};
}

CremonaReduction cremona_reduce(const LinearSystem& system) {
  const HReport h = hypothesis_h(system);
  for (const auto& f : h.failed) {
    if (f.clause != HClause::II) {
      throw TracedError<QuadraticStep>(
          Error(Errc::PreconditionViolated,
                "Cremona reduction requires d >= m1 and d^2 = sum m_i^2: " + format_system(system)),
          {});
    }
  }
  CremonaReduction out{system, {}};
  while (excess(out.result) < 0) {
    try {
      out.steps.push_back(quadratic_step(out.result, {0, 1, 2}));
    } catch (const Error& err) {
      throw TracedError<QuadraticStep>(err, std::move(out.steps));
    }
    out.result = out.steps.back().after;
  }
  return out;
}

}  // namespace lincert
