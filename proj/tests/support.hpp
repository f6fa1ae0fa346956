#pragma once

#include "halflog/series.hpp"
#include "oracles.hpp"

namespace support {

/// Exact rational coefficients of an exact polynomial.
inline oracle::QPoly values(const halflog::PowerSeries& f) {
  oracle::QPoly out;
  for (const auto& c : f.coeffs()) out.push_back(c.value());
  oracle::trim(out);
  return out;
}

inline halflog::PowerSeries series(long p, const oracle::QPoly& f,
                                   long cap = halflog::PowerSeries::kExactCap) {
  std::vector<halflog::PadicScalar> c;
  for (const auto& q : f) c.push_back(halflog::PadicScalar::from_rational(p, q));
  return {p, std::move(c), cap};
}

inline oracle::QPoly truncate(oracle::QPoly f, long cap) {
  if (static_cast<long>(f.size()) > cap) f.resize(static_cast<std::size_t>(cap));
  oracle::trim(f);
  return f;
}

}  // namespace support
