#pragma once

#include <ostream>

#include "yangian/rational.hpp"
#include "yangian/series.hpp"
#include "yangian/symmetric.hpp"

// Readable gtest failure messages for the exact types.
namespace yangian {

inline void PrintTo(const ParamPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const UniPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const ParamSeries& s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const AffineRoot& r, std::ostream* os) { *os << r.to_string(); }
inline void PrintTo(const GaussianRational& z, std::ostream* os) { *os << to_string(z); }

}  // namespace yangian
