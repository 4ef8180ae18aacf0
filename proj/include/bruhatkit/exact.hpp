#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bruhatkit {

// Exact rational scalar used by all combinatorial modules.  Root and
// coweight coordinates stay tiny, so a 64-bit rational is plenty.
using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline int sgn(const Rat& x) { return x > Rat(0) ? 1 : (x < Rat(0) ? -1 : 0); }

Rat dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scaled(const RatVec& a, const Rat& c);
RatVec zero_vec(std::size_t n);
bool is_zero(const RatVec& a);

std::string rat_str(const Rat& x);
std::string vec_key(const RatVec& v);

// Rank of the row span.
int rank_of(RatMat m);

// Solve a square system a*x = b; nullopt when a is singular.
std::optional<RatVec> solve_square(RatMat a, RatVec b);

// Basis of { x in Q^n : rows * x = 0 }.
std::vector<RatVec> null_space(const RatMat& rows, std::size_t n);

}  // namespace bruhatkit
