#pragma once

// Verification suites behind the `check`, `tensor` and `verify` subcommands.

#include "d43/report.hpp"

#include <cstdint>
#include <string>

namespace d43::cli {

struct RunOptions {
  unsigned jobs = 1;
};

Report tensor_suite(long l, const RunOptions& opt);
/// P1 is run only for l <= p1_max; above that it is reported as skipped.
Report perfect_suite(long l, long p1_max, const RunOptions& opt);
Report rmatrix_suite(bool symbolic_ybe, std::size_t samples, std::uint64_t seed, const RunOptions& opt);
Report appendix_suite(long l_max, const RunOptions& opt);
Report lemmas_suite(long l_max, const RunOptions& opt);
Report coherent_suite(long level, long box, const RunOptions& opt);
Report relations_suite(const RunOptions& opt);
Report decompose_suite(long l, const RunOptions& opt);

/// e_i, f_i, t_i of V^1 as sparse entry lists with canonical rational entries.
std::string representation_json();

}  // namespace d43::cli
