#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "schur/automorphism.hpp"
#include "schur/compatibility.hpp"

namespace schur::cli {

// Raised when the two Schurity methods disagree.
class Disagreement : public Error {
 public:
  using Error::Error;
};

void print_group_info(std::ostream& out, const Group& g);
void print_sring_info(std::ostream& out, const SRing& sr);

// Each prints its section and returns the verdict.
bool print_aut_report(std::ostream& out, const CayleyScheme& cs, const AutOptions& opts,
                      bool emit_generators);
bool print_compat_report(std::ostream& out, const CayleyScheme& cs);

// Both methods; throws Disagreement if they differ. The compatibility
// method is skipped when its hypotheses fail.
bool print_schurity_all(std::ostream& out, const CayleyScheme& cs, const AutOptions& opts,
                        bool emit_generators);

// Returns the process exit code: 0 when every expected value is reproduced.
int run_demo_example_1_1(std::ostream& out, const AutOptions& opts);

}  // namespace schur::cli
