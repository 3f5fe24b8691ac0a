#ifndef CYCHOM_ERRORS_HPP
#define CYCHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cychom {

/*
 * Failures come in two families and command line tools map them to exit
 * codes.  input_error (exit 1) means the request itself was unusable: a
 * malformed file, an index outside the computed range, a work budget that
 * would be blown.  verdict_error (exit 2) means the computation ran fine
 * but a mathematical check that was asked for came out false; the message
 * carries the offending dimensions so the failure is reproducible.
 */
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct verdict_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : input_error { using input_error::input_error; };
struct unknown_name : input_error { using input_error::input_error; };
struct out_of_range : input_error { using input_error::input_error; };
struct budget_exceeded : input_error { using input_error::input_error; };
struct not_artinian : input_error { using input_error::input_error; };
struct field_mismatch : input_error { using input_error::input_error; };

// Preconditions of the homological kernels: a pair of maps that is supposed
// to compose to zero does not, or a claimed subspace is not contained.
struct composition_nonzero : input_error { using input_error::input_error; };
struct not_contained : input_error { using input_error::input_error; };

struct oracle_mismatch : verdict_error { using verdict_error::verdict_error; };
struct spectrum_mismatch : verdict_error { using verdict_error::verdict_error; };
struct exactness_failure : verdict_error { using verdict_error::verdict_error; };
struct splitting_failure : verdict_error { using verdict_error::verdict_error; };

} // namespace cychom

#endif
