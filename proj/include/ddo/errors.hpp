#ifndef DDO_ERRORS_HPP
#define DDO_ERRORS_HPP

#include <stdexcept>

namespace ddo {

// A channel sits exactly on a regime boundary; the classification
// inequalities are strict, so no regime can be assigned.
struct BoundaryUnphysical : std::domain_error {
    using std::domain_error::domain_error;
};

// Requested a bound state in the intermediate-j range, where none exist.
struct NoBoundState : std::domain_error {
    using std::domain_error::domain_error;
};

// Order doubling disagreed beyond tolerance; the integrand is suspected
// not to converge.
struct DivergenceSuspected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ddo

#endif
