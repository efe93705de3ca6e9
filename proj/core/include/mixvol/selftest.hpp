#pragma once

#include <iosfwd>

namespace mixvol {

// Built-in identity suite: Vandermonde cover-count identities, the
// factor-embedding product identity, mixed-volume oracle equivalence, the
// anti-blocking cover-sum identity, and the simplex equality battery.
// Prints one pass/fail line per item to `out` and returns true iff all
// passed. `quick` skips the 6-dimensional cases and shrinks corpora;
// `inject_fault` adds a deliberately perturbed-constant control item that
// must fail (negative control for the harness itself).
bool run_selftest(bool quick, bool inject_fault, std::ostream& out);

}  // namespace mixvol
