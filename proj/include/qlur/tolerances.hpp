#pragma once

// Central numeric tolerances. Every comparison against physical invariants in
// the library goes through these constants so the whole stack stays consistent.
namespace qlur::tol {

inline constexpr double hermiticity = 1e-10;   // max |a_ij - conj(a_ji)| for operators/states
inline constexpr double trace_dev = 1e-10;     // |tr(rho) - 1|
inline constexpr double psd_eigen = -1e-9;     // smallest admissible eigenvalue of a state
inline constexpr double verdict = -1e-9;       // f < verdict  =>  Detected
inline constexpr double radicand = -1e-9;      // radicands in [radicand, 0) clamp to 0;
                                               // below radicand the bound is unsound
inline constexpr double bisection = 1e-6;      // threshold bracket width |hi - lo|
inline constexpr double imag_residue = 1e-9;   // max |Im| of a real-valued expectation

}  // namespace qlur::tol
