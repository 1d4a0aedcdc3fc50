#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qlur {

// Invalid user input: malformed files, inconsistent dimensions, broken state
// invariants, out-of-range parameters. CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured lower bound exceeded the corresponding variance sum by more
// than the tolerance: sqrt(v - U) would take a radicand below tol::radicand.
// The provider violated its bound contract at this state. CLI exit code 3.
struct UnsoundBoundError : std::runtime_error {
  std::vector<int> subset;
  double radicand;

  UnsoundBoundError(std::vector<int> subset_sites, double radicand_value,
                    const std::string& context = "")
      : std::runtime_error(message(subset_sites, radicand_value, context)),
        subset(std::move(subset_sites)),
        radicand(radicand_value) {}

 private:
  static std::string message(const std::vector<int>& subset, double radicand,
                             const std::string& context) {
    std::string out = "unsound bound";
    if (!context.empty()) out += " (" + context + ")";
    out += ": subset {";
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(subset[i]);
    }
    out += "} has variance-sum radicand " + std::to_string(radicand) +
           " below tolerance; the configured bound is not a valid lower bound here";
    return out;
  }
};

// Bisection bracket endpoints produced f values of the same sign.
struct NoSignChangeError : std::runtime_error {
  double f_lo;
  double f_hi;

  NoSignChangeError(double f_lo_value, double f_hi_value)
      : std::runtime_error("no sign change over the bracket: f(lo) = " +
                           std::to_string(f_lo_value) + ", f(hi) = " +
                           std::to_string(f_hi_value)),
        f_lo(f_lo_value),
        f_hi(f_hi_value) {}
};

}  // namespace qlur
