#pragma once

// The norm-restriction row in degree 0 and a bounded spectral-sequence rank
// count for the Tate, homotopy-orbit and homotopy-fixed-point variants.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trcalc/integer.hpp"
#include "trcalc/pgroup.hpp"

namespace trcalc {

struct NormRestrictionRow {
  int p = 2;
  int n = 1;
  Integer dim_alpha;
  Integer r;
  PGroup orbit;         // H_0
  PGroup orbit_minus1;  // H_{-1}
  PGroup fixed;         // H^0
  PGroup tate;          // H-hat^0
  Hom norm;             // orbit -> fixed
  Hom restriction;      // fixed -> tate
  Hom boundary;         // tate -> orbit_minus1
};

NormRestrictionRow row(int n, const Integer& dim_alpha, int p);

// ker(restriction) = im(norm) and ker(boundary) = im(restriction).
bool row_is_exact(const NormRestrictionRow& row);

enum class SSVariant { Tate, Orbit, Fixed };

std::string_view to_string(SSVariant v);
std::optional<SSVariant> parse_variant(std::string_view text);

struct SWindow {
  long long s_min = 0;
  long long s_max = 0;
};

struct SSCell {
  long long s = 0;
  long long t = 0;
  int e2 = 0;
  int einf = 0;
};

struct SSResult {
  int rank_e2 = 0;    // classes of the total degree inside the window
  int rank_einf = 0;  // survivors
  std::vector<SSCell> cells;
};

class WindowTooSmall : public std::runtime_error {
 public:
  WindowTooSmall(const std::string& what, SWindow required)
      : std::runtime_error(what), required_(required) {}
  SWindow required() const noexcept { return required_; }

 private:
  SWindow required_;
};

/// Smallest s-window holding every class of the total degree that is not
/// provably killed by the differential; nullopt when no class survives.
std::optional<SWindow> required_window(int n, long long shift, SSVariant variant, long long total_degree);

/// E^2 and E^infinity F_p-ranks in one total degree, restricted to the s-window.
/// Throws WindowTooSmall unless the window contains required_window().
SSResult ss_window(int n, long long shift, SSVariant variant, SWindow window, long long total_degree);

/// Length of the closed-form group the variant computes in that degree,
/// read off row() with the degree folded into |alpha|.  shift must be even.
int closed_form_length(int n, long long shift, SSVariant variant, long long total_degree);

}  // namespace trcalc
