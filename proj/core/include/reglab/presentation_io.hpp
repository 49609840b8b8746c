#pragma once

#include <iosfwd>
#include <string>

#include "reglab/asymptotics.hpp"
#include "reglab/graded.hpp"
#include "reglab/homology.hpp"

namespace reglab {

/// Parses "v^2 + 3*w*u - 1/2*v*w" style polynomial text over the ring's
/// named variables. '*' separates factors; '^' takes integer exponents;
/// coefficients are integers or fractions. "0" is the zero polynomial.
Polynomial parse_polynomial(const Ring& ring, const std::string& text);

/// Human-readable structured presentation file (JSON-shaped): ring block,
/// twists, polynomial entries as strings, and the kind (cokernel|kernel).
/// Homogeneity is checked on load.
void save_presentation(const PresentedModule& module, std::ostream& os);
PresentedModule load_presentation(std::istream& is);
PresentedModule load_presentation_file(const std::string& path);
void save_presentation_file(const PresentedModule& module, const std::string& path);

/// JSON serializations of reports (documented shapes).
std::string to_json(const RegularityReport& report);
std::string to_json(const BettiTable& table);
std::string to_json(const LinearFit& fit);

}  // namespace reglab
