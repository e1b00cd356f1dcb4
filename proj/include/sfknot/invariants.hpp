#pragma once

#include "sfknot/algebra.hpp"
#include "sfknot/diagram.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sfknot {

// Symmetric Alexander polynomial normalized so that p(1) = +1.
struct AlexanderPolynomial {
    LaurentPoly poly{1};
    int degree = 0;
    Int coeff(long i) const { return poly.coeff(i); }
    bool operator==(const AlexanderPolynomial& o) const { return poly == o.poly; }
};

// t_i for 0 <= i < degree; t_{-i} = t_i and t_i = 0 for |i| >= degree.
struct TorsionProfile {
    std::vector<Int> values;
    int alexander_degree = 0;
    Int at(long i) const;
    Int total() const;  // sum over all integers i
    bool operator==(const TorsionProfile& o) const = default;
};

enum class Coherence { AllZero, NonNegative, NonPositive, Mixed };
const char* coherence_name(Coherence c);

struct SignCoherence {
    Coherence cls = Coherence::AllZero;
    std::optional<int> positive_witness, negative_witness;
};

enum class GenusSource { ComputedAlternating, UserSupplied, Unknown };
const char* genus_source_name(GenusSource g);

struct KnotInvariants {
    std::string name;
    AlexanderPolynomial alexander;
    int signature = 0;
    TorsionProfile torsion;
    bool alternating = true;
    std::optional<int> genus;
    GenusSource genus_source = GenusSource::Unknown;
    std::string genus_provenance;
};

// Equality of every invariant field except the name.
bool same_invariants(const KnotInvariants& a, const KnotInvariants& b);

// Normalizes any unit multiple +-T^k of an Alexander polynomial.
AlexanderPolynomial normalize_alexander(const LaurentPoly& p);
AlexanderPolynomial alexander(const SeifertData& sd);
int signature(const SeifertData& sd);

TorsionProfile torsion_profile(const AlexanderPolynomial& a);
SignCoherence sign_coherence(const TorsionProfile& t);
long delta(long m, long i);
Int casson_surgery(long q, const TorsionProfile& t);

struct GenusInput {
    int value;
    std::string provenance;
};

// Full pipeline from a diagram. A user genus is recorded for non-alternating
// knots; for alternating ones the genus is deg(Delta) and a differing input is an error.
KnotInvariants assemble(const std::string& name, const PlanarDiagram& d,
                        std::optional<GenusInput> genus = std::nullopt,
                        std::optional<bool> alternating = std::nullopt);

}  // namespace sfknot
