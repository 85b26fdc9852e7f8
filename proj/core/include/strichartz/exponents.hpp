#pragma once

// Exact exponent-space calculus for space-time estimates of the Schrodinger
// propagator. Everything here works in reciprocal coordinates: an exponent
// x in [1, inf] is stored as 1/x in [0, 1], so inf is the ordinary value 0
// and the admissible-range geometry is affine. All arithmetic is exact
// rational; endpoint open/closed distinctions are meaningful.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strichartz/rational.hpp"

namespace strichartz {

// Reciprocals (1/r, 1/rt, 1/q, 1/qt) of the four Lebesgue exponents in the
// estimate  || I(F) ||_{L^q_t L^r_x}  <=  C || F ||_{L^{qt'}_t L^{rt'}_x},
// plus the spatial dimension n. "rt"/"qt" are the tilde exponents on the
// data side; primes denote Hoelder conjugates.
struct ExponentTuple {
    Rational inv_r;
    Rational inv_rt;
    Rational inv_q;
    Rational inv_qt;
    int n = 3;

    Rational inv_r_prime() const { return one_minus(inv_r); }
    Rational inv_rt_prime() const { return one_minus(inv_rt); }
    Rational inv_q_prime() const { return one_minus(inv_q); }
    Rational inv_qt_prime() const { return one_minus(inv_qt); }

    bool operator==(const ExponentTuple&) const = default;
};

// Validates 0 <= 1/x <= 1 for all four reciprocals and n >= 1.
ExponentTuple make_tuple(Rational inv_r, Rational inv_rt, Rational inv_q,
                         Rational inv_qt, int n);

// Swaps the solution and data sides: (1/r,1/q) <-> (1/rt,1/qt). The estimate
// is symmetric under this exchange up to relabeling the corner points.
ExponentTuple duality_swap(const ExponentTuple& t);

// ---------------------------------------------------------------------------
// Region geometry in the (1/r, 1/rt) square
// ---------------------------------------------------------------------------

enum class VertexLabel { O, A, B, Bp, C, Cp, P, Pp };

std::string_view vertex_name(VertexLabel label);

struct RegionVertex {
    VertexLabel label;
    Rational x;  // 1/r
    Rational y;  // 1/rt
};

// Corner point P = ((n-2)/(2(n-1)), (n-2)^2/(2n(n-1))); P' is its mirror
// across the diagonal. P lies on the segment OB, which has slope (n-2)/n.
Rational corner_p_x(int n);
Rational corner_p_y(int n);

// The eight labeled vertices O, A, B, B', C, C', P, P'. Requires n >= 3
// (the pentagon degenerates below that).
std::vector<RegionVertex> region_vertices(int n);

// Closed pentagon with vertices A B B' P P' (the candidate range of
// (1/r, 1/rt) for which the estimate can hold for some q, qt).
bool in_admissible_pentagon(const Rational& inv_r, const Rational& inv_rt,
                            int n);

// ---------------------------------------------------------------------------
// Scaling and admissibility
// ---------------------------------------------------------------------------

// 1/q + 1/qt + (n/2)(1/r + 1/rt) - n/2. Zero iff the parabolic scaling
// condition holds; it is also (with opposite sign) the exponent picked up by
// dyadic frequency rescaling of the localized estimate, so a nonzero gap
// rules the estimate out by dilation.
Rational scaling_gap(const ExponentTuple& t);

// Homogeneous admissibility of a single pair: r, q >= 2,
// n/r + 2/q = n/2, excluding (n, r, q) = (2, inf, 2).
bool homogeneous_admissible(const Rational& inv_r, const Rational& inv_q,
                            int n);

// ---------------------------------------------------------------------------
// Dyadic bilinear decay: regimes and exponent
// ---------------------------------------------------------------------------

// Four closed (1/r, 1/rt) regimes for the decay rate of the dyadic bilinear
// form B_j. They overlap on their boundaries; the lowest-numbered applicable
// regime wins, which is harmless because the exponent formula is continuous
// across the i/ii and iii/iv boundaries and identical on ii/iii.
enum class DecayRegime { I = 1, II = 2, III = 3, IV = 4 };

// Requires inv_r, inv_rt <= 1/2.
DecayRegime decay_regime(const Rational& inv_r, const Rational& inv_rt, int n);

struct DecayExponent {
    Rational beta;        // |B_j| <~ 2^{j beta} for admissible (q, qt)
    DecayRegime regime;
    bool window_ok;       // the regime's (q, qt) side conditions hold
    std::string violated; // first failing side condition when !window_ok
};

//   regime i:       beta = 1/q + 1/qt + (n-1)/rt - n/2
//   regimes ii,iii: beta = 1/q + 1/qt - (n/2)(1 - 1/r - 1/rt)
//   regime iv:      beta = 1/q + 1/qt + (n-1)/r  - n/2
// In regimes ii/iii beta coincides with scaling_gap, so it vanishes exactly
// on scaling-critical tuples.
DecayExponent decay_exponent(const ExponentTuple& t);

// ---------------------------------------------------------------------------
// Necessary conditions
// ---------------------------------------------------------------------------

struct ConditionCheck {
    std::string name;  // e.g. "(n-2)/r - 2/qt <= n/rt"
    Rational slack;    // right side minus left side; negative = violated
    bool satisfied;    // slack >= 0
};

// The four necessary inequalities, in order:
//   1: (n-2)/r  - 2/q  <= n/rt
//   2: (n-2)/rt - 2/qt <= n/r
//   3: (n-2)/rt - 2/q  <= n/r    (concentration family, dual orientation)
//   4: (n-2)/r  - 2/qt <= n/rt   (concentration family)
// Under duality_swap the four slacks permute as (1<->2, 3<->4).
using NecessaryReport = std::array<ConditionCheck, 4>;

NecessaryReport necessary_conditions(const ExponentTuple& t);

// ---------------------------------------------------------------------------
// Corner-point windows and classification
// ---------------------------------------------------------------------------

// True iff (1/r,1/rt) sits exactly on P or P' and 1/q = 1/qt' lies in the
// corner's q-window:
//   at P :  (n-2)/(2(n-1)) <= 1/q < n/(2(n-1))   (closed left, open right)
//   at P':  (n-2)/(2(n-1)) <  1/q <= n/(2(n-1))  (open left, closed right)
// The asymmetry mirrors the duality swap: P's window maps onto P''s.
bool corner_window_valid(const ExponentTuple& t);

enum class Verdict { Valid, Invalid, Unknown };

std::string_view verdict_name(Verdict v);

struct Classification {
    Verdict verdict = Verdict::Unknown;
    std::string source;  // which rule decided, e.g. "corner P"
    Rational slack;      // signed margin of the binding inequality
};

// Decision order:
//   scaling_gap != 0                 -> Invalid ("scaling condition")
//   some necessary condition < 0     -> Invalid (most violated one)
//   corner_window_valid              -> Valid   ("corner P" / "corner P'")
//   closed pentagon, all slacks > 0  -> Valid   (advisory: the full
//                                       sufficient (q, qt) range on the
//                                       pentagon interior is not encoded)
//   otherwise                        -> Unknown
Classification classify(const ExponentTuple& t);

// ---------------------------------------------------------------------------
// Concentration-family slope predictions (exact)
// ---------------------------------------------------------------------------

// For the indicator data family F_eps = chi_{0<s<eps^2, |y|<eps}, the
// restricted solution norm and the data norm obey power laws in eps with
// these exponents. Their difference turning negative is exactly how
// necessary condition 4 is forced.
Rational concentration_lhs_slope(const ExponentTuple& t);  // n+2+(2-n)/r
Rational concentration_rhs_slope(const ExponentTuple& t);  // 2/qt' + n/rt'

// ---------------------------------------------------------------------------
// Text forms
// ---------------------------------------------------------------------------

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error(message), position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// Accepts "n=3 r=4 rt=12 q=4 qt=4/3" (direct form, "inf" allowed) and
// "n=3 1/r=1/4 1/rt=1/12 1/q=1/4 1/qt=3/4" (reciprocal form); the two key
// styles may be mixed. Every exponent key must appear exactly once.
// Throws ParseError with the byte offset of the offending token.
ExponentTuple parse_tuple(std::string_view text);

std::string format_tuple_reciprocal(const ExponentTuple& t);
std::string format_tuple_direct(const ExponentTuple& t);

// "verdict,source,slack" with the slack as an exact "p/q" string.
std::string classification_csv_row(const Classification& c);

}  // namespace strichartz
