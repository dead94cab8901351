#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "effap/families.hpp"
#include "effap/params.hpp"

namespace effap {

struct LedgerEntry {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

// p0/q0 anchor of the main theorem; usable when Lambda > 1 (certified).
struct Anchor {
    BigInt p0;
    BigInt q0{1};
    Interval gap;          // |theta - p0/q0|
    Interval log2_c;       // c = q0^delta (2H)^beta
    Interval log2_Lambda;  // Lambda = c^-1 gap^-gamma
};

// kappa and C with the conservative reporting direction: upper endpoints.
// C and c-tilde live in exponent form (base-2 logarithm, exact rational
// interval endpoints); materialize on demand.
struct MeasureResult {
    MeasureParams params;
    Anchor anchor;
    Interval kappa;
    Interval log2_C;
    Interval log2_c_tilde;
    Interval log2_c4;  // c~ * gap^(-e d); diagnostic only

    Rat kappa_upper() const { return kappa.hi(); }
    Rat log2_C_upper() const { return log2_C.hi(); }
};

struct NotApplicable {
    Interval log2_Lambda;  // certified <= 0
};

using MeasureOutcome = std::variant<MeasureResult, NotApplicable>;

MeasureOutcome compute_measure(const ApproxTarget& target, unsigned e, const EpsilonSpec& eps,
                               const BigInt& p0, const BigInt& q0, const RunConfig& cfg = RunConfig());

// f(u) = (3 - 2 sqrt 2)(u - d0 - 1)/(u + sqrt 2 - 1)
Interval worksheet_f(const Rat& u, unsigned d0, unsigned bits);
// kappa_hat = 10 (1 + 1/(11 f(d) - 1))
Interval worksheet_kappa_hat(const Rat& d, unsigned d0, unsigned bits);
// epsilon_0(d) = (sqrt(2d(d+1)) - d)/(d + 2)
Interval epsilon0(const Rat& d, unsigned bits);

// Full constants ledger for the parametric-family theorem at e = 10,
// eps = sqrt(2) - 1.
struct Worksheet {
    unsigned d = 0, d0 = 0;
    Rat eta;
    Rat d_hat;  // 2.13 d0 + 23, exact
    Interval f_d;
    Interval f_d_hat;
    Interval lambda;      // 11 f(d)
    Interval kappa_hat;   // 10 (1 + 1/(11 f(d) - 1))
    Interval kappa;       // kappa_hat + eta
    Interval kappa_inf;   // 10 (1 + 1/(lambda - 1))
    std::optional<Interval> kappa_a;
    Interval epsilon0_d;
    Interval c1_thm;      // ln 2 + ln(R+1)
    Interval c2_thm;
    Interval R;
    Interval R_prime;
    Interval abs_xi;
    Interval log2_Lambda0;
    Interval log2_a0;     // log2(a0 - 1)
    Interval log2_C;
    std::vector<LedgerEntry> ledger;
    bool chain_all_pass = false;
    bool kappa_claim_certified = false;
    bool below_a0 = false;  // |a| < a0 certified: the kappa claim is not certified there
};

Worksheet effective_lower_worksheet(const FamilySpec& family, const Rat& eta,
                                    const RunConfig& cfg = RunConfig());

enum class CorollaryVariant { Bombieri, Circular };

struct CorollaryConstants {
    CorollaryVariant variant;
    unsigned d = 0;
    Rat eta;
    Interval kappa_hat;
    Interval kappa;     // kappa_hat + eta
    Interval log2_a0;   // log2(a0 - 1) = coeff * kappa * d / eta
    Rat C_exp_two;      // exponent of 2 in C
    Rat C_exp_a;        // exponent of |a| in C
    bool kappa_hat_below_2294 = false;
};

CorollaryConstants corollary_constants(CorollaryVariant v, unsigned d, const Rat& eta,
                                       const RunConfig& cfg = RunConfig());

struct ConvergentRecord {
    BigInt p;
    BigInt q;
    Interval log2_slack;  // log2(|theta - p/q| * C * q^kappa)
};

struct ConvergentValidation {
    std::vector<ConvergentRecord> convergents;
    Interval min_slack_log2;
    std::optional<Interval> min_slack;  // materialized when the exponent is small
    bool min_slack_ge_1 = false;        // certified: min slack >= 1
};

// First `depth` continued-fraction convergents of theta from the certified
// root enclosure; per-convergent slack |theta - p/q| * C * q^kappa in log2.
ConvergentValidation check_measure_on_convergents(const ApproxTarget& target, const Interval& log2_C,
                                                  const Interval& kappa, int depth, unsigned bits,
                                                  const RunConfig& cfg = RunConfig());

// Explicit Liouville pair (log2 C, kappa = d) with
// C = max(1, sup |F'| over [theta-1, theta+1]).
std::pair<Interval, Rat> liouville_pair(const ApproxTarget& target, unsigned bits);

// 2^x (rounded up to the next power of two when x is not integral), guarded
// by the memory cap.
BigInt materialize_pow2_upper(const Interval& log2_value, std::uint64_t memory_cap_bytes);

}  // namespace effap
