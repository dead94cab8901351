#include "effap/measure.hpp"

#include <algorithm>
#include <sstream>

namespace effap {

namespace {

Interval log2_of(const Interval& x) { return x.log2(); }

std::string iv_str(const Interval& v) { return v.str_decimal(10); }

}  // namespace

MeasureOutcome compute_measure(const ApproxTarget& target, unsigned e, const EpsilonSpec& eps,
                               const BigInt& p0, const BigInt& q0, const RunConfig& cfg) {
    if (!target.is_real) throw ParameterViolation("compute_measure requires a real target");
    unsigned d = target.degree();
    if (d < 3) throw ParameterViolation("compute_measure requires degree >= 3");
    if (q0 < 1) throw ParameterViolation("q0 must be >= 1");
    Rat r0(p0, q0);
    r0.canonicalize();

    ApproxTarget t = target;
    // theta refinement must chase the gap magnitude; the derived logarithmic
    // quantities only need a few hundred significant bits
    unsigned wb = std::max(cfg.prec_start, 320u);
    MeasureParams pr = derive_params(d, e, eps, wb);
    for (unsigned bits : PrecisionSchedule(cfg)) {
        t.refine(bits);
        Interval theta = t.theta_interval();
        Interval gap = (theta - Interval(r0, theta.bits())).abs().with_bits(wb);
        if (!gap.certainly_positive()) continue;

        Interval H = t.height.with_bits(wb);
        Interval two(Rat(2), wb);
        Interval log2_q0 = q0 == 1 ? Interval(Rat(0), wb) : log2_of(Interval::exact_int(q0, wb));
        Interval log2_2H = log2_of(two * H);
        Interval log2_c = pr.delta * log2_q0 + pr.beta * log2_2H;
        Interval log2_gap = log2_of(gap);
        Interval log2_Lambda = -log2_c - pr.gamma * log2_gap;

        if (log2_Lambda.certainly_le(Rat(0))) return NotApplicable{log2_Lambda};
        if (!log2_Lambda.certainly_gt(Rat(0))) continue;  // straddles: escalate precision

        Interval ei(Rat(e), wb), ep1(Rat(e + 1), wb), di(Rat(d), wb);
        Interval kappa = ei * (Interval(Rat(1), wb) + log2_c / log2_Lambda);

        Interval a_over_2d = di / (two * pr.epsilon);       // alpha/(2 delta) = d/(2 eps)
        Interval eb_over_d = ei * (pr.beta / pr.delta);      // e*beta/delta
        Interval log2_ct = ei + a_over_2d + Interval(Rat(2), wb) +
                           (a_over_2d + Interval(Rat(1), wb)) * log2_of(ep1) + eb_over_d * log2_of(H);
        Interval log2_C = log2_c + (kappa / ei) * log2_ct + di * (ei - kappa) * log2_gap;
        Interval log2_c4 = log2_ct - ei * di * log2_gap;

        MeasureResult res;
        res.params = pr;
        res.anchor = Anchor{p0, q0, gap, log2_c, log2_Lambda};
        res.kappa = kappa;
        res.log2_C = log2_C;
        res.log2_c_tilde = log2_ct;
        res.log2_c4 = log2_c4;
        return res;
    }
    throw UndecidableAtPrecision("Lambda enclosure straddles 1 at the precision cap");
}

Interval worksheet_f(const Rat& u, unsigned d0, unsigned bits) {
    Interval s2 = Interval::sqrt2(bits);
    Interval c = Interval(Rat(3), bits) - Interval(Rat(2), bits) * s2;
    Interval num = Interval(u - Rat(d0) - 1, bits);
    Interval den = Interval(u, bits) + s2 - Interval(Rat(1), bits);
    return c * num / den;
}

Interval worksheet_kappa_hat(const Rat& d, unsigned d0, unsigned bits) {
    Interval f = worksheet_f(d, d0, bits);
    Interval lam = Interval(Rat(11), bits) * f;
    Interval den = lam - Interval(Rat(1), bits);
    if (!den.certainly_positive()) throw HypothesisViolation("lambda_gt_1", "11 f(d) - 1 must be positive");
    return Interval(Rat(10), bits) * (Interval(Rat(1), bits) + den.inv());
}

Interval epsilon0(const Rat& d, unsigned bits) {
    Interval di(d, bits);
    Interval s = (Interval(Rat(2), bits) * di * (di + Interval(Rat(1), bits))).sqrt();
    return (s - di) / (di + Interval(Rat(2), bits));
}

Worksheet effective_lower_worksheet(const FamilySpec& family, const Rat& eta, const RunConfig& cfg) {
    if (sgn(eta) <= 0) throw HypothesisViolation("eta_positive", "eta must be > 0");
    unsigned d = family.d, d0 = family.d0;
    Rat d_hat = Rat(213, 100) * Rat(d0) + 23;
    if (Rat(d) < d_hat) throw HypothesisViolation("d_ge_d_hat", "d >= 2.13 d0 + 23 required");
    auto hyp = hypothesis_check_theorem(family, cfg);
    if (!hyp.holds)
        throw HypothesisViolation("a_ge_theorem_bound", "|a| >= L(P) max{2,(R+1)^d0} + 2R + 2 required");

    const unsigned e = 10;
    const EpsilonSpec eps = EpsilonSpec::sqrt2_minus_one();

    Worksheet w;
    w.d = d;
    w.d0 = d0;
    w.eta = eta;
    w.d_hat = d_hat;
    w.R = family.R;
    w.R_prime = family.R_prime;

    unsigned bits = std::max(cfg.prec_start, 256u);
    MeasureParams pr = derive_params(d, e, eps, bits);

    w.f_d = worksheet_f(Rat(d), d0, bits);
    w.f_d_hat = worksheet_f(d_hat, d0, bits);
    w.lambda = Interval(Rat(11), bits) * w.f_d;
    w.kappa_hat = worksheet_kappa_hat(Rat(d), d0, bits);
    w.kappa = w.kappa_hat + Interval(eta, bits);
    w.kappa_inf = w.kappa_hat;
    w.epsilon0_d = epsilon0(Rat(d), bits);

    Interval xi = locate_xi(family, std::max(bits, 128u));
    w.abs_xi = xi.abs().with_bits(bits);
    Interval ln_xi = w.abs_xi.ln();
    Interval log2_xi = w.abs_xi.log2();
    Interval Rp1 = family.R.with_bits(bits) + Interval(Rat(1), bits);
    Interval ln2 = Interval::ln2(bits);
    Interval lnLP = Interval(Rat(family.LP), bits).ln();
    Interval log2LP = Interval(Rat(family.LP), bits).log2();
    Interval log2Rp1 = Rp1.log2();

    w.c1_thm = ln2 + Rp1.ln();
    Rat dd01(static_cast<long>(d) - static_cast<long>(d0) - 1);
    w.c2_thm = w.lambda * Interval(Rat(static_cast<long>(d) - 1) / dd01, bits) * ln2 +
               w.lambda * Interval(Rat(1) / dd01, bits) * lnLP;

    // Lambda_0 = 2^(-beta - gamma(d-1)) (R+1)^(-beta) L(P)^(-gamma) |xi|^((beta/d)(lambda-1))
    Interval di(Rat(d), bits);
    w.log2_Lambda0 = -(pr.beta + pr.gamma * Interval(Rat(static_cast<long>(d) - 1), bits)) -
                     pr.beta * log2Rp1 - pr.gamma * log2LP +
                     (pr.beta / di) * (w.lambda - Interval(Rat(1), bits)) * log2_xi;

    auto push = [&](const std::string& name, const Interval& lhs, const Interval& rhs, bool pass) {
        w.ledger.push_back(LedgerEntry{name, iv_str(lhs), iv_str(rhs), pass});
    };

    // guardsguards: 1/f(d) - 1 <= 1/f(d_hat) - 1 < 10
    {
        Interval lhs = w.f_d.inv() - Interval(Rat(1), bits);
        Interval rhs = w.f_d_hat.inv() - Interval(Rat(1), bits);
        bool mono = Rat(d) >= d_hat && lhs.lo() <= rhs.hi();  // f monotone for u >= d0 + 2
        bool lt10 = rhs.certainly_lt(Rat(10));
        push("guardsguards", lhs, rhs, mono && lt10);
    }
    // menatarms: lambda <= 33 - 22 sqrt2 < 2
    {
        Interval cap = Interval(Rat(33), bits) - Interval(Rat(22), bits) * Interval::sqrt2(bits);
        bool pass = w.lambda.hi() <= cap.hi() && cap.certainly_lt(Rat(2)) && w.lambda.certainly_lt(Rat(2));
        push("menatarms", w.lambda, cap, pass);
    }
    // feetofclay: d_hat - 10(1 + 1/(11 f(d_hat) - 1)) > 0
    {
        Interval kh = worksheet_kappa_hat(d_hat, d0, bits);
        Interval diff = Interval(d_hat, bits) - kh;
        push("feetofclay", diff, Interval(Rat(0), bits), diff.certainly_positive());
    }
    // jingo: (lambda-1) log2|xi| > d + lambda(d-1)/(d-d0-1) + d log2(R+1) + (lambda/(d-d0-1)) log2 L(P)
    bool jingo_pass = false;
    {
        Interval lhs = (w.lambda - Interval(Rat(1), bits)) * log2_xi;
        Interval rhs = di + w.lambda * Interval(Rat(static_cast<long>(d) - 1) / dd01, bits) +
                       di * log2Rp1 + w.lambda * Interval(Rat(1) / dd01, bits) * log2LP;
        jingo_pass = lhs.certainly_gt(rhs);
        push("jingo", lhs, rhs, jingo_pass);
    }
    // thud: (kappa/10)(d c1 + c2) <= (eta (lambda-1)/10) ln|xi|
    bool thud_pass = false;
    {
        Interval lhs = (w.kappa / Interval(Rat(10), bits)) * (di * w.c1_thm + w.c2_thm);
        Interval rhs = Interval(eta, bits) * (w.lambda - Interval(Rat(1), bits)) /
                       Interval(Rat(10), bits) * ln_xi;
        thud_pass = lhs.certainly_le(rhs);
        push("thud", lhs, rhs, thud_pass);
    }

    if (jingo_pass) {
        Interval denom = -di * w.c1_thm - w.c2_thm + (w.lambda - Interval(Rat(1), bits)) * ln_xi;
        if (denom.certainly_positive())
            w.kappa_a = Interval(Rat(10), bits) *
                        (Interval(Rat(1), bits) + (di * w.c1_thm + ln_xi) / denom);
    }

    // a0 = (2^(2d) (R+1)^d L(P)^2)^(kappa/(eta (11 f(d_hat) - 1))) + 1
    Interval lam_hat = Interval(Rat(11), bits) * w.f_d_hat - Interval(Rat(1), bits);
    Interval expo = w.kappa / (Interval(eta, bits) * lam_hat);
    w.log2_a0 = expo * (Interval(Rat(2) * Rat(d), bits) + di * log2Rp1 +
                        Interval(Rat(2), bits) * log2LP);

    // C = 2^(42(d0+eta+1)d^2) (R+1)^(5(d0+eta+1)d^2) |a|^(14(d0+eta+1)d^2)
    {
        Rat block = (Rat(d0) + eta + 1) * Rat(d) * Rat(d);
        Interval log2a = Interval::exact_int(abs(family.a), bits).log2();
        w.log2_C = Interval(Rat(42) * block, bits) + Interval(Rat(5) * block, bits) * log2Rp1 +
                   Interval(Rat(14) * block, bits) * log2a;
    }

    w.chain_all_pass = true;
    for (const auto& le : w.ledger) w.chain_all_pass = w.chain_all_pass && le.pass;

    // |a| >= a0  <=>  log2(|a| - 1) >= log2(a0 - 1)
    {
        BigInt am1 = abs(family.a) - 1;
        bool above = false, below = false;
        if (am1 <= 0) {
            below = true;
        } else {
            Interval log2am1 = Interval::exact_int(am1, bits).log2();
            above = log2am1.lo() >= w.log2_a0.hi();
            below = log2am1.hi() < w.log2_a0.lo();
        }
        w.below_a0 = below;
        w.kappa_claim_certified = w.chain_all_pass && above;
        push("a_ge_a0", Interval::exact_int(abs(family.a), bits).log2(), w.log2_a0, above);
    }
    return w;
}

CorollaryConstants corollary_constants(CorollaryVariant v, unsigned d, const Rat& eta, const RunConfig& cfg) {
    if (d < 23) throw ParameterViolation("corollary requires d >= 23");
    if (v == CorollaryVariant::Circular && d % 2 == 0)
        throw ParameterViolation("circular variant requires odd d");
    if (sgn(eta) <= 0 || eta > 1) throw ParameterViolation("corollary requires 0 < eta <= 1");
    unsigned bits = std::max(cfg.prec_start, 256u);

    CorollaryConstants c;
    c.variant = v;
    c.d = d;
    c.eta = eta;
    c.kappa_hat = worksheet_kappa_hat(Rat(d), 0, bits);
    c.kappa = c.kappa_hat + Interval(eta, bits);
    c.kappa_hat_below_2294 = c.kappa_hat.certainly_lt(Rat(2294, 100));
    Rat coeff = v == CorollaryVariant::Bombieri ? Rat(13, 5) : Rat(39, 10);
    c.log2_a0 = Interval(coeff, bits) * c.kappa * Interval(Rat(d), bits) / Interval(eta, bits);
    Rat d2 = Rat(d) * Rat(d);
    c.C_exp_two = (v == CorollaryVariant::Bombieri ? Rat(84) : Rat(94)) * d2;
    c.C_exp_a = Rat(28) * d2;
    return c;
}

ConvergentValidation check_measure_on_convergents(const ApproxTarget& target, const Interval& log2_C,
                                                  const Interval& kappa, int depth, unsigned bits,
                                                  const RunConfig& cfg) {
    (void)cfg;
    if (depth < 1) throw ParameterViolation("depth must be >= 1");
    if (!target.is_real) throw ParameterViolation("convergent validation requires a real target");
    if (target.degree() < 2) throw ParameterViolation("target must be irrational");

    ApproxTarget t = target;
    t.refine(bits);
    Interval theta = t.theta_interval().with_bits(std::max(bits, 128u));

    // continued-fraction walk on the enclosure; quotient = floor, certified
    std::vector<BigInt> quotients;
    Interval cur = theta;
    for (int i = 0; i < depth; ++i) {
        BigInt flo, fhi;
        mpz_fdiv_q(flo.get_mpz_t(), cur.lo().get_num().get_mpz_t(), cur.lo().get_den().get_mpz_t());
        mpz_fdiv_q(fhi.get_mpz_t(), cur.hi().get_num().get_mpz_t(), cur.hi().get_den().get_mpz_t());
        if (flo != fhi)
            throw UndecidableAtPrecision("insufficient bits to extract partial quotient " +
                                         std::to_string(i));
        quotients.push_back(flo);
        if (i + 1 < depth) {
            Interval frac = cur - Interval(Rat(flo), cur.bits());
            if (!frac.certainly_positive())
                throw UndecidableAtPrecision("insufficient bits to extract partial quotient " +
                                             std::to_string(i + 1));
            cur = frac.inv();
        }
    }

    ConvergentValidation out;
    BigInt pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;  // p_{-1}=1, p_{-2}=0, q_{-1}=0, q_{-2}=1
    unsigned wb = std::max(bits, 128u);
    bool first = true;
    Rat minlo, minhi;
    for (const BigInt& aq : quotients) {
        BigInt p = aq * pm1 + pm2;
        BigInt q = aq * qm1 + qm2;
        pm2 = pm1;
        pm1 = p;
        qm2 = qm1;
        qm1 = q;
        Rat conv(p, q);
        conv.canonicalize();
        Interval gap = (theta - Interval(conv, wb)).abs();
        if (!gap.certainly_positive())
            throw UndecidableAtPrecision("convergent gap enclosure touches zero");
        Interval log2q = q == 1 ? Interval(Rat(0), wb) : Interval::exact_int(q, wb).log2();
        Interval slack = gap.log2() + log2_C.with_bits(wb) + kappa.with_bits(wb) * log2q;
        out.convergents.push_back(ConvergentRecord{p, q, slack});
        if (first) {
            minlo = slack.lo();
            minhi = slack.hi();
            first = false;
        } else {
            minlo = std::min(minlo, slack.lo());
            minhi = std::min(minhi, slack.hi());
        }
    }
    out.min_slack_log2 = Interval::make_raw(minlo, minhi, wb);
    out.min_slack_ge_1 = out.min_slack_log2.certainly_ge(Rat(0));
    if (abs(minlo) < 4096 && abs(minhi) < 4096) out.min_slack = out.min_slack_log2.exp2();
    return out;
}

std::pair<Interval, Rat> liouville_pair(const ApproxTarget& target, unsigned bits) {
    if (!target.is_real) throw ParameterViolation("Liouville pair requires a real target");
    const IntPoly& F = target.field.min_poly();
    Interval theta = target.theta_interval().with_bits(bits);
    Interval window = Interval::make_raw(theta.lo() - 1, theta.hi() + 1, bits);
    Interval sup = F.derivative().eval(window, bits).abs();
    Rat c = std::max(Rat(1), sup.hi());
    return {Interval(c, bits).log2(), Rat(target.degree())};
}

BigInt materialize_pow2_upper(const Interval& log2_value, std::uint64_t memory_cap_bytes) {
    Rat hi = log2_value.hi();
    BigInt bitsz;
    mpz_cdiv_q(bitsz.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
    if (bitsz < 0) return BigInt(1);
    if (!bitsz.fits_ulong_p() || bitsz.get_ui() / 8 > memory_cap_bytes)
        throw ResourceExhausted("materialization exceeds the memory cap");
    return BigInt(1) << bitsz.get_ui();
}

}  // namespace effap
