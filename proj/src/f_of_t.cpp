#include "tww/generators.hpp"

#include <algorithm>
#include <string>

#include <gmp.h>
#include <mpfr.h>

namespace tww {

namespace {

void set_rational(mpfr_t dst, const Rational& r) {
    mpq_t q;
    mpq_init(q);
    mpq_set_si(q, static_cast<long>(r.numerator()), static_cast<unsigned long>(r.denominator()));
    mpq_canonicalize(q);
    mpfr_set_q(dst, q, MPFR_RNDN);
    mpq_clear(q);
}

// Evaluates sum of coeff * 2^exponent at the precision of dst.
void eval_terms(mpfr_t dst, const std::vector<ExpTerm>& terms) {
    const mpfr_prec_t prec = mpfr_get_prec(dst);
    mpfr_t coeff, expo, pow;
    mpfr_inits2(prec, coeff, expo, pow, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(dst, 1);
    for (const auto& term : terms) {
        set_rational(coeff, term.coeff);
        set_rational(expo, term.exponent);
        mpfr_exp2(pow, expo, MPFR_RNDN);
        mpfr_mul(pow, pow, coeff, MPFR_RNDN);
        mpfr_add(dst, dst, pow, MPFR_RNDN);
    }
    mpfr_clears(coeff, expo, pow, static_cast<mpfr_ptr>(nullptr));
}

} // namespace

DepthFormulaReport f_of_t(int t, const Rational& eps, int precision_bits, long max_f_bits) {
    if (eps <= Rational(0) || eps > Rational(1, 2))
        throw invalid_input("eps must satisfy 0 < eps <= 1/2, got " +
                            std::to_string(eps.numerator()) + "/" + std::to_string(eps.denominator()));
    if (Rational(t) * eps <= Rational(1))
        throw invalid_input("t must exceed 1/eps: t = " + std::to_string(t) + ", eps = " +
                            std::to_string(eps.numerator()) + "/" + std::to_string(eps.denominator()));
    if (precision_bits < 64)
        throw invalid_input("precision must be at least 64 bits");

    DepthFormulaReport report;
    report.precision_bits = precision_bits;
    report.a = Rational(t) * (Rational(1) - eps);
    report.ct_coeff = Rational(1) / eps;

    // E = (1-eps)t (2 + C_t (2^{(1-eps)t} + 1)) expanded into exact
    // coeff * 2^exponent terms, with a = (1-eps)t and C_t = (1/eps) 2^a:
    //   E = 2a + (a/eps) 2^{2a} + (a/eps) 2^a
    const Rational a_over_eps = report.a / eps;
    const Rational two_a = Rational(2) * report.a;
    report.inner_exponent = {{two_a, Rational(0)}, {a_over_eps, two_a}, {a_over_eps, report.a}};

    mpfr_t inner, log2f, tmp;
    mpfr_inits2(precision_bits, inner, log2f, tmp, static_cast<mpfr_ptr>(nullptr));

    eval_terms(inner, report.inner_exponent);
    report.inner_exponent_value = mpfr_get_d(inner, MPFR_RNDN);

    // log2(f - 2) = log2(C_t * 2^E) = a + log2(1/eps) + E
    set_rational(tmp, report.ct_coeff);
    mpfr_log2(log2f, tmp, MPFR_RNDN);
    set_rational(tmp, report.a);
    mpfr_add(log2f, log2f, tmp, MPFR_RNDN);
    mpfr_add(log2f, log2f, inner, MPFR_RNDN);
    report.log2_f_minus_2 = mpfr_get_d(log2f, MPFR_RNDN);

    if (mpfr_cmp_si(log2f, max_f_bits) < 0 && mpfr_sgn(log2f) > 0) {
        // redo the final exponentiation with enough precision that the
        // ceiling of 2 + 2^log2f is exact
        const long bits = mpfr_get_si(log2f, MPFR_RNDU);
        const mpfr_prec_t work = static_cast<mpfr_prec_t>(std::max<long>(precision_bits, bits + 96));
        mpfr_t wide_log, value;
        mpfr_inits2(work, wide_log, value, static_cast<mpfr_ptr>(nullptr));

        eval_terms(value, report.inner_exponent); // reuse as E at full precision
        set_rational(wide_log, report.ct_coeff);
        mpfr_log2(wide_log, wide_log, MPFR_RNDN);
        mpfr_add(value, value, wide_log, MPFR_RNDN);
        set_rational(wide_log, report.a);
        mpfr_add(value, value, wide_log, MPFR_RNDN);

        mpfr_exp2(value, value, MPFR_RNDN);
        mpfr_add_ui(value, value, 2, MPFR_RNDN);
        mpfr_ceil(value, value);

        mpz_t z;
        mpz_init(z);
        mpfr_get_z(z, value, MPFR_RNDN);
        char* str = mpz_get_str(nullptr, 10, z);
        report.f_decimal = str;
        report.f_materialized = true;
        void (*free_fn)(void*, std::size_t);
        mp_get_memory_functions(nullptr, nullptr, &free_fn);
        free_fn(str, report.f_decimal.size() + 1);
        mpz_clear(z);
        mpfr_clears(wide_log, value, static_cast<mpfr_ptr>(nullptr));
    }

    mpfr_clears(inner, log2f, tmp, static_cast<mpfr_ptr>(nullptr));
    mpfr_free_cache();
    return report;
}

} // namespace tww
