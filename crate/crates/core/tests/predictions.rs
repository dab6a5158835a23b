//! End-to-end agreement between brute force and every closed form, across
//! all parameter sets small enough to exhaust, plus modulus independence.

use tracecode::{code_params, pless_checks, verify, verify_with_ctx, CodeSpec, FieldCtx};

const CHECKED: [(u64, u32, u32); 5] = [(3, 2, 1), (3, 2, 3), (5, 2, 1), (3, 4, 1), (3, 4, 2)];

#[test]
fn closed_forms_agree_with_brute_force_everywhere() {
    for (p, e, l) in CHECKED {
        let spec = CodeSpec::new(p, e, l).unwrap();
        let report = verify(&spec, 2).unwrap();
        assert!(
            report.length_match,
            "({p}, {e}, {l}) length: brute {} vs predicted {}",
            report.brute_n, report.predicted_n
        );
        assert!(
            report.wd_match,
            "({p}, {e}, {l}) weight distribution: brute {:?} vs predicted {:?}",
            report.brute_wd.counts(),
            report.predicted_wd.as_ref().map(|wd| wd.counts())
        );
        assert!(report.cwe_match, "({p}, {e}, {l}) complete weight enumerator disagrees");
        assert_eq!(
            report.per_codeword_mismatch_count, 0,
            "({p}, {e}, {l}) witnesses: {:?}",
            report.per_codeword_witnesses
        );
        assert!(report.findings.is_empty(), "({p}, {e}, {l}): {:?}", report.findings);
        assert!(report.all_match());
    }
}

#[test]
fn brute_force_parameters_and_moments() {
    let expected_d = [(3u64, 2u32, 1u32, 6u64), (3, 2, 3, 6), (5, 2, 1, 20), (3, 4, 1, 486), (3, 4, 2, 486)];
    for (p, e, l, d) in expected_d {
        let spec = CodeSpec::new(p, e, l).unwrap();
        let report = verify(&spec, 1).unwrap();
        let params = code_params(&report.brute_wd, p, e).unwrap();
        assert_eq!(params.n, report.brute_n, "({p}, {e}, {l})");
        assert_eq!(params.k, 2 * e, "({p}, {e}, {l})");
        assert_eq!(params.d, d, "({p}, {e}, {l})");
        let moments = pless_checks(&report.brute_wd, &spec);
        assert!(moments.passed(), "({p}, {e}, {l}): {moments:?}");
    }
}

/// All predictions are statements about the abstract field, so brute force
/// over any irreducible modulus must give the same enumerator.
#[test]
fn enumerator_does_not_depend_on_the_modulus() {
    for (p, e, l) in [(3u64, 2u32, 1u32), (3, 4, 2)] {
        let spec = CodeSpec::new(p, e, l).unwrap();
        let canonical = verify(&spec, 1).unwrap();

        // Scan monic degree-e candidates until two distinct moduli pass
        // validation; with_modulus rejects the reducible ones for us.
        let mut seen = 0;
        for k in 0..spec.q {
            let mut coeffs: Vec<u64> = Vec::with_capacity(e as usize + 1);
            let mut rest = k;
            for _ in 0..e {
                coeffs.push(rest % p);
                rest /= p;
            }
            coeffs.push(1);
            let Ok(ctx) = FieldCtx::with_modulus(p, e, &coeffs) else {
                continue;
            };
            let report = verify_with_ctx(&ctx, &spec, 1).unwrap();
            assert!(report.all_match(), "({p}, {e}, {l}) modulus {coeffs:?}");
            assert_eq!(
                report.brute_cwe,
                canonical.brute_cwe,
                "({p}, {e}, {l}) modulus {coeffs:?} changed the enumerator"
            );
            seen += 1;
            if seen == 2 {
                break;
            }
        }
        assert_eq!(seen, 2, "({p}, {e}, {l}): fewer than two irreducible moduli found");
    }
}
