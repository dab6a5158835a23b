//! The closed-form Weil sum against brute force, exhaustively over every
//! (field, Frobenius exponent) pair small enough to sweep, and the census
//! of how the degenerate case splits.

use tracecode::{weil_sum, weil_sum_closed, FieldCtx, Solvability};

/// l is admissible when e / gcd(l, e) is even.
const SWEPT: [(u64, u32, &[u32]); 3] = [(3, 2, &[1]), (5, 2, &[1]), (3, 4, &[1, 2, 3])];

#[test]
fn closed_form_matches_brute_force_for_every_nonzero_alpha() {
    for (p, e, ls) in SWEPT {
        let ctx = FieldCtx::new(p, e).unwrap();
        for &l in ls {
            for alpha in ctx.elements() {
                if ctx.is_zero(&alpha) {
                    continue;
                }
                for beta in ctx.elements() {
                    let brute = weil_sum(&ctx, l, &alpha, &beta);
                    let closed = weil_sum_closed(&ctx, l, &alpha, &beta).unwrap();
                    assert_eq!(
                        closed.value,
                        brute,
                        "q = {}, l = {l}, alpha = {alpha}, beta = {beta}",
                        ctx.q()
                    );
                }
            }
        }
    }
}

/// In the degenerate selector case the solution count per solvable beta is
/// p^(2s), exactly p^(e - 2s) of the q betas are solvable, and exactly
/// (q - 1) / (p^s + 1) alphas are degenerate at all.
#[test]
fn degenerate_case_census_on_f81() {
    let ctx = FieldCtx::new(3, 4).unwrap();
    let (l, s) = (1u32, 1u32);
    let ps = 3u64.pow(s);
    let mut degenerate_alphas = 0u64;
    for alpha in ctx.elements() {
        if ctx.is_zero(&alpha) {
            continue;
        }
        let mut kernel_betas = 0u64;
        let mut unsolvable_betas = 0u64;
        let mut unique_betas = 0u64;
        for beta in ctx.elements() {
            match weil_sum_closed(&ctx, l, &alpha, &beta).unwrap().solvability {
                Solvability::Unique => unique_betas += 1,
                Solvability::Kernel { solutions } => {
                    assert_eq!(solutions, ps.pow(2));
                    kernel_betas += 1;
                }
                Solvability::Unsolvable => unsolvable_betas += 1,
            }
        }
        if unique_betas == ctx.q() {
            continue;
        }
        // Degenerate alpha: no beta is in the unique regime.
        assert_eq!(unique_betas, 0);
        assert_eq!(kernel_betas, 3u64.pow(4 - 2 * s));
        assert_eq!(unsolvable_betas, ctx.q() - kernel_betas);
        degenerate_alphas += 1;
    }
    assert_eq!(degenerate_alphas, (ctx.q() - 1) / (ps + 1));
}
