//! Characters and exponential sums over F_q, q = p^e.
//!
//! Everything here is exact: additive characters take values in Z[zeta_p],
//! the quadratic character takes values in {-1, 0, +1}, and the closed forms
//! (Gauss sums, quadratic character sums, the two-term Weil sums) are
//! produced side by side with their brute-force counterparts so callers can
//! compare them.  A disagreement between the two routes is data for the
//! verification layer, never something this module hides.

use crate::cyclotomic::CycInt;
use crate::error::Error;
use crate::field::{FieldCtx, FieldElement};
use crate::linalg::solve_mod_p;
use crate::util::{checked_pow, gcd, modpow};

/// Quadratic character of F_q, tabulated by enumeration index.
///
/// eta(x) is +1 on nonzero squares, -1 on nonsquares and 0 at 0.
#[derive(Debug, Clone)]
pub struct QuadChar {
    values: Vec<i8>,
}

impl QuadChar {
    pub fn new(ctx: &FieldCtx) -> Self {
        let q = ctx.q() as usize;
        let mut values = vec![-1i8; q];
        values[0] = 0;
        for x in ctx.elements() {
            if !ctx.is_zero(&x) {
                let sq = ctx.mul(&x, &x);
                values[ctx.index_of(&sq) as usize] = 1;
            }
        }
        QuadChar { values }
    }

    pub fn eval(&self, ctx: &FieldCtx, x: &FieldElement) -> i64 {
        self.values[ctx.index_of(x) as usize] as i64
    }

    pub fn eval_index(&self, index: u64) -> i64 {
        self.values[index as usize] as i64
    }
}

/// Quadratic character of the prime field F_p via Euler's criterion,
/// accepting any integer argument (reduced mod p first).
pub fn eta_residue(p: u64, v: i128) -> i64 {
    let r = v.rem_euclid(p as i128) as u64;
    if r == 0 {
        return 0;
    }
    if modpow(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Additive character chi_u(v) = zeta_p^Tr(uv).
pub fn additive_char(ctx: &FieldCtx, u: &FieldElement, v: &FieldElement) -> CycInt {
    let t = ctx.trace(&ctx.mul(u, v));
    CycInt::zeta_pow(ctx.p(), t as i64)
}

/// Quadratic Gauss sum of the prime field: sum over v in F_p^* of
/// eta(v) zeta^v.
pub fn gauss_sum_prime(p: u64) -> CycInt {
    let mut acc = CycInt::zero(p);
    for v in 1..p {
        let term = CycInt::zeta_pow(p, v as i64).scale(eta_residue(p, v as i128));
        acc = acc.add(&term);
    }
    acc
}

/// Quadratic Gauss sum of F_q by direct summation:
/// sum over v of eta'(v) zeta^Tr(v).
pub fn gauss_sum_ext(ctx: &FieldCtx, eta: &QuadChar) -> CycInt {
    let mut acc = CycInt::zero(ctx.p());
    for (idx, v) in ctx.elements().enumerate() {
        let sign = eta.eval_index(idx as u64);
        if sign != 0 {
            acc = acc.add(&CycInt::zeta_pow(ctx.p(), ctx.trace(&v) as i64).scale(sign));
        }
    }
    acc
}

/// Closed form of the F_{p^e} quadratic Gauss sum for even e, where it is a
/// rational integer: (-1)^(e-1) (eta(-1) p)^(e/2).
pub fn gauss_sum_ext_closed(p: u64, e: u32) -> i64 {
    debug_assert!(e.is_multiple_of(2));
    let p_star_sign = eta_residue(p, -1);
    let magnitude = checked_pow(p, e / 2).expect("p^(e/2) fits") as i64;
    let sign = if (e / 2).is_multiple_of(2) { 1 } else { p_star_sign };
    // (-1)^(e-1) = -1 since e is even.
    -sign * magnitude
}

/// Both evaluations of sum over x in F_q of zeta^Tr(a2 x^2 + a1 x + a0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadCharSum {
    pub brute: CycInt,
    pub closed: CycInt,
}

/// Complete-the-square evaluation of a quadratic character sum:
/// zeta^Tr(a0 - a1^2 (4 a2)^(-1)) eta'(a2) G', next to the literal sum.
pub fn quad_poly_char_sum(
    ctx: &FieldCtx,
    eta: &QuadChar,
    a2: &FieldElement,
    a1: &FieldElement,
    a0: &FieldElement,
) -> Result<QuadCharSum, Error> {
    if ctx.is_zero(a2) {
        return Err(Error::ZeroQuadraticCoefficient);
    }
    let p = ctx.p();

    let mut hist = vec![0i64; p as usize];
    for x in ctx.elements() {
        let fx = ctx.add(&ctx.mul(a2, &ctx.mul(&x, &x)), &ctx.add(&ctx.mul(a1, &x), a0));
        hist[ctx.trace(&fx) as usize] += 1;
    }
    let mut brute = CycInt::zero(p);
    for (r, &c) in hist.iter().enumerate() {
        if c != 0 {
            brute = brute.add(&CycInt::zeta_pow(p, r as i64).scale(c));
        }
    }

    let four_a2 = ctx.mul(&ctx.from_residue(4), a2);
    let shift = ctx.sub(a0, &ctx.mul(&ctx.mul(a1, a1), &ctx.inv(&four_a2)?));
    let scalar = eta.eval(ctx, a2) * gauss_sum_ext_closed(p, ctx.e());
    let closed = CycInt::zeta_pow(p, ctx.trace(&shift) as i64).scale(scalar);

    Ok(QuadCharSum { brute, closed })
}

/// Both evaluations of sum over x in F_q of eta'(a2 x^2 + a1 x + a0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadEtaSum {
    pub brute: i64,
    pub closed: i64,
}

/// Character sum of the quadratic character along a quadratic polynomial.
/// The closed form is (q - 1) eta'(a2) for a zero discriminant and
/// -eta'(a2) otherwise.
pub fn quad_poly_eta_sum(
    ctx: &FieldCtx,
    eta: &QuadChar,
    a2: &FieldElement,
    a1: &FieldElement,
    a0: &FieldElement,
) -> Result<QuadEtaSum, Error> {
    if ctx.is_zero(a2) {
        return Err(Error::ZeroQuadraticCoefficient);
    }
    let mut brute = 0i64;
    for x in ctx.elements() {
        let fx = ctx.add(&ctx.mul(a2, &ctx.mul(&x, &x)), &ctx.add(&ctx.mul(a1, &x), a0));
        brute += eta.eval(ctx, &fx);
    }
    let disc = ctx.sub(
        &ctx.mul(a1, a1),
        &ctx.mul(&ctx.from_residue(4), &ctx.mul(a0, a2)),
    );
    let closed = if ctx.is_zero(&disc) {
        (ctx.q() - 1) as i64 * eta.eval(ctx, a2)
    } else {
        -eta.eval(ctx, a2)
    };
    Ok(QuadEtaSum { brute, closed })
}

/// Brute-force Weil sum S(alpha, beta) =
/// sum over x in F_q of zeta^Tr(alpha x^(p^l + 1) + beta x).
pub fn weil_sum(ctx: &FieldCtx, l: u32, alpha: &FieldElement, beta: &FieldElement) -> CycInt {
    let p = ctx.p();
    let mut hist = vec![0i64; p as usize];
    for x in ctx.elements() {
        let power = ctx.mul(&ctx.frobenius_iter(&x, l), &x);
        let arg = (ctx.trace(&ctx.mul(alpha, &power)) + ctx.trace(&ctx.mul(beta, &x))) % p;
        hist[arg as usize] += 1;
    }
    let mut acc = CycInt::zero(p);
    for (r, &c) in hist.iter().enumerate() {
        if c != 0 {
            acc = acc.add(&CycInt::zeta_pow(p, r as i64).scale(c));
        }
    }
    acc
}

/// The F_p-linear map x -> alpha^(p^l) x^(p^(2l)) + alpha x, as an e x e
/// matrix over F_p in the polynomial basis.
#[derive(Debug, Clone)]
pub struct ArtinMap {
    pub l: u32,
    pub alpha: FieldElement,
    /// Row-major e x e matrix acting on coefficient vectors.
    matrix: Vec<Vec<u64>>,
}

impl ArtinMap {
    pub fn new(ctx: &FieldCtx, l: u32, alpha: &FieldElement) -> Self {
        let e = ctx.e() as usize;
        let alpha_pl = ctx.frobenius_iter(alpha, l);
        let mut matrix = vec![vec![0u64; e]; e];
        for j in 0..e {
            let mut coeffs = vec![0u64; e];
            coeffs[j] = 1;
            let basis = ctx.from_coeffs(&coeffs).expect("basis vector fits");
            let image = ctx.add(
                &ctx.mul(&alpha_pl, &ctx.frobenius_iter(&basis, 2 * l)),
                &ctx.mul(alpha, &basis),
            );
            for (i, &c) in image.coeffs().iter().enumerate() {
                matrix[i][j] = c;
            }
        }
        ArtinMap { l, alpha: alpha.clone(), matrix }
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.matrix
    }

    /// Matrix route: multiply the coefficient vector of x by the matrix.
    pub fn apply(&self, ctx: &FieldCtx, x: &FieldElement) -> FieldElement {
        let p = ctx.p();
        let coeffs: Vec<u64> = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x.coeffs())
                    .fold(0u64, |acc, (&m, &c)| (acc + m * c) % p)
            })
            .collect();
        ctx.from_coeffs(&coeffs).expect("dimension preserved")
    }

    /// Field route, used as an independent check on the matrix.
    pub fn apply_in_field(&self, ctx: &FieldCtx, x: &FieldElement) -> FieldElement {
        let alpha_pl = ctx.frobenius_iter(&self.alpha, self.l);
        ctx.add(
            &ctx.mul(&alpha_pl, &ctx.frobenius_iter(x, 2 * self.l)),
            &ctx.mul(&self.alpha, x),
        )
    }

    /// All x with map(x) = rhs, ordered by enumeration index.
    pub fn solve(&self, ctx: &FieldCtx, rhs: &FieldElement) -> Vec<FieldElement> {
        let p = ctx.p();
        let Some(sol) = solve_mod_p(p, &self.matrix, rhs.coeffs()) else {
            return Vec::new();
        };
        let kernel_dim = sol.kernel.len() as u32;
        let total = checked_pow(p, kernel_dim).expect("kernel fits");
        let mut out = Vec::with_capacity(total as usize);
        for combo in 0..total {
            let mut v = sol.particular.clone();
            let mut c = combo;
            for basis in &sol.kernel {
                let w = c % p;
                c /= p;
                if w != 0 {
                    for (vi, &bi) in v.iter_mut().zip(basis) {
                        *vi = (*vi + w * bi) % p;
                    }
                }
            }
            out.push(ctx.from_coeffs(&v).expect("dimension preserved"));
        }
        out.sort_by_key(|x| ctx.index_of(x));
        out
    }
}

/// Solutions of alpha^(p^l) X^(p^(2l)) + alpha X = -beta^(p^l), ordered by
/// enumeration index.  The solution count is always 0, 1 or p^(2 gcd(l, e)).
pub fn solve_artin(
    ctx: &FieldCtx,
    l: u32,
    alpha: &FieldElement,
    beta: &FieldElement,
) -> Result<Vec<FieldElement>, Error> {
    if ctx.is_zero(alpha) {
        return Err(Error::ZeroAlpha);
    }
    let rhs = ctx.neg(&ctx.frobenius_iter(beta, l));
    Ok(ArtinMap::new(ctx, l, alpha).solve(ctx, &rhs))
}

/// How the closed-form Weil sum case split resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Solvability {
    /// The linearized equation is a bijection; exactly one solution.
    Unique,
    /// Degenerate case with a p^(2s)-element solution set.
    Kernel { solutions: u64 },
    /// No solution; the sum vanishes.
    Unsolvable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeilClosedForm {
    pub value: CycInt,
    pub solvability: Solvability,
}

/// Closed form of S(alpha, beta) for alpha != 0 when e/s is even, s = gcd(l, e):
///
/// * alpha^((q-1)/(p^s+1)) != (-1)^(m/s): the linearized equation has a
///   unique solution x0 and S = (-1)^(m/s) p^m zeta^Tr(-alpha x0^(p^l+1));
/// * otherwise S = 0 when the equation is unsolvable, and
///   S = (-1)^(m/s+1) p^(m+s) zeta^Tr(-alpha x0^(p^l+1)) when it is solvable.
pub fn weil_sum_closed(
    ctx: &FieldCtx,
    l: u32,
    alpha: &FieldElement,
    beta: &FieldElement,
) -> Result<WeilClosedForm, Error> {
    if ctx.is_zero(alpha) {
        return Err(Error::ZeroAlpha);
    }
    let (p, e, q) = (ctx.p(), ctx.e(), ctx.q());
    let s = gcd(l as u64, e as u64) as u32;
    if !(e / s).is_multiple_of(2) {
        return Err(Error::OddEOverS { e, s });
    }
    let m = e / 2;
    let ms_odd = (m / s) % 2 == 1;

    let ps = checked_pow(p, s).ok_or(Error::Overflow("p^s does not fit in u64"))?;
    debug_assert_eq!((q - 1) % (ps + 1), 0, "p^s + 1 divides q - 1 when e/s is even");
    let selector = ctx.pow(alpha, (q - 1) / (ps + 1));
    let target = if ms_odd { ctx.neg(&ctx.one()) } else { ctx.one() };

    let sols = solve_artin(ctx, l, alpha, beta)?;
    let phase = |x0: &FieldElement| -> i64 {
        let power = ctx.mul(&ctx.frobenius_iter(x0, l), x0);
        ctx.trace(&ctx.neg(&ctx.mul(alpha, &power))) as i64
    };

    if selector != target {
        debug_assert_eq!(sols.len(), 1, "bijective case has exactly one solution");
        let magnitude = checked_pow(p, m).expect("p^m fits") as i64;
        let scalar = if ms_odd { -magnitude } else { magnitude };
        let value = CycInt::zeta_pow(p, phase(&sols[0])).scale(scalar);
        return Ok(WeilClosedForm { value, solvability: Solvability::Unique });
    }
    if sols.is_empty() {
        return Ok(WeilClosedForm {
            value: CycInt::zero(p),
            solvability: Solvability::Unsolvable,
        });
    }
    let magnitude = checked_pow(p, m + s).expect("p^(m+s) fits") as i64;
    let scalar = if ms_odd { magnitude } else { -magnitude };
    let value = CycInt::zeta_pow(p, phase(&sols[0])).scale(scalar);
    Ok(WeilClosedForm {
        value,
        solvability: Solvability::Kernel { solutions: sols.len() as u64 },
    })
}

/// Number of beta for which X^(p^(2l)) + X = -beta^(p^l) is solvable, by
/// exhausting the image of the linearized map.  Only defined in the m/s even
/// case, where it must come out to p^(e - 2s).
pub fn solvable_beta_count(ctx: &FieldCtx, l: u32) -> Result<u64, Error> {
    let e = ctx.e();
    let s = gcd(l as u64, e as u64) as u32;
    if !(e / s).is_multiple_of(2) {
        return Err(Error::OddEOverS { e, s });
    }
    if ((e / 2) / s) % 2 == 1 {
        return Err(Error::MsParityOdd);
    }
    let map = ArtinMap::new(ctx, l, &ctx.one());
    let mut in_image = vec![false; ctx.q() as usize];
    for x in ctx.elements() {
        in_image[ctx.index_of(&map.apply(ctx, &x)) as usize] = true;
    }
    let count = ctx
        .elements()
        .filter(|beta| {
            let rhs = ctx.neg(&ctx.frobenius_iter(beta, l));
            in_image[ctx.index_of(&rhs) as usize]
        })
        .count();
    Ok(count as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> (FieldCtx, QuadChar) {
        let ctx = FieldCtx::new(3, 2).unwrap();
        let eta = QuadChar::new(&ctx);
        (ctx, eta)
    }

    fn f81() -> (FieldCtx, QuadChar) {
        let ctx = FieldCtx::new(3, 4).unwrap();
        let eta = QuadChar::new(&ctx);
        (ctx, eta)
    }

    #[test]
    fn quadratic_character_table_is_balanced_and_multiplicative() {
        for ctx in [FieldCtx::new(3, 2).unwrap(), FieldCtx::new(5, 2).unwrap()] {
            let eta = QuadChar::new(&ctx);
            let plus = (0..ctx.q()).filter(|&i| eta.eval_index(i) == 1).count() as u64;
            let minus = (0..ctx.q()).filter(|&i| eta.eval_index(i) == -1).count() as u64;
            assert_eq!(plus, (ctx.q() - 1) / 2);
            assert_eq!(minus, (ctx.q() - 1) / 2);
            assert_eq!(eta.eval_index(0), 0);
            // Euler's criterion as the independent definition.
            for x in ctx.elements() {
                let euler = ctx.pow(&x, (ctx.q() - 1) / 2);
                let expected = if ctx.is_zero(&x) {
                    0
                } else if euler == ctx.one() {
                    1
                } else {
                    -1
                };
                assert_eq!(eta.eval(&ctx, &x), expected);
            }
            for x in ctx.elements() {
                for y in ctx.elements() {
                    assert_eq!(
                        eta.eval(&ctx, &ctx.mul(&x, &y)),
                        eta.eval(&ctx, &x) * eta.eval(&ctx, &y)
                    );
                }
            }
            assert_eq!(eta.eval(&ctx, ctx.primitive_element()), -1);
        }
    }

    #[test]
    fn prime_field_eta_reference_values() {
        assert_eq!(eta_residue(3, 0), 0);
        assert_eq!(eta_residue(3, 1), 1);
        assert_eq!(eta_residue(3, 2), -1);
        assert_eq!(eta_residue(3, -1), -1);
        assert_eq!(eta_residue(5, -1), 1);
        assert_eq!(eta_residue(7, -1), -1);
        // Reduction happens before evaluation.
        assert_eq!(eta_residue(5, 14), eta_residue(5, 4));
    }

    #[test]
    fn additive_character_orthogonality() {
        let (ctx, _) = f9();
        let zero = ctx.zero();
        for v in ctx.elements() {
            assert_eq!(additive_char(&ctx, &zero, &v).as_rational_integer(), Some(1));
        }
        for u in ctx.elements() {
            let mut acc = CycInt::zero(3);
            for v in ctx.elements() {
                acc = acc.add(&additive_char(&ctx, &u, &v));
            }
            let expected = if ctx.is_zero(&u) { ctx.q() as i64 } else { 0 };
            assert_eq!(acc, CycInt::from_integer(3, expected));
        }
    }

    #[test]
    fn prime_gauss_sum_and_its_square() {
        // For p = 3: G = zeta - zeta^2 = 1 + 2 zeta.
        assert_eq!(gauss_sum_prime(3).coeffs(), &[1, 2]);
        for p in [3u64, 5, 7] {
            let g = gauss_sum_prime(p);
            let expected = eta_residue(p, -1) * p as i64;
            assert_eq!(g.mul(&g).as_rational_integer(), Some(expected));
        }
    }

    #[test]
    fn extension_gauss_sum_matches_closed_form() {
        for (p, e) in [(3u64, 2u32), (3, 4), (5, 2)] {
            let ctx = FieldCtx::new(p, e).unwrap();
            let eta = QuadChar::new(&ctx);
            let brute = gauss_sum_ext(&ctx, &eta);
            let closed = gauss_sum_ext_closed(p, e);
            assert_eq!(brute.as_rational_integer(), Some(closed), "(p, e) = ({p}, {e})");
        }
        assert_eq!(gauss_sum_ext_closed(3, 2), 3);
    }

    #[test]
    fn quadratic_character_sum_reference_values() {
        let (ctx, eta) = f9();
        let one = ctx.one();
        let zero = ctx.zero();
        let sum = quad_poly_char_sum(&ctx, &eta, &one, &zero, &zero).unwrap();
        assert_eq!(sum.brute.as_rational_integer(), Some(3));
        assert_eq!(sum.brute, sum.closed);

        let h = ctx.primitive_element().clone();
        let sum = quad_poly_char_sum(&ctx, &eta, &h, &zero, &zero).unwrap();
        assert_eq!(sum.brute.as_rational_integer(), Some(-3));

        assert_eq!(
            quad_poly_char_sum(&ctx, &eta, &zero, &one, &zero).unwrap_err(),
            Error::ZeroQuadraticCoefficient
        );
    }

    #[test]
    fn quadratic_sums_agree_exhaustively_on_f9() {
        let (ctx, eta) = f9();
        let elems: Vec<_> = ctx.elements().collect();
        for a2 in &elems {
            if ctx.is_zero(a2) {
                continue;
            }
            for a1 in &elems {
                for a0 in &elems {
                    let cs = quad_poly_char_sum(&ctx, &eta, a2, a1, a0).unwrap();
                    assert_eq!(cs.brute, cs.closed, "char sum at ({a2}, {a1}, {a0})");
                    let es = quad_poly_eta_sum(&ctx, &eta, a2, a1, a0).unwrap();
                    assert_eq!(es.brute, es.closed, "eta sum at ({a2}, {a1}, {a0})");
                }
            }
        }
    }

    #[test]
    fn eta_sum_reference_values() {
        let (ctx, eta) = f9();
        let one = ctx.one();
        let zero = ctx.zero();
        let h = ctx.primitive_element().clone();
        // f = x^2: zero discriminant, (q - 1) eta'(1) = 8.
        let s = quad_poly_eta_sum(&ctx, &eta, &one, &zero, &zero).unwrap();
        assert_eq!(s.brute, 8);
        // f = x^2 + 1: discriminant -4 != 0, so -eta'(1) = -1.
        let s = quad_poly_eta_sum(&ctx, &eta, &one, &zero, &one).unwrap();
        assert_eq!(s.brute, -1);
        // f = h x^2: zero discriminant again, (q - 1) eta'(h) = -8.
        let s = quad_poly_eta_sum(&ctx, &eta, &h, &zero, &zero).unwrap();
        assert_eq!(s.brute, -8);
        // f = h x^2 + 1: nonzero discriminant, -eta'(h) = +1.
        let s = quad_poly_eta_sum(&ctx, &eta, &h, &zero, &one).unwrap();
        assert_eq!(s.brute, 1);
    }

    #[test]
    fn weil_sum_degenerate_alpha() {
        let (ctx, _) = f9();
        let zero = ctx.zero();
        assert_eq!(
            weil_sum(&ctx, 1, &zero, &zero).as_rational_integer(),
            Some(ctx.q() as i64)
        );
        for beta in ctx.elements() {
            if ctx.is_zero(&beta) {
                continue;
            }
            assert!(weil_sum(&ctx, 1, &zero, &beta).is_zero());
        }
    }

    #[test]
    fn weil_sum_reference_values() {
        let (ctx, _) = f9();
        let one = ctx.one();
        let zero = ctx.zero();
        assert_eq!(weil_sum(&ctx, 1, &one, &zero).as_rational_integer(), Some(-3));

        let (ctx81, _) = f81();
        assert_eq!(
            weil_sum(&ctx81, 1, &ctx81.one(), &ctx81.zero()).as_rational_integer(),
            Some(-27)
        );
    }

    #[test]
    fn artin_map_matrix_matches_field_evaluation() {
        for (ctx, l) in [(FieldCtx::new(3, 2).unwrap(), 1u32), (FieldCtx::new(3, 4).unwrap(), 2)] {
            let alpha = ctx.primitive_element().clone();
            let map = ArtinMap::new(&ctx, l, &alpha);
            for x in ctx.elements() {
                assert_eq!(map.apply(&ctx, &x), map.apply_in_field(&ctx, &x));
            }
        }
    }

    #[test]
    fn artin_solutions_on_f9_are_unique() {
        let (ctx, _) = f9();
        let one = ctx.one();
        for beta in ctx.elements() {
            let sols = solve_artin(&ctx, 1, &one, &beta).unwrap();
            assert_eq!(sols.len(), 1);
            let map = ArtinMap::new(&ctx, 1, &one);
            let rhs = ctx.neg(&ctx.frobenius_iter(&beta, 1));
            assert_eq!(map.apply(&ctx, &sols[0]), rhs);
        }
        assert_eq!(
            solve_artin(&ctx, 1, &ctx.zero(), &one).unwrap_err(),
            Error::ZeroAlpha
        );
    }

    #[test]
    fn artin_solution_counts_are_0_1_or_p_to_2s() {
        let (ctx, _) = f81();
        for l in [1u32, 2, 3] {
            let s = gcd(l as u64, 4) as u32;
            let kernel_size = checked_pow(3, 2 * s).unwrap();
            for alpha in ctx.elements() {
                if ctx.is_zero(&alpha) {
                    continue;
                }
                let homogeneous = solve_artin(&ctx, l, &alpha, &ctx.zero()).unwrap();
                assert!(homogeneous.len() == 1 || homogeneous.len() as u64 == kernel_size);
                // Kernel is nontrivial exactly when the selector hits (-1)^(m/s).
                let ps = checked_pow(3, s).unwrap();
                let selector = ctx.pow(&alpha, (ctx.q() - 1) / (ps + 1));
                let ms_odd = ((ctx.e() / 2) / s) % 2 == 1;
                let target = if ms_odd { ctx.neg(&ctx.one()) } else { ctx.one() };
                assert_eq!(selector == target, homogeneous.len() as u64 == kernel_size);
            }
        }
    }

    #[test]
    fn homogeneous_kernel_in_the_even_case() {
        let (ctx, _) = f81();
        // l = 1: s = 1, m/s = 2 even, alpha = 1 selects the degenerate case.
        let sols = solve_artin(&ctx, 1, &ctx.one(), &ctx.zero()).unwrap();
        assert_eq!(sols.len(), 9);
        // Solutions really solve X^9 + X... i.e. X^(p^2l) + X = 0.
        for x in &sols {
            let lhs = ctx.add(&ctx.frobenius_iter(x, 2), x);
            assert!(ctx.is_zero(&lhs));
        }
    }

    #[test]
    fn closed_weil_sum_reference_values() {
        let (ctx, _) = f9();
        let one = ctx.one();
        let zero = ctx.zero();
        let closed = weil_sum_closed(&ctx, 1, &one, &zero).unwrap();
        assert_eq!(closed.value.as_rational_integer(), Some(-3));
        assert_eq!(closed.solvability, Solvability::Unique);

        let (ctx81, _) = f81();
        let closed = weil_sum_closed(&ctx81, 1, &ctx81.one(), &ctx81.zero()).unwrap();
        assert_eq!(closed.value.as_rational_integer(), Some(-27));
        assert_eq!(closed.solvability, Solvability::Kernel { solutions: 9 });

        assert_eq!(
            weil_sum_closed(&ctx, 1, &zero, &one).unwrap_err(),
            Error::ZeroAlpha
        );
        // l = 2 on F_9 leaves e/s = 1 odd.
        assert_eq!(
            weil_sum_closed(&ctx, 2, &one, &zero).unwrap_err(),
            Error::OddEOverS { e: 2, s: 2 }
        );
    }

    #[test]
    fn solvable_beta_count_reference_values() {
        let (ctx, _) = f81();
        assert_eq!(solvable_beta_count(&ctx, 1).unwrap(), 9);
        // l = 2 gives s = 2 and m/s = 1 odd: rejected.
        assert_eq!(solvable_beta_count(&ctx, 2).unwrap_err(), Error::MsParityOdd);

        let (ctx9, _) = f9();
        assert_eq!(solvable_beta_count(&ctx9, 1).unwrap_err(), Error::MsParityOdd);
    }
}
