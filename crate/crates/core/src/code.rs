//! Brute-force code construction and classical coding-theory checks.
//!
//! The defining set is a product D = d1 x d2 inside F_q^2, so the symbol
//! counts of a codeword c(a, b) factor: count the trace values of a over d1
//! and of b over d2 separately, then convolve the two profiles mod p.  That
//! turns the q^2-pair enumeration of the complete weight enumerator into
//! q * (|d1| + |d2|) trace evaluations plus a cheap convolution per pair,
//! without changing a single count relative to the literal double loop.

use std::collections::BTreeMap;
use std::ops::Range;

use crate::error::Error;
use crate::field::{FieldCtx, FieldElement};
use crate::params::CodeSpec;
use crate::util::ipow;

/// The defining set D = d1 x d2, each factor in enumeration order.
#[derive(Debug, Clone)]
pub struct DefiningSet {
    /// x with Tr(x^(p^l + 1)) = 1.
    pub d1: Vec<FieldElement>,
    /// x with Tr(x) = 1.
    pub d2: Vec<FieldElement>,
}

impl DefiningSet {
    /// Code length n = |d1| * |d2|.
    pub fn len(&self) -> u64 {
        (self.d1.len() * self.d2.len()) as u64
    }

    pub fn is_empty(&self) -> bool {
        self.d1.is_empty() || self.d2.is_empty()
    }
}

pub fn build_defining_set(ctx: &FieldCtx, l: u32) -> DefiningSet {
    let d1 = ctx
        .elements()
        .filter(|x| {
            let power = ctx.mul(&ctx.frobenius_iter(x, l), x);
            ctx.trace(&power) == 1
        })
        .collect();
    let d2 = ctx.elements().filter(|x| ctx.trace(x) == 1).collect();
    DefiningSet { d1, d2 }
}

/// How often Tr(a x) hits each residue as x runs over `set`.
pub fn trace_profile(ctx: &FieldCtx, a: &FieldElement, set: &[FieldElement]) -> Vec<u64> {
    let mut counts = vec![0u64; ctx.p() as usize];
    for x in set {
        counts[ctx.trace(&ctx.mul(a, x)) as usize] += 1;
    }
    counts
}

/// Symbol counts of one codeword: counts[rho] = number of coordinates equal
/// to rho.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolCountVector {
    counts: Vec<u64>,
}

impl SymbolCountVector {
    pub fn new(counts: Vec<u64>) -> Self {
        SymbolCountVector { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Sum of all counts; equals the code length.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Hamming weight: coordinates that are nonzero.
    pub fn weight(&self) -> u64 {
        self.total() - self.counts[0]
    }
}

pub(crate) fn convolve_profiles(p: u64, pa: &[u64], pb: &[u64]) -> Vec<u64> {
    let mut counts = vec![0u64; p as usize];
    for (c1, &n1) in pa.iter().enumerate() {
        if n1 == 0 {
            continue;
        }
        for (c2, &n2) in pb.iter().enumerate() {
            counts[(c1 + c2) % p as usize] += n1 * n2;
        }
    }
    counts
}

/// Symbol counts of c(a, b) via the product structure of D.
pub fn n_rho(
    ctx: &FieldCtx,
    ds: &DefiningSet,
    a: &FieldElement,
    b: &FieldElement,
) -> SymbolCountVector {
    let pa = trace_profile(ctx, a, &ds.d1);
    let pb = trace_profile(ctx, b, &ds.d2);
    SymbolCountVector::new(convolve_profiles(ctx.p(), &pa, &pb))
}

/// Complete weight enumerator: multiplicity of every symbol-count
/// composition (t_0, ..., t_{p-1}) over all q^2 codeword labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteWeightEnumerator {
    n: u64,
    terms: BTreeMap<Vec<u64>, u64>,
}

impl CompleteWeightEnumerator {
    pub fn new(n: u64, terms: BTreeMap<Vec<u64>, u64>) -> Self {
        debug_assert!(terms.keys().all(|c| c.iter().sum::<u64>() == n));
        CompleteWeightEnumerator { n, terms }
    }

    /// Code length (the sum of every composition).
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u64>, u64> {
        &self.terms
    }

    /// Total multiplicity; equals q^2 for a full enumeration.
    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }
}

/// Runs `work` over `0..total` split into `jobs` contiguous chunks, merging
/// the per-chunk results in chunk order so the outcome is identical for
/// every worker count.
pub(crate) fn run_chunked<R, F>(total: u64, jobs: usize, work: F) -> Vec<R>
where
    R: Send,
    F: Fn(Range<u64>) -> R + Sync,
{
    let jobs = jobs.max(1).min(total.max(1) as usize);
    if jobs == 1 {
        return vec![work(0..total)];
    }
    let chunk = total.div_ceil(jobs as u64);
    let work = &work;
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs as u64)
            .map(|i| {
                let range = (i * chunk).min(total)..((i + 1) * chunk).min(total);
                scope.spawn(move || work(range))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

/// Trace profiles of every field element over `set`, indexed by element
/// enumeration index.
pub(crate) fn profiles_for_all(ctx: &FieldCtx, set: &[FieldElement]) -> Vec<Vec<u64>> {
    ctx.elements().map(|a| trace_profile(ctx, &a, set)).collect()
}

/// Complete weight enumerator by enumerating all q^2 codeword labels.
pub fn cwe_bruteforce(ctx: &FieldCtx, l: u32, jobs: usize) -> CompleteWeightEnumerator {
    let ds = build_defining_set(ctx, l);
    let n = ds.len();
    let profiles_a = profiles_for_all(ctx, &ds.d1);
    let profiles_b = profiles_for_all(ctx, &ds.d2);
    let p = ctx.p();

    let partials = run_chunked(ctx.q(), jobs, |range: Range<u64>| {
        let mut local: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
        for a_idx in range {
            let pa = &profiles_a[a_idx as usize];
            for pb in &profiles_b {
                let comp = convolve_profiles(p, pa, pb);
                *local.entry(comp).or_insert(0) += 1;
            }
        }
        local
    });

    let mut terms: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
    for part in partials {
        for (comp, mult) in part {
            *terms.entry(comp).or_insert(0) += mult;
        }
    }
    CompleteWeightEnumerator::new(n, terms)
}

/// Weight distribution A_w, including A_0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    n: u64,
    counts: BTreeMap<u64, u64>,
}

impl WeightDistribution {
    pub fn new(n: u64, counts: BTreeMap<u64, u64>) -> Self {
        WeightDistribution { n, counts }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Weight -> multiplicity, only weights that occur.
    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Number of distinct nonzero weights.
    pub fn nonzero_weight_count(&self) -> usize {
        self.counts.keys().filter(|&&w| w > 0).count()
    }
}

/// Collapses a complete weight enumerator to weight w = n - t_0.
pub fn weight_distribution(cwe: &CompleteWeightEnumerator) -> WeightDistribution {
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for (comp, &mult) in cwe.terms() {
        *counts.entry(cwe.n() - comp[0]).or_insert(0) += mult;
    }
    WeightDistribution::new(cwe.n(), counts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub n: u64,
    pub k: u32,
    pub d: u64,
}

/// Reads off [n, k, d].  The label map (a, b) -> c(a, b) is F_p-linear, so it
/// is injective iff exactly one label lands on the zero codeword; in that
/// case k = 2e.  A repeated zero codeword is reported as an error.
pub fn code_params(wd: &WeightDistribution, p: u64, e: u32) -> Result<CodeParams, Error> {
    let zero_words = wd.counts().get(&0).copied().unwrap_or(0);
    debug_assert_eq!(wd.total() as i128, ipow(p, 2 * e));
    if zero_words != 1 {
        return Err(Error::NotInjective { zero_words });
    }
    let d = *wd
        .counts()
        .keys()
        .find(|&&w| w > 0)
        .ok_or(Error::DegenerateCode)?;
    Ok(CodeParams { n: wd.n(), k: 2 * e, d })
}

/// One power-moment identity: the distribution side against the closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MomentCheck {
    pub lhs: i128,
    pub rhs: i128,
}

impl MomentCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The first three power moments of the weight distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlessReport {
    pub zeroth: MomentCheck,
    pub first: MomentCheck,
    pub second: MomentCheck,
}

impl PlessReport {
    pub fn passed(&self) -> bool {
        self.zeroth.passed() && self.first.passed() && self.second.passed()
    }
}

/// Checks the three power-moment identities these codes satisfy:
///
/// * sum of A_w over w > 0 is p^2e - 1,
/// * sum of w A_w is p^(2e-1) (p - 1) n,
/// * sum of w^2 A_w is p^(2e-2) (p - 1) n ((p - 1) n + 1),
///
/// where n = p^(2e-2) + p^(e+m-2), or p^(2e-2) + p^(e+m+s-2) when m/s is
/// even.
pub fn pless_checks(wd: &WeightDistribution, spec: &CodeSpec) -> PlessReport {
    let p = spec.p;
    let e = spec.e;
    let v = if spec.ms_odd() { spec.e + spec.m } else { spec.e + spec.m + spec.s };
    let n = ipow(p, 2 * e - 2) + ipow(p, v - 2);
    let pn = ipow(p, 2 * e - 1) + ipow(p, v - 1);

    let mut m0 = 0i128;
    let mut m1 = 0i128;
    let mut m2 = 0i128;
    for (&w, &a) in wd.counts() {
        if w == 0 {
            continue;
        }
        let (w, a) = (w as i128, a as i128);
        m0 += a;
        m1 += w * a;
        m2 += w * w * a;
    }

    PlessReport {
        zeroth: MomentCheck { lhs: m0, rhs: ipow(p, 2 * e) - 1 },
        first: MomentCheck { lhs: m1, rhs: ipow(p, 2 * e - 1) * (p as i128 - 1) * n },
        second: MomentCheck {
            lhs: m2,
            rhs: ipow(p, 2 * e - 2) * (p as i128 - 1) * n * (pn - n + 1),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GriesmerClass {
    /// No [n, k, d+1] code can exist, so d is the best possible.
    Optimal,
    /// d+1 might exist but d+2 cannot.
    AlmostOptimal,
    Neither,
}

impl GriesmerClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            GriesmerClass::Optimal => "optimal",
            GriesmerClass::AlmostOptimal => "almost-optimal",
            GriesmerClass::Neither => "neither",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GriesmerReport {
    /// The bound sum for the actual d.
    pub bound: u128,
    pub class: GriesmerClass,
}

fn griesmer_bound(k: u32, d: u64, p: u64) -> u128 {
    let mut sum: u128 = 0;
    let mut pw: u128 = 1;
    for _ in 0..k {
        sum += (d as u128).div_ceil(pw);
        // Terms saturate at 1 once p^i exceeds d; keep pw from overflowing.
        if pw <= d as u128 {
            pw *= p as u128;
        }
    }
    sum
}

/// Certificate-based optimality classification: a parameter set [n, k, d']
/// can only exist when n >= sum of ceil(d'/p^i), so a violation at d+1
/// certifies optimality and a violation at d+2 certifies almost-optimality.
pub fn griesmer_classify(n: u64, k: u32, d: u64, p: u64) -> Result<GriesmerReport, Error> {
    if k == 0 || d == 0 {
        return Err(Error::DegenerateCode);
    }
    let bound = griesmer_bound(k, d, p);
    let class = if griesmer_bound(k, d + 1, p) > n as u128 {
        GriesmerClass::Optimal
    } else if griesmer_bound(k, d + 2, p) > n as u128 {
        GriesmerClass::AlmostOptimal
    } else {
        GriesmerClass::Neither
    };
    Ok(GriesmerReport { bound, class })
}
