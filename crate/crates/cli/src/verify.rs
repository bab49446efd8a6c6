//! Dispatch from a target to the library checks.

use std::fmt;

use num_rational::BigRational;
use permspec_core::algebra::GroupAlgebraElement;
use permspec_core::oracle::{self, LemmaReport};
use permspec_core::perm::permutations;
use permspec_core::spectral::{
    check_annihilation, check_proper_divisors_fail, inversion_witnesses, kernel_dimensions, minimal_polynomial_roots,
    row_sum_eigen_check, separating_point, stated_spectrum, verify_multiplicities, KERNEL_MAX_N,
};
use permspec_core::{Assignment, Family, Polynomial, StatisticKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::{Recorder, Status, VerificationReport};
use crate::target::{Lemma, Target};

type CoreResult<T> = permspec_core::Result<T>;

#[derive(Clone, Debug)]
pub struct Options {
    /// `None` picks the target's default.
    pub n: Option<usize>,
    pub seed: u64,
    pub timing: bool,
    pub allow_slow: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { n: None, seed: permspec_core::spectral::DEFAULT_SEED, timing: true, allow_slow: false }
    }
}

/// Bad target or `n` outside the target's range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn verify(target: Target, opts: &Options) -> Result<VerificationReport, UsageError> {
    let n = opts.n.unwrap_or(target.default_n());
    if !target.accepts(n, opts.allow_slow) {
        let (lo, hi, slow) = target.range();
        let extra = if slow > hi { format!(" ({slow} with --allow-slow)") } else { String::new() };
        return Err(UsageError(format!("{target} accepts {lo} <= n <= {hi}{extra}, got n = {n}")));
    }
    let report = VerificationReport::new(target.id(), n, target.kind(), opts.seed);
    let mut rec = Recorder::new(report, opts.timing);
    match target {
        Target::All => {
            // prop3.3 and prop4.8 are subsumed by theorem1 and theorem2
            for t in Target::concrete() {
                if matches!(t, Target::Prop3_3 | Target::Prop4_8) || !t.accepts(n, opts.allow_slow) {
                    continue;
                }
                run(&mut rec, t, n, opts.seed);
            }
        }
        t => run(&mut rec, t, n, opts.seed),
    }
    Ok(rec.finish())
}

fn run(rec: &mut Recorder, target: Target, n: usize, seed: u64) {
    let started = rec.start();
    let outcome = match target {
        Target::Theorem1 => spectral(rec, StatisticKind::DesX, n, seed, "prop3.3", Some("theorem1")),
        Target::Prop3_3 => spectral(rec, StatisticKind::DesX, n, seed, "prop3.3", None),
        Target::Theorem2 => spectral(rec, StatisticKind::InvX, n, seed, "prop4.8", Some("theorem2")),
        Target::Prop4_8 => spectral(rec, StatisticKind::InvX, n, seed, "prop4.8", None),
        Target::Corollary1 => spectral(rec, StatisticKind::Des, n, seed, "corollary1", Some("corollary1")),
        Target::Corollary2 => spectral(rec, StatisticKind::Maj, n, seed, "corollary2", Some("corollary2")),
        Target::Corollary3 => spectral(rec, StatisticKind::Inv, n, seed, "corollary3", Some("corollary3")),
        Target::Prop2_1 => row_sums(rec, n, seed),
        Target::Lemma(l) => lemma(rec, l, n),
        Target::CrossValidation => cross_validation(rec, n),
        Target::All => unreachable!("expanded by verify"),
    };
    if let Err(e) = outcome {
        rec.push(started, format!("{target}.error"), Status::Fail, None, Some(e.to_string()));
    }
}

fn list(v: &[Polynomial]) -> String {
    v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

/// Short name for an eigenvalue: its text, or the statement's label when
/// the text is long.
fn label(root: &Polynomial, stated: Option<&String>) -> String {
    match stated {
        Some(l) if root.len() > 2 => l.trim_start_matches("V(").strip_suffix(')').unwrap_or(l).to_string(),
        _ => root.to_string(),
    }
}

fn distinct(v: &[BigRational]) -> bool {
    (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i] != v[j]))
}

/// Minimal polynomial checks under `mp`, and when `full` is given the
/// multiplicity, kernel and statement checks under that id.
fn spectral(
    rec: &mut Recorder,
    kind: StatisticKind,
    n: usize,
    seed: u64,
    mp: &str,
    full: Option<&str>,
) -> CoreResult<()> {
    let s = GroupAlgebraElement::from_statistic(kind, n)?;
    let roots = minimal_polynomial_roots(kind, n)?;

    let t = rec.start();
    let ann = check_annihilation(&s, &roots)?;
    rec.pass_if(
        t,
        format!("{mp}.annihilation"),
        ann.annihilates,
        ann.witness.map(|w| w.summary()),
        Some(format!("product of (S - c) over c in {{{}}} is zero", list(&roots))),
    );

    if roots.len() > 1 {
        let t = rec.start();
        let divs = check_proper_divisors_fail(&s, &roots)?;
        let bad = divs.iter().find(|d| !d.nonzero);
        let detail = divs
            .iter()
            .map(|d| match &d.witness {
                Some(w) => format!("without {}: {}", d.omitted, w.summary()),
                None => format!("without {}: zero", d.omitted),
            })
            .collect::<Vec<_>>()
            .join("; ");
        rec.pass_if(
            t,
            format!("{mp}.divisors"),
            bad.is_none(),
            bad.map(|d| format!("dropping the factor for {} still annihilates", d.omitted)),
            Some(detail),
        );
        if kind == StatisticKind::InvX && n >= 4 {
            let t = rec.start();
            for w in inversion_witnesses(n, &divs)? {
                let status = if w.matches() { Status::Pass } else { Status::Flagged };
                let detail =
                    format!("[{}] of {} at identity: computed {}, closed form gives {}", w.monomial, w.product, w.computed, w.stated);
                if status == Status::Flagged {
                    rec.discrepancy(
                        format!("{mp} {} [{}] of {}", w.id, w.monomial, w.product),
                        format!("{} = {}", w.formula, w.stated),
                        w.computed.to_string(),
                    );
                }
                rec.push(t, format!("{mp}.{}", w.id), status, None, Some(detail));
            }
        }
    }

    let Some(id) = full else { return Ok(()) };
    let stated = stated_spectrum(kind, n)?;
    let names: Vec<String> = roots.iter().enumerate().map(|(k, r)| label(r, stated.labels.get(k))).collect();

    let t = rec.start();
    let mult = verify_multiplicities(&s, &roots, seed)?;
    let verified = mult.verified().map(<[u64]>::to_vec);
    match &verified {
        Some(ms) => {
            let shown = names.iter().zip(ms).map(|(l, m)| format!("{l}: {m}")).collect::<Vec<_>>().join(", ");
            rec.push(t, format!("{id}.multiplicities"), Status::Pass, None, Some(format!("multiplicities {{{shown}}}")));
        }
        None => {
            let solved = mult.solved.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ");
            rec.push(
                t,
                format!("{id}.multiplicities"),
                Status::Fail,
                Some(format!("moment system solved to [{solved}] at {}", mult.point.describe())),
                None,
            );
        }
    }

    if n <= KERNEL_MAX_N {
        let mut points = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6b65_726e);
        let (generic, _) = separating_point(&roots, s.family(), n, &mut rng)?;
        points.push(("kernels", generic));
        match kind {
            StatisticKind::DesX => {
                points.push(("kernels-at-ones", Assignment::all_ones(Family::Single, n)));
                points.push(("kernels-at-positions", Assignment::descent_positions(n)));
            }
            StatisticKind::InvX if n >= 2 => points.push(("kernel-at-ones", Assignment::all_ones(Family::Pair, n))),
            _ => {}
        }
        for (suffix, point) in points {
            let values = roots.iter().map(|r| r.specialize(&point)).collect::<CoreResult<Vec<_>>>()?;
            if !distinct(&values) {
                continue;
            }
            let t = rec.start();
            let dims = kernel_dimensions(&s, &roots, &point, seed)?;
            let agree = verified.as_ref().is_some_and(|ms| ms.iter().zip(&dims).all(|(&m, &d)| m == d as u64));
            let shown = values.iter().zip(&dims).map(|(v, d)| format!("{v}: {d}")).collect::<Vec<_>>().join(", ");
            let at = if point.iter().next().is_none() { String::new() } else { format!(" at {}", point.describe()) };
            let detail = format!("dim ker(M - c I){at}: {{{shown}}}");
            rec.pass_if(
                t,
                format!("{id}.{suffix}"),
                agree,
                (!agree).then(|| format!("kernel dimensions {dims:?} vs multiplicities {verified:?}")),
                Some(detail),
            );
        }
    }

    let t = rec.start();
    let mut found = Vec::new();
    if stated.eigenvalues != roots {
        found.push((format!("{} Sp", stated.source), list(&stated.eigenvalues), list(&roots)));
    }
    if let Some(ms) = &verified {
        for ((l, &said), &got) in stated.labels.iter().zip(&stated.multiplicities).zip(ms) {
            if said != got {
                found.push((format!("{} {l}", stated.source), said.to_string(), got.to_string()));
            }
        }
    }
    let status = if found.is_empty() { Status::Pass } else { Status::Flagged };
    let detail = if found.is_empty() {
        format!("matches {}", stated.source)
    } else {
        found.iter().map(|(loc, p, o)| format!("{loc}: stated {p}, computed {o}")).collect::<Vec<_>>().join("; ")
    };
    for (loc, p, o) in found {
        rec.discrepancy(loc, p, o);
    }
    rec.push(t, format!("{id}.statement"), status, None, Some(detail));
    Ok(())
}

fn row_sums(rec: &mut Recorder, n: usize, seed: u64) -> CoreResult<()> {
    for kind in [StatisticKind::DesX, StatisticKind::InvX] {
        let t = rec.start();
        let r = row_sum_eigen_check(kind, n, seed)?;
        let witness = if !r.equal_row_sums {
            Some("row sums differ".to_string())
        } else if !r.all_ones_eigenvector {
            Some("all-ones vector is not an eigenvector".to_string())
        } else if !r.rank.unanimous() {
            Some(format!("ranks disagree across primes: {:?}", r.rank.ranks))
        } else if r.eigenspace_dimension() != 1 {
            Some(format!("eigenspace dimension {}", r.eigenspace_dimension()))
        } else {
            None
        };
        let at = if r.point.iter().next().is_none() { String::new() } else { format!(" at {}", r.point.describe()) };
        let detail = format!(
            "row sum {}; rank(M - P I){at} = {} mod {:?}; eigenspace dimension {}",
            r.row_sum,
            r.rank.rank,
            r.rank.primes,
            r.eigenspace_dimension()
        );
        rec.pass_if(t, format!("prop2.1.{kind}"), r.passed(), witness, Some(detail));
    }
    Ok(())
}

fn lemma(rec: &mut Recorder, l: Lemma, n: usize) -> CoreResult<()> {
    let t = rec.start();
    let inv_power = |k: u32| -> CoreResult<Vec<Polynomial>> {
        Ok(GroupAlgebraElement::from_statistic(StatisticKind::InvX, n)?.power(k)?.coefficients().to_vec())
    };
    let (r, source): (LemmaReport, &str) = match l {
        Lemma::L2_3 => (oracle::check_lemma_2_3(n)?, "enumeration"),
        Lemma::L2_4 => (oracle::check_lemma_2_4(n)?, "enumeration"),
        Lemma::L3_1 => (oracle::check_lemma_3_1(n)?, "enumeration"),
        Lemma::L3_2 => (oracle::check_lemma_3_2(n)?, "enumeration"),
        Lemma::L4_1 => (oracle::check_lemma_4_1(n)?, "enumeration"),
        Lemma::L4_2 => (oracle::check_lemma_4_2(n)?, "enumeration"),
        Lemma::L4_3 => (oracle::check_lemma_4_3(n)?, "enumeration"),
        Lemma::L4_4 => (oracle::check_lemma_4_4(n)?, "enumeration"),
        Lemma::L4_5 if n == 4 => (oracle::check_lemma_4_5(n)?, "enumeration"),
        Lemma::L4_5 => (oracle::check_lemma_4_5_with(n, &inv_power(3)?)?, "S^3 from the convolution kernel"),
        Lemma::L4_6 => (oracle::check_lemma_4_6(n)?, "enumeration"),
        Lemma::L4_7 if n == 4 => (oracle::check_lemma_4_7(n)?, "enumeration"),
        Lemma::L4_7 => (
            oracle::check_lemma_4_7_with(n, &inv_power(2)?, &inv_power(3)?)?,
            "S^2, S^3 from the convolution kernel",
        ),
    };
    let mut detail = format!("{} ({source})", r.summary());
    for note in &r.notes {
        detail.push_str("; ");
        detail.push_str(note);
    }
    rec.pass_if(t, l.id(), r.passed(), r.first_failure.as_ref().map(|f| f.to_string()), Some(detail));
    Ok(())
}

/// Pointwise agreement of `values` with `brute` over `S_n` in rank order.
fn compare_pointwise(
    rec: &mut Recorder,
    id: &str,
    what: &str,
    n: usize,
    values: &[Polynomial],
    brute: impl Fn(&permspec_core::Permutation) -> CoreResult<Polynomial> + Sync,
) -> CoreResult<()> {
    use rayon::prelude::*;
    let t = rec.start();
    let perms = permutations(n)?;
    let expected: Vec<Polynomial> = perms.par_iter().map(&brute).collect::<CoreResult<_>>()?;
    let bad = perms.iter().zip(expected.iter().zip(values)).find(|(_, (e, v))| e != v);
    rec.pass_if(
        t,
        id,
        bad.is_none(),
        bad.map(|(p, (e, v))| format!("at {p}: enumeration {e}, convolution {v}")),
        Some(format!("{what} agree at all {} permutations", perms.len())),
    );
    Ok(())
}

fn cross_validation(rec: &mut Recorder, n: usize) -> CoreResult<()> {
    let inv = GroupAlgebraElement::from_statistic(StatisticKind::InvX, n)?;
    let sq = inv.power(2)?;
    compare_pointwise(rec, "crossval.f2", "f2 and S_invX^2", n, sq.coefficients(), oracle::compute_f2_brute)?;
    let cube = sq.convolve(&inv)?;
    compare_pointwise(rec, "crossval.f3", "f3 and S_invX^3", n, cube.coefficients(), oracle::compute_f3_brute)?;
    let des = GroupAlgebraElement::from_statistic(StatisticKind::DesX, n)?.power(2)?;
    compare_pointwise(rec, "crossval.pi_n", "Pi_n and S_desX^2", n, des.coefficients(), oracle::compute_pi_n)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiet(n: usize) -> Options {
        Options { n: Some(n), seed: 3, timing: false, allow_slow: false }
    }

    #[test]
    fn range_errors() {
        assert!(verify(Target::Theorem2, &quiet(6)).is_err());
        assert!(verify(Target::Lemma(Lemma::L4_1), &quiet(3)).is_err());
    }

    #[test]
    fn lemma_2_3_at_3_reports_the_sum() {
        let r = verify(Target::Lemma(Lemma::L2_3), &quiet(3)).unwrap();
        let c = r.check("lemma2.3").unwrap();
        assert_eq!(c.status, Status::Pass);
        assert!(c.detail.as_ref().unwrap().contains("3*X[1] + 3*X[2]"));
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn theorem1_at_3() {
        let r = verify(Target::Theorem1, &quiet(3)).unwrap();
        assert!(!r.failed(), "{}", r.to_json());
        for id in ["prop3.3.annihilation", "prop3.3.divisors", "theorem1.multiplicities", "theorem1.kernels-at-ones"] {
            assert!(r.check(id).is_some(), "{id}");
        }
        assert!(r.discrepancies.is_empty());
    }
}
